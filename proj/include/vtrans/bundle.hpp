#pragma once

#include <cstdlib>
#include <variant>
#include <vector>

#include "vtrans/surface.hpp"

namespace vtrans {

/// Oriented circle bundle over the surface; euler is the bundle's Euler
/// number (0 means the product F x S^1).
struct BundleData {
  Surface base;
  long long euler = 0;
};

inline bool operator==(const BundleData& a, const BundleData& b) {
  return a.base == b.base && a.euler == b.euler;
}

/// Vector-field data: the normal-bundle Euler class is Poincare dual to
/// 2k times the dual curve class.
struct FieldData {
  long long k = 0;
  H1Class dual;

  FieldData(long long k_, H1Class dual_) : k(k_), dual(std::move(dual_)) {}
  int genus() const { return dual.genus(); }
};

inline bool operator==(const FieldData& a, const FieldData& b) {
  return a.k == b.k && a.dual == b.dual;
}

// ---------------------------------------------------------------------------
// pi_1 of the total space.  Elements are pairs (base word, fiber exponent);
// the fiber generator is central.  Exact multiplication is a direct product
// and is only meaningful when the bundle Euler number is zero; for other
// bundles the product would need the extension cocycle, which is out of
// scope, so multiplication refuses.
// ---------------------------------------------------------------------------

struct Pi1MElement {
  SurfaceWord base_word;
  long long fiber_exp = 0;

  static Pi1MElement identity(int genus) { return {SurfaceWord(genus), 0}; }
  static Pi1MElement fiber(int genus, long long n) { return {SurfaceWord(genus), n}; }
  int genus() const { return base_word.genus(); }
};

inline bool operator==(const Pi1MElement& a, const Pi1MElement& b) {
  return a.base_word == b.base_word && a.fiber_exp == b.fiber_exp;
}
inline bool operator!=(const Pi1MElement& a, const Pi1MElement& b) { return !(a == b); }

inline Pi1MElement bundle_multiply(const BundleData& m, const Pi1MElement& a,
                                   const Pi1MElement& b) {
  if (m.euler != 0)
    throw DomainError("unsupported bundle arithmetic: nonzero Euler number needs a cocycle");
  if (a.genus() != m.base.genus || b.genus() != m.base.genus)
    throw DimensionError("genus mismatch between bundle and elements");
  return {a.base_word * b.base_word, a.fiber_exp + b.fiber_exp};
}

inline Pi1MElement bundle_inverse(const BundleData& m, const Pi1MElement& a) {
  if (m.euler != 0)
    throw DomainError("unsupported bundle arithmetic: nonzero Euler number needs a cocycle");
  return {inverse(a.base_word), -a.fiber_exp};
}

/// Whether the element is a power of the fiber class (base word trivial).
inline bool is_fiber_power(const Pi1MElement& a) { return is_trivial(a.base_word); }

// ---------------------------------------------------------------------------
// The tracked fragment of pi_1 of the unit normal circle bundle: the abelian
// subgroup generated by the lifted fiber (power p) and the normal-circle
// fiber F (power "central").  F has infinite order in this fragment.
// ---------------------------------------------------------------------------

struct FiberLift {
  long long fiber_power = 0;
  long long central = 0;

  static FiberLift identity() { return {0, 0}; }
};

inline bool operator==(const FiberLift& a, const FiberLift& b) {
  return a.fiber_power == b.fiber_power && a.central == b.central;
}
inline bool operator!=(const FiberLift& a, const FiberLift& b) { return !(a == b); }

inline FiberLift compose(const FiberLift& a, const FiberLift& b) {
  return {a.fiber_power + b.fiber_power, a.central + b.central};
}
inline FiberLift lift_inverse(const FiberLift& a) { return {-a.fiber_power, -a.central}; }

/// Named so tests can assert it against the model: F^n equals the identity
/// only for n = 0, i.e. the normal fiber survives with infinite order.
inline bool central_fiber_infinite_order(const FieldData&) { return true; }

// ---------------------------------------------------------------------------
// Euler pairing of the normal-bundle class with swept tori, and the loop
// obstruction h (half the pairing).  Orientation convention is pinned by the
// normative example: k = 1, dual = A2, dragging along B2 evaluates to +2.
// ---------------------------------------------------------------------------

struct DragTorus {
  H1Class path;
};
struct FibTorus {
  H1Class curve_class;
};
struct RotTorus {};
using SweptTorus = std::variant<DragTorus, FibTorus, RotTorus>;

inline long long euler_on_torus(const FieldData& f, const SweptTorus& torus) {
  return std::visit(
      [&f](const auto& t) -> long long {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, DragTorus>)
          return 2 * f.k * intersection_number(f.dual, t.path);
        else if constexpr (std::is_same_v<T, FibTorus>)
          return 2 * f.k * intersection_number(f.dual, t.curve_class);
        else
          return 0;
      },
      torus);
}

struct RotLoop {
  long long n = 1;
};
struct FibLoop {
  H1Class curve_class;
  long long n = 1;
};
struct DragLoop {
  H1Class path;
};
using LoopAtom = std::variant<RotLoop, FibLoop, DragLoop>;
using LoopWord = std::vector<LoopAtom>;

/// h of a loop word: the sum of half the Euler pairing over the swept tori.
/// Rotation loops contribute 0; slide loops are excluded by construction
/// (the homomorphism lives on the quotient by the slide class).
inline long long loop_obstruction(const FieldData& f, const LoopWord& loop) {
  long long total = 0;
  for (const LoopAtom& atom : loop) {
    std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, FibLoop>)
            total += a.n * (euler_on_torus(f, FibTorus{a.curve_class}) / 2);
          else if constexpr (std::is_same_v<T, DragLoop>)
            total += euler_on_torus(f, DragTorus{a.path}) / 2;
        },
        atom);
  }
  return total;
}

/// Conjugation of a lift by an element of pi_1 of the total space: the fiber
/// power is preserved and the central coordinate shifts by p times the Euler
/// pairing with the conjugator's base class.
inline FiberLift conjugate_lift(const FieldData& f, const Pi1MElement& gamma,
                                const FiberLift& x) {
  if (f.genus() != gamma.genus())
    throw DimensionError("genus mismatch between field and conjugator");
  const long long shift = 2 * f.k * intersection_number(f.dual, abelianize(gamma.base_word));
  return {x.fiber_power, x.central + x.fiber_power * shift};
}

/// Generator of the achievable central-shift set d*Z under conjugation of a
/// unit-fiber-power lift: d = |2k| * content(dual).  Zero means shifts are
/// impossible (k = 0 or a null dual class).
inline long long central_shift_step(const FieldData& f) {
  return std::llabs(2 * f.k) * h1_content(f.dual);
}

}  // namespace vtrans
