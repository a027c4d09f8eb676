#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "vtrans/moves.hpp"

namespace vtrans {

/// Bounds for the decision procedures.  The conjugator bound caps the
/// conjugacy search used for opaque lifts; the pairing bound caps the
/// exhaustive fallback in the zero decision.
struct DecisionConfig {
  std::size_t exhaustive_pairing_max = 8;
  std::size_t conjugacy_cyclic_bound = 64;
};

/// Formal sum of figure-eight generators, kept as the emitted sequence.
struct NuValue {
  std::vector<Fig8Term> terms;
};

enum class NuVerdict { Zero, Nonzero, Unknown };

inline const char* to_string(NuVerdict v) {
  switch (v) {
    case NuVerdict::Zero:
      return "ZERO";
    case NuVerdict::Nonzero:
      return "NONZERO";
    default:
      return "UNKNOWN";
  }
}

namespace detail {

/// Is there m in step*Z with dl = p*m and dr = q*m?  (step = 0 means only m = 0.)
inline bool simultaneous_shift_exists(long long p, long long q, long long dl, long long dr,
                                      long long step) {
  if (p == 0 && q == 0) return dl == 0 && dr == 0;
  if (p == 0) {
    if (dl != 0) return false;
    p = q;
    dl = dr;
    q = 0;
    dr = 0;
  }
  if (dl % p != 0) return false;
  const long long m = dl / p;
  if (q * m != dr) return false;
  if (step == 0) return m == 0;
  return m % step == 0;
}

/// Normalize an opaque lift whose base word happens to be trivial in the
/// group back into the tracked fiber fragment.
inline LiftClass normalize_lift(const LiftClass& l) {
  if (const auto* o = std::get_if<OpaqueLift>(&l)) {
    if (is_fiber_power(o->base)) return FiberLift{o->base.fiber_exp, o->central};
  }
  return l;
}

}  // namespace detail

/// Decide whether two figure-eight generators denote the same class, i.e.
/// whether one simultaneous conjugation carries both lift pairs of t1 to
/// those of t2.  Signs are pairing data and are not compared here.
///
/// For fiber-power lifts the decision is exact: the conjugation action only
/// shifts central coordinates, by p times a common element of the achievable
/// shift set.  Opaque lifts compare Equal only when literally identical; a
/// conjugacy certificate against the base words can still refute, anything
/// else stays Unknown (no cocycle is available to track their central shifts).
inline Tri figure8_equal(const Fig8Term& t1, const Fig8Term& t2, const FieldData& field,
                         const DecisionConfig& cfg = {}) {
  const LiftClass l1 = detail::normalize_lift(t1.left), r1 = detail::normalize_lift(t1.right);
  const LiftClass l2 = detail::normalize_lift(t2.left), r2 = detail::normalize_lift(t2.right);

  if (l1.index() != l2.index() || r1.index() != r2.index()) return Tri::No;

  const long long step = central_shift_step(field);
  bool all_fiber = true;
  bool opaque_undecided = false;

  // per-side structural refutations for opaque lifts
  for (const auto& [x, y] : {std::pair{&l1, &l2}, std::pair{&r1, &r2}}) {
    if (const auto* ox = std::get_if<OpaqueLift>(x)) {
      all_fiber = false;
      const auto& oy = std::get<OpaqueLift>(*y);
      if (ox->base.fiber_exp != oy.base.fiber_exp) return Tri::No;
      const Tri conj = conjugate_in_surface_group(ox->base.base_word, oy.base.base_word,
                                                  cfg.conjugacy_cyclic_bound);
      if (conj == Tri::No) return Tri::No;
      if (!(*ox == oy)) opaque_undecided = true;
    } else {
      const auto& fx = std::get<FiberLift>(*x);
      const auto& fy = std::get<FiberLift>(*y);
      if (fx.fiber_power != fy.fiber_power) return Tri::No;
    }
  }

  if (all_fiber) {
    const auto& fl1 = std::get<FiberLift>(l1);
    const auto& fr1 = std::get<FiberLift>(r1);
    const auto& fl2 = std::get<FiberLift>(l2);
    const auto& fr2 = std::get<FiberLift>(r2);
    return detail::simultaneous_shift_exists(fl1.fiber_power, fr1.fiber_power,
                                             fl2.central - fl1.central,
                                             fr2.central - fr1.central, step)
               ? Tri::Yes
               : Tri::No;
  }

  if (!opaque_undecided) {
    // opaque sides literally identical; fiber sides (if any) must admit a
    // shared shift, and m = 0 keeps the identical opaque sides fixed
    auto fiber_delta_zero = [](const LiftClass& a, const LiftClass& b) {
      const auto* fa = std::get_if<FiberLift>(&a);
      if (!fa) return true;
      return fa->central == std::get<FiberLift>(b).central;
    };
    if (fiber_delta_zero(l1, l2) && fiber_delta_zero(r1, r2)) return Tri::Yes;
    return Tri::Unknown;  // a nonzero shift would move the opaque side unpredictably
  }
  return Tri::Unknown;
}

/// nu of a homotopy script: the recorded sequence of signed figure-eight
/// generators.  Needs at least two components to mean anything.
inline NuValue nu(const HomotopyScript& s) {
  if (s.components.size() < 2)
    throw ValidationError("nu needs a script with at least two components");
  return NuValue{run(s).terms};
}

/// The obstruction argument needs every component homotopic to a fiber power;
/// otherwise downstream verdicts must flag invariance as unverified.
inline bool obstruction_valid(const HomotopyScript& s) {
  return std::all_of(s.components.begin(), s.components.end(),
                     [](const ComponentState& c) { return c.fiber_power(); });
}

namespace detail {

struct PairingProblem {
  std::vector<std::size_t> pos, neg;          // term indices by sign
  std::vector<std::vector<Tri>> cmp;          // full comparison matrix
};

inline bool perfect_matching(const PairingProblem& p, bool allow_unknown) {
  if (p.pos.size() != p.neg.size()) return false;
  std::vector<bool> used(p.neg.size(), false);
  auto admissible = [&](std::size_t i, std::size_t j) {
    const Tri t = p.cmp[p.pos[i]][p.neg[j]];
    return t == Tri::Yes || (allow_unknown && t == Tri::Unknown);
  };
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == p.pos.size()) return true;
    for (std::size_t j = 0; j < p.neg.size(); ++j) {
      if (used[j] || !admissible(i, j)) continue;
      used[j] = true;
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace detail

/// Zero decision for a formal sum.  Sound in both directions: Zero only when
/// a cancelling pairing provably exists, Nonzero only when no resolution of
/// the undecided comparisons could cancel everything.
inline NuVerdict decide_zero(const NuValue& value, const FieldData& field,
                             const DecisionConfig& cfg = {}) {
  const std::vector<Fig8Term>& ts = value.terms;
  const std::size_t n = ts.size();
  if (n == 0) return NuVerdict::Zero;

  long long sign_total = 0;
  for (const Fig8Term& t : ts) sign_total += t.sign;
  if (sign_total != 0) return NuVerdict::Nonzero;

  std::vector<std::vector<Tri>> cmp(n, std::vector<Tri>(n, Tri::Yes));
  bool any_unknown = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      cmp[i][j] = cmp[j][i] = figure8_equal(ts[i], ts[j], field, cfg);
      if (cmp[i][j] == Tri::Unknown) any_unknown = true;
    }
  }

  // classes under the decided Equal relation
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (cmp[i][j] == Tri::Yes) root[find(i)] = find(j);

  bool balanced = true;
  {
    std::vector<long long> mult(n, 0);
    for (std::size_t i = 0; i < n; ++i) mult[find(i)] += ts[i].sign;
    for (std::size_t i = 0; i < n; ++i)
      if (mult[i] != 0) balanced = false;
  }
  if (balanced) return NuVerdict::Zero;  // in-class pairing exists outright
  if (!any_unknown) return NuVerdict::Nonzero;

  if (n <= cfg.exhaustive_pairing_max) {
    detail::PairingProblem p;
    p.cmp = cmp;
    for (std::size_t i = 0; i < n; ++i) (ts[i].sign > 0 ? p.pos : p.neg).push_back(i);
    if (detail::perfect_matching(p, /*allow_unknown=*/false)) return NuVerdict::Zero;
    if (!detail::perfect_matching(p, /*allow_unknown=*/true)) return NuVerdict::Nonzero;
  }
  return NuVerdict::Unknown;
}

}  // namespace vtrans
