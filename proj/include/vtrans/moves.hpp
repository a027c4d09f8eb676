#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vtrans/bundle.hpp"

namespace vtrans {

// ---------------------------------------------------------------------------
// Kinks.  A kink carries a local rotation contribution and a local writhe
// contribution, each +-1; all four combinations occur.  The ledger stores
// counts per type.  Rotation and writhe offsets are always derived from the
// ledger, so they cannot drift out of sync with it.
// ---------------------------------------------------------------------------

enum class KinkType : int {
  RotPosWritheNeg = 0,
  RotNegWrithePos = 1,
  RotPosWrithePos = 2,
  RotNegWritheNeg = 3,
};

inline int kink_rotation(KinkType t) {
  return (t == KinkType::RotPosWritheNeg || t == KinkType::RotPosWrithePos) ? +1 : -1;
}
inline int kink_writhe(KinkType t) {
  return (t == KinkType::RotNegWrithePos || t == KinkType::RotPosWrithePos) ? +1 : -1;
}
/// The kink with both contributions negated; such pairs are created and
/// cancelled by transverse isotopy.
inline KinkType kink_opposite(KinkType t) {
  switch (t) {
    case KinkType::RotPosWritheNeg:
      return KinkType::RotNegWrithePos;
    case KinkType::RotNegWrithePos:
      return KinkType::RotPosWritheNeg;
    case KinkType::RotPosWrithePos:
      return KinkType::RotNegWritheNeg;
    default:
      return KinkType::RotPosWrithePos;
  }
}

// ---------------------------------------------------------------------------
// Per-component state threaded through a homotopy script.
// ---------------------------------------------------------------------------

struct ComponentState {
  std::string name;
  Pi1MElement base_class;  // constant along the script: all moves are homotopies
  long long ev_central = 0;
  std::array<long long, 4> kinks{};
  long long rot_loops = 0;
  long long fib_loops = 0;
  long long kink_slides = 0;
  H1Class drag_total;
  long long clasp_count = 0;
  long long self_crossings = 0;
  bool self_cross_parity = false;
  long long leg_stab_pos = 0;
  long long leg_stab_neg = 0;

  ComponentState(std::string n, Pi1MElement base)
      : name(std::move(n)), base_class(std::move(base)), drag_total(base_class.genus()) {}

  bool fiber_power() const { return is_fiber_power(base_class); }

  long long kink_count(KinkType t) const { return kinks[static_cast<std::size_t>(t)]; }
  long long& kink_count(KinkType t) { return kinks[static_cast<std::size_t>(t)]; }

  long long rot_offset() const {
    long long r = 0;
    for (int t = 0; t < 4; ++t)
      r += kinks[static_cast<std::size_t>(t)] * kink_rotation(static_cast<KinkType>(t));
    return r;
  }
  long long writhe_offset() const {
    long long w = 0;
    for (int t = 0; t < 4; ++t)
      w += kinks[static_cast<std::size_t>(t)] * kink_writhe(static_cast<KinkType>(t));
    return w;
  }
};

/// Fresh component at transverse stabilization level `level`: level pairs of
/// same-rotation, opposite-writhe kinks and the matching central offset 2*level.
inline ComponentState initial_component(std::string name, Pi1MElement base, long long level = 0) {
  ComponentState c(std::move(name), std::move(base));
  if (level >= 0) {
    c.kink_count(KinkType::RotPosWritheNeg) += level;
    c.kink_count(KinkType::RotPosWrithePos) += level;
  } else {
    c.kink_count(KinkType::RotNegWrithePos) += -level;
    c.kink_count(KinkType::RotNegWritheNeg) += -level;
  }
  c.ev_central += 2 * level;
  return c;
}

// ---------------------------------------------------------------------------
// Lift classes recorded at crossings.  A component homotopic to a fiber power
// contributes the tracked abelian fragment; anything else is recorded opaquely
// (base class plus central coordinate).
// ---------------------------------------------------------------------------

struct OpaqueLift {
  Pi1MElement base;
  long long central = 0;
};

inline bool operator==(const OpaqueLift& a, const OpaqueLift& b) {
  return a.base == b.base && a.central == b.central;
}
inline bool operator!=(const OpaqueLift& a, const OpaqueLift& b) { return !(a == b); }

using LiftClass = std::variant<FiberLift, OpaqueLift>;

inline LiftClass lift_of(const ComponentState& c) {
  if (c.fiber_power()) return FiberLift{c.base_class.fiber_exp, c.ev_central};
  return OpaqueLift{c.base_class, c.ev_central};
}

/// One figure-eight generator: a signed inter-component double point together
/// with the two components' lift classes at that instant.  `left` always
/// belongs to the earlier-declared component.
struct Fig8Term {
  int sign = +1;
  LiftClass left;
  LiftClass right;
};

inline bool operator==(const Fig8Term& a, const Fig8Term& b) {
  return a.sign == b.sign && a.left == b.left && a.right == b.right;
}

// ---------------------------------------------------------------------------
// Move events.
// ---------------------------------------------------------------------------

struct CrossEvent {
  std::string a, b;
  int sign = +1;
};
struct SelfCrossEvent {
  std::string comp;
  int sign = +1;
};
struct DragEvent {
  std::string comp;
  H1Class path;
};
struct RotEvent {
  std::string comp;
  long long n = 1;
};
struct FibEvent {
  std::string comp;
  long long n = 1;
};
struct KinkSlideEvent {
  std::string comp;
  long long n = 1;
};
struct VStabEvent {
  std::string comp;
  long long level = 1;
};
struct KinkPairEvent {
  std::string comp;
  KinkType type = KinkType::RotPosWritheNeg;
  bool create = true;
};
struct ClaspEvent {
  std::string comp;
};
struct UnclaspEvent {
  std::string comp;
};
struct LegStabEvent {
  std::string comp;
  long long pos = 0, neg = 0;
};

using MoveEvent = std::variant<CrossEvent, SelfCrossEvent, DragEvent, RotEvent, FibEvent,
                               KinkSlideEvent, VStabEvent, KinkPairEvent, ClaspEvent,
                               UnclaspEvent, LegStabEvent>;

struct HomotopyScript {
  BundleData bundle;
  FieldData field;
  std::vector<ComponentState> components;
  std::vector<MoveEvent> events;
  std::string name = "main";
};

struct RunResult {
  std::vector<ComponentState> components;
  std::vector<Fig8Term> terms;
  std::vector<std::string> trace;
};

namespace detail {

inline std::size_t find_component(const std::vector<ComponentState>& cs, const std::string& name,
                                  std::optional<std::size_t> idx) {
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i].name == name) return i;
  throw ValidationError("unknown component '" + name + "'", idx);
}

inline void check_sign(int sign, std::optional<std::size_t> idx) {
  if (sign != 1 && sign != -1) throw ValidationError("sign must be + or -", idx);
}

/// Stabilization by `level`: level same-rotation opposite-writhe kink pairs,
/// shifting the lift's central coordinate by 2*level and the rotation offset
/// by 2*level, leaving the writhe offset alone.
inline void add_stab_kinks(ComponentState& c, long long level) {
  if (level >= 0) {
    c.kink_count(KinkType::RotPosWritheNeg) += level;
    c.kink_count(KinkType::RotPosWrithePos) += level;
  } else {
    c.kink_count(KinkType::RotNegWrithePos) += -level;
    c.kink_count(KinkType::RotNegWritheNeg) += -level;
  }
  c.ev_central += 2 * level;
}

inline void apply_self_cross(ComponentState& c, int sign) {
  (void)sign;  // the sign matters for traces, not for the tracked state
  ++c.self_crossings;
  c.self_cross_parity = !c.self_cross_parity;
}

}  // namespace detail

/// Apply one event to the running states.  Returns the emitted figure-eight
/// term for inter-component crossings, nothing otherwise.  Throws
/// ValidationError (carrying `idx`) on the first violated precondition.
inline std::optional<Fig8Term> apply_event(const FieldData& field,
                                           std::vector<ComponentState>& cs, const MoveEvent& ev,
                                           std::optional<std::size_t> idx = std::nullopt) {
  using detail::find_component;
  return std::visit(
      [&](const auto& e) -> std::optional<Fig8Term> {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, CrossEvent>) {
          detail::check_sign(e.sign, idx);
          const std::size_t ia = find_component(cs, e.a, idx);
          const std::size_t ib = find_component(cs, e.b, idx);
          if (ia == ib)
            throw ValidationError("cross needs two distinct components", idx);
          const std::size_t l = std::min(ia, ib), r = std::max(ia, ib);
          return Fig8Term{e.sign, lift_of(cs[l]), lift_of(cs[r])};
        } else if constexpr (std::is_same_v<T, SelfCrossEvent>) {
          detail::check_sign(e.sign, idx);
          detail::apply_self_cross(cs[find_component(cs, e.comp, idx)], e.sign);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, DragEvent>) {
          ComponentState& c = cs[find_component(cs, e.comp, idx)];
          if (!c.fiber_power())
            throw ValidationError(
                "drag loops exist only for components homotopic to a fiber power; '" + e.comp +
                    "' is not",
                idx);
          if (e.path.genus() != field.genus())
            throw ValidationError("drag path genus mismatch", idx);
          const long long h = field.k * intersection_number(field.dual, e.path);
          detail::add_stab_kinks(c, h);
          c.drag_total += e.path;
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, RotEvent>) {
          cs[find_component(cs, e.comp, idx)].rot_loops += e.n;
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, FibEvent>) {
          ComponentState& c = cs[find_component(cs, e.comp, idx)];
          if (c.fiber_power())
            throw ValidationError(
                "fiber-translation loops exist only for components not homotopic to a fiber "
                "power; '" +
                    e.comp + "' is one",
                idx);
          c.fib_loops += e.n;
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, KinkSlideEvent>) {
          cs[find_component(cs, e.comp, idx)].kink_slides += e.n;
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, VStabEvent>) {
          detail::add_stab_kinks(cs[find_component(cs, e.comp, idx)], e.level);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, KinkPairEvent>) {
          ComponentState& c = cs[find_component(cs, e.comp, idx)];
          const KinkType other = kink_opposite(e.type);
          if (e.create) {
            ++c.kink_count(e.type);
            ++c.kink_count(other);
          } else {
            if (c.kink_count(e.type) < 1 || c.kink_count(other) < 1)
              throw ValidationError("cannot cancel a kink pair that is not present", idx);
            --c.kink_count(e.type);
            --c.kink_count(other);
          }
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ClaspEvent>) {
          ComponentState& c = cs[find_component(cs, e.comp, idx)];
          ++c.clasp_count;
          detail::apply_self_cross(c, +1);
          detail::apply_self_cross(c, -1);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, UnclaspEvent>) {
          ComponentState& c = cs[find_component(cs, e.comp, idx)];
          --c.clasp_count;
          detail::apply_self_cross(c, -1);
          detail::apply_self_cross(c, +1);
          return std::nullopt;
        } else {  // LegStabEvent
          if (e.pos < 0 || e.neg < 0)
            throw ValidationError("stabilization counts must be nonnegative", idx);
          ComponentState& c = cs[find_component(cs, e.comp, idx)];
          c.kink_count(KinkType::RotPosWritheNeg) += e.pos;
          c.kink_count(KinkType::RotNegWritheNeg) += e.neg;
          c.ev_central += e.pos - e.neg;
          c.leg_stab_pos += e.pos;
          c.leg_stab_neg += e.neg;
          return std::nullopt;
        }
      },
      ev);
}

inline const std::string& event_component(const MoveEvent& ev) {
  return std::visit(
      [](const auto& e) -> const std::string& {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, CrossEvent>)
          return e.a;
        else
          return e.comp;
      },
      ev);
}

inline const char* event_kind(const MoveEvent& ev) {
  return std::visit(
      [](const auto& e) -> const char* {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, CrossEvent>) return "cross";
        if constexpr (std::is_same_v<T, SelfCrossEvent>) return "self";
        if constexpr (std::is_same_v<T, DragEvent>) return "drag";
        if constexpr (std::is_same_v<T, RotEvent>) return "rot";
        if constexpr (std::is_same_v<T, FibEvent>) return "fib";
        if constexpr (std::is_same_v<T, KinkSlideEvent>) return "kinkslide";
        if constexpr (std::is_same_v<T, VStabEvent>) return "vstab";
        if constexpr (std::is_same_v<T, KinkPairEvent>) return "kinkpair";
        if constexpr (std::is_same_v<T, ClaspEvent>) return "clasp";
        if constexpr (std::is_same_v<T, UnclaspEvent>) return "unclasp";
        return "legstab";
      },
      ev);
}

/// Structural checks shared by run() and validate().
inline void check_script_frame(const HomotopyScript& s) {
  if (s.field.genus() != s.bundle.base.genus)
    throw ValidationError("field and bundle genus mismatch");
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    const ComponentState& c = s.components[i];
    if (c.base_class.genus() != s.bundle.base.genus)
      throw ValidationError("component '" + c.name + "' genus mismatch");
    for (long long n : c.kinks)
      if (n < 0) throw ValidationError("component '" + c.name + "' has a negative kink count");
    for (std::size_t j = i + 1; j < s.components.size(); ++j)
      if (s.components[j].name == c.name)
        throw ValidationError("duplicate component name '" + c.name + "'");
  }
}

/// Fold the event list over the initial states.
inline RunResult run(const HomotopyScript& s) {
  check_script_frame(s);
  RunResult out{s.components, {}, {}};
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    std::optional<Fig8Term> term = apply_event(s.field, out.components, s.events[i], i);
    std::string line = std::to_string(i) + ": " + event_kind(s.events[i]) + " " +
                       event_component(s.events[i]);
    if (term) {
      out.terms.push_back(*term);
      line += " -> term";
    }
    out.trace.push_back(std::move(line));
  }
  return out;
}

/// Totality check: either the whole script runs, or the error identifies the
/// first offending event.
inline void validate(const HomotopyScript& s) { (void)run(s); }

// ---------------------------------------------------------------------------
// Time reversal.
// ---------------------------------------------------------------------------

inline MoveEvent invert_event(const MoveEvent& ev) {
  return std::visit(
      [](const auto& e) -> MoveEvent {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, CrossEvent>)
          return CrossEvent{e.a, e.b, -e.sign};
        else if constexpr (std::is_same_v<T, SelfCrossEvent>)
          return SelfCrossEvent{e.comp, -e.sign};
        else if constexpr (std::is_same_v<T, DragEvent>)
          return DragEvent{e.comp, -e.path};
        else if constexpr (std::is_same_v<T, RotEvent>)
          return RotEvent{e.comp, -e.n};
        else if constexpr (std::is_same_v<T, FibEvent>)
          return FibEvent{e.comp, -e.n};
        else if constexpr (std::is_same_v<T, KinkSlideEvent>)
          return KinkSlideEvent{e.comp, -e.n};
        else if constexpr (std::is_same_v<T, VStabEvent>)
          return VStabEvent{e.comp, -e.level};
        else if constexpr (std::is_same_v<T, KinkPairEvent>)
          return KinkPairEvent{e.comp, e.type, !e.create};
        else if constexpr (std::is_same_v<T, ClaspEvent>)
          return UnclaspEvent{e.comp};
        else if constexpr (std::is_same_v<T, UnclaspEvent>)
          return ClaspEvent{e.comp};
        else
          throw DomainError("legstab has no inverse move");
      },
      ev);
}

/// Same endpoints data, events reversed and inverted.  Appending the result's
/// events to the original script yields a self-homotopy.
inline HomotopyScript reverse_script(const HomotopyScript& s) {
  HomotopyScript out = s;
  out.events.clear();
  for (auto it = s.events.rbegin(); it != s.events.rend(); ++it)
    out.events.push_back(invert_event(*it));
  return out;
}

// ---------------------------------------------------------------------------
// Normal forms for single-component loops of moves.  A component homotopic to
// a fiber power admits rotation / drag / slide loops; any other component
// admits rotation / fiber-translation / slide loops.  The loop closes
// transversely iff the total obstruction vanishes.
// ---------------------------------------------------------------------------

struct FreeLoopNormalForm {
  long long rot = 0;
  long long fib = 0;
  long long slide = 0;
};
struct FiberLoopNormalForm {
  long long rot = 0;
  H1Class drag;
  long long slide = 0;
};
using LoopNormalForm = std::variant<FreeLoopNormalForm, FiberLoopNormalForm>;

inline bool operator==(const FreeLoopNormalForm& a, const FreeLoopNormalForm& b) {
  return a.rot == b.rot && a.fib == b.fib && a.slide == b.slide;
}
inline bool operator==(const FiberLoopNormalForm& a, const FiberLoopNormalForm& b) {
  return a.rot == b.rot && a.drag == b.drag && a.slide == b.slide;
}

inline LoopNormalForm normal_form_loop(const FieldData& field, const ComponentState& comp,
                                       const std::vector<MoveEvent>& events) {
  if (field.genus() < 2)
    throw DomainError("loop classification requires genus >= 2");
  const bool fiber = comp.fiber_power();
  long long rot = 0, fib = 0, slide = 0;
  H1Class drag(field.genus());
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (event_component(events[i]) != comp.name)
      throw ValidationError("loop events must all act on component '" + comp.name + "'", i);
    const MoveEvent& ev = events[i];
    if (const auto* r = std::get_if<RotEvent>(&ev)) {
      rot += r->n;
    } else if (const auto* k = std::get_if<KinkSlideEvent>(&ev)) {
      slide += k->n;
    } else if (const auto* d = std::get_if<DragEvent>(&ev)) {
      if (!fiber)
        throw ValidationError(
            "drag loops exist only for components homotopic to a fiber power", i);
      drag += d->path;
    } else if (const auto* fb = std::get_if<FibEvent>(&ev)) {
      if (fiber)
        throw ValidationError(
            "fiber-translation loops exist only for components not homotopic to a fiber power",
            i);
      fib += fb->n;
    } else {
      throw ValidationError(std::string("'") + event_kind(ev) + "' is not a loop generator", i);
    }
  }
  const long long obstruction =
      fiber ? field.k * intersection_number(field.dual, drag)
            : fib * field.k * intersection_number(field.dual, abelianize(comp.base_class.base_word));
  if (obstruction != 0) throw ObstructionError(obstruction);
  if (fiber) return FiberLoopNormalForm{rot, drag, slide};
  return FreeLoopNormalForm{rot, fib, slide};
}

/// Loop atoms for the obstruction homomorphism: rotation, drag and
/// fiber-translation loops on a single component (slides are quotiented out
/// and rejected here).
inline LoopWord loop_atoms(const ComponentState& comp, const std::vector<MoveEvent>& events) {
  const bool fiber = comp.fiber_power();
  LoopWord out;
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (event_component(events[i]) != comp.name)
      throw ValidationError("loop events must all act on component '" + comp.name + "'", i);
    const MoveEvent& ev = events[i];
    if (const auto* r = std::get_if<RotEvent>(&ev)) {
      out.push_back(RotLoop{r->n});
    } else if (const auto* d = std::get_if<DragEvent>(&ev)) {
      if (!fiber)
        throw ValidationError(
            "drag loops exist only for components homotopic to a fiber power", i);
      out.push_back(DragLoop{d->path});
    } else if (const auto* fb = std::get_if<FibEvent>(&ev)) {
      if (fiber)
        throw ValidationError(
            "fiber-translation loops exist only for components not homotopic to a fiber power",
            i);
      out.push_back(FibLoop{abelianize(comp.base_class.base_word), fb->n});
    } else {
      throw ValidationError(
          std::string("'") + event_kind(ev) + "' is not an obstruction-loop generator", i);
    }
  }
  return out;
}

}  // namespace vtrans
