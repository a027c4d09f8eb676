#pragma once

#include <string>
#include <vector>

#include "vtrans/nu.hpp"

namespace vtrans {

// ---------------------------------------------------------------------------
// Catalogued two-component configurations.  Both components are copies of the
// fiber; the families differ in whether the first component is clasped and in
// whether the homotopy braids the components through each other.
// ---------------------------------------------------------------------------

enum class ExampleFamily { ParallelFibers, ClaspedParallel, ClaspedBraided };

inline const char* to_string(ExampleFamily f) {
  switch (f) {
    case ExampleFamily::ParallelFibers:
      return "parallel";
    case ExampleFamily::ClaspedParallel:
      return "clasped";
    default:
      return "braided";
  }
}

struct FamilyParams {
  int genus = 2;
  long long k = 1;
  long long i1 = 0;  // target stabilization level of the first component
  long long i2 = 0;  // ... and of the second
};

namespace detail {

inline void check_family_params(const FamilyParams& p) {
  if (p.genus < 2) throw DomainError("catalog families require genus >= 2");
  if (p.k == 0)
    throw DomainError("k = 0 admits no stabilization-level change; no catalog configuration");
  if (p.i1 % p.k != 0 || p.i2 % p.k != 0)
    throw DomainError(
        "levels outside k*Z are not reachable: the configurations are not transversely "
        "homotopic");
}

}  // namespace detail

/// The connecting homotopy the catalog attaches to a family, from the base
/// configuration to the one with components stabilized to levels (i1, i2).
/// The dual class defaults to A_g, so a drag along (i/k)*B_g realizes level i.
inline HomotopyScript example_script(ExampleFamily fam, const FamilyParams& p) {
  detail::check_family_params(p);
  const int g = p.genus;
  const H1Class dual = H1Class::basis(g, 2 * (g - 1));      // A_g
  const H1Class across = H1Class::basis(g, 2 * (g - 1) + 1);  // B_g, <A_g, B_g> = 1

  HomotopyScript s{BundleData{Surface(g), 0}, FieldData(p.k, dual),
                   {initial_component("K1", Pi1MElement::fiber(g, 1)),
                    initial_component("K2", Pi1MElement::fiber(g, 1))},
                   {},
                   to_string(fam)};
  auto drags = [&](std::vector<MoveEvent>& evs) {
    if (p.i1 != 0) evs.push_back(DragEvent{"K1", (p.i1 / p.k) * across});
    if (p.i2 != 0) evs.push_back(DragEvent{"K2", (p.i2 / p.k) * across});
  };
  switch (fam) {
    case ExampleFamily::ParallelFibers: {
      s.events.push_back(CrossEvent{"K1", "K2", +1});
      drags(s.events);
      s.events.push_back(CrossEvent{"K1", "K2", -1});
      break;
    }
    case ExampleFamily::ClaspedParallel: {
      s.events.push_back(UnclaspEvent{"K1"});
      drags(s.events);
      s.events.push_back(ClaspEvent{"K1"});
      break;
    }
    case ExampleFamily::ClaspedBraided: {
      s.events.push_back(UnclaspEvent{"K1"});
      s.events.push_back(CrossEvent{"K1", "K2", +1});
      drags(s.events);
      s.events.push_back(CrossEvent{"K1", "K2", -1});
      s.events.push_back(ClaspEvent{"K1"});
      break;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Verdicts.  Five relations between the base configuration and its (i1, i2)
// stabilization.  Yes answers always rest on an explicit catalogued witness,
// No answers on the nu obstruction, an imported axiom, or logical closure;
// everything else stays Unknown.
// ---------------------------------------------------------------------------

struct Verdict {
  Tri framed = Tri::Unknown;
  Tri homotopic = Tri::Unknown;
  Tri link_homotopic = Tri::Unknown;
  Tri componentwise = Tri::Unknown;
  Tri isotopic = Tri::Unknown;
  std::vector<std::string> provenance;
  std::vector<std::string> flags;
};

namespace detail {

inline void close_verdict(Verdict& v) {
  if (v.isotopic == Tri::Yes) {
    // an isotopy witnesses every coarser relation
    for (Tri* t : {&v.framed, &v.homotopic, &v.link_homotopic, &v.componentwise}) {
      if (*t == Tri::Unknown) {
        *t = Tri::Yes;
        v.provenance.push_back("closure: an isotopy witness settles every coarser relation");
      }
    }
  }
  if ((v.link_homotopic == Tri::No || v.componentwise == Tri::No) && v.isotopic != Tri::No) {
    v.isotopic = Tri::No;
    v.provenance.push_back("closure: an isotopy would induce the refuted relation");
  }
}

}  // namespace detail

/// Verdict for a catalogued family at the given parameters.
inline Verdict family_verdict(ExampleFamily fam, const FamilyParams& p) {
  const HomotopyScript script = example_script(fam, p);
  Verdict v;
  v.framed = Tri::Yes;
  v.provenance.push_back("framed: stabilization attaches framed-neutral kink pairs");
  v.homotopic = Tri::Yes;
  v.provenance.push_back("homotopic: admitted levels are realized by drag loops");

  const NuValue value = nu(script);
  const NuVerdict zero = decide_zero(value, script.field);
  const bool valid = obstruction_valid(script);
  if (!valid) v.flags.push_back("invariance unverified: not all components are fiber powers");

  if (zero == NuVerdict::Nonzero && valid) {
    v.link_homotopic = Tri::No;
    v.provenance.push_back("obstruction: nu is nonzero on every connecting homotopy");
  } else {
    const bool witness =
        (fam == ExampleFamily::ParallelFibers && p.i1 == p.i2) ||
        (fam == ExampleFamily::ClaspedParallel && p.i1 != 0) ||
        (fam == ExampleFamily::ClaspedBraided && p.i1 == p.i2);
    if (witness) {
      v.link_homotopic = Tri::Yes;
      v.provenance.push_back(
          fam == ExampleFamily::ClaspedParallel
              ? "witness: unclasp, drag each component, reclasp - no inter-component crossings"
              : "witness: simultaneous drag of both components");
    } else {
      v.link_homotopic = Tri::Unknown;
      v.provenance.push_back("nu vanishes but no link-homotopy witness is catalogued");
    }
  }

  if (fam == ExampleFamily::ParallelFibers) {
    v.componentwise = Tri::Yes;
    v.provenance.push_back("witness: each fiber is dragged on its own");
  } else if (p.i1 == 0) {
    v.componentwise = Tri::Yes;
    v.provenance.push_back("witness: the clasped component is untouched");
  } else {
    v.componentwise = Tri::No;
    v.provenance.push_back(
        "axiom: a clasped component admits no transverse isotopy to its own stabilization");
  }

  if (p.i1 == 0 && p.i2 == 0) {
    v.isotopic = Tri::Yes;
    v.provenance.push_back("witness: identity");
  } else if (fam == ExampleFamily::ParallelFibers && p.i1 == p.i2) {
    v.isotopic = Tri::Yes;
    v.provenance.push_back("witness: the simultaneous drag is an isotopy");
  }

  detail::close_verdict(v);
  if (v.isotopic == Tri::Unknown)
    v.provenance.push_back("isotopy: nu fails to obstruct and no witness is catalogued");
  return v;
}

/// The seven-row summary table at the standard representative levels.
struct TableRow {
  ExampleFamily family;
  FamilyParams params;
  Verdict verdict;
};

inline std::vector<TableRow> standard_table(int genus = 2, long long k = 1) {
  const std::vector<std::pair<ExampleFamily, std::pair<long long, long long>>> spec_rows = {
      {ExampleFamily::ParallelFibers, {1, 2}}, {ExampleFamily::ParallelFibers, {1, 1}},
      {ExampleFamily::ClaspedParallel, {1, 0}}, {ExampleFamily::ClaspedParallel, {0, 1}},
      {ExampleFamily::ClaspedBraided, {1, 2}}, {ExampleFamily::ClaspedBraided, {0, 1}},
      {ExampleFamily::ClaspedBraided, {1, 1}},
  };
  std::vector<TableRow> rows;
  for (const auto& [fam, levels] : spec_rows) {
    const FamilyParams p{genus, k, levels.first * k, levels.second * k};
    rows.push_back({fam, p, family_verdict(fam, p)});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Simplicity of the field data: with a torsion normal-bundle class every
// class is simple; the finer geometric criteria need data that is not part of
// (k, dual) and are reported as not evaluable.
// ---------------------------------------------------------------------------

enum class Simplicity { Simple, NotGuaranteed };

struct SimplicityReport {
  Simplicity result;
  std::string reason;
  std::vector<std::string> unevaluated;
};

inline SimplicityReport simplicity_check(const BundleData&, const FieldData& f) {
  SimplicityReport r{Simplicity::NotGuaranteed, "", {}};
  if (f.k == 0 || f.dual.is_zero()) {
    r.result = Simplicity::Simple;
    r.reason = "the normal-bundle class 2k*[dual] is torsion, so stabilization is invisible";
  } else {
    r.reason = "the torsion criterion fails; no further criterion is decidable from (k, dual)";
    r.unevaluated.push_back(
        "geometric simplicity criteria on the complement of the dual curve: not evaluable "
        "from inputs");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Promotion of transverse verdicts to the Legendrian category.
// ---------------------------------------------------------------------------

struct LooseFlags {
  bool components = false;
  bool link = false;
};

struct LegendrianVerdict {
  Tri framed = Tri::Unknown;
  Tri homotopic = Tri::Unknown;
  Tri link_homotopic = Tri::Unknown;
  Tri componentwise = Tri::Unknown;
  Tri isotopic = Tri::Unknown;
  LooseFlags loose;
  std::vector<std::string> provenance;
};

inline LegendrianVerdict promote_to_legendrian(const Verdict& v, LooseFlags flags) {
  LegendrianVerdict out;
  out.loose = flags;
  out.framed = v.framed;
  out.provenance.push_back("framed data transfers unchanged");
  out.homotopic = v.homotopic;
  out.link_homotopic = v.link_homotopic;
  out.provenance.push_back(
      "correspondence: transverse and Legendrian homotopy / link-homotopy classes match");

  auto promote_iso = [&out](Tri t, bool loose, const char* needs) {
    if (t == Tri::No) {
      out.provenance.push_back("negative transfer: a Legendrian isotopy is transverse-realizable");
      return Tri::No;
    }
    if (loose) {
      out.provenance.push_back("loose hypothesis satisfied: transverse verdict promotes");
      return t;
    }
    if (t == Tri::Yes) out.provenance.push_back(needs);
    return Tri::Unknown;
  };
  out.componentwise =
      promote_iso(v.componentwise, flags.components, "promotion needs loose components");
  out.isotopic = promote_iso(v.isotopic, flags.link, "promotion needs a loose link");
  return out;
}

// ---------------------------------------------------------------------------
// Stabilization correspondence: the level-i transverse stabilization carries
// exactly the state of an i-fold positively/negatively balanced Legendrian
// stabilization chain, in all three tracked quantities.
// ---------------------------------------------------------------------------

struct StabCorrespondence {
  ComponentState transverse_side;   // L_{i,0}
  ComponentState legendrian_side;   // (L_{0,i})^i
  bool consistent = false;
};

inline StabCorrespondence stab_correspondence(long long i, int genus = 2) {
  if (i < 0) throw DomainError("stabilization count must be nonnegative");
  ComponentState a = initial_component("L", Pi1MElement::fiber(genus, 1));
  ComponentState b = a;
  a.kink_count(KinkType::RotPosWritheNeg) += i;   // i positive Legendrian stabilizations
  a.ev_central += i;
  a.leg_stab_pos += i;
  b.kink_count(KinkType::RotNegWritheNeg) += i;   // i negative ones ...
  b.ev_central -= i;
  b.leg_stab_neg += i;
  detail::add_stab_kinks(b, i);                   // ... then transverse stabilization to level i
  const bool same = a.rot_offset() == b.rot_offset() &&
                    a.writhe_offset() == b.writhe_offset() && a.ev_central == b.ev_central;
  return StabCorrespondence{std::move(a), std::move(b), same};
}

/// Numeric consistency of mixed stabilization counts (n1, n2) vs (n3, n4):
/// the rotation and writhe contributions must agree.
inline bool stab_counts_consistent(long long n1, long long n2, long long n3, long long n4) {
  return n1 + n2 == n3 + n4 && n1 - n2 == n3 - n4;
}

}  // namespace vtrans
