#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"
#include "vtrans/catalog.hpp"

using namespace vtrans;

namespace {

std::array<Tri, 5> slots(const Verdict& v) {
  return {v.framed, v.homotopic, v.link_homotopic, v.componentwise, v.isotopic};
}

constexpr Tri Y = Tri::Yes;
constexpr Tri N = Tri::No;
constexpr Tri U = Tri::Unknown;

}  // namespace

TEST_CASE("example scripts have the advertised shape", "[catalog]") {
  const FamilyParams p{2, 1, 1, 2};

  auto par = example_script(ExampleFamily::ParallelFibers, p);
  REQUIRE(par.name == "parallel");
  REQUIRE(par.components.size() == 2);
  REQUIRE(par.components[0].name == "K1");
  REQUIRE(par.components[1].base_class.fiber_exp == 1);
  REQUIRE(par.events.size() == 4);  // cross, two drags, cross
  CHECK(event_kind(par.events[0]) == "cross");
  CHECK(event_kind(par.events[1]) == "drag");
  CHECK(event_kind(par.events[3]) == "cross");
  CHECK_NOTHROW(validate(par));

  auto cla = example_script(ExampleFamily::ClaspedParallel, {2, 1, 1, 0});
  REQUIRE(cla.events.size() == 3);  // unclasp, one drag (zero drag omitted), clasp
  CHECK(event_kind(cla.events.front()) == "unclasp");
  CHECK(event_kind(cla.events.back()) == "clasp");
  CHECK(run(cla).terms.empty());

  auto bra = example_script(ExampleFamily::ClaspedBraided, {2, 1, 0, 1});
  REQUIRE(bra.events.size() == 5);
  CHECK(event_kind(bra.events[1]) == "cross");
  CHECK(std::get<DragEvent>(bra.events[2]).comp == "K2");

  // drag paths scale as i/k in the B_g direction
  auto scaled = example_script(ExampleFamily::ParallelFibers, {3, 2, 4, 0});
  const auto& d = std::get<DragEvent>(scaled.events[1]);
  CHECK(d.path == 2 * H1Class::basis(3, 5));
  REQUIRE(scaled.events.size() == 3);
}

TEST_CASE("family parameter validation", "[catalog]") {
  CHECK_THROWS_AS(example_script(ExampleFamily::ParallelFibers, {1, 1, 0, 0}), DomainError);
  CHECK_THROWS_WITH(example_script(ExampleFamily::ClaspedParallel, {2, 0, 0, 0}),
                    Catch::Matchers::ContainsSubstring("k = 0"));
  CHECK_THROWS_WITH(example_script(ExampleFamily::ClaspedBraided, {2, 2, 1, 0}),
                    Catch::Matchers::ContainsSubstring("not transversely homotopic"));
  CHECK_THROWS_AS(family_verdict(ExampleFamily::ParallelFibers, {2, 3, 2, 0}), DomainError);
}

TEST_CASE("flagship verdicts", "[catalog]") {
  // distinct levels on parallel fibers: obstructed by nu
  auto v1 = family_verdict(ExampleFamily::ParallelFibers, {2, 1, 1, 2});
  CHECK(slots(v1) == std::array<Tri, 5>{Y, Y, N, Y, N});
  CHECK_FALSE(v1.provenance.empty());

  // stabilizing only the clasped component: link homotopy yes, componentwise no
  auto v2 = family_verdict(ExampleFamily::ClaspedParallel, {2, 1, 1, 0});
  CHECK(slots(v2) == std::array<Tri, 5>{Y, Y, Y, N, N});

  // stabilizing only the free component: nothing decides the link questions
  auto v3 = family_verdict(ExampleFamily::ClaspedParallel, {2, 1, 0, 1});
  CHECK(slots(v3) == std::array<Tri, 5>{Y, Y, U, Y, U});
}

TEST_CASE("standard table rows", "[catalog]") {
  const auto rows = standard_table(2, 1);
  REQUIRE(rows.size() == 7);

  const std::array<std::array<Tri, 5>, 7> expected = {{
      {Y, Y, N, Y, N},  // parallel (1,2)
      {Y, Y, Y, Y, Y},  // parallel (1,1)
      {Y, Y, Y, N, N},  // clasped  (1,0)
      {Y, Y, U, Y, U},  // clasped  (0,1)
      {Y, Y, N, N, N},  // braided  (1,2)
      {Y, Y, N, Y, N},  // braided  (0,1)
      {Y, Y, Y, N, N},  // braided  (1,1)
  }};
  const std::array<std::pair<long long, long long>, 7> levels = {
      {{1, 2}, {1, 1}, {1, 0}, {0, 1}, {1, 2}, {0, 1}, {1, 1}}};

  for (std::size_t r = 0; r < rows.size(); ++r) {
    INFO("row " << r << " (" << to_string(rows[r].family) << ")");
    CHECK(rows[r].params.i1 == levels[r].first);
    CHECK(rows[r].params.i2 == levels[r].second);
    CHECK(slots(rows[r].verdict) == expected[r]);
    CHECK(rows[r].verdict.flags.empty());
  }
  CHECK(rows[0].family == ExampleFamily::ParallelFibers);
  CHECK(rows[3].family == ExampleFamily::ClaspedParallel);
  CHECK(rows[6].family == ExampleFamily::ClaspedBraided);

  // the verdict pattern is k-independent because levels scale with k
  for (long long k : {2LL, 3LL}) {
    const auto scaled = standard_table(2, k);
    for (std::size_t r = 0; r < scaled.size(); ++r) {
      CHECK(scaled[r].params.i1 == levels[r].first * k);
      CHECK(slots(scaled[r].verdict) == expected[r]);
    }
  }
}

TEST_CASE("verdicts over the parameter grid are closed and nu-consistent", "[catalog]") {
  for (long long k : {1LL, 2LL, 3LL}) {
    for (auto fam : {ExampleFamily::ParallelFibers, ExampleFamily::ClaspedParallel,
                     ExampleFamily::ClaspedBraided}) {
      for (long long i1 = -4 * k; i1 <= 4 * k; i1 += k) {
        for (long long i2 = -4 * k; i2 <= 4 * k; i2 += k) {
          const FamilyParams p{2, k, i1, i2};
          const Verdict v = family_verdict(fam, p);
          INFO(to_string(fam) << " k=" << k << " i=(" << i1 << "," << i2 << ")");

          CHECK(v.framed == Y);
          CHECK(v.homotopic == Y);
          if (v.isotopic == Y) {
            CHECK(v.link_homotopic == Y);
            CHECK(v.componentwise == Y);
          }
          if (v.link_homotopic == N || v.componentwise == N) CHECK(v.isotopic == N);

          const auto script = example_script(fam, p);
          const auto z = decide_zero(nu(script), script.field);
          CHECK(obstruction_valid(script));
          if (v.link_homotopic == N) CHECK(z == NuVerdict::Nonzero);
          if (v.link_homotopic == Y) CHECK(z != NuVerdict::Nonzero);

          // family-specific witnesses
          if (i1 == i2 && fam == ExampleFamily::ParallelFibers) CHECK(v.isotopic == Y);
          if (i1 == 0 && i2 == 0) CHECK(slots(v) == std::array<Tri, 5>{Y, Y, Y, Y, Y});
          if (fam != ExampleFamily::ParallelFibers && i1 != 0) CHECK(v.componentwise == N);
        }
      }
    }
  }
}

TEST_CASE("simplicity is decided exactly by the torsion criterion", "[catalog]") {
  const BundleData bundle{Surface(2), 0};
  auto simple0 = simplicity_check(bundle, FieldData(0, H1Class::basis(2, 2)));
  CHECK(simple0.result == Simplicity::Simple);
  CHECK(simple0.unevaluated.empty());

  auto simple_dual = simplicity_check(bundle, FieldData(5, H1Class(2)));
  CHECK(simple_dual.result == Simplicity::Simple);

  auto hard = simplicity_check(bundle, FieldData(1, H1Class::basis(2, 2)));
  CHECK(hard.result == Simplicity::NotGuaranteed);
  REQUIRE(hard.unevaluated.size() == 1);
  CHECK_THAT(hard.unevaluated[0], Catch::Matchers::ContainsSubstring("not evaluable"));
  CHECK_FALSE(hard.reason.empty());
}

TEST_CASE("promotion to the Legendrian category", "[catalog][promotion]") {
  const std::array<Tri, 3> tri = {Y, N, U};
  for (Tri fr : tri)
    for (Tri ho : tri)
      for (Tri lh : tri)
        for (Tri cw : tri)
          for (Tri iso : tri)
            for (int fc = 0; fc < 2; ++fc)
              for (int fl = 0; fl < 2; ++fl) {
                Verdict v;
                v.framed = fr;
                v.homotopic = ho;
                v.link_homotopic = lh;
                v.componentwise = cw;
                v.isotopic = iso;
                const LooseFlags flags{fc == 1, fl == 1};
                const auto out = promote_to_legendrian(v, flags);

                // homotopy-level slots are biconditional and transfer as-is
                CHECK(out.framed == fr);
                CHECK(out.homotopic == ho);
                CHECK(out.link_homotopic == lh);
                // isotopy slots: negatives always transfer, positives need looseness
                CHECK(out.componentwise == (cw == N ? N : (flags.components ? cw : U)));
                CHECK(out.isotopic == (iso == N ? N : (flags.link ? iso : U)));
                CHECK(out.loose.components == flags.components);
                CHECK(out.loose.link == flags.link);

                // monotone: whatever is decided without the flag survives with it
                const auto weak = promote_to_legendrian(v, LooseFlags{false, false});
                if (weak.componentwise != U)
                  CHECK(out.componentwise == weak.componentwise);
                if (weak.isotopic != U) CHECK(out.isotopic == weak.isotopic);
              }
}

TEST_CASE("stabilization correspondence", "[catalog]") {
  for (long long i = 0; i <= 6; ++i) {
    const auto c = stab_correspondence(i);
    INFO("i = " << i);
    CHECK(c.consistent);
    CHECK(c.transverse_side.rot_offset() == i);
    CHECK(c.transverse_side.writhe_offset() == -i);
    CHECK(c.transverse_side.ev_central == i);
    CHECK(c.legendrian_side.rot_offset() == i);
    CHECK(c.legendrian_side.writhe_offset() == -i);
    CHECK(c.legendrian_side.ev_central == i);
    CHECK(c.legendrian_side.leg_stab_neg == i);
  }
  CHECK_THROWS_AS(stab_correspondence(-1), DomainError);

  CHECK(stab_counts_consistent(3, 1, 3, 1));
  CHECK(stab_counts_consistent(0, 0, 0, 0));
  CHECK_FALSE(stab_counts_consistent(2, 1, 1, 2));
  CHECK_FALSE(stab_counts_consistent(1, 0, 0, 1));

  // sum and difference determine the pair, so consistency is exact equality
  std::mt19937 rng(131);
  for (int t = 0; t < 200; ++t) {
    const long long n1 = rng() % 9, n2 = rng() % 9, n3 = rng() % 9, n4 = rng() % 9;
    CHECK(stab_counts_consistent(n1, n2, n3, n4) == (n1 == n3 && n2 == n4));
  }
}
