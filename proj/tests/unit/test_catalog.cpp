#include "brute_force.hpp"
#include "hecke/catalog.hpp"
#include "hecke/oracles.hpp"

#include <doctest.h>

using namespace hecke;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("every catalog entry builds and verifies") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto entry = build(name);
    CHECK(entry.name == name);
    REQUIRE(entry.oracle);
    CHECK(entry.oracle->contains(entry.seed));
    const auto report = verify_oracle(*entry.oracle, 1000, 11);
    CHECK_MESSAGE(report.passed(), to_json(report).dump());
    PairContext ctx(entry.oracle);
    for (const auto& r : verify_tags(entry, ctx, 50, 3)) CHECK_MESSAGE(r.passed(), to_json(r).dump());
    const auto j = to_json(entry);
    CHECK(j["name"] == name);
  }
  CHECK(catalog_json().size() == catalog_names().size());
}

TEST_CASE("catalog parameter validation") {
  CHECK_THROWS_AS(build("no-such-pair"), UnknownPair);
  CHECK_THROWS_AS(build("quasicyclic-dihedral", PairParams{4}), BadParams);
  CHECK_THROWS_AS(build("sl2-localized", PairParams{1}), BadParams);
  CHECK_THROWS_AS(build("heisenberg", PairParams{3}), BadParams);
  CHECK(takes_prime("quasicyclic-dihedral"));
  CHECK_FALSE(takes_prime("bc-axb"));
  const auto q3 = build("quasicyclic-dihedral", PairParams{3});
  CHECK_FALSE(q3.has_tag(FamilyTag::LocallyNilpotentFiniteGamma));
  CHECK(build("quasicyclic-dihedral").has_tag(FamilyTag::LocallyNilpotentFiniteGamma));
}

TEST_CASE("seed closures match hand values") {
  for (const auto& name : catalog_names()) {
    const auto entry = build(name);
    if (!entry.expectation.seed_closure_size) continue;
    CAPTURE(name);
    PairContext ctx(entry.oracle);
    const auto closure = ctx.graph->closure(ctx.engine->double_coset(entry.seed));
    CHECK(closure.complete());
    CHECK(closure.size() == *entry.expectation.seed_closure_size);
  }
  auto d = std::make_shared<DihedralOracle>(2);
  PairContext ctx(d);
  CHECK(ctx.engine->l_value(d->make(q(1, 2), -1)) == 1);
  CHECK(ctx.engine->l_value(d->make(q(1, 4), -1)) == 2);
}

TEST_CASE("finite pair dimension equals brute-force double coset count") {
  const auto entry = build("finite-perm");
  const auto& perm = dynamic_cast<const PermutationOracle&>(*entry.oracle);
  const auto gamma = testing::enumerate_gamma(perm);
  const auto all = perm.all_elements();
  const auto brute = testing::count_double_cosets(perm, gamma, all);
  const auto report = af_filtration_check(entry, entry.seed);
  CHECK(report.subgroup_order <= all.size());
  PairContext ctx(entry.oracle);
  std::set<Element> keys;
  for (const auto& x : all) keys.insert(ctx.engine->double_coset(x).key());
  CHECK(keys.size() == brute);
  CHECK(brute == 7);  // S4 over a transposition: 24 = 2 + 4·4 + 3·2
}

TEST_CASE("af filtration") {
  const auto entry = build("quasicyclic-dihedral");
  const auto& d = dynamic_cast<const DihedralOracle&>(*entry.oracle);
  const auto r = af_filtration_check(entry, d.make(q(1, 4), 1));
  CHECK(r.subgroup_order == 8);
  CHECK(r.dimension == 3);
  CHECK(r.declared_locally_finite);
  CHECK(r.report.passed());
  const auto trivial = af_filtration_check(entry, d.identity());
  CHECK(trivial.dimension == 1);
  CHECK(trivial.subgroup_order == 2);

  const auto inf = build("infinite-dihedral");
  const auto& di = dynamic_cast<const DihedralOracle&>(*inf.oracle);
  CHECK_THROWS_AS(af_filtration_check(inf, di.make(1, 1), 256), BudgetExhausted);
}

TEST_CASE("positive pairs have finite closures, negative seeds exhaust") {
  for (const auto& name : catalog_names()) {
    const auto entry = build(name);
    PairContext ctx(entry.oracle);
    CAPTURE(name);
    if (entry.expectation.closures_finite) {
      Rng rng(2024);
      for (int i = 0; i < 25; ++i) {
        const auto g = entry.oracle->sample(rng);
        CAPTURE(entry.oracle->format(g));
        CHECK(ctx.graph->closure(ctx.engine->double_coset(g)).complete());
      }
    } else {
      bool exhausted = false;
      try {
        exhausted = !ctx.graph->closure(ctx.engine->double_coset(entry.seed), 50).complete();
      } catch (const BudgetExhausted&) {
        exhausted = true;
      }
      CHECK(exhausted);
    }
  }
}

TEST_CASE("heisenberg subnormal chain") {
  const auto entry = build("heisenberg");
  REQUIRE(entry.chain);
  CHECK(entry.chain->length() == 2);
  CHECK(check_chain(*entry.oracle, *entry.chain, 500, 7).passed());
  CHECK(entry.has_tag(FamilyTag::Subnormal));
  for (const auto& t : entry.tags) {
    CHECK(t.provenance == (t.tag == FamilyTag::FiniteByNilpotent ? Provenance::Declared
                                                                  : Provenance::SampleChecked));
  }
}
