#include "brute_force.hpp"

#include "hecke/group_core.hpp"
#include "hecke/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <thread>

using namespace hecke;
using testing::brute_double_coset;
using testing::enumerate_gamma;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("identity has a single left coset") {
  auto o = std::make_shared<HeisenbergOracle>();
  CosetEngine engine(o);
  CHECK(engine.left_cosets(o->identity()) == std::vector<Element>{o->coset_canonical_rep(o->identity())});
  CHECK(engine.l_value(o->identity()) == 1);
  CHECK(engine.delta(o->identity()) == 1);
}

TEST_CASE("infinite dihedral reflection") {
  auto o = std::make_shared<DihedralOracle>(std::nullopt);
  CosetEngine engine(o);
  const auto t = o->make(1, -1);
  CHECK(engine.left_cosets(t) == std::vector<Element>{o->make(-1, -1), o->make(1, -1)});
  CHECK(engine.l_value(t) == 2);
  CHECK(engine.double_coset(o->make(2, -1)) == engine.double_coset(o->make(-2, -1)));
  CHECK(engine.double_coset(o->make(2, 1)) == engine.double_coset(o->make(2, -1)));
  CHECK(engine.same_double_coset(t, o->make(-1, -1)));
  CHECK_FALSE(engine.same_double_coset(t, o->make(2, -1)));
  CHECK(engine.same_double_coset(o->identity(), o->make(0, -1)));
}

TEST_CASE("quasicyclic dihedral separates 1/4 and 1/2") {
  auto o = std::make_shared<DihedralOracle>(2);
  CosetEngine engine(o);
  CHECK(engine.double_coset(o->make(q(1, 4), -1)) != engine.double_coset(o->make(q(1, 2), -1)));
  CHECK(engine.l_value(o->make(q(1, 4), -1)) == 2);
  // -1/2 = 1/2 mod 1, so the reflection at 1/2 commutes with Γ.
  CHECK(engine.l_value(o->make(q(1, 2), -1)) == 1);
}

TEST_CASE("heisenberg index matches the conjugation formula") {
  auto o = std::make_shared<HeisenbergOracle>();
  CosetEngine engine(o);
  CHECK(engine.l_value(HeisenbergOracle::make(q(1, 2), 0, 0)) == 2);
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto g = o->sample(rng);
    CHECK(engine.l_value(g) == testing::heisenberg_l_value(g));
  }
}

TEST_CASE("affine pair values") {
  auto o = std::make_shared<AffineRationalOracle>();
  CosetEngine engine(o);
  const auto dilate = AffineRationalOracle::make(0, 2);
  CHECK(engine.l_value(dilate) == 2);
  CHECK(engine.r_value(dilate) == 1);
  const auto shift = AffineRationalOracle::make(q(1, 2), 1);
  CHECK(engine.l_value(shift) == 1);
  CHECK(engine.r_value(shift) == 1);
  CHECK(engine.delta(shift) == 1);
  const auto t = AffineRationalOracle::make(0, q(1, 2));
  CHECK(engine.l_value(t) == 1);
  CHECK(engine.r_value(t) == 2);
  CHECK(engine.delta(t) == q(1, 2));
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto g = o->sample(rng);
    CHECK(engine.l_value(g) == testing::affine_l_value(g));
    CHECK(engine.r_value(g) == g[1].get_den().get_ui());
  }
}

TEST_CASE("sl2 diagonal double cosets") {
  for (unsigned long p : {2UL, 3UL}) {
    auto o = std::make_shared<Sl2LocalizedOracle>(p);
    CosetEngine engine(o);
    unsigned long pa = 1;
    for (int a = 1; a <= 3; ++a) {
      pa *= p;
      const auto g = o->diagonal(Rational(static_cast<long>(pa)));
      unsigned long expected = p + 1;
      for (int k = 1; k < 2 * a; ++k) expected *= p;
      CHECK(engine.l_value(g) == expected);
      CHECK(engine.r_value(g) == expected);
    }
  }
}

TEST_CASE("finite pairs agree with element-level enumeration") {
  auto o = std::make_shared<PermutationOracle>(4, std::vector<Element>{Element{1, 0, 2, 3}}, "s4");
  CosetEngine engine(o);
  const auto gamma = enumerate_gamma(*o);
  const auto all = o->all_elements();
  std::set<Element> keys;
  for (const auto& g : all) {
    const auto brute = brute_double_coset(*o, gamma, g);
    const auto c = engine.double_coset(g);
    CHECK(c.L() == brute.left_cosets.size());
    CHECK(c.R() == brute.right_cosets.size());
    keys.insert(c.key());
    for (const auto& h : std::vector<Element>{all[3], all[10], all[17]})
      CHECK(engine.same_double_coset(g, h) == brute.elements.contains(h));
  }
  CHECK(keys.size() == testing::count_double_cosets(*o, gamma, all));
}

TEST_CASE("dihedral pairs agree with element-level enumeration") {
  for (auto p : {std::optional<unsigned long>(2), std::optional<unsigned long>(3),
                 std::optional<unsigned long>()}) {
    auto o = std::make_shared<DihedralOracle>(p);
    CosetEngine engine(o);
    const auto gamma = enumerate_gamma(*o);
    Rng rng(9);
    for (int i = 0; i < 50; ++i) {
      const auto g = o->sample(rng);
      const auto brute = brute_double_coset(*o, gamma, g);
      CHECK(engine.l_value(g) == brute.left_cosets.size());
      CHECK(engine.r_value(g) == brute.right_cosets.size());
    }
  }
}

TEST_CASE("left cosets are sorted, duplicate free and closed under generators") {
  auto o = std::make_shared<Sl2LocalizedOracle>(3);
  CosetEngine engine(o);
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto g = o->sample(rng);
    const auto reps = engine.left_cosets(g);
    CHECK(std::is_sorted(reps.begin(), reps.end()));
    CHECK(std::adjacent_find(reps.begin(), reps.end()) == reps.end());
    CHECK(std::binary_search(reps.begin(), reps.end(), o->coset_canonical_rep(g)));
    for (const auto& w : reps)
      for (const auto& gen : o->gamma_generators())
        CHECK(std::binary_search(reps.begin(), reps.end(),
                                 o->coset_canonical_rep(o->multiply(gen, w))));
  }
}

TEST_CASE("orbit movers map g onto each coset") {
  auto o = std::make_shared<HeisenbergOracle>();
  CosetEngine engine(o);
  const auto g = HeisenbergOracle::make(q(1, 2), q(1, 3), q(1, 5));
  const auto orbit = engine.orbit(g);
  REQUIRE(orbit.reps.size() == orbit.movers.size());
  for (std::size_t i = 0; i < orbit.reps.size(); ++i) {
    CHECK(o->in_gamma(orbit.movers[i]));
    CHECK(o->coset_canonical_rep(o->multiply(orbit.movers[i], g)) == orbit.reps[i]);
  }
}

TEST_CASE("budget exhaustion carries the partial orbit") {
  auto o = std::make_shared<Sl2LocalizedOracle>(2);
  CosetEngine engine(o, 100);
  try {
    engine.left_cosets(o->diagonal(Rational(256)));
    FAIL("expected BudgetExhausted");
  } catch (const BudgetExhausted& e) {
    CHECK(e.budget() == 100);
    CHECK(!e.partial().empty());
    CHECK(e.partial().size() <= 101);
    CHECK(std::is_sorted(e.partial().begin(), e.partial().end()));
  }
}

TEST_CASE("canonical key is independent of the representative") {
  auto o = std::make_shared<HeisenbergOracle>();
  CosetEngine engine(o);
  Rng rng(44);
  for (int i = 0; i < 50; ++i) {
    const auto g = o->sample(rng);
    const auto moved = o->multiply(o->multiply(o->random_gamma(rng), g), o->random_gamma(rng));
    CHECK(engine.double_coset(moved).key() == engine.double_coset(g).key());
  }
}

TEST_CASE("the memo is safe under concurrent use") {
  auto o = std::make_shared<Sl2LocalizedOracle>(2);
  CosetEngine engine(o);
  std::vector<Element> samples;
  Rng rng(8);
  for (int i = 0; i < 40; ++i) samples.push_back(o->sample(rng));
  std::vector<std::vector<Element>> keys(4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (const auto& g : samples) keys[t].push_back(engine.double_coset(g).key());
    });
  for (auto& th : threads) th.join();
  for (std::size_t t = 1; t < 4; ++t) CHECK(keys[t] == keys[0]);
}
