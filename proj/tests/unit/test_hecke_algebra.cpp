#include "brute_force.hpp"
#include "generators.hpp"

#include "hecke/hecke_algebra.hpp"
#include "hecke/oracles.hpp"

#include <doctest.h>

using namespace hecke;
using testing::Coefficients;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

HeckeAlgebra algebra_for(std::shared_ptr<const GroupOracle> o) {
  return HeckeAlgebra(std::make_shared<CosetEngine>(std::move(o)));
}

// Compares an engine product with the element-level convolution.
void check_against_brute(const HeckeAlgebra& alg, const HeckeElement& f1, const HeckeElement& f2) {
  const auto& o = alg.oracle();
  const auto gamma = testing::enumerate_gamma(o);
  const auto expected = testing::brute_convolve(o, gamma, testing::to_brute(o, gamma, f1),
                                                testing::to_brute(o, gamma, f2));
  const auto product = alg.convolve(f1, f2);
  CHECK(product.size() == expected.size());
  for (const auto& [g, value] : expected)
    CHECK(product.coefficient(alg.engine().double_coset(g).key()) == value);
}

}  // namespace

TEST_CASE("the unit double coset is a two-sided identity") {
  auto alg = algebra_for(std::make_shared<HeisenbergOracle>());
  const auto h = alg.engine().double_coset(HeisenbergOracle::make(q(1, 2), q(1, 3), 0));
  const auto left = alg.coset_product(alg.engine().identity_coset(), h);
  CHECK(left == HeckeElement::basis(h));
  const auto right = alg.coset_product(h, alg.engine().identity_coset());
  CHECK(right == HeckeElement::basis(h));
}

TEST_CASE("infinite dihedral reflection squares to 2 + [2,-]") {
  auto o = std::make_shared<DihedralOracle>(std::nullopt);
  auto alg = algebra_for(o);
  const auto t = alg.engine().double_coset(o->make(1, -1));
  const auto sq = alg.coset_product(t, t);
  CHECK(sq.size() == 2);
  CHECK(sq.coefficient(alg.engine().identity_coset().key()) == Gaussian(2));
  CHECK(sq.coefficient(alg.engine().double_coset(o->make(2, -1)).key()) == Gaussian(1));
  check_against_brute(alg, HeckeElement::basis(t), HeckeElement::basis(t));
}

TEST_CASE("directed element: t* t is the unit") {
  auto o = std::make_shared<AffineRationalOracle>();
  auto alg = algebra_for(o);
  const auto t = alg.basis(AffineRationalOracle::make(0, q(1, 2)));
  const auto t_star = alg.involution(t);
  CHECK(t_star == alg.basis(AffineRationalOracle::make(0, 2), Gaussian(q(1, 2))));
  CHECK(alg.convolve(t_star, t) == alg.unit());
  // t t* is not the unit: it is (1/2)(Γ + Γ(1/2,1)Γ).
  const auto other = alg.convolve(t, t_star);
  CHECK(other.size() == 2);
  CHECK(other.coefficient(alg.engine().identity_coset().key()) == Gaussian(q(1, 2)));
}

TEST_CASE("structure coefficients") {
  auto o = std::make_shared<DihedralOracle>(2);
  auto alg = algebra_for(o);
  const auto& engine = alg.engine();
  const auto half = engine.double_coset(o->make(q(1, 2), -1));
  const auto half_inv = engine.double_coset(o->invert(half.rep()));
  // Frozen from element-level enumeration: Γ(1/2,-)Γ = {(1/2,±)} is one coset.
  CHECK(alg.structure_coefficient(half_inv, half, engine.identity_coset()) == 1);

  const auto quarter = engine.double_coset(o->make(q(1, 4), -1));
  const auto quarter_inv = engine.double_coset(o->invert(quarter.rep()));
  CHECK(alg.structure_coefficient(quarter_inv, quarter, engine.identity_coset()) == 2);
  CHECK(alg.structure_coefficient(quarter_inv, quarter, half) == 2);

  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto g = engine.double_coset(o->sample(rng));
    const auto h = engine.double_coset(o->sample(rng));
    CHECK(alg.structure_coefficient(engine.identity_coset(), h, h) == 1);
    const auto gh = engine.double_coset(o->multiply(g.rep(), h.rep()));
    CHECK(alg.structure_coefficient(g, h, gh) > 0);
  }
}

TEST_CASE("convolution matches element-level enumeration on finite-Gamma pairs") {
  std::vector<std::shared_ptr<const GroupOracle>> oracles = {
      std::make_shared<PermutationOracle>(4, std::vector<Element>{Element{1, 0, 2, 3}}, "s4"),
      std::make_shared<PermutationOracle>(3, std::vector<Element>{}, "s3"),
      std::make_shared<DihedralOracle>(2),
      std::make_shared<DihedralOracle>(3),
      std::make_shared<DihedralOracle>(std::nullopt),
  };
  Rng rng(17);
  for (const auto& o : oracles) {
    auto alg = algebra_for(o);
    for (int i = 0; i < 15; ++i) {
      const auto f1 = testing::random_hecke_element(rng, alg, 2, Coefficients::Complex);
      const auto f2 = testing::random_hecke_element(rng, alg, 2, Coefficients::Complex);
      check_against_brute(alg, f1, f2);
    }
  }
}

TEST_CASE("the two product routes agree") {
  auto o = std::make_shared<Sl2LocalizedOracle>(2);
  auto alg = algebra_for(o);
  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    const auto g = alg.engine().double_coset(o->sample(rng));
    const auto h = alg.engine().double_coset(o->sample(rng));
    CHECK(alg.coset_product(g, h) == alg.product_by_structure(g, h));
  }
}

TEST_CASE("associativity on a heisenberg triple") {
  auto alg = algebra_for(std::make_shared<HeisenbergOracle>());
  const auto a = alg.basis(HeisenbergOracle::make(q(1, 2), 0, 0), Gaussian(q(1), q(2)));
  const auto b = alg.basis(HeisenbergOracle::make(0, q(1, 3), 0), Gaussian(q(-1, 2)));
  const auto c = alg.basis(HeisenbergOracle::make(q(1, 2), q(1, 2), q(1, 4))) + alg.unit();
  CHECK(alg.convolve(alg.convolve(a, b), c) == alg.convolve(a, alg.convolve(b, c)));
}

TEST_CASE("involution") {
  auto o = std::make_shared<AffineRationalOracle>();
  auto alg = algebra_for(o);
  CHECK(alg.involution(alg.unit()) == alg.unit());
  const auto f = alg.basis(AffineRationalOracle::make(q(1, 3), q(3, 2)), Gaussian(q(1), q(-2)));
  CHECK(alg.involution(alg.involution(f)) == f);
  const auto star = alg.involution(f);
  // Δ((b,a)) = num(a)/den(a) = 3/2 and the coefficient is conjugated.
  CHECK(star.terms().begin()->second.coefficient == Gaussian(q(3, 2), q(3)));
}

TEST_CASE("l1 norm") {
  auto o = std::make_shared<Sl2LocalizedOracle>(2);
  auto alg = algebra_for(o);
  CHECK(alg.l1_norm(alg.unit()).value == 1);
  const auto s = alg.basis(o->diagonal(Rational(2)));
  CHECK(alg.l1_norm(s).value == 6);
  CHECK(alg.l1_norm(alg.involution(s)).value == 6);

  const auto pythagorean = alg.basis(o->identity(), Gaussian(q(3), q(4)));
  CHECK(alg.l1_norm(pythagorean).value == 5);
  CHECK(alg.l1_norm(pythagorean).exact);

  const auto irrational = alg.basis(o->identity(), Gaussian(q(1), q(1)));
  const auto bound = alg.l1_norm(irrational);
  CHECK_FALSE(bound.exact);
  CHECK(bound.value * bound.value >= 2);
  CHECK(bound.value <= 2);
}

TEST_CASE("zero coefficients are never stored") {
  auto alg = algebra_for(std::make_shared<HeisenbergOracle>());
  auto f = alg.unit();
  f.accumulate(alg.engine().identity_coset(), Gaussian(-1));
  CHECK(f.empty());
  const auto g = alg.basis(HeisenbergOracle::make(q(1, 2), 0, 0));
  CHECK((g + Gaussian(-1) * g).empty());
}

TEST_CASE("json serialisation") {
  auto o = std::make_shared<AffineRationalOracle>();
  auto alg = algebra_for(o);
  const auto f = alg.basis(AffineRationalOracle::make(0, 2), Gaussian(q(-3, 4), q(1, 2)));
  const auto doc = to_json(f, *o);
  REQUIRE(doc["terms"].size() == 1);
  const auto& term = doc["terms"][0];
  CHECK(term["key"] == "0,2");
  CHECK(term["L"] == 2);
  CHECK(term["R"] == 1);
  CHECK(term["coefficient"]["num_re"] == "-3");
  CHECK(term["coefficient"]["den_re"] == "4");
  CHECK(term["coefficient"]["num_im"] == "1");
  CHECK(term["coefficient"]["den_im"] == "2");
}
