#pragma once

#include "hecke/group_oracle.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_set>
#include <vector>

namespace hecke {

/// Symmetric group on {1..degree} with a finite subgroup Γ given by generators.
/// Elements are image lists (0-based); (a·b)(i) = a(b(i)).
/// Syntax: cycle notation "(1,2,3)(4,5)" / "(123)" / "()" or one-line images "2,1,3,4".
class PermutationOracle final : public GroupOracle {
 public:
  PermutationOracle(std::size_t degree, std::vector<Element> gamma_generators,
                    std::string label);

  std::string name() const override { return label_; }
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  bool in_gamma(const Element& x) const override { return gamma_set_.contains(x); }
  const std::vector<Element>& gamma_generators() const override { return generators_; }
  Element coset_canonical_rep(const Element& g) const override;
  bool contains(const Element& x) const override;
  std::string format(const Element& x) const override;
  Element parse(std::string_view text) const override;
  std::string element_syntax() const override;
  Element sample(Rng& rng) const override;

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Element>& gamma_elements() const noexcept { return gamma_; }
  /// Every element of the symmetric group, ascending.
  std::vector<Element> all_elements() const;
  /// Element from 1-based cycles, e.g. {{1,2,3}} for (1,2,3).
  Element from_cycles(const std::vector<std::vector<std::size_t>>& cycles) const;

 private:
  std::size_t degree_;
  std::vector<Element> generators_;
  std::vector<Element> gamma_;
  std::unordered_set<Element, ElementHash> gamma_set_;
  std::string label_;
};

/// Generalized dihedral group A ⋊ Z/2 with Γ = {(0,+), (0,-)}; elements are
/// (offset, sign) with (a,ε)(b,δ) = (a+εb, εδ). A is Z (infinite dihedral) or
/// the p-quasicyclic group Z[1/p]/Z (offsets reduced into [0,1)).
/// Syntax: "offset,sign", e.g. "1/8,-" or "3,+".
class DihedralOracle final : public GroupOracle {
 public:
  /// p = nullopt gives Z ⋊ Z/2; otherwise Z_{p^∞} ⋊ Z/2.
  explicit DihedralOracle(std::optional<unsigned long> p);

  std::string name() const override;
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  bool in_gamma(const Element& x) const override;
  const std::vector<Element>& gamma_generators() const override { return generators_; }
  Element coset_canonical_rep(const Element& g) const override;
  bool contains(const Element& x) const override;
  std::string format(const Element& x) const override;
  Element parse(std::string_view text) const override;
  std::string element_syntax() const override;
  Element sample(Rng& rng) const override;

  Element make(const Rational& offset, int sign) const;
  std::optional<unsigned long> prime() const noexcept { return p_; }

 private:
  Rational reduce(const Rational& offset) const;

  std::optional<unsigned long> p_;
  std::vector<Element> generators_;
};

/// Rational Heisenberg group UT_3(Q) with Γ = UT_3(Z). Element (x,y,z) is
/// [[1,x,z],[0,1,y],[0,0,1]]. Syntax: nine comma-separated rationals (row-major)
/// or the three entries "x,y,z".
class HeisenbergOracle final : public GroupOracle {
 public:
  HeisenbergOracle();

  std::string name() const override { return "heisenberg"; }
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  bool in_gamma(const Element& x) const override;
  const std::vector<Element>& gamma_generators() const override { return generators_; }
  Element coset_canonical_rep(const Element& g) const override;
  bool contains(const Element& x) const override { return x.size() == 3; }
  std::string format(const Element& x) const override;
  Element parse(std::string_view text) const override;
  std::string element_syntax() const override;
  Element sample(Rng& rng) const override;

  static Element make(Rational x, Rational y, Rational z) { return Element{x, y, z}; }

 private:
  std::vector<Element> generators_;
};

/// SL_2(Z[1/p]) with Γ = SL_2(Z). Element [a,b,c,d] is [[a,b],[c,d]].
/// Left cosets xΓ are canonicalised by the column Hermite form of the lattice x·Z^2.
/// Syntax: "a,b,c,d".
class Sl2LocalizedOracle final : public GroupOracle {
 public:
  explicit Sl2LocalizedOracle(unsigned long p);

  std::string name() const override;
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  bool in_gamma(const Element& x) const override;
  const std::vector<Element>& gamma_generators() const override { return generators_; }
  Element coset_canonical_rep(const Element& g) const override;
  bool contains(const Element& x) const override;
  std::string format(const Element& x) const override;
  Element parse(std::string_view text) const override;
  std::string element_syntax() const override;
  Element sample(Rng& rng) const override;

  Element diagonal(const Rational& t) const;
  unsigned long prime() const noexcept { return p_; }

 private:
  unsigned long p_;
  std::vector<Element> generators_;
};

/// Bost–Connes-type pair Q ⋊ Q^+ with Γ = Z ⋊ {1}; element (b,a) acts as
/// x ↦ ax + b, so (b,a)(b',a') = (b+ab', aa'). Syntax: "b,a" with a > 0.
class AffineRationalOracle final : public GroupOracle {
 public:
  AffineRationalOracle();

  std::string name() const override { return "bc-axb"; }
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  bool in_gamma(const Element& x) const override;
  const std::vector<Element>& gamma_generators() const override { return generators_; }
  Element coset_canonical_rep(const Element& g) const override;
  bool contains(const Element& x) const override;
  std::string format(const Element& x) const override;
  Element parse(std::string_view text) const override;
  std::string element_syntax() const override;
  Element sample(Rng& rng) const override;

  static Element make(Rational b, Rational a) { return Element{b, a}; }

 private:
  std::vector<Element> generators_;
};

/// Splits "a, b ,c" on commas and trims each field.
std::vector<std::string> split_fields(std::string_view text);

}  // namespace hecke
