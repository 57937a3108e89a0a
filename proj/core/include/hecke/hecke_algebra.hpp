#pragma once

#include "hecke/exact.hpp"
#include "hecke/group_core.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <memory>
#include <vector>

namespace hecke {

struct HeckeTerm {
  DoubleCoset coset;
  Gaussian coefficient;
};

/// Finitely supported function on Γ\G/Γ with Gaussian-rational values,
/// stored sparsely and sorted by canonical key. Zero coefficients are never stored.
class HeckeElement {
 public:
  HeckeElement() = default;

  static HeckeElement basis(const DoubleCoset& c, Gaussian coefficient = Gaussian(1));

  /// Adds `coefficient` to the value at `c`, dropping the term if it cancels.
  void accumulate(const DoubleCoset& c, const Gaussian& coefficient);

  Gaussian coefficient(const Element& key) const;
  bool contains(const Element& key) const { return terms_.contains(key); }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::map<Element, HeckeTerm>& terms() const noexcept { return terms_; }
  std::vector<DoubleCoset> support() const;

  bool is_real() const;
  bool is_nonnegative() const;

  HeckeElement& operator+=(const HeckeElement& other);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator*(const Gaussian& s, const HeckeElement& f);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b);

 private:
  std::map<Element, HeckeTerm> terms_;
};

/// L¹-norm value. `exact` is false when a genuinely complex coefficient forced
/// a certified rational upper bound in place of an irrational modulus.
struct L1Norm {
  Rational value;
  bool exact = true;
};

/// H(G, Γ) over one coset engine.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const CosetEngine> engine);

  const CosetEngine& engine() const noexcept { return *engine_; }
  std::shared_ptr<const CosetEngine> engine_ptr() const noexcept { return engine_; }
  const GroupOracle& oracle() const noexcept { return engine_->oracle(); }

  HeckeElement unit() const;
  HeckeElement basis(const Element& g, Gaussian coefficient = Gaussian(1)) const;

  /// ΓgΓ * ΓhΓ = Σ_{wΓ ⊆ ΓhΓ} L(g)/L(gw) · ΓgwΓ with g the representative of `g`.
  HeckeElement coset_product(const DoubleCoset& g, const DoubleCoset& h) const;

  /// L(g)·C_{g,h}(s)/L(s) with C_{g,h}(s) = #{wΓ ⊆ ΓhΓ : ΓgwΓ = ΓsΓ}.
  Rational structure_coefficient(const DoubleCoset& g, const DoubleCoset& h,
                                 const DoubleCoset& s) const;

  /// The same product reassembled from structure coefficients: the candidate
  /// classes are found first, then each coefficient is counted independently.
  HeckeElement product_by_structure(const DoubleCoset& g, const DoubleCoset& h) const;

  HeckeElement convolve(const HeckeElement& f1, const HeckeElement& f2) const;

  /// f*(ΓgΓ) = Δ(g^-1)·conj(f(Γg^-1Γ)).
  HeckeElement involution(const HeckeElement& f) const;

  L1Norm l1_norm(const HeckeElement& f) const;

 private:
  std::shared_ptr<const CosetEngine> engine_;
};

nlohmann::json to_json(const Gaussian& z);
nlohmann::json to_json(const HeckeElement& f, const GroupOracle& oracle);

}  // namespace hecke
