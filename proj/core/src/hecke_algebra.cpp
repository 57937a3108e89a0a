#include "hecke/hecke_algebra.hpp"

#include <algorithm>
#include <set>

namespace hecke {

HeckeElement HeckeElement::basis(const DoubleCoset& c, Gaussian coefficient) {
  HeckeElement f;
  f.accumulate(c, coefficient);
  return f;
}

void HeckeElement::accumulate(const DoubleCoset& c, const Gaussian& coefficient) {
  if (coefficient.is_zero()) return;
  auto it = terms_.find(c.key());
  if (it == terms_.end()) {
    terms_.emplace(c.key(), HeckeTerm{c, coefficient});
    return;
  }
  it->second.coefficient += coefficient;
  if (it->second.coefficient.is_zero()) terms_.erase(it);
}

Gaussian HeckeElement::coefficient(const Element& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Gaussian() : it->second.coefficient;
}

std::vector<DoubleCoset> HeckeElement::support() const {
  std::vector<DoubleCoset> out;
  out.reserve(terms_.size());
  for (const auto& [_, term] : terms_) out.push_back(term.coset);
  return out;
}

bool HeckeElement::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second.coefficient.is_real(); });
}

bool HeckeElement::is_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) {
    return kv.second.coefficient.is_real() && sgn(kv.second.coefficient.re) >= 0;
  });
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  for (const auto& [_, term] : other.terms_) accumulate(term.coset, term.coefficient);
  return *this;
}

HeckeElement operator*(const Gaussian& s, const HeckeElement& f) {
  HeckeElement out;
  for (const auto& [_, term] : f.terms_) out.accumulate(term.coset, term.coefficient * s);
  return out;
}

bool operator==(const HeckeElement& a, const HeckeElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second.coefficient == ib->second.coefficient)) return false;
  return true;
}

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const CosetEngine> engine) : engine_(std::move(engine)) {}

HeckeElement HeckeAlgebra::unit() const {
  return HeckeElement::basis(engine_->identity_coset());
}

HeckeElement HeckeAlgebra::basis(const Element& g, Gaussian coefficient) const {
  return HeckeElement::basis(engine_->double_coset(g), std::move(coefficient));
}

HeckeElement HeckeAlgebra::coset_product(const DoubleCoset& g, const DoubleCoset& h) const {
  const auto& oracle = engine_->oracle();
  HeckeElement out;
  for (const auto& w : h.left_reps()) {
    Element gw = oracle.multiply(g.rep(), w);
    DoubleCoset target = engine_->double_coset(gw);
    Rational c(g.L(), target.L());
    c.canonicalize();
    out.accumulate(target, Gaussian(c));
  }
  return out;
}

Rational HeckeAlgebra::structure_coefficient(const DoubleCoset& g, const DoubleCoset& h,
                                             const DoubleCoset& s) const {
  const auto& oracle = engine_->oracle();
  std::size_t count = 0;
  for (const auto& w : h.left_reps())
    if (s.contains_left_coset(oracle.coset_canonical_rep(oracle.multiply(g.rep(), w)))) ++count;
  Rational c(g.L() * count, s.L());
  c.canonicalize();
  return c;
}

HeckeElement HeckeAlgebra::product_by_structure(const DoubleCoset& g, const DoubleCoset& h) const {
  const auto& oracle = engine_->oracle();
  // Candidate classes Γ g γ h Γ, γ ∈ Γ, reached through the left cosets of ΓhΓ.
  std::map<Element, DoubleCoset> candidates;
  for (const auto& w : h.left_reps()) {
    DoubleCoset c = engine_->double_coset(oracle.multiply(g.rep(), w));
    candidates.emplace(c.key(), c);
  }
  HeckeElement out;
  for (const auto& [_, s] : candidates) out.accumulate(s, Gaussian(structure_coefficient(g, h, s)));
  return out;
}

HeckeElement HeckeAlgebra::convolve(const HeckeElement& f1, const HeckeElement& f2) const {
  HeckeElement out;
  for (const auto& [_, a] : f1.terms())
    for (const auto& [__, b] : f2.terms()) {
      const Gaussian scale = a.coefficient * b.coefficient;
      const auto product = coset_product(a.coset, b.coset);
      for (const auto& [___, t] : product.terms())
        out.accumulate(t.coset, t.coefficient * scale);
    }
  return out;
}

HeckeElement HeckeAlgebra::involution(const HeckeElement& f) const {
  // (χ_{ΓsΓ})* = Δ(s)·χ_{Γs^-1Γ}
  HeckeElement out;
  for (const auto& [_, term] : f.terms()) {
    DoubleCoset inverse = engine_->double_coset(engine_->oracle().invert(term.coset.rep()));
    out.accumulate(inverse, term.coefficient.conj() * term.coset.delta());
  }
  return out;
}

L1Norm HeckeAlgebra::l1_norm(const HeckeElement& f) const {
  L1Norm norm;
  for (const auto& [_, term] : f.terms()) {
    const auto& z = term.coefficient;
    Rational modulus;
    if (z.is_real()) {
      modulus = abs(z.re);
    } else if (auto root = exact_sqrt(z.norm_squared())) {
      modulus = *root;
    } else {
      // Certified: sqrt(a²+b²) <= min(|a|+|b|, dyadic upper root).
      modulus = std::min(Rational(abs(z.re) + abs(z.im)), sqrt_upper(z.norm_squared()));
      norm.exact = false;
    }
    norm.value += modulus * static_cast<unsigned long>(term.coset.L());
  }
  return norm;
}

nlohmann::json to_json(const Gaussian& z) {
  return {{"num_re", z.re.get_num().get_str()},
          {"den_re", z.re.get_den().get_str()},
          {"num_im", z.im.get_num().get_str()},
          {"den_im", z.im.get_den().get_str()}};
}

nlohmann::json to_json(const HeckeElement& f, const GroupOracle& oracle) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, term] : f.terms())
    terms.push_back({{"key", oracle.format(key)},
                     {"coefficient", to_json(term.coefficient)},
                     {"L", term.coset.L()},
                     {"R", term.coset.R()}});
  return {{"terms", std::move(terms)}};
}

}  // namespace hecke
