#pragma once

#include "hecke/element.hpp"
#include "hecke/random.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

/// Orbit of gΓ under left multiplication by Γ. `reps` are canonical left-coset
/// representatives in ascending order; `movers[i]` is an element γ of Γ with
/// γ·g·Γ = reps[i]·Γ.
struct CosetOrbit {
  std::vector<Element> reps;
  std::vector<Element> movers;
};

/// Everything the engine needs to know about a concrete pair (G, Γ).
///
/// Implementations must be immutable after construction and safe for
/// concurrent read-only use. Requirements:
///  - coset_canonical_rep(g) depends only on gΓ and lies in gΓ;
///  - gamma_generators() generate exactly {x : in_gamma(x)};
///  - the lexicographic order on Element is the total order used for keys.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  virtual std::string name() const = 0;

  virtual Element identity() const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element invert(const Element& a) const = 0;

  virtual bool in_gamma(const Element& x) const = 0;
  virtual const std::vector<Element>& gamma_generators() const = 0;
  virtual Element coset_canonical_rep(const Element& g) const = 0;

  /// Whether x is a well-formed element of G (restricted pairs narrow this).
  virtual bool contains(const Element& x) const = 0;

  virtual std::string format(const Element& x) const = 0;
  /// Per-oracle element syntax; throws ParseError or InvalidElement.
  virtual Element parse(std::string_view text) const = 0;
  /// Human-readable description of the element syntax accepted by parse().
  virtual std::string element_syntax() const = 0;

  /// Random element of G for property runs. Distributions are tuned per pair
  /// so that coset sizes stay small.
  virtual Element sample(Rng& rng) const = 0;

  /// Hook for pairs whose Γ is not finitely generated: return the full orbit
  /// directly. The default defers to BFS over gamma_generators().
  virtual std::optional<CosetOrbit> left_cosets_override(const Element&, std::size_t) const {
    return std::nullopt;
  }

  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element commutator(const Element& s, const Element& t) const {
    return multiply(multiply(invert(s), invert(t)), multiply(s, t));
  }

  /// Random word of length 1..max_length in the Γ generators and their inverses.
  Element random_gamma(Rng& rng, std::size_t max_length = 8) const;
};

}  // namespace hecke
