#pragma once

#include "hecke/exact.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace hecke {

/// Opaque group element: a tuple of exact rationals whose meaning belongs to
/// the oracle that produced it. Ordered lexicographically, which is the total
/// order every oracle uses for canonical representatives.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Element(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::span<const Rational> coords() const noexcept { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const noexcept { return coords_.size(); }

  std::size_t hash() const noexcept;

  friend bool operator==(const Element& a, const Element& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

 private:
  std::vector<Rational> coords_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept { return e.hash(); }
};

}  // namespace hecke

template <>
struct std::hash<hecke::Element> {
  std::size_t operator()(const hecke::Element& e) const noexcept { return e.hash(); }
};
