#pragma once

#include "hecke/element.hpp"
#include "hecke/errors.hpp"
#include "hecke/group_oracle.hpp"

#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

namespace hecke {

inline constexpr std::size_t kDefaultCosetBudget = 10000;

/// Representative-independent data of a double coset ΓgΓ.
struct CosetClass {
  Element key;                     ///< smallest canonical left-coset representative
  std::vector<Element> left_reps;  ///< canonical reps of ΓgΓ/Γ, ascending
  std::size_t left_count = 0;      ///< L(g)
  std::size_t right_count = 0;     ///< R(g) = L(g^-1)
};

/// A double coset together with the representative it was requested through.
/// Equality and ordering go through the canonical key only.
class DoubleCoset {
 public:
  DoubleCoset(std::shared_ptr<const CosetClass> cls, Element rep)
      : cls_(std::move(cls)), rep_(std::move(rep)) {}

  const Element& key() const noexcept { return cls_->key; }
  const Element& rep() const noexcept { return rep_; }
  std::span<const Element> left_reps() const noexcept { return cls_->left_reps; }
  std::size_t L() const noexcept { return cls_->left_count; }
  std::size_t R() const noexcept { return cls_->right_count; }
  Rational delta() const {
    Rational d(cls_->left_count, cls_->right_count);
    d.canonicalize();
    return d;
  }

  /// Whether the canonical left-coset representative `canonical` lies in this double coset.
  bool contains_left_coset(const Element& canonical) const;

  DoubleCoset with_rep(Element rep) const { return DoubleCoset(cls_, std::move(rep)); }

  friend bool operator==(const DoubleCoset& a, const DoubleCoset& b) { return a.key() == b.key(); }
  friend auto operator<=>(const DoubleCoset& a, const DoubleCoset& b) { return a.key() <=> b.key(); }

 private:
  std::shared_ptr<const CosetClass> cls_;
  Element rep_;
};

/// Coset machinery for one pair: orbit enumeration, L/R/Δ and canonical
/// double-coset identities. Double cosets are memoised by every canonical
/// left-coset representative they contain; the memo is mutex-guarded so an
/// engine can be shared across threads.
class CosetEngine {
 public:
  explicit CosetEngine(std::shared_ptr<const GroupOracle> oracle,
                       std::size_t coset_budget = kDefaultCosetBudget);

  const GroupOracle& oracle() const noexcept { return *oracle_; }
  std::shared_ptr<const GroupOracle> oracle_ptr() const noexcept { return oracle_; }
  std::size_t coset_budget() const noexcept { return budget_; }

  /// Orbit of gΓ under Γ, with the Γ-elements that move gΓ onto each coset.
  CosetOrbit orbit(const Element& g) const;
  CosetOrbit orbit(const Element& g, std::size_t budget) const;

  /// Canonical representatives of ΓgΓ/Γ in ascending order.
  std::vector<Element> left_cosets(const Element& g) const;
  std::vector<Element> left_cosets(const Element& g, std::size_t budget) const;

  std::size_t l_value(const Element& g) const;
  std::size_t r_value(const Element& g) const;
  Rational delta(const Element& g) const;

  DoubleCoset double_coset(const Element& g) const;
  DoubleCoset identity_coset() const { return double_coset(oracle_->identity()); }
  bool same_double_coset(const Element& g, const Element& h) const;

  /// Number of distinct classes memoised so far.
  std::size_t cached_classes() const;

 private:
  std::shared_ptr<const CosetClass> lookup(const Element& canonical) const;

  std::shared_ptr<const GroupOracle> oracle_;
  std::size_t budget_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Element, std::shared_ptr<const CosetClass>, ElementHash> index_;
  mutable std::size_t class_count_ = 0;
};

}  // namespace hecke
