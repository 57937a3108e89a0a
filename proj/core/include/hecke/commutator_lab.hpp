#pragma once

#include "hecke/coset_graph.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hecke {

using Membership = std::function<bool(const Element&)>;

/// G = H_0 ⊇ H_1 ⊇ ... ⊇ H_n = Γ with H_{i+1} declared normal in H_i.
struct SubnormalChain {
  std::vector<Membership> members;
  std::vector<bool> declared_normal;  ///< declared_normal[i]: H_{i+1} ⊴ H_i
  std::vector<std::string> labels;
  /// Optional per-level samplers of random elements of H_i, used by the normality check.
  std::vector<std::function<Element(Rng&)>> samplers;

  /// Number of inclusion steps n (members.size() - 1).
  std::size_t length() const noexcept { return members.empty() ? 0 : members.size() - 1; }
};

enum class FamilyTag {
  FiniteIndex,
  Directed,
  Iwahori,
  Protonormal,
  Subnormal,
  Ascendant,
  FinitelyManyConjugates,
  FiniteByNilpotent,
  Hypercentral,
  FCWithFiniteGamma,
  LocallyNilpotentFiniteGamma,
  LocallyFiniteFiniteGamma,
  None,
};

enum class Provenance { Declared, SampleChecked };

std::string to_string(FamilyTag tag);
std::string to_string(Provenance provenance);

/// Outcome of a sampling or finite test. Serialises to
/// {test, input, verdict, samples, seed, counterexample?} plus any `details`.
struct ProbeReport {
  std::string test;
  std::string input;
  std::string verdict;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> counterexample;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const noexcept { return !counterexample.has_value(); }
};

nlohmann::json to_json(const ProbeReport& report);

struct DirectedResult {
  bool directed = false;  ///< L(t) = 1, i.e. Γ ⊆ tΓt^-1
  std::size_t l_value = 0;
  std::size_t r_value = 0;
  ProbeReport report;
};

struct QuadraticResult {
  bool holds = false;
  bool degenerate = false;  ///< L(s) = 1: the relation collapses to χ* χ = χ_Γ
  Gaussian gamma_coefficient;
  Gaussian self_coefficient;
  ProbeReport report;
};

/// Iterated commutators, successor witnesses and family probes over one algebra.
class CommutatorLab {
 public:
  explicit CommutatorLab(std::shared_ptr<const CosetGraph> graph);

  const GroupOracle& oracle() const noexcept { return graph_->engine().oracle(); }
  const CosetEngine& engine() const noexcept { return graph_->engine(); }
  const CosetGraph& graph() const noexcept { return *graph_; }

  /// [g, γ_1, ..., γ_n] = [[g, γ_1, ..., γ_{n-1}], γ_n] with [s,t] = s^-1 t^-1 s t.
  /// Throws NotInGamma(i) for the first γ_i outside Γ (1-based).
  Element iterated_commutator(const Element& g, std::span<const Element> gammas) const;

  /// γ_1..γ_n with Γ[g, γ_1, ..., γ_i]Γ = path[i] where g = path[0].rep().
  /// Throws NotASuccessorPath(i) if path[i] is not a successor of path[i-1].
  std::vector<Element> witness_sequence(std::span<const DoubleCoset> path) const;

  /// Samples γ-sequences of the chain's length and checks
  /// [g, γ_1, ..., γ_k] ∈ H_k for every k.
  ProbeReport chain_condition_b(const Element& g, const SubnormalChain& chain,
                                std::size_t samples, std::uint64_t seed) const;

  /// Follows random γ-sequences for up to `horizon` steps, stopping early once
  /// the commutator enters Γ. Reports how many sequences reached Γ and how
  /// many distinct double cosets were visited on the way.
  ProbeReport stabilization_probe(const Element& g, std::size_t samples, std::size_t horizon,
                                  std::uint64_t seed) const;

  DirectedResult directed_test(const Element& t) const;
  QuadraticResult quadratic_relation_test(const DoubleCoset& c) const;

  /// Searches for γ, γ' ∈ Γ witnessing Γs^-1Γs != s^-1ΓsΓ.
  ProbeReport protonormal_falsifier(const Element& s, std::size_t samples,
                                    std::uint64_t seed) const;

 private:
  std::shared_ptr<const CosetGraph> graph_;
};

/// Sample check of the chain: the identity lies in every H_i, Γ generators
/// lie in H_n, and h^-1 x h ∈ H_{i+1} for sampled h ∈ H_i, x ∈ H_{i+1} whenever
/// that step is declared normal. Needs `samplers` for every level.
ProbeReport check_chain(const GroupOracle& oracle, const SubnormalChain& chain,
                        std::size_t samples, std::uint64_t seed);

/// The pair (K, Γ) for a subgroup Γ ⊆ K ⊆ G. Group law, Γ data and coset
/// canonicalisation are the ambient ones, so keys agree with the ambient pair.
class RestrictedOracle final : public GroupOracle {
 public:
  RestrictedOracle(std::shared_ptr<const GroupOracle> ambient, Membership membership,
                   std::vector<Element> subgroup_generators, std::string label);

  std::string name() const override { return label_; }
  Element identity() const override { return ambient_->identity(); }
  Element multiply(const Element& a, const Element& b) const override {
    return ambient_->multiply(a, b);
  }
  Element invert(const Element& a) const override { return ambient_->invert(a); }
  bool in_gamma(const Element& x) const override { return ambient_->in_gamma(x); }
  const std::vector<Element>& gamma_generators() const override {
    return ambient_->gamma_generators();
  }
  Element coset_canonical_rep(const Element& g) const override {
    return ambient_->coset_canonical_rep(g);
  }
  bool contains(const Element& x) const override { return ambient_->contains(x) && member_(x); }
  std::string format(const Element& x) const override { return ambient_->format(x); }
  Element parse(std::string_view text) const override;
  std::string element_syntax() const override;
  /// Random word in the subgroup generators and Γ generators.
  Element sample(Rng& rng) const override;

  const GroupOracle& ambient() const noexcept { return *ambient_; }

 private:
  std::shared_ptr<const GroupOracle> ambient_;
  Membership member_;
  std::vector<Element> generators_;
  std::string label_;
};

/// Restricts a pair to a subgroup containing Γ. Γ ⊆ K is checked on every Γ
/// generator and on `samples` random Γ words; throws GammaNotContained.
std::shared_ptr<const RestrictedOracle> restrict_pair(std::shared_ptr<const GroupOracle> ambient,
                                                      Membership membership,
                                                      std::vector<Element> subgroup_generators,
                                                      std::string label,
                                                      std::size_t samples = 64,
                                                      std::uint64_t seed = kDefaultSeed);

}  // namespace hecke
