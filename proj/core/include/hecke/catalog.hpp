#pragma once

#include "hecke/commutator_lab.hpp"
#include "hecke/norm_certifier.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

inline constexpr std::size_t kDefaultSubgroupBudget = 4096;

struct PairParams {
  std::optional<unsigned long> p;
};

struct Expectation {
  bool closures_finite = true;
  /// Closure size of the seed coset when it is known by hand.
  std::optional<std::size_t> seed_closure_size;
  std::string note;
};

struct TaggedFamily {
  FamilyTag tag;
  Provenance provenance;
};

struct CatalogEntry {
  std::string name;
  nlohmann::json parameters = nlohmann::json::object();
  std::shared_ptr<const GroupOracle> oracle;
  std::vector<TaggedFamily> tags;
  std::optional<SubnormalChain> chain;
  Element seed;  ///< designated seed coset representative
  Expectation expectation;

  bool has_tag(FamilyTag tag) const;
};

/// Names accepted by build(), in catalog order.
const std::vector<std::string>& catalog_names();

/// Whether the named pair takes the prime parameter p.
bool takes_prime(const std::string& name);

/// Throws UnknownPair, or BadParams (e.g. p not prime, p given where unused).
CatalogEntry build(const std::string& name, const PairParams& params = {});

/// Engine, algebra, graph and lab over one oracle.
struct PairContext {
  std::shared_ptr<const CosetEngine> engine;
  std::shared_ptr<const HeckeAlgebra> algebra;
  std::shared_ptr<const CosetGraph> graph;
  std::shared_ptr<const CommutatorLab> lab;

  explicit PairContext(std::shared_ptr<const GroupOracle> oracle,
                       std::size_t coset_budget = kDefaultCosetBudget);
  const GroupOracle& oracle() const { return engine->oracle(); }
};

nlohmann::json to_json(const CatalogEntry& entry);
nlohmann::json catalog_json();

/// Group-law and canonicalisation checks on sampled triples: associativity,
/// identity, inverses, Γ generators in Γ, random Γ words in Γ, and idempotent,
/// coset-preserving canonical representatives.
ProbeReport verify_oracle(const GroupOracle& oracle, std::size_t samples, std::uint64_t seed);

/// Sampling consistency checks for the declared family tags of an entry.
std::vector<ProbeReport> verify_tags(const CatalogEntry& entry, const PairContext& ctx,
                                     std::size_t samples, std::uint64_t seed);

struct AfFiltrationReport {
  std::size_t subgroup_order = 0;
  std::size_t dimension = 0;  ///< number of Γ-double cosets in <Γ, g>
  bool declared_locally_finite = false;
  ProbeReport report;
};

/// Builds <Γ, g> by closure under multiplication and counts its double cosets.
/// Throws BudgetExhausted once the subgroup exceeds `budget` elements.
AfFiltrationReport af_filtration_check(const CatalogEntry& entry, const Element& g,
                                       std::size_t budget = kDefaultSubgroupBudget);

}  // namespace hecke
