#pragma once

#include "hecke/hecke_algebra.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

inline constexpr std::size_t kDefaultClosureBudget = 256;

enum class ClosureStatus { Complete, BudgetExhausted };

std::string to_string(ClosureStatus status);

struct ClosureVertex {
  DoubleCoset coset;
  std::size_t level = 0;  ///< smallest n with the vertex in S^n(root)
};

/// Result of a budgeted breadth-first closure. Vertices are kept in discovery
/// order (BFS, ties broken by canonical key); edges are sorted key pairs.
struct ClosureReport {
  DoubleCoset root;
  ClosureStatus status = ClosureStatus::Complete;
  std::size_t budget = kDefaultClosureBudget;
  std::vector<ClosureVertex> vertices;
  std::vector<std::pair<Element, Element>> edges;

  bool complete() const noexcept { return status == ClosureStatus::Complete; }
  std::size_t size() const noexcept { return vertices.size(); }
  const ClosureVertex* find(const Element& key) const;
  bool contains(const Element& key) const { return find(key) != nullptr; }
  std::vector<Element> keys() const;
  /// Successor targets recorded for `key`, ascending.
  std::vector<Element> out_edges(const Element& key) const;
};

/// Associated graph on the double-coset basis: a → b iff b has a nonzero
/// coefficient in a* * a.
class CosetGraph {
 public:
  explicit CosetGraph(std::shared_ptr<const HeckeAlgebra> algebra);

  const HeckeAlgebra& algebra() const noexcept { return *algebra_; }
  const CosetEngine& engine() const noexcept { return algebra_->engine(); }

  /// Support of (χ_c)* * χ_c, ascending by key.
  std::vector<DoubleCoset> successors(const DoubleCoset& c) const;

  /// Exactly S^n({root}); throws BudgetExhausted if any S^k exceeds `budget` vertices.
  std::vector<DoubleCoset> level_set(const DoubleCoset& root, std::size_t n,
                                     std::size_t budget = kDefaultClosureBudget) const;

  ClosureReport closure(const DoubleCoset& root, std::size_t budget = kDefaultClosureBudget) const;

 private:
  std::shared_ptr<const HeckeAlgebra> algebra_;
};

std::string export_dot(const ClosureReport& report, const GroupOracle& oracle);
nlohmann::json export_json(const ClosureReport& report, const GroupOracle& oracle);

/// Vertex keys and edges recovered from export_json output (printed forms).
struct ClosureSkeleton {
  std::string root;
  std::string status;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};
ClosureSkeleton parse_closure_json(const nlohmann::json& doc);

}  // namespace hecke
