#include "hecke/coset_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace hecke {

std::string to_string(ClosureStatus status) {
  return status == ClosureStatus::Complete ? "Complete" : "BudgetExhausted";
}

const ClosureVertex* ClosureReport::find(const Element& key) const {
  for (const auto& v : vertices)
    if (v.coset.key() == key) return &v;
  return nullptr;
}

std::vector<Element> ClosureReport::keys() const {
  std::vector<Element> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) out.push_back(v.coset.key());
  return out;
}

std::vector<Element> ClosureReport::out_edges(const Element& key) const {
  std::vector<Element> out;
  for (const auto& [a, b] : edges)
    if (a == key) out.push_back(b);
  return out;
}

CosetGraph::CosetGraph(std::shared_ptr<const HeckeAlgebra> algebra) : algebra_(std::move(algebra)) {}

std::vector<DoubleCoset> CosetGraph::successors(const DoubleCoset& c) const {
  const auto chi = HeckeElement::basis(c);
  return algebra_->convolve(algebra_->involution(chi), chi).support();
}

std::vector<DoubleCoset> CosetGraph::level_set(const DoubleCoset& root, std::size_t n,
                                               std::size_t budget) const {
  std::map<Element, DoubleCoset> level{{root.key(), root}};
  for (std::size_t step = 0; step < n; ++step) {
    std::map<Element, DoubleCoset> next;
    for (const auto& [_, c] : level)
      for (auto& s : successors(c)) {
        next.emplace(s.key(), s);
        if (next.size() > budget) {
          std::vector<Element> partial;
          for (const auto& [k, __] : next) partial.push_back(k);
          throw BudgetExhausted("level set S^" + std::to_string(step + 1), budget,
                                std::move(partial));
        }
      }
    level = std::move(next);
  }
  std::vector<DoubleCoset> out;
  for (auto& [_, c] : level) out.push_back(c);
  return out;
}

ClosureReport CosetGraph::closure(const DoubleCoset& root, std::size_t budget) const {
  ClosureReport report{root, ClosureStatus::Complete, budget, {}, {}};
  std::map<Element, std::size_t> level_of;
  std::set<std::pair<Element, Element>> edges;

  report.vertices.push_back({root, 0});
  level_of.emplace(root.key(), 0);
  std::size_t cursor = 0;

  while (cursor < report.vertices.size()) {
    const ClosureVertex current = report.vertices[cursor++];
    bool exhausted = false;
    for (auto& s : successors(current.coset)) {
      if (!level_of.contains(s.key())) {
        if (report.vertices.size() >= budget) {
          exhausted = true;
          break;
        }
        level_of.emplace(s.key(), current.level + 1);
        report.vertices.push_back({s, current.level + 1});
      }
      edges.emplace(current.coset.key(), s.key());
    }
    if (exhausted) {
      report.status = ClosureStatus::BudgetExhausted;
      break;
    }
  }
  report.edges.assign(edges.begin(), edges.end());
  return report;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const ClosureReport& report, const GroupOracle& oracle) {
  std::ostringstream out;
  out << "digraph closure {\n";
  for (const auto& v : report.vertices)
    out << "  \"" << dot_escape(oracle.format(v.coset.key())) << "\" [label=\""
        << dot_escape(oracle.format(v.coset.rep())) << " (L=" << v.coset.L() << ")\"];\n";
  for (const auto& [a, b] : report.edges)
    out << "  \"" << dot_escape(oracle.format(a)) << "\" -> \"" << dot_escape(oracle.format(b))
        << "\";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json export_json(const ClosureReport& report, const GroupOracle& oracle) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : report.vertices)
    vertices.push_back({{"key", oracle.format(v.coset.key())},
                        {"rep", oracle.format(v.coset.rep())},
                        {"L", v.coset.L()},
                        {"R", v.coset.R()},
                        {"delta", to_string(v.coset.delta())},
                        {"level", v.level}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : report.edges) edges.push_back({oracle.format(a), oracle.format(b)});
  return {{"root", oracle.format(report.root.key())},
          {"status", to_string(report.status)},
          {"budget", report.budget},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)}};
}

ClosureSkeleton parse_closure_json(const nlohmann::json& doc) {
  ClosureSkeleton out;
  out.root = doc.at("root").get<std::string>();
  out.status = doc.at("status").get<std::string>();
  for (const auto& v : doc.at("vertices")) out.vertices.push_back(v.at("key").get<std::string>());
  for (const auto& e : doc.at("edges"))
    out.edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  return out;
}

}  // namespace hecke
