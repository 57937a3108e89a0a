#include "hecke/group_core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace hecke {

Element GroupOracle::random_gamma(Rng& rng, std::size_t max_length) const {
  const auto& gens = gamma_generators();
  Element word = identity();
  if (gens.empty()) return word;
  const auto length = 1 + uniform_below(rng, max_length);
  for (std::uint64_t i = 0; i < length; ++i) {
    const auto pick = uniform_below(rng, 2 * gens.size());
    const auto& gen = gens[pick / 2];
    word = multiply(word, pick % 2 == 0 ? gen : invert(gen));
  }
  return word;
}

bool DoubleCoset::contains_left_coset(const Element& canonical) const {
  return std::binary_search(cls_->left_reps.begin(), cls_->left_reps.end(), canonical);
}

CosetEngine::CosetEngine(std::shared_ptr<const GroupOracle> oracle, std::size_t coset_budget)
    : oracle_(std::move(oracle)), budget_(coset_budget) {
  if (!oracle_) throw BadParams("null oracle");
  if (budget_ == 0) throw BadParams("coset budget must be >= 1");
}

CosetOrbit CosetEngine::orbit(const Element& g) const { return orbit(g, budget_); }

CosetOrbit CosetEngine::orbit(const Element& g, std::size_t budget) const {
  if (budget == 0) throw BadParams("coset budget must be >= 1");
  if (auto custom = oracle_->left_cosets_override(g, budget)) return std::move(*custom);

  const auto& gens = oracle_->gamma_generators();
  std::unordered_map<Element, Element, ElementHash> mover_of;
  std::deque<Element> frontier;

  Element start = oracle_->coset_canonical_rep(g);
  mover_of.emplace(start, oracle_->identity());
  frontier.push_back(start);

  while (!frontier.empty()) {
    Element w = std::move(frontier.front());
    frontier.pop_front();
    const Element gamma_w = mover_of.at(w);
    for (const auto& s : gens) {
      Element next = oracle_->coset_canonical_rep(oracle_->multiply(s, w));
      if (mover_of.contains(next)) continue;
      if (mover_of.size() >= budget) {
        std::vector<Element> partial;
        partial.reserve(mover_of.size());
        for (auto& [rep, _] : mover_of) partial.push_back(rep);
        std::sort(partial.begin(), partial.end());
        throw BudgetExhausted("left-coset orbit of " + oracle_->format(g), budget,
                              std::move(partial));
      }
      mover_of.emplace(next, oracle_->multiply(s, gamma_w));
      frontier.push_back(std::move(next));
    }
  }

  CosetOrbit out;
  out.reps.reserve(mover_of.size());
  for (auto& [rep, _] : mover_of) out.reps.push_back(rep);
  std::sort(out.reps.begin(), out.reps.end());
  out.movers.reserve(out.reps.size());
  for (const auto& rep : out.reps) out.movers.push_back(mover_of.at(rep));
  return out;
}

std::vector<Element> CosetEngine::left_cosets(const Element& g) const {
  return orbit(g, budget_).reps;
}

std::vector<Element> CosetEngine::left_cosets(const Element& g, std::size_t budget) const {
  return orbit(g, budget).reps;
}

std::size_t CosetEngine::l_value(const Element& g) const { return double_coset(g).L(); }
std::size_t CosetEngine::r_value(const Element& g) const { return double_coset(g).R(); }
Rational CosetEngine::delta(const Element& g) const { return double_coset(g).delta(); }

std::shared_ptr<const CosetClass> CosetEngine::lookup(const Element& canonical) const {
  std::lock_guard lock(mutex_);
  auto it = index_.find(canonical);
  return it == index_.end() ? nullptr : it->second;
}

DoubleCoset CosetEngine::double_coset(const Element& g) const {
  Element canonical = oracle_->coset_canonical_rep(g);
  if (auto cls = lookup(canonical)) return DoubleCoset(std::move(cls), g);

  auto cls = std::make_shared<CosetClass>();
  cls->left_reps = left_cosets(g);
  cls->key = cls->left_reps.front();
  cls->left_count = cls->left_reps.size();
  // R(g) = L(g^-1); reuse a memoised class for g^-1 when there is one.
  const Element inverse = oracle_->invert(g);
  if (auto inv = lookup(oracle_->coset_canonical_rep(inverse)))
    cls->right_count = inv->left_count;
  else
    cls->right_count = orbit(inverse).reps.size();

  std::lock_guard lock(mutex_);
  // Another thread may have published the same class meanwhile.
  if (auto it = index_.find(canonical); it != index_.end()) return DoubleCoset(it->second, g);
  for (const auto& rep : cls->left_reps) index_.emplace(rep, cls);
  ++class_count_;
  return DoubleCoset(std::move(cls), g);
}

bool CosetEngine::same_double_coset(const Element& g, const Element& h) const {
  return double_coset(g).contains_left_coset(oracle_->coset_canonical_rep(h));
}

std::size_t CosetEngine::cached_classes() const {
  std::lock_guard lock(mutex_);
  return class_count_;
}

}  // namespace hecke
