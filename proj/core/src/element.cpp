#include "hecke/element.hpp"

#include "hecke/errors.hpp"

namespace hecke {

std::size_t Element::hash() const noexcept {
  std::size_t h = coords_.size();
  for (const auto& q : coords_) h ^= hash_value(q) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  const auto n = std::min(a.coords_.size(), b.coords_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.coords_.size() <=> b.coords_.size();
}

BudgetExhausted::BudgetExhausted(const std::string& what, std::size_t budget,
                                 std::vector<Element> partial)
    : HeckeError("BudgetExhausted",
                 what + " exceeded budget " + std::to_string(budget) +
                     " (either not a Hecke pair for this input or the budget is too small)"),
      budget_(budget),
      partial_(std::move(partial)) {}

}  // namespace hecke
