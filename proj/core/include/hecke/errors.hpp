#pragma once

#include "hecke/element.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

/// Base of every domain error. `kind()` is the stable machine-readable tag
/// used in structured CLI output.
class HeckeError : public std::runtime_error {
 public:
  HeckeError(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)), detail_(detail) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string kind_;
  std::string detail_;
};

/// An orbit, closure or subgroup enumeration outgrew its budget. Either the
/// pair is not Hecke for this element or the budget is too small; the engine
/// cannot tell which.
class BudgetExhausted : public HeckeError {
 public:
  BudgetExhausted(const std::string& what, std::size_t budget, std::vector<Element> partial);

  std::size_t budget() const noexcept { return budget_; }
  const std::vector<Element>& partial() const noexcept { return partial_; }

 private:
  std::size_t budget_;
  std::vector<Element> partial_;
};

#define HECKE_DEFINE_ERROR(Name)                                                   \
  class Name : public HeckeError {                                                 \
   public:                                                                         \
    explicit Name(const std::string& detail) : HeckeError(#Name, detail) {}        \
  };

HECKE_DEFINE_ERROR(ParseError)
HECKE_DEFINE_ERROR(NotComplete)
HECKE_DEFINE_ERROR(CheckFailed)
HECKE_DEFINE_ERROR(RowIdentityViolation)
HECKE_DEFINE_ERROR(MissingCertificate)
HECKE_DEFINE_ERROR(DimensionMismatch)
HECKE_DEFINE_ERROR(GammaNotContained)
HECKE_DEFINE_ERROR(UnknownPair)
HECKE_DEFINE_ERROR(BadParams)
HECKE_DEFINE_ERROR(InvalidElement)

#undef HECKE_DEFINE_ERROR

/// An element passed as a Γ-member failed the membership test.
class NotInGamma : public HeckeError {
 public:
  explicit NotInGamma(std::size_t index)
      : HeckeError("NotInGamma", "argument " + std::to_string(index) + " is not in Gamma"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// path[index] is not a successor of path[index - 1].
class NotASuccessorPath : public HeckeError {
 public:
  explicit NotASuccessorPath(std::size_t index)
      : HeckeError("NotASuccessorPath",
                   "path entry " + std::to_string(index) + " is not a successor of its predecessor"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace hecke
