#pragma once

#include "hecke/exact.hpp"

#include <optional>
#include <vector>

namespace hecke {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

RationalVector multiply(const RationalMatrix& a, const RationalVector& x);

/// Determinant by fraction-free (Bareiss) elimination after clearing
/// denominators row by row. Exact.
Rational determinant(const RationalMatrix& a);

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

}  // namespace hecke
