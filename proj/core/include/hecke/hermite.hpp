#pragma once

#include "hecke/exact.hpp"

#include <vector>

namespace hecke {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Column-style Hermite normal form of a nonsingular square integer matrix:
/// H = M·U with U unimodular, H lower triangular, positive diagonal, and
/// 0 <= H[i][j] < H[i][i] for j < i. Two matrices span the same lattice
/// (column span) iff their forms agree. When det M > 0 the transform U
/// has determinant +1, so H is also canonical for right SL_n(Z)-cosets.
IntegerMatrix column_hnf(IntegerMatrix m);

}  // namespace hecke
