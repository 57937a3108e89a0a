#include "hecke/linalg.hpp"

#include "hecke/errors.hpp"

#include <utility>

namespace hecke {

RationalVector multiply(const RationalMatrix& a, const RationalVector& x) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw DimensionMismatch("matrix-vector product");
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  }
  return out;
}

Rational determinant(const RationalMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return Rational(1);
  // Scale each row to integers; det(A) = det(M) / prod(scale).
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  Integer scale_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw DimensionMismatch("determinant expects a square matrix");
    Integer lcm = 1;
    for (const auto& q : a[i]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j].get_num() * (lcm / a[i][j].get_den());
    scale_product *= lcm;
  }

  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return Rational(0);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
      }
      m[i][k] = 0;
    }
    previous = m[k][k];
  }
  Rational det(m[n - 1][n - 1] * sign, scale_product);
  det.canonicalize();
  return det;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix work = a;
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (work[i].size() != n) throw DimensionMismatch("inverse expects a square matrix");
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(work[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = work[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(work[r][col]) == 0) continue;
      const Rational f = work[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        work[r][j] -= f * work[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace hecke
