#include "hecke/hermite.hpp"

#include "hecke/errors.hpp"

#include <utility>

namespace hecke {

namespace {

// col_a <- x*col_a + y*col_b ; col_b <- u*col_a + v*col_b  (using old values)
void combine_columns(IntegerMatrix& m, std::size_t a, std::size_t b, const Integer& x,
                     const Integer& y, const Integer& u, const Integer& v) {
  for (auto& row : m) {
    Integer na = x * row[a] + y * row[b];
    Integer nb = u * row[a] + v * row[b];
    row[a] = std::move(na);
    row[b] = std::move(nb);
  }
}

}  // namespace

IntegerMatrix column_hnf(IntegerMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionMismatch("column_hnf expects a square matrix");

  for (std::size_t i = 0; i < n; ++i) {
    // Clear row i to the right of the diagonal with extended-gcd column moves.
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m[i][j] == 0) continue;
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), m[i][i].get_mpz_t(),
                 m[i][j].get_mpz_t());
      Integer u = -m[i][j] / g;
      Integer v = m[i][i] / g;
      combine_columns(m, i, j, x, y, u, v);
    }
    if (m[i][i] == 0) throw InvalidElement("column_hnf: singular matrix");
    if (m[i][i] < 0)
      for (auto& row : m) row[i] = -row[i];
    for (std::size_t j = 0; j < i; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][j].get_mpz_t(), m[i][i].get_mpz_t());
      if (q == 0) continue;
      for (auto& row : m) row[j] -= q * row[i];
    }
  }
  return m;
}

}  // namespace hecke
