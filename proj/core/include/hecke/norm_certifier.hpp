#pragma once

#include "hecke/coset_graph.hpp"
#include "hecke/linalg.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <span>
#include <string>
#include <vector>

namespace hecke {

/// (χ_{s_i})* * χ_{s_i} = Σ_j lambda[i][j]·χ_{s_j} over a finite co-hereditary set.
struct RelationsMatrix {
  std::vector<DoubleCoset> cosets;
  RationalMatrix lambda;

  std::size_t size() const noexcept { return cosets.size(); }
};

struct CertificateChecks {
  bool az_equals_z_squared = false;
  bool a_nonsingular = false;
  bool inverse_columns_nonnegative = false;
  bool diagonal_dominates = false;

  bool all() const noexcept {
    return az_equals_z_squared && a_nonsingular && inverse_columns_nonnegative && diagonal_dominates;
  }
  /// Name of the first failing check, or empty.
  std::string first_failure() const;
};

/// Verified statement ‖Γs_iΓ‖_u <= L(s_i) for every vertex of a finite closure.
struct BoundCertificate {
  RelationsMatrix relations;
  std::vector<std::size_t> z;  ///< z_i = L(s_i) = ‖Γs_iΓ‖_{L¹}
  RationalMatrix matrix_a;     ///< a_ii = 2z_i - λ_ii, a_ij = -λ_ij
  RationalMatrix a_inverse;
  CertificateChecks checks;
  double beta_squared = 0.0;   ///< crude bound, rounded upward
  std::map<Element, Rational> per_coset_bound;
};

/// Expands every (χ_i)* * χ_i of a Complete closure. Throws NotComplete, or
/// RowIdentityViolation if Σ_j λ_ij L(s_j) != L(s_i)^2.
RelationsMatrix relations(const ClosureReport& closure, const HeckeAlgebra& algebra);

/// β² with β = Σ_i sqrt(Σ_j λ_ij); every floating step rounds upward and is
/// checked against exact rational arithmetic, so the result bounds the true β².
double beta_bound(const RelationsMatrix& rel);

/// Builds A from λ and z and runs the four exact checks.
CertificateChecks check_tangent_matrix(const RationalMatrix& a, std::span<const std::size_t> z,
                                       RationalMatrix* inverse_out = nullptr);

RationalMatrix tangent_matrix(const RelationsMatrix& rel, std::span<const std::size_t> z);

/// Throws NotComplete, or CheckFailed naming the failing check.
BoundCertificate l1_certificate(const ClosureReport& closure, const HeckeAlgebra& algebra);

/// Σ |coef|·bound(key); throws MissingCertificate. Complex moduli use the same
/// certified upper bound as l1_norm.
Rational element_bound(const HeckeElement& f, const std::map<Element, Rational>& bounds);

/// x_i² <= Σ_j λ_ij x_j for every i. Throws DimensionMismatch.
bool in_region_b(std::span<const Rational> x, const RelationsMatrix& rel);

nlohmann::json to_json(const BoundCertificate& cert, const GroupOracle& oracle);

}  // namespace hecke
