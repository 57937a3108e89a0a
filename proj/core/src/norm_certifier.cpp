#include "hecke/norm_certifier.hpp"

#include <cmath>
#include <limits>

namespace hecke {

namespace {

double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

/// Smallest double >= q.
double upper_double(const Rational& q) {
  double d = q.get_d();
  while (Rational(d) < q) d = up(d);
  return d;
}

double add_up(double a, double b) {
  double s = a + b;
  while (Rational(s) < Rational(a) + Rational(b)) s = up(s);
  return s;
}

double mul_up(double a, double b) {
  double p = a * b;
  while (Rational(p) < Rational(a) * Rational(b)) p = up(p);
  return p;
}

double sqrt_up(double a) {
  double r = std::sqrt(a);
  while (Rational(r) * Rational(r) < Rational(a)) r = up(r);
  return r;
}

Rational modulus_upper(const Gaussian& z) {
  if (z.is_real()) return abs(z.re);
  if (auto root = exact_sqrt(z.norm_squared())) return *root;
  return std::min(Rational(abs(z.re) + abs(z.im)), sqrt_upper(z.norm_squared()));
}

}  // namespace

std::string CertificateChecks::first_failure() const {
  if (!az_equals_z_squared) return "az_equals_z_squared";
  if (!a_nonsingular) return "a_nonsingular";
  if (!inverse_columns_nonnegative) return "inverse_columns_nonnegative";
  if (!diagonal_dominates) return "diagonal_dominates";
  return {};
}

RelationsMatrix relations(const ClosureReport& closure, const HeckeAlgebra& algebra) {
  if (!closure.complete())
    throw NotComplete("closure of " + algebra.oracle().format(closure.root.key()) +
                      " is not complete");
  RelationsMatrix rel;
  const auto n = closure.size();
  std::map<Element, std::size_t> index;
  for (const auto& v : closure.vertices) {
    index.emplace(v.coset.key(), rel.cosets.size());
    rel.cosets.push_back(v.coset);
  }
  rel.lambda.assign(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto chi = HeckeElement::basis(rel.cosets[i]);
    const auto product = algebra.convolve(algebra.involution(chi), chi);
    Rational row_mass;
    for (const auto& [key, term] : product.terms()) {
      auto it = index.find(key);
      if (it == index.end() || !term.coefficient.is_real())
        throw RowIdentityViolation("product escapes the closure at row " + std::to_string(i));
      rel.lambda[i][it->second] = term.coefficient.re;
      row_mass += term.coefficient.re * static_cast<unsigned long>(term.coset.L());
    }
    const Rational li(static_cast<unsigned long>(rel.cosets[i].L()));
    if (row_mass != li * li)
      throw RowIdentityViolation("row " + std::to_string(i) + ": sum lambda_ij L_j = " +
                                 to_string(row_mass) + " != L_i^2 = " + to_string(li * li));
  }
  return rel;
}

double beta_bound(const RelationsMatrix& rel) {
  double beta = 0.0;
  for (const auto& row : rel.lambda) {
    Rational row_sum;
    for (const auto& l : row) row_sum += abs(l);
    beta = add_up(beta, sqrt_up(upper_double(row_sum)));
  }
  return mul_up(beta, beta);
}

RationalMatrix tangent_matrix(const RelationsMatrix& rel, std::span<const std::size_t> z) {
  const auto n = rel.size();
  if (z.size() != n) throw DimensionMismatch("z has wrong length");
  RationalMatrix a(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = i == j ? Rational(2 * static_cast<long>(z[i])) - rel.lambda[i][i]
                       : Rational(-rel.lambda[i][j]);
  return a;
}

CertificateChecks check_tangent_matrix(const RationalMatrix& a, std::span<const std::size_t> z,
                                       RationalMatrix* inverse_out) {
  const auto n = a.size();
  if (z.size() != n) throw DimensionMismatch("z has wrong length");
  CertificateChecks checks;

  RationalVector zv(n);
  for (std::size_t i = 0; i < n; ++i) zv[i] = static_cast<unsigned long>(z[i]);
  const auto az = multiply(a, zv);
  checks.az_equals_z_squared = true;
  for (std::size_t i = 0; i < n; ++i)
    if (az[i] != zv[i] * zv[i]) checks.az_equals_z_squared = false;

  checks.a_nonsingular = sgn(determinant(a)) != 0;

  if (checks.a_nonsingular) {
    if (auto inv = inverse(a)) {
      checks.inverse_columns_nonnegative = true;
      for (const auto& row : *inv)
        for (const auto& x : row)
          if (sgn(x) < 0) checks.inverse_columns_nonnegative = false;
      if (inverse_out) *inverse_out = std::move(*inv);
    }
  }

  checks.diagonal_dominates = true;
  for (std::size_t i = 0; i < n; ++i)
    if (a[i][i] < zv[i] || sgn(zv[i]) <= 0) checks.diagonal_dominates = false;
  return checks;
}

BoundCertificate l1_certificate(const ClosureReport& closure, const HeckeAlgebra& algebra) {
  BoundCertificate cert;
  cert.relations = relations(closure, algebra);
  for (const auto& c : cert.relations.cosets) cert.z.push_back(c.L());
  cert.matrix_a = tangent_matrix(cert.relations, cert.z);
  cert.checks = check_tangent_matrix(cert.matrix_a, cert.z, &cert.a_inverse);
  if (!cert.checks.all()) throw CheckFailed(cert.checks.first_failure());
  cert.beta_squared = beta_bound(cert.relations);
  for (const auto& c : cert.relations.cosets)
    cert.per_coset_bound.emplace(c.key(), Rational(static_cast<unsigned long>(c.L())));
  return cert;
}

Rational element_bound(const HeckeElement& f, const std::map<Element, Rational>& bounds) {
  Rational total;
  for (const auto& [key, term] : f.terms()) {
    auto it = bounds.find(key);
    if (it == bounds.end()) throw MissingCertificate("no certified bound for a support coset");
    total += modulus_upper(term.coefficient) * it->second;
  }
  return total;
}

bool in_region_b(std::span<const Rational> x, const RelationsMatrix& rel) {
  const auto n = rel.size();
  if (x.size() != n) throw DimensionMismatch("point has wrong dimension");
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) < 0) return false;
    Rational rhs;
    for (std::size_t j = 0; j < n; ++j) rhs += rel.lambda[i][j] * x[j];
    if (x[i] * x[i] > rhs) return false;
  }
  return true;
}

nlohmann::json to_json(const BoundCertificate& cert, const GroupOracle& oracle) {
  auto matrix = [](const RationalMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& q : row) r.push_back(to_string(q));
      rows.push_back(std::move(r));
    }
    return rows;
  };
  nlohmann::json cosets = nlohmann::json::array();
  for (const auto& c : cert.relations.cosets) cosets.push_back(oracle.format(c.key()));
  nlohmann::json bounds = nlohmann::json::object();
  for (const auto& [key, b] : cert.per_coset_bound) bounds[oracle.format(key)] = to_string(b);
  return {{"cosets", std::move(cosets)},
          {"lambda", matrix(cert.relations.lambda)},
          {"z", cert.z},
          {"A", matrix(cert.matrix_a)},
          {"checks",
           {{"az_equals_z_squared", cert.checks.az_equals_z_squared},
            {"a_nonsingular", cert.checks.a_nonsingular},
            {"inverse_columns_nonnegative", cert.checks.inverse_columns_nonnegative},
            {"diagonal_dominates", cert.checks.diagonal_dominates}}},
          {"beta_squared", cert.beta_squared},
          {"bounds", std::move(bounds)}};
}

}  // namespace hecke
