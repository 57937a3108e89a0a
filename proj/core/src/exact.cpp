#include "hecke/exact.hpp"

#include "hecke/errors.hpp"

#include <cctype>
#include <functional>

namespace hecke {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Gaussian& z) {
  if (z.is_real()) return to_string(z.re);
  return to_string(z.re) + (sgn(z.im) < 0 ? "" : "+") + to_string(z.im) + "i";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  auto num = trim(s.substr(0, slash));
  auto den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den))
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  if (den.front() == '+') den.remove_prefix(1);
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::size_t hash_value(const Rational& q) {
  // Low limbs of numerator and denominator are enough to spread buckets.
  auto limb = [](const Integer& z) -> std::size_t {
    const auto* raw = z.get_mpz_t();
    std::size_t h = raw->_mp_size == 0 ? 0 : static_cast<std::size_t>(raw->_mp_d[0]);
    return h ^ (static_cast<std::size_t>(static_cast<unsigned>(raw->_mp_size)) << 48);
  };
  std::size_t h = limb(q.get_num());
  h ^= limb(q.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational mod(const Rational& q, const Rational& m) {
  Rational ratio = q / m;
  Rational r = q - m * Rational(floor(ratio));
  r.canonicalize();
  return r;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(n, d);
}

Rational sqrt_upper(const Rational& q, unsigned bits) {
  if (auto exact = exact_sqrt(q)) return *exact;
  // ceil(sqrt(q * 4^bits)) / 2^bits
  Integer scale = Integer(1) << bits;
  Rational scaled = q * Rational(scale * scale);
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Integer root;
  mpz_sqrt(root.get_mpz_t(), c.get_mpz_t());
  if (root * root < c) root += 1;
  Rational result(root, scale);
  result.canonicalize();
  return result;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace hecke
