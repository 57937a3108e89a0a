#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace hecke {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

/// Parses "n", "-n", "n/d" (whitespace-trimmed). Throws ParseError.
Rational parse_rational(std::string_view text);

std::size_t hash_value(const Rational& q);

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Floor of a rational as an integer.
Integer floor(const Rational& q);

/// Representative of q modulo m in [0, m); m > 0.
Rational mod(const Rational& q, const Rational& m);

/// Exact square root when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

/// Smallest dyadic k/2^bits with (k/2^bits)^2 >= q; a certified upper bound on sqrt(q).
Rational sqrt_upper(const Rational& q, unsigned bits = 40);

bool is_prime(unsigned long n);

/// Complex number with exact rational real and imaginary parts.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(long r) : re(r) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  Gaussian conj() const { return {re, -im}; }
  /// |z|^2, always exact.
  Rational norm_squared() const { return re * re + im * im; }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gaussian operator*(const Gaussian& a, const Rational& s) {
    return {a.re * s, a.im * s};
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const Gaussian& z);

}  // namespace hecke
