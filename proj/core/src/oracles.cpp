#include "hecke/oracles.hpp"

#include "hecke/errors.hpp"
#include "hecke/hermite.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

namespace hecke {

std::vector<std::string> split_fields(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    std::size_t b = 0, e = current.size();
    while (b < e && std::isspace(static_cast<unsigned char>(current[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(current[e - 1]))) --e;
    out.push_back(current.substr(b, e - b));
    current.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else current.push_back(c);
  }
  flush();
  return out;
}

namespace {

std::vector<Rational> parse_all(const std::vector<std::string>& fields) {
  std::vector<Rational> out;
  out.reserve(fields.size());
  for (const auto& f : fields) out.push_back(parse_rational(f));
  return out;
}

bool is_power_of(const Integer& n, unsigned long p) {
  Integer m = n;
  while (m > 1) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) return false;
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
  }
  return m == 1;
}

Rational frac(const Rational& q) { return mod(q, Rational(1)); }

}  // namespace

// ---------------------------------------------------------------- permutations

PermutationOracle::PermutationOracle(std::size_t degree, std::vector<Element> gamma_generators,
                                     std::string label)
    : degree_(degree), generators_(std::move(gamma_generators)), label_(std::move(label)) {
  if (degree_ == 0 || degree_ > 9) throw BadParams("permutation degree must be in 1..9");
  for (const auto& g : generators_)
    if (!contains(g)) throw BadParams("gamma generator is not a permutation");

  // Γ is finite: close {e} under right multiplication by the generators.
  std::deque<Element> frontier{identity()};
  gamma_set_.insert(identity());
  while (!frontier.empty()) {
    Element x = frontier.front();
    frontier.pop_front();
    for (const auto& s : generators_) {
      Element y = multiply(x, s);
      if (gamma_set_.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  gamma_.assign(gamma_set_.begin(), gamma_set_.end());
  std::sort(gamma_.begin(), gamma_.end());
}

Element PermutationOracle::identity() const {
  std::vector<Rational> images(degree_);
  for (std::size_t i = 0; i < degree_; ++i) images[i] = static_cast<long>(i);
  return Element(std::move(images));
}

Element PermutationOracle::multiply(const Element& a, const Element& b) const {
  std::vector<Rational> images(degree_);
  for (std::size_t i = 0; i < degree_; ++i) images[i] = a[b[i].get_num().get_ui()];
  return Element(std::move(images));
}

Element PermutationOracle::invert(const Element& a) const {
  std::vector<Rational> images(degree_);
  for (std::size_t i = 0; i < degree_; ++i) images[a[i].get_num().get_ui()] = static_cast<long>(i);
  return Element(std::move(images));
}

Element PermutationOracle::coset_canonical_rep(const Element& g) const {
  Element best = g;
  for (const auto& gamma : gamma_) {
    Element candidate = multiply(g, gamma);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

bool PermutationOracle::contains(const Element& x) const {
  if (x.size() != degree_) return false;
  std::vector<bool> seen(degree_, false);
  for (const auto& q : x.coords()) {
    if (q.get_den() != 1 || q < 0 || q >= static_cast<long>(degree_)) return false;
    auto i = q.get_num().get_ui();
    if (seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

std::string PermutationOracle::format(const Element& x) const {
  std::string out;
  std::vector<bool> done(degree_, false);
  for (std::size_t start = 0; start < degree_; ++start) {
    if (done[start] || x[start] == static_cast<long>(start)) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = true;
      if (!first) out += ',';
      out += std::to_string(i + 1);
      first = false;
      i = x[i].get_num().get_ui();
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Element PermutationOracle::from_cycles(const std::vector<std::vector<std::size_t>>& cycles) const {
  Element result = identity();
  for (const auto& cycle : cycles) {
    std::vector<Rational> images(degree_);
    for (std::size_t i = 0; i < degree_; ++i) images[i] = static_cast<long>(i);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const auto from = cycle[k], to = cycle[(k + 1) % cycle.size()];
      if (from == 0 || from > degree_ || to == 0 || to > degree_)
        throw InvalidElement("cycle entry out of range 1.." + std::to_string(degree_));
      images[from - 1] = static_cast<long>(to - 1);
    }
    Element c(std::move(images));
    if (!contains(c)) throw InvalidElement("cycle repeats an entry");
    // Cycles written left to right compose as functions applied right to left.
    result = multiply(result, c);
  }
  return result;
}

Element PermutationOracle::parse(std::string_view text) const {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty() || s.front() == '(') {
    std::vector<std::vector<std::size_t>> cycles;
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] != '(') throw ParseError("expected '(' in cycle notation: " + s);
      auto close = s.find(')', pos);
      if (close == std::string::npos) throw ParseError("unbalanced cycle: " + s);
      std::string body = s.substr(pos + 1, close - pos - 1);
      std::vector<std::size_t> cycle;
      if (body.find(',') != std::string::npos) {
        for (const auto& f : split_fields(body)) {
          if (f.empty() || !std::all_of(f.begin(), f.end(), ::isdigit))
            throw ParseError("bad cycle entry: " + f);
          cycle.push_back(std::stoul(f));
        }
      } else {
        for (char c : body) {
          if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad cycle: " + body);
          cycle.push_back(static_cast<std::size_t>(c - '0'));
        }
      }
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
      pos = close + 1;
    }
    return from_cycles(cycles);
  }
  auto fields = split_fields(s);
  if (fields.size() != degree_)
    throw ParseError("expected " + std::to_string(degree_) + " images, got '" + s + "'");
  std::vector<Rational> images;
  for (const auto& f : fields) {
    auto q = parse_rational(f);
    images.push_back(q - 1);
  }
  Element e(std::move(images));
  if (!contains(e)) throw InvalidElement("not a permutation: " + s);
  return e;
}

std::string PermutationOracle::element_syntax() const {
  return "cycle notation such as (1,2,3)(4,5), or " + std::to_string(degree_) +
         " comma-separated 1-based images";
}

Element PermutationOracle::sample(Rng& rng) const {
  std::vector<Rational> images(degree_);
  for (std::size_t i = 0; i < degree_; ++i) images[i] = static_cast<long>(i);
  for (std::size_t i = degree_; i > 1; --i) std::swap(images[i - 1], images[uniform_below(rng, i)]);
  return Element(std::move(images));
}

std::vector<Element> PermutationOracle::all_elements() const {
  std::vector<long> perm(degree_);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Element> out;
  do {
    std::vector<Rational> images(perm.begin(), perm.end());
    out.emplace_back(std::move(images));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// ---------------------------------------------------------------- dihedral

DihedralOracle::DihedralOracle(std::optional<unsigned long> p) : p_(p) {
  if (p_ && !is_prime(*p_)) throw BadParams("p must be prime, got " + std::to_string(*p_));
  generators_.push_back(make(Rational(0), -1));
}

std::string DihedralOracle::name() const {
  return p_ ? "quasicyclic-dihedral(p=" + std::to_string(*p_) + ")" : "infinite-dihedral";
}

Rational DihedralOracle::reduce(const Rational& offset) const {
  return p_ ? frac(offset) : offset;
}

Element DihedralOracle::make(const Rational& offset, int sign) const {
  return Element{reduce(offset), Rational(sign < 0 ? -1 : 1)};
}

Element DihedralOracle::identity() const { return make(Rational(0), 1); }

Element DihedralOracle::multiply(const Element& a, const Element& b) const {
  return Element{reduce(a[0] + a[1] * b[0]), a[1] * b[1]};
}

Element DihedralOracle::invert(const Element& a) const {
  // (a,+)^-1 = (-a,+); reflections are involutions.
  return a[1] > 0 ? make(-a[0], 1) : a;
}

bool DihedralOracle::in_gamma(const Element& x) const { return sgn(x[0]) == 0; }

Element DihedralOracle::coset_canonical_rep(const Element& g) const {
  // gΓ = {(a,+), (a,-)}; the minimum is the reflection.
  return Element{g[0], Rational(-1)};
}

bool DihedralOracle::contains(const Element& x) const {
  if (x.size() != 2 || (x[1] != 1 && x[1] != -1)) return false;
  if (!p_) return x[0].get_den() == 1;
  return x[0] >= 0 && x[0] < 1 && is_power_of(x[0].get_den(), *p_);
}

std::string DihedralOracle::format(const Element& x) const {
  return to_string(x[0]) + (x[1] > 0 ? ",+" : ",-");
}

Element DihedralOracle::parse(std::string_view text) const {
  auto fields = split_fields(text);
  if (fields.size() != 2) throw ParseError("expected 'offset,sign', got '" + std::string(text) + "'");
  Rational offset = parse_rational(fields[0]);
  int sign;
  if (fields[1] == "+" || fields[1] == "+1" || fields[1] == "1") sign = 1;
  else if (fields[1] == "-" || fields[1] == "-1") sign = -1;
  else throw ParseError("sign must be + or -, got '" + fields[1] + "'");
  if (!p_ && offset.get_den() != 1)
    throw InvalidElement("infinite-dihedral offsets are integers: " + std::string(text));
  if (p_ && !is_power_of(offset.get_den(), *p_))
    throw InvalidElement("offset denominator must be a power of " + std::to_string(*p_));
  return make(offset, sign);
}

std::string DihedralOracle::element_syntax() const {
  return p_ ? "'q,s' with q a rational whose denominator is a power of " + std::to_string(*p_) +
                  " (taken mod 1) and s in {+,-}"
            : "'n,s' with n an integer and s in {+,-}";
}

Element DihedralOracle::sample(Rng& rng) const {
  const int sign = uniform_below(rng, 2) == 0 ? 1 : -1;
  if (!p_) return make(Rational(uniform_int(rng, -5, 5)), sign);
  // Denominators up to p^4; numerators uniform below the denominator.
  const auto j = uniform_below(rng, 5);
  std::uint64_t den = 1;
  for (std::uint64_t k = 0; k < j && den < (1ULL << 40); ++k) den *= *p_;
  const auto num = uniform_below(rng, den);
  Rational offset(Integer(static_cast<unsigned long>(num)), Integer(static_cast<unsigned long>(den)));
  offset.canonicalize();
  return make(offset, sign);
}

// ---------------------------------------------------------------- heisenberg

HeisenbergOracle::HeisenbergOracle() {
  generators_ = {make(1, 0, 0), make(0, 1, 0), make(0, 0, 1)};
}

Element HeisenbergOracle::identity() const { return make(0, 0, 0); }

Element HeisenbergOracle::multiply(const Element& a, const Element& b) const {
  return make(a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]);
}

Element HeisenbergOracle::invert(const Element& a) const {
  return make(-a[0], -a[1], -a[2] + a[0] * a[1]);
}

bool HeisenbergOracle::in_gamma(const Element& x) const {
  return x[0].get_den() == 1 && x[1].get_den() == 1 && x[2].get_den() == 1;
}

Element HeisenbergOracle::coset_canonical_rep(const Element& g) const {
  // g·(a,b,c) = (x+a, y+b, z+c+xb): fix a, b to land x, y in [0,1), then c.
  Rational b(-floor(g[1]));
  Rational x = frac(g[0]);
  Rational y = g[1] + b;
  Rational z = frac(g[2] + g[0] * b);
  return make(x, y, z);
}

std::string HeisenbergOracle::format(const Element& x) const {
  return "1," + to_string(x[0]) + "," + to_string(x[2]) + ",0,1," + to_string(x[1]) + ",0,0,1";
}

Element HeisenbergOracle::parse(std::string_view text) const {
  auto v = parse_all(split_fields(text));
  if (v.size() == 3) return make(v[0], v[1], v[2]);
  if (v.size() != 9) throw ParseError("expected 9 (or 3) rationals, got '" + std::string(text) + "'");
  if (v[0] != 1 || v[4] != 1 || v[8] != 1 || v[3] != 0 || v[6] != 0 || v[7] != 0)
    throw InvalidElement("not upper unitriangular: " + std::string(text));
  return make(v[1], v[5], v[2]);
}

std::string HeisenbergOracle::element_syntax() const {
  return "nine comma-separated rationals of an upper unitriangular 3x3 matrix (row-major), "
         "or the three entries 'x,y,z' for [[1,x,z],[0,1,y],[0,0,1]]";
}

Element HeisenbergOracle::sample(Rng& rng) const {
  auto entry = [&] {
    const long den = uniform_int(rng, 1, 3);
    return Rational(uniform_int(rng, -3, 3), den);
  };
  Rational x = entry(), y = entry(), z = entry();
  x.canonicalize();
  y.canonicalize();
  z.canonicalize();
  return make(x, y, z);
}

// ---------------------------------------------------------------- SL2(Z[1/p])

Sl2LocalizedOracle::Sl2LocalizedOracle(unsigned long p) : p_(p) {
  if (!is_prime(p_)) throw BadParams("p must be prime, got " + std::to_string(p_));
  generators_ = {Element{Rational(0), Rational(-1), Rational(1), Rational(0)},
                 Element{Rational(1), Rational(1), Rational(0), Rational(1)}};
}

std::string Sl2LocalizedOracle::name() const {
  return "sl2-localized(p=" + std::to_string(p_) + ")";
}

Element Sl2LocalizedOracle::identity() const {
  return Element{Rational(1), Rational(0), Rational(0), Rational(1)};
}

Element Sl2LocalizedOracle::diagonal(const Rational& t) const {
  return Element{t, Rational(0), Rational(0), Rational(1 / t)};
}

Element Sl2LocalizedOracle::multiply(const Element& a, const Element& b) const {
  return Element{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                 a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Element Sl2LocalizedOracle::invert(const Element& a) const {
  return Element{a[3], Rational(-a[1]), Rational(-a[2]), a[0]};
}

bool Sl2LocalizedOracle::in_gamma(const Element& x) const {
  return std::all_of(x.coords().begin(), x.coords().end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

Element Sl2LocalizedOracle::coset_canonical_rep(const Element& g) const {
  Integer scale = 1;
  for (const auto& q : g.coords()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
  IntegerMatrix m(2, std::vector<Integer>(2));
  for (std::size_t i = 0; i < 4; ++i) m[i / 2][i % 2] = g[i].get_num() * (scale / g[i].get_den());
  auto h = column_hnf(std::move(m));
  std::vector<Rational> out(4);
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = Rational(h[i / 2][i % 2], scale);
    out[i].canonicalize();
  }
  return Element(std::move(out));
}

bool Sl2LocalizedOracle::contains(const Element& x) const {
  if (x.size() != 4) return false;
  for (const auto& q : x.coords())
    if (!is_power_of(q.get_den(), p_)) return false;
  return x[0] * x[3] - x[1] * x[2] == 1;
}

std::string Sl2LocalizedOracle::format(const Element& x) const {
  return to_string(x[0]) + "," + to_string(x[1]) + "," + to_string(x[2]) + "," + to_string(x[3]);
}

Element Sl2LocalizedOracle::parse(std::string_view text) const {
  auto v = parse_all(split_fields(text));
  if (v.size() != 4) throw ParseError("expected 'a,b,c,d', got '" + std::string(text) + "'");
  Element e(std::move(v));
  if (!contains(e))
    throw InvalidElement("not in SL2(Z[1/" + std::to_string(p_) + "]): " + std::string(text));
  return e;
}

std::string Sl2LocalizedOracle::element_syntax() const {
  return "'a,b,c,d' for [[a,b],[c,d]] with determinant 1 and denominators powers of " +
         std::to_string(p_);
}

Element Sl2LocalizedOracle::sample(Rng& rng) const {
  // Words in S^±1, T^±1 with at most one diag(p, 1/p)^±1: keeps L <= p(p+1).
  auto word = [&](Element acc) {
    const auto length = uniform_below(rng, 4);
    for (std::uint64_t i = 0; i < length; ++i) {
      const auto pick = uniform_below(rng, 4);
      const auto& gen = generators_[pick / 2];
      acc = multiply(acc, pick % 2 == 0 ? gen : invert(gen));
    }
    return acc;
  };
  Element x = word(identity());
  switch (uniform_below(rng, 3)) {
    case 0: x = multiply(x, diagonal(Rational(static_cast<long>(p_)))); break;
    case 1: x = multiply(x, diagonal(Rational(1, static_cast<long>(p_)))); break;
    default: break;
  }
  return word(std::move(x));
}

// ---------------------------------------------------------------- Q ⋊ Q^+

AffineRationalOracle::AffineRationalOracle() { generators_ = {make(1, 1)}; }

Element AffineRationalOracle::identity() const { return make(0, 1); }

Element AffineRationalOracle::multiply(const Element& a, const Element& b) const {
  return make(a[0] + a[1] * b[0], a[1] * b[1]);
}

Element AffineRationalOracle::invert(const Element& a) const {
  return make(-a[0] / a[1], 1 / a[1]);
}

bool AffineRationalOracle::in_gamma(const Element& x) const {
  return x[1] == 1 && x[0].get_den() == 1;
}

Element AffineRationalOracle::coset_canonical_rep(const Element& g) const {
  // (b,a)(n,1) = (b + an, a)
  return make(mod(g[0], g[1]), g[1]);
}

bool AffineRationalOracle::contains(const Element& x) const { return x.size() == 2 && x[1] > 0; }

std::string AffineRationalOracle::format(const Element& x) const {
  return to_string(x[0]) + "," + to_string(x[1]);
}

Element AffineRationalOracle::parse(std::string_view text) const {
  auto v = parse_all(split_fields(text));
  if (v.size() != 2) throw ParseError("expected 'b,a', got '" + std::string(text) + "'");
  Element e(std::move(v));
  if (!contains(e)) throw InvalidElement("dilation a must be positive: " + std::string(text));
  return e;
}

std::string AffineRationalOracle::element_syntax() const {
  return "'b,a' for x -> a*x + b with b rational and a a positive rational";
}

Element AffineRationalOracle::sample(Rng& rng) const {
  static const Rational dilations[] = {Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                       Rational(1),    Rational(1),    Rational(3, 2),
                                       Rational(2),    Rational(3)};
  const auto& a = dilations[uniform_below(rng, std::size(dilations))];
  Rational b(uniform_int(rng, -4, 4), uniform_int(rng, 1, 4));
  b.canonicalize();
  return make(b, a);
}

}  // namespace hecke
