#include "hecke/commutator_lab.hpp"

#include <algorithm>
#include <set>

namespace hecke {

namespace {

std::string format_sequence(const GroupOracle& oracle, const Element& g,
                            std::span<const Element> gammas) {
  std::string out = "[" + oracle.format(g);
  for (const auto& gamma : gammas) out += "; " + oracle.format(gamma);
  return out + "]";
}

bool in_double_coset(const GroupOracle& oracle, const DoubleCoset& c, const Element& x) {
  return c.contains_left_coset(oracle.coset_canonical_rep(x));
}

}  // namespace

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::FiniteIndex: return "FiniteIndex";
    case FamilyTag::Directed: return "Directed";
    case FamilyTag::Iwahori: return "Iwahori";
    case FamilyTag::Protonormal: return "Protonormal";
    case FamilyTag::Subnormal: return "Subnormal";
    case FamilyTag::Ascendant: return "Ascendant";
    case FamilyTag::FinitelyManyConjugates: return "FinitelyManyConjugates";
    case FamilyTag::FiniteByNilpotent: return "FiniteByNilpotent";
    case FamilyTag::Hypercentral: return "Hypercentral";
    case FamilyTag::FCWithFiniteGamma: return "FCWithFiniteGamma";
    case FamilyTag::LocallyNilpotentFiniteGamma: return "LocallyNilpotentFiniteGamma";
    case FamilyTag::LocallyFiniteFiniteGamma: return "LocallyFiniteFiniteGamma";
    case FamilyTag::None: return "None";
  }
  return "None";
}

std::string to_string(Provenance provenance) {
  return provenance == Provenance::Declared ? "Declared" : "SampleChecked";
}

nlohmann::json to_json(const ProbeReport& report) {
  nlohmann::json out = {{"test", report.test},
                        {"input", report.input},
                        {"verdict", report.verdict},
                        {"samples", report.samples},
                        {"seed", report.seed}};
  if (report.counterexample) out["counterexample"] = *report.counterexample;
  for (const auto& [k, v] : report.details.items()) out[k] = v;
  return out;
}

CommutatorLab::CommutatorLab(std::shared_ptr<const CosetGraph> graph) : graph_(std::move(graph)) {}

Element CommutatorLab::iterated_commutator(const Element& g,
                                           std::span<const Element> gammas) const {
  const auto& o = oracle();
  Element x = g;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (!o.in_gamma(gammas[i])) throw NotInGamma(i + 1);
    x = o.commutator(x, gammas[i]);
  }
  return x;
}

std::vector<Element> CommutatorLab::witness_sequence(std::span<const DoubleCoset> path) const {
  const auto& o = oracle();
  std::vector<Element> gammas;
  if (path.empty()) return gammas;
  Element x = path[0].rep();
  for (std::size_t i = 1; i < path.size(); ++i) {
    // Γx^-1 γ x Γ runs over the successors of ΓxΓ as γ runs over the orbit
    // movers, and [x, γ^-1] = x^-1 γ x γ^-1 lies in that double coset.
    const auto orbit = engine().orbit(x);
    const auto x_inv = o.invert(x);
    bool found = false;
    for (const auto& mover : orbit.movers) {
      const auto candidate = o.multiply(x_inv, o.multiply(mover, x));
      if (!in_double_coset(o, path[i], candidate)) continue;
      const auto gamma = o.invert(mover);
      x = o.commutator(x, gamma);
      gammas.push_back(gamma);
      found = true;
      break;
    }
    if (!found) throw NotASuccessorPath(i);
  }
  return gammas;
}

ProbeReport CommutatorLab::chain_condition_b(const Element& g, const SubnormalChain& chain,
                                             std::size_t samples, std::uint64_t seed) const {
  const auto& o = oracle();
  ProbeReport report{"chain_condition_b", o.format(g), "Pass", samples, seed, std::nullopt, {}};
  report.details["chain_length"] = chain.length();
  Rng rng(seed);
  std::vector<Element> gammas(chain.length());
  for (std::size_t s = 0; s < samples && !report.counterexample; ++s) {
    for (auto& gamma : gammas) gamma = o.random_gamma(rng);
    Element x = g;
    for (std::size_t k = 1; k <= chain.length(); ++k) {
      x = o.commutator(x, gammas[k - 1]);
      if (!chain.members[k](x)) {
        report.verdict = "Fail";
        report.counterexample =
            format_sequence(o, g, std::span(gammas).first(k)) + " = " + o.format(x) +
            " is not in H_" + std::to_string(k);
        break;
      }
    }
  }
  return report;
}

ProbeReport CommutatorLab::stabilization_probe(const Element& g, std::size_t samples,
                                               std::size_t horizon, std::uint64_t seed) const {
  const auto& o = oracle();
  ProbeReport report{"stabilization_probe", o.format(g), "Collapse", samples, seed,
                     std::nullopt, {}};
  Rng rng(seed);
  const auto unit_key = engine().identity_coset().key();
  // Double cosets Γ[g, γ_1, ..., γ_k]Γ met at any level k <= horizon.
  std::set<Element> visited;
  std::size_t collapsed = 0;
  std::size_t unresolved = 0;
  std::size_t max_steps = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Element> gammas;
    Element x = g;
    bool hit = o.in_gamma(x);
    bool resolved = true;
    while (!hit && gammas.size() < horizon) {
      try {
        visited.insert(engine().double_coset(x).key());
      } catch (const BudgetExhausted&) {
        resolved = false;
        break;
      }
      gammas.push_back(o.random_gamma(rng));
      x = o.commutator(x, gammas.back());
      hit = o.in_gamma(x);
    }
    if (!resolved) ++unresolved;
    if (hit) {
      ++collapsed;
      max_steps = std::max(max_steps, gammas.size());
      visited.insert(unit_key);
      continue;
    }
    if (!report.counterexample)
      report.counterexample = format_sequence(o, g, gammas) + " = " + o.format(x) +
                              " is not in Gamma";
  }
  if (collapsed != samples) report.verdict = "NoCollapse";
  report.details["horizon"] = horizon;
  report.details["collapsed"] = collapsed;
  report.details["max_steps_to_collapse"] = max_steps;
  report.details["distinct_cosets"] = visited.size();
  report.details["unresolved"] = unresolved;
  return report;
}

DirectedResult CommutatorLab::directed_test(const Element& t) const {
  const auto& o = oracle();
  DirectedResult result;
  result.l_value = engine().l_value(t);
  result.r_value = engine().r_value(t);
  result.directed = result.l_value == 1;
  result.report = {"directed_test", o.format(t), result.directed ? "Directed" : "NotDirected",
                   1, 0, std::nullopt, {}};
  if (!result.directed)
    result.report.counterexample = "L(t) = " + std::to_string(result.l_value);
  result.report.details["L"] = result.l_value;
  result.report.details["R"] = result.r_value;
  result.report.details["containment"] =
      "checked L(t) = 1, i.e. Gamma is contained in t Gamma t^-1 (t lies in T); "
      "R(t) = 1 would instead mean t^-1 lies in T";
  result.report.details["inverse_directed"] = result.r_value == 1;
  return result;
}

QuadraticResult CommutatorLab::quadratic_relation_test(const DoubleCoset& c) const {
  const auto& o = oracle();
  const auto& algebra = graph_->algebra();
  const auto chi = HeckeElement::basis(c);
  const auto product = algebra.convolve(algebra.involution(chi), chi);
  const auto unit_key = engine().identity_coset().key();
  const Rational l(static_cast<unsigned long>(c.L()));

  QuadraticResult result;
  result.gamma_coefficient = product.coefficient(unit_key);
  result.self_coefficient = product.coefficient(c.key());
  bool support_ok = true;
  for (const auto& [key, _] : product.terms())
    if (key != unit_key && key != c.key()) support_ok = false;

  if (c.key() == unit_key) {
    result.holds = support_ok && product.coefficient(unit_key) == Gaussian(1);
  } else {
    result.holds = support_ok && result.gamma_coefficient == Gaussian(l) &&
                   result.self_coefficient == Gaussian(Rational(l - 1));
  }
  result.degenerate = result.holds && c.L() == 1;
  result.report = {"quadratic_relation_test", o.format(c.rep()),
                   result.holds ? (result.degenerate ? "DegenerateTrue" : "True") : "False",
                   1, 0, std::nullopt, {}};
  if (!result.holds) result.report.counterexample = "support differs from {Gamma, s}";
  result.report.details["product"] = to_json(product, o);
  return result;
}

ProbeReport CommutatorLab::protonormal_falsifier(const Element& s, std::size_t samples,
                                                 std::uint64_t seed) const {
  const auto& o = oracle();
  const auto coset = engine().double_coset(s);
  const auto s_inv = o.invert(s);
  ProbeReport report{"protonormal_falsifier", o.format(s), "NoCounterexample", samples, seed,
                     std::nullopt, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto g1 = o.random_gamma(rng);
    const auto g2 = o.random_gamma(rng);
    // γ s^-1 γ' s lies in s^-1ΓsΓ iff s·(γ s^-1 γ' s) lies in ΓsΓ.
    const auto lhs = o.multiply(o.multiply(g1, s_inv), o.multiply(g2, s));
    if (!in_double_coset(o, coset, o.multiply(s, lhs))) {
      report.verdict = "Counterexample";
      report.counterexample = o.format(lhs) + " lies in Gamma s^-1 Gamma s but not in s^-1 Gamma s Gamma";
      report.details["sample_index"] = i;
      break;
    }
    // s^-1 γ s γ' lies in Γs^-1Γs iff s·(s^-1 γ s γ')^-1 lies in ΓsΓ.
    const auto rhs = o.multiply(o.multiply(s_inv, g1), o.multiply(s, g2));
    if (!in_double_coset(o, coset, o.multiply(s, o.invert(rhs)))) {
      report.verdict = "Counterexample";
      report.counterexample = o.format(rhs) + " lies in s^-1 Gamma s Gamma but not in Gamma s^-1 Gamma s";
      report.details["sample_index"] = i;
      break;
    }
  }
  return report;
}

ProbeReport check_chain(const GroupOracle& oracle, const SubnormalChain& chain,
                        std::size_t samples, std::uint64_t seed) {
  ProbeReport report{"check_chain", std::to_string(chain.length()) + " steps", "Pass", samples,
                     seed, std::nullopt, {}};
  auto fail = [&](std::string why) {
    report.verdict = "Fail";
    report.counterexample = std::move(why);
    return report;
  };
  if (chain.members.empty()) return fail("empty chain");
  for (std::size_t i = 0; i < chain.members.size(); ++i)
    if (!chain.members[i](oracle.identity()))
      return fail("identity is not in H_" + std::to_string(i));
  for (const auto& gen : oracle.gamma_generators())
    if (!chain.members.back()(gen)) return fail(oracle.format(gen) + " is not in H_n");
  if (chain.samplers.size() != chain.members.size()) return fail("missing level samplers");

  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i + 1 < chain.members.size(); ++i) {
      const auto gamma = oracle.random_gamma(rng);
      if (!chain.members[i + 1](gamma) || !chain.members.back()(gamma))
        return fail(oracle.format(gamma) + " is in Gamma but not in H_" + std::to_string(i + 1));
      const auto h = chain.samplers[i](rng);
      const auto x = chain.samplers[i + 1](rng);
      if (!chain.members[i](h) || !chain.members[i + 1](x))
        return fail("sampler for level " + std::to_string(i) + " left its subgroup");
      if (i < chain.declared_normal.size() && chain.declared_normal[i]) {
        const auto conj = oracle.multiply(oracle.invert(h), oracle.multiply(x, h));
        if (!chain.members[i + 1](conj))
          return fail("conjugate of " + oracle.format(x) + " by " + oracle.format(h) +
                      " leaves H_" + std::to_string(i + 1));
      }
    }
  }
  return report;
}

RestrictedOracle::RestrictedOracle(std::shared_ptr<const GroupOracle> ambient,
                                   Membership membership,
                                   std::vector<Element> subgroup_generators, std::string label)
    : ambient_(std::move(ambient)),
      member_(std::move(membership)),
      generators_(std::move(subgroup_generators)),
      label_(std::move(label)) {}

Element RestrictedOracle::parse(std::string_view text) const {
  auto x = ambient_->parse(text);
  if (!member_(x)) throw InvalidElement(ambient_->format(x) + " is not in " + label_);
  return x;
}

std::string RestrictedOracle::element_syntax() const {
  return ambient_->element_syntax() + ", restricted to " + label_;
}

Element RestrictedOracle::sample(Rng& rng) const {
  Element word = identity();
  const auto& gammas = ambient_->gamma_generators();
  const auto pool = generators_.size() + gammas.size();
  if (pool == 0) return word;
  const auto length = 1 + uniform_below(rng, 6);
  for (std::uint64_t i = 0; i < length; ++i) {
    const auto pick = uniform_below(rng, 2 * pool);
    const auto idx = pick / 2;
    const auto& gen = idx < generators_.size() ? generators_[idx] : gammas[idx - generators_.size()];
    word = multiply(word, pick % 2 == 0 ? gen : invert(gen));
  }
  return word;
}

std::shared_ptr<const RestrictedOracle> restrict_pair(std::shared_ptr<const GroupOracle> ambient,
                                                      Membership membership,
                                                      std::vector<Element> subgroup_generators,
                                                      std::string label, std::size_t samples,
                                                      std::uint64_t seed) {
  for (const auto& gen : ambient->gamma_generators())
    if (!membership(gen))
      throw GammaNotContained("generator " + ambient->format(gen) + " is not in " + label);
  for (const auto& gen : subgroup_generators)
    if (!membership(gen))
      throw BadParams("subgroup generator " + ambient->format(gen) + " fails membership");
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto gamma = ambient->random_gamma(rng);
    if (!membership(gamma))
      throw GammaNotContained(ambient->format(gamma) + " is in Gamma but not in " + label);
  }
  return std::make_shared<RestrictedOracle>(std::move(ambient), std::move(membership),
                                            std::move(subgroup_generators), std::move(label));
}

}  // namespace hecke
