#include "hecke/catalog.hpp"

#include "hecke/oracles.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace hecke {

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational random_rational(Rng& rng, long max_num, long max_den) {
  Rational q(uniform_int(rng, -max_num, max_num), uniform_int(rng, 1, max_den));
  q.canonicalize();
  return q;
}

SubnormalChain heisenberg_chain(std::shared_ptr<const GroupOracle> oracle) {
  SubnormalChain chain;
  chain.labels = {"G", "N (x, y integral)", "Gamma"};
  chain.members = {
      [](const Element& x) { return x.size() == 3; },
      [](const Element& x) { return x.size() == 3 && is_integer(x[0]) && is_integer(x[1]); },
      [oracle](const Element& x) { return oracle->in_gamma(x); },
  };
  chain.declared_normal = {true, true};
  chain.samplers = {
      [oracle](Rng& rng) { return oracle->sample(rng); },
      [](Rng& rng) {
        return HeisenbergOracle::make(uniform_int(rng, -3, 3), uniform_int(rng, -3, 3),
                                      random_rational(rng, 5, 6));
      },
      [](Rng& rng) {
        return HeisenbergOracle::make(uniform_int(rng, -3, 3), uniform_int(rng, -3, 3),
                                      uniform_int(rng, -3, 3));
      },
  };
  return chain;
}

}  // namespace

bool CatalogEntry::has_tag(FamilyTag tag) const {
  return std::any_of(tags.begin(), tags.end(), [&](const auto& t) { return t.tag == tag; });
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "finite-perm", "group-algebra",  "quasicyclic-dihedral", "infinite-dihedral",
      "heisenberg",  "sl2-localized", "bc-axb"};
  return names;
}

bool takes_prime(const std::string& name) {
  return name == "quasicyclic-dihedral" || name == "sl2-localized";
}

CatalogEntry build(const std::string& name, const PairParams& params) {
  if (std::find(catalog_names().begin(), catalog_names().end(), name) == catalog_names().end())
    throw UnknownPair("no catalog pair named '" + name + "'");
  if (params.p && !takes_prime(name)) throw BadParams(name + " takes no prime parameter");
  const unsigned long p = params.p.value_or(2);
  if (takes_prime(name) && !is_prime(p)) throw BadParams("p must be prime, got " + std::to_string(p));

  CatalogEntry e;
  e.name = name;
  using F = FamilyTag;
  using P = Provenance;

  if (name == "finite-perm") {
    auto o = std::make_shared<PermutationOracle>(4, std::vector<Element>{Element{1, 0, 2, 3}},
                                                 "finite-perm");
    e.parameters = {{"degree", 4}, {"gamma", "<(1,2)>"}};
    e.seed = o->from_cycles({{1, 3}});
    e.oracle = o;
    e.tags = {{F::FiniteIndex, P::SampleChecked},
              {F::FCWithFiniteGamma, P::SampleChecked},
              {F::LocallyFiniteFiniteGamma, P::SampleChecked}};
    e.expectation = {true, std::nullopt, "finite group: every closure is finite"};
  } else if (name == "group-algebra") {
    auto o = std::make_shared<PermutationOracle>(3, std::vector<Element>{}, "group-algebra");
    e.parameters = {{"degree", 3}, {"gamma", "{e}"}};
    e.seed = o->from_cycles({{1, 2, 3}});
    e.oracle = o;
    e.tags = {{F::FiniteIndex, P::SampleChecked},
              {F::FCWithFiniteGamma, P::SampleChecked},
              {F::LocallyFiniteFiniteGamma, P::SampleChecked}};
    e.expectation = {true, 2, "delta_g* delta_g = delta_e, so closures are {delta_g, delta_e}"};
  } else if (name == "quasicyclic-dihedral") {
    auto o = std::make_shared<DihedralOracle>(p);
    e.parameters = {{"p", p}};
    e.seed = o->make(Rational(1, p * p * p), -1);
    e.oracle = o;
    e.tags = {{F::LocallyFiniteFiniteGamma, P::SampleChecked}};
    if (p == 2) e.tags.push_back({F::LocallyNilpotentFiniteGamma, P::SampleChecked});
    e.expectation = {true, p == 2 ? std::optional<std::size_t>(4) : std::nullopt,
                     "offsets with p-power denominators collapse to 0 under doubling"};
  } else if (name == "infinite-dihedral") {
    auto o = std::make_shared<DihedralOracle>(std::nullopt);
    e.seed = o->make(Rational(1), -1);
    e.oracle = o;
    e.tags = {{F::None, P::Declared}};
    e.expectation = {false, std::nullopt,
                     "reflection closures double their offset forever; only budget exhaustion is "
                     "claimed"};
  } else if (name == "heisenberg") {
    auto o = std::make_shared<HeisenbergOracle>();
    e.seed = HeisenbergOracle::make(Rational(1, 2), Rational(1, 3), 0);
    e.oracle = o;
    e.chain = heisenberg_chain(o);
    e.tags = {{F::Subnormal, P::SampleChecked},
              {F::Hypercentral, P::SampleChecked},
              {F::FiniteByNilpotent, P::Declared}};
    e.expectation = {true, std::nullopt, "nilpotent of class 2: commutators collapse in 2 steps"};
  } else if (name == "sl2-localized") {
    auto o = std::make_shared<Sl2LocalizedOracle>(p);
    e.parameters = {{"p", p}};
    e.seed = o->diagonal(Rational(static_cast<long>(p)));
    e.oracle = o;
    e.tags = {{F::None, P::Declared}};
    e.expectation = {false, std::nullopt,
                     "dense arithmetic stand-in for (SL2(Q_p), SL2(Z_p)); closures of diagonal "
                     "cosets climb through diag(p^a, p^-a) with L = p^(2a-1)(p+1)"};
  } else {
    auto o = std::make_shared<AffineRationalOracle>();
    e.seed = AffineRationalOracle::make(0, Rational(1, 2));
    e.oracle = o;
    e.tags = {{F::Directed, P::SampleChecked}};
    e.expectation = {true, 2, "L(t) = 1 for t = (0, 1/n): closure {GtG, G}"};
  }
  return e;
}

PairContext::PairContext(std::shared_ptr<const GroupOracle> oracle, std::size_t coset_budget)
    : engine(std::make_shared<CosetEngine>(std::move(oracle), coset_budget)),
      algebra(std::make_shared<HeckeAlgebra>(engine)),
      graph(std::make_shared<CosetGraph>(algebra)),
      lab(std::make_shared<CommutatorLab>(graph)) {}

nlohmann::json to_json(const CatalogEntry& entry) {
  nlohmann::json tags = nlohmann::json::array();
  for (const auto& t : entry.tags)
    tags.push_back({{"tag", to_string(t.tag)}, {"provenance", to_string(t.provenance)}});
  nlohmann::json out = {{"name", entry.name},
                        {"oracle", entry.oracle->name()},
                        {"parameters", entry.parameters},
                        {"element_syntax", entry.oracle->element_syntax()},
                        {"tags", std::move(tags)},
                        {"seed", entry.oracle->format(entry.seed)},
                        {"expectation",
                         {{"closures_finite", entry.expectation.closures_finite},
                          {"note", entry.expectation.note}}}};
  if (entry.expectation.seed_closure_size)
    out["expectation"]["seed_closure_size"] = *entry.expectation.seed_closure_size;
  if (entry.chain) out["chain"] = entry.chain->labels;
  return out;
}

nlohmann::json catalog_json() {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& name : catalog_names()) out.push_back(to_json(build(name)));
  return out;
}

ProbeReport verify_oracle(const GroupOracle& o, std::size_t samples, std::uint64_t seed) {
  ProbeReport report{"verify_oracle", o.name(), "Pass", samples, seed, std::nullopt, {}};
  auto fail = [&](const std::string& why) {
    report.verdict = "Fail";
    report.counterexample = why;
    return report;
  };
  const auto e = o.identity();
  if (!o.in_gamma(e)) return fail("identity is not in Gamma");
  for (const auto& gen : o.gamma_generators())
    if (!o.in_gamma(gen)) return fail("generator " + o.format(gen) + " is not in Gamma");

  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto a = o.sample(rng), b = o.sample(rng), c = o.sample(rng);
    if (!o.contains(a)) return fail("sample " + o.format(a) + " is not in G");
    if (o.multiply(o.multiply(a, b), c) != o.multiply(a, o.multiply(b, c)))
      return fail("associativity fails at " + o.format(a) + ", " + o.format(b) + ", " + o.format(c));
    if (o.multiply(a, e) != a || o.multiply(e, a) != a)
      return fail("identity law fails at " + o.format(a));
    if (o.multiply(a, o.invert(a)) != e || o.multiply(o.invert(a), a) != e)
      return fail("inverse law fails at " + o.format(a));
    const auto gamma = o.random_gamma(rng);
    if (!o.in_gamma(gamma)) return fail("Gamma word " + o.format(gamma) + " fails membership");
    const auto rep = o.coset_canonical_rep(a);
    if (o.coset_canonical_rep(rep) != rep) return fail("canonical rep not idempotent at " + o.format(a));
    if (!o.in_gamma(o.multiply(o.invert(a), rep)))
      return fail("canonical rep leaves the coset of " + o.format(a));
    if (o.coset_canonical_rep(o.multiply(a, gamma)) != rep)
      return fail("canonical rep depends on the coset representative at " + o.format(a));
  }
  return report;
}

std::vector<ProbeReport> verify_tags(const CatalogEntry& entry, const PairContext& ctx,
                                     std::size_t samples, std::uint64_t seed) {
  const auto& o = *entry.oracle;
  std::vector<ProbeReport> reports;
  Rng rng(seed);
  for (const auto& t : entry.tags) {
    ProbeReport r{"tag:" + to_string(t.tag), entry.name, "Pass", samples, seed, std::nullopt, {}};
    switch (t.tag) {
      case FamilyTag::FiniteIndex:
      case FamilyTag::FCWithFiniteGamma: {
        const auto* perm = dynamic_cast<const PermutationOracle*>(&o);
        if (!perm) {
          r.verdict = "Fail";
          r.counterexample = "only finite permutation pairs carry this tag";
          break;
        }
        std::set<Element> cosets;
        for (const auto& g : perm->all_elements()) cosets.insert(o.coset_canonical_rep(g));
        r.details["index"] = cosets.size();
        r.details["gamma_order"] = perm->gamma_elements().size();
        break;
      }
      case FamilyTag::Directed: {
        auto d = ctx.lab->directed_test(entry.seed);
        if (!d.directed) r = d.report;
        r.details["seed_L"] = d.l_value;
        r.details["seed_R"] = d.r_value;
        break;
      }
      case FamilyTag::Subnormal: {
        if (!entry.chain) {
          r.verdict = "Fail";
          r.counterexample = "no chain declared";
          break;
        }
        auto shape = check_chain(o, *entry.chain, samples, seed);
        if (!shape.passed()) {
          r = shape;
          break;
        }
        for (std::size_t i = 0; i < 5 && r.passed(); ++i) {
          auto c = ctx.lab->chain_condition_b(o.sample(rng), *entry.chain, samples, seed + i);
          if (!c.passed()) r = c;
        }
        break;
      }
      case FamilyTag::Hypercentral:
      case FamilyTag::LocallyNilpotentFiniteGamma: {
        for (std::size_t i = 0; i < 5 && r.passed(); ++i) {
          auto s = ctx.lab->stabilization_probe(o.sample(rng), samples, 16, seed + i);
          if (!s.passed()) r = s;
        }
        break;
      }
      case FamilyTag::LocallyFiniteFiniteGamma: {
        for (std::size_t i = 0; i < 5; ++i) {
          auto g = o.sample(rng);
          try {
            af_filtration_check(entry, g);
          } catch (const BudgetExhausted&) {
            r.verdict = "Fail";
            r.counterexample = "<Gamma, " + o.format(g) + "> exceeded the subgroup budget";
            break;
          }
        }
        break;
      }
      default:
        r.verdict = "Declared";
        break;
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

AfFiltrationReport af_filtration_check(const CatalogEntry& entry, const Element& g,
                                       std::size_t budget) {
  const auto& o = *entry.oracle;
  std::vector<Element> gens = o.gamma_generators();
  gens.push_back(g);

  std::unordered_set<Element, ElementHash> seen{o.identity()};
  std::deque<Element> frontier{o.identity()};
  while (!frontier.empty()) {
    const auto x = frontier.front();
    frontier.pop_front();
    for (const auto& gen : gens) {
      auto y = o.multiply(x, gen);
      if (seen.contains(y)) continue;
      if (seen.size() >= budget) {
        std::vector<Element> partial(seen.begin(), seen.end());
        std::sort(partial.begin(), partial.end());
        throw BudgetExhausted("subgroup generated by Gamma and " + o.format(g), budget,
                              std::move(partial));
      }
      seen.insert(y);
      frontier.push_back(std::move(y));
    }
  }

  auto members = std::make_shared<const std::unordered_set<Element, ElementHash>>(seen);
  auto sub = restrict_pair(
      entry.oracle, [members](const Element& x) { return members->contains(x); }, {g},
      "<Gamma, " + o.format(g) + ">");
  CosetEngine engine(sub);
  std::set<Element> keys;
  for (const auto& x : *members) keys.insert(engine.double_coset(x).key());

  AfFiltrationReport out;
  out.subgroup_order = members->size();
  out.dimension = keys.size();
  out.declared_locally_finite = entry.has_tag(FamilyTag::LocallyFiniteFiniteGamma);
  out.report = {"af_filtration_check", o.format(g), "Finite", 1, 0, std::nullopt, {}};
  out.report.details["subgroup_order"] = out.subgroup_order;
  out.report.details["dimension"] = out.dimension;
  out.report.details["declared_locally_finite"] = out.declared_locally_finite;
  return out;
}

}  // namespace hecke
