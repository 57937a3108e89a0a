#include "hecke_cli/cli.hpp"

#include "hecke/catalog.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace hecke::cli {

namespace {

using nlohmann::json;

struct Outcome {
  std::string text;
  int code = kExitOk;
};

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

Outcome error_outcome(const std::string& kind, const std::string& detail, int code) {
  return {dump({{"error", kind}, {"detail", detail}}), code};
}

Element parse_element(const GroupOracle& oracle, const std::string& text, const char* flag) {
  if (text.empty()) throw BadParams(std::string("missing ") + flag);
  auto x = oracle.parse(text);
  if (!oracle.contains(x)) throw InvalidElement(text + " is not an element of " + oracle.name());
  return x;
}

CatalogEntry entry_for(const RunConfig& cfg) {
  if (cfg.pair.empty()) throw BadParams("missing --pair");
  return build(cfg.pair, PairParams{cfg.p});
}

json coset_json(const DoubleCoset& c, const GroupOracle& o) {
  json reps = json::array();
  for (const auto& r : c.left_reps()) reps.push_back(o.format(r));
  return {{"key", o.format(c.key())}, {"rep", o.format(c.rep())}, {"L", c.L()},
          {"R", c.R()},               {"delta", to_string(c.delta())}, {"left_reps", reps}};
}

std::string closure_text(const ClosureReport& r, const GroupOracle& o) {
  std::ostringstream s;
  s << "root " << o.format(r.root.key()) << "\nstatus " << to_string(r.status) << "\nbudget "
    << r.budget << "\nvertices " << r.size() << "\n";
  for (const auto& v : r.vertices)
    s << "  level " << v.level << "  " << o.format(v.coset.key()) << "  L=" << v.coset.L()
      << " R=" << v.coset.R() << "\n";
  s << "edges " << r.edges.size() << "\n";
  for (const auto& [a, b] : r.edges) s << "  " << o.format(a) << " -> " << o.format(b) << "\n";
  return s.str();
}

Outcome cmd_catalog(const RunConfig& cfg) {
  json doc = cfg.pair.empty() ? catalog_json() : json::array({to_json(entry_for(cfg))});
  if (cfg.format != Format::Text) return {dump(doc)};
  std::ostringstream s;
  for (const auto& e : doc) {
    s << e["name"].get<std::string>() << "  [" << e["oracle"].get<std::string>() << "]\n"
      << "  syntax: " << e["element_syntax"].get<std::string>() << "\n  seed: "
      << e["seed"].get<std::string>() << "\n  tags:";
    for (const auto& t : e["tags"])
      s << " " << t["tag"].get<std::string>() << "(" << t["provenance"].get<std::string>() << ")";
    s << "\n";
  }
  return {s.str()};
}

Outcome cmd_coset(const RunConfig& cfg) {
  const auto entry = entry_for(cfg);
  const PairContext ctx(entry.oracle, cfg.coset_budget);
  const auto g = parse_element(ctx.oracle(), cfg.elem, "--elem");
  const auto c = ctx.engine->double_coset(g);
  json doc = coset_json(c, ctx.oracle());
  doc["pair"] = entry.oracle->name();
  if (cfg.format != Format::Text) return {dump(doc)};
  std::ostringstream s;
  s << "key " << doc["key"].get<std::string>() << "\nL " << c.L() << "\nR " << c.R()
    << "\ndelta " << to_string(c.delta()) << "\nleft_reps\n";
  for (const auto& r : doc["left_reps"]) s << "  " << r.get<std::string>() << "\n";
  return {s.str()};
}

Outcome cmd_product(const RunConfig& cfg) {
  const auto entry = entry_for(cfg);
  const PairContext ctx(entry.oracle, cfg.coset_budget);
  const auto& o = ctx.oracle();
  const auto a = ctx.engine->double_coset(parse_element(o, cfg.a, "--a"));
  const auto b = ctx.engine->double_coset(parse_element(o, cfg.b, "--b"));
  const auto product = ctx.algebra->coset_product(a, b);
  const auto norm = ctx.algebra->l1_norm(product);
  json doc = {{"a", o.format(a.key())},
              {"b", o.format(b.key())},
              {"product", to_json(product, o)},
              {"l1_norm", {{"value", to_string(norm.value)}, {"exact", norm.exact}}}};
  if (cfg.format != Format::Text) return {dump(doc)};
  std::ostringstream s;
  for (const auto& [_, t] : product.terms())
    s << to_string(t.coefficient) << " * [" << o.format(t.coset.key()) << "]\n";
  s << "l1 " << to_string(norm.value) << (norm.exact ? "" : " (upper bound)") << "\n";
  return {s.str()};
}

Outcome cmd_closure(const RunConfig& cfg) {
  const auto entry = entry_for(cfg);
  const PairContext ctx(entry.oracle, cfg.coset_budget);
  const auto root = ctx.engine->double_coset(parse_element(ctx.oracle(), cfg.elem, "--elem"));
  const auto report = ctx.graph->closure(root, cfg.closure_budget);
  Outcome out;
  switch (cfg.format) {
    case Format::Json: out.text = dump(export_json(report, ctx.oracle())); break;
    case Format::Dot: out.text = export_dot(report, ctx.oracle()); break;
    case Format::Text: out.text = closure_text(report, ctx.oracle()); break;
  }
  if (!report.complete() && !cfg.expect_exhausted) out.code = kExitExhausted;
  return out;
}

Outcome cmd_certify(const RunConfig& cfg) {
  if (cfg.format == Format::Dot) throw BadParams("certify supports json and text output");
  const auto entry = entry_for(cfg);
  const PairContext ctx(entry.oracle, cfg.coset_budget);
  const auto& o = ctx.oracle();
  const auto root = ctx.engine->double_coset(parse_element(o, cfg.elem, "--elem"));
  const auto report = ctx.graph->closure(root, cfg.closure_budget);
  json doc = {{"closure", export_json(report, o)}};
  if (!report.complete()) {
    doc["error"] = "BudgetExhausted";
    doc["detail"] = "closure exceeded " + std::to_string(cfg.closure_budget) +
                    " vertices; no certificate";
    return {dump(doc), cfg.expect_exhausted ? kExitOk : kExitExhausted};
  }
  const auto cert = l1_certificate(report, *ctx.algebra);
  doc["certificate"] = to_json(cert, o);
  if (cfg.format == Format::Json) return {dump(doc)};
  std::ostringstream s;
  s << "closure " << report.size() << " vertices, Complete\nchecks all passed\nbeta_squared "
    << cert.beta_squared << "\nbounds\n";
  for (const auto& c : cert.relations.cosets)
    s << "  " << o.format(c.key()) << "  <= " << to_string(cert.per_coset_bound.at(c.key()))
      << "\n";
  return {s.str()};
}

Outcome cmd_classify(const RunConfig& cfg) {
  const auto entry = entry_for(cfg);
  const PairContext ctx(entry.oracle, cfg.coset_budget);
  const auto& o = ctx.oracle();
  const auto g = parse_element(o, cfg.elem, "--elem");
  const auto& lab = *ctx.lab;
  json doc = {{"pair", o.name()}, {"elem", o.format(g)}};
  doc["directed"] = to_json(lab.directed_test(g).report);
  doc["quadratic"] = to_json(lab.quadratic_relation_test(ctx.engine->double_coset(g)).report);
  doc["protonormal"] = to_json(lab.protonormal_falsifier(g, cfg.samples, cfg.seed));
  doc["stabilization"] = to_json(lab.stabilization_probe(g, cfg.samples, 8, cfg.seed));
  if (entry.chain)
    doc["chain_condition_b"] = to_json(lab.chain_condition_b(g, *entry.chain, cfg.samples, cfg.seed));
  if (entry.has_tag(FamilyTag::LocallyFiniteFiniteGamma)) {
    try {
      doc["af_filtration"] = to_json(af_filtration_check(entry, g, cfg.subgroup_budget).report);
    } catch (const BudgetExhausted& e) {
      doc["af_filtration"] = {{"error", "BudgetExhausted"}, {"detail", e.detail()}};
    }
  }
  if (cfg.format != Format::Text) return {dump(doc)};
  std::ostringstream s;
  for (const auto& key : {"directed", "quadratic", "protonormal", "stabilization",
                          "chain_condition_b", "af_filtration"})
    if (doc.contains(key))
      s << key << ": " << doc[key].value("verdict", doc[key].value("error", "")) << "\n";
  return {s.str()};
}

/// Algebra laws on a few sampled triples; cheap enough for a smoke run.
ProbeReport algebra_laws(const PairContext& ctx, std::size_t samples, std::uint64_t seed) {
  const auto& o = ctx.oracle();
  const auto& alg = *ctx.algebra;
  ProbeReport r{"algebra_laws", o.name(), "Pass", samples, seed, std::nullopt, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < samples && r.passed(); ++i) {
    const auto f1 = alg.basis(o.sample(rng), Gaussian(uniform_int(rng, 1, 3)));
    const auto f2 = alg.basis(o.sample(rng), Gaussian(1, uniform_int(rng, -2, 2)));
    const auto f3 = alg.basis(o.sample(rng));
    if (alg.convolve(alg.convolve(f1, f2), f3) != alg.convolve(f1, alg.convolve(f2, f3)))
      r.counterexample = "associativity";
    else if (alg.involution(alg.involution(f2)) != f2)
      r.counterexample = "involutivity";
    else if (alg.involution(alg.convolve(f1, f2)) !=
             alg.convolve(alg.involution(f2), alg.involution(f1)))
      r.counterexample = "anti-multiplicativity";
    else if (alg.convolve(alg.unit(), f1) != f1 || alg.convolve(f1, alg.unit()) != f1)
      r.counterexample = "unit";
  }
  if (!r.passed()) r.verdict = "Fail";
  return r;
}

Outcome cmd_selftest(const RunConfig& cfg) {
  std::vector<std::string> names = cfg.pair.empty() ? catalog_names()
                                                    : std::vector<std::string>{cfg.pair};
  json doc = json::object();
  bool all_passed = true;
  const std::size_t law_samples = std::min<std::size_t>(cfg.samples, 20);
  for (const auto& name : names) {
    const auto entry = build(name, PairParams{name == cfg.pair ? cfg.p : std::nullopt});
    const PairContext ctx(entry.oracle, cfg.coset_budget);
    std::vector<ProbeReport> reports{verify_oracle(*entry.oracle, cfg.samples, cfg.seed)};
    for (auto& r : verify_tags(entry, ctx, cfg.samples, cfg.seed)) reports.push_back(std::move(r));
    reports.push_back(algebra_laws(ctx, law_samples, cfg.seed));

    ProbeReport seed_report{"seed_closure", entry.oracle->format(entry.seed), "Pass", 1, 0,
                            std::nullopt, {}};
    try {
      const auto report = ctx.graph->closure(ctx.engine->double_coset(entry.seed), 50);
      seed_report.details["status"] = to_string(report.status);
      seed_report.details["size"] = report.size();
      if (report.complete() != entry.expectation.closures_finite)
        seed_report.counterexample = "closure status contradicts the catalog expectation";
      if (report.complete()) l1_certificate(report, *ctx.algebra);
    } catch (const BudgetExhausted& e) {
      seed_report.details["status"] = "BudgetExhausted";
      seed_report.details["detail"] = e.detail();
      if (entry.expectation.closures_finite) seed_report.counterexample = e.detail();
    }
    if (!seed_report.passed()) seed_report.verdict = "Fail";
    reports.push_back(std::move(seed_report));

    json list = json::array();
    for (const auto& r : reports) {
      if (r.verdict == "Fail") all_passed = false;
      list.push_back(to_json(r));
    }
    doc[name] = std::move(list);
  }
  json out = {{"passed", all_passed}, {"pairs", std::move(doc)}};
  if (cfg.format == Format::Text) {
    std::ostringstream s;
    for (const auto& [name, list] : out["pairs"].items())
      for (const auto& r : list)
        s << name << "  " << r["test"].get<std::string>() << "  "
          << r["verdict"].get<std::string>() << "\n";
    s << (all_passed ? "selftest passed\n" : "selftest FAILED\n");
    return {s.str(), all_passed ? kExitOk : kExitError};
  }
  return {dump(out), all_passed ? kExitOk : kExitError};
}

Outcome dispatch(const RunConfig& cfg) {
  try {
    if (cfg.command == "catalog") return cmd_catalog(cfg);
    if (cfg.command == "coset") return cmd_coset(cfg);
    if (cfg.command == "product") return cmd_product(cfg);
    if (cfg.command == "closure") return cmd_closure(cfg);
    if (cfg.command == "certify") return cmd_certify(cfg);
    if (cfg.command == "classify") return cmd_classify(cfg);
    if (cfg.command == "selftest") return cmd_selftest(cfg);
    return error_outcome("UnknownCommand", cfg.command, kExitError);
  } catch (const BudgetExhausted& e) {
    return error_outcome("BudgetExhausted", e.detail(),
                         cfg.expect_exhausted ? kExitOk : kExitExhausted);
  } catch (const HeckeError& e) {
    return error_outcome(e.kind(), e.detail(), kExitError);
  } catch (const std::exception& e) {
    return error_outcome("InternalError", e.what(), kExitError);
  }
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out) {
  const auto outcome = dispatch(config);
  if (config.out_path.empty()) {
    out << outcome.text;
  } else {
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file) {
      out << dump({{"error", "IoError"}, {"detail", "cannot open " + config.out_path}});
      return kExitError;
    }
    file << outcome.text;
  }
  return outcome.code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hecke-pair engine: double cosets, convolution, closures, norm certificates"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string seed_text;
  std::string format_text = "json";
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"catalog", "list catalog pairs with tags, seeds and element syntax"},
      {"coset", "double coset of --elem: key, L, R, delta, left-coset representatives"},
      {"product", "expand [--a] * [--b] over the double-coset basis"},
      {"closure", "co-hereditary closure of the double coset of --elem"},
      {"certify", "closure of --elem followed by its L1 norm certificate"},
      {"classify", "directed, quadratic, protonormal and stabilization probes for --elem"},
      {"selftest", "oracle, tag, algebra-law and seed-closure checks for every pair"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&cfg, name = name] { cfg.command = name; });
    sub->add_option("--pair", cfg.pair, "catalog pair name");
    sub->add_option("--p", cfg.p, "prime parameter for quasicyclic-dihedral and sl2-localized");
    sub->add_option("--elem", cfg.elem, "element in the pair's syntax");
    sub->add_option("--a", cfg.a, "left factor for product");
    sub->add_option("--b", cfg.b, "right factor for product");
    sub->add_option("--budget", cfg.closure_budget, "closure vertex budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--coset-budget", cfg.coset_budget, "left-coset orbit budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--subgroup-budget", cfg.subgroup_budget, "subgroup enumeration budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed_text, "64-bit seed, decimal or 0x-prefixed hex");
    sub->add_option("--samples", cfg.samples, "sample count for randomized probes")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format_text, "json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--out", cfg.out_path, "write output to this file");
    sub->add_flag("--expect-exhausted", cfg.expect_exhausted,
                  "budget exhaustion is the expected outcome (exit 0)");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!seed_text.empty()) {
      std::size_t used = 0;
      cfg.seed = std::stoull(seed_text, &used, 0);
      if (used != seed_text.size()) throw CLI::ValidationError("--seed", "not an integer");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  } catch (const std::exception&) {
    err << "--seed: not a 64-bit integer: " << seed_text << "\n";
    return kExitError;
  }
  cfg.format = format_text == "dot" ? Format::Dot
               : format_text == "text" ? Format::Text
                                       : Format::Json;
  return execute(cfg, out);
}

}  // namespace hecke::cli
