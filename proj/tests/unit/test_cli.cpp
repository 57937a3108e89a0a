#include "hecke/catalog.hpp"
#include "hecke_cli/cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hecke;
using nlohmann::json;

namespace {

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("closure output matches the graph module") {
  const auto r = invoke({"closure", "--pair", "quasicyclic-dihedral", "--elem", "1/8,-"});
  CHECK(r.code == cli::kExitOk);
  const auto entry = build("quasicyclic-dihedral");
  PairContext ctx(entry.oracle);
  const auto report = ctx.graph->closure(ctx.engine->double_coset(entry.oracle->parse("1/8,-")), 256);
  CHECK(json::parse(r.out) == export_json(report, *entry.oracle));
  CHECK(json::parse(r.out)["vertices"].size() == 4);

  const auto dot = invoke({"closure", "--pair", "quasicyclic-dihedral", "--elem", "1/8,-", "--format", "dot"});
  CHECK(dot.code == cli::kExitOk);
  CHECK(dot.out == export_dot(report, *entry.oracle));
}

TEST_CASE("coset, product and certify outputs") {
  const auto entry = build("bc-axb");
  PairContext ctx(entry.oracle);
  const auto& o = *entry.oracle;

  const auto coset = json::parse(invoke({"coset", "--pair", "bc-axb", "--elem", o.format(entry.seed)}).out);
  const auto c = ctx.engine->double_coset(entry.seed);
  CHECK(coset["L"] == c.L());
  CHECK(coset["R"] == c.R());

  const auto seed_text = o.format(entry.seed);
  const auto inv_text = o.format(o.invert(entry.seed));
  const auto product = invoke({"product", "--pair", "bc-axb", "--a", inv_text, "--b", seed_text});
  REQUIRE(product.code == cli::kExitOk);
  const auto expected = ctx.algebra->coset_product(ctx.engine->double_coset(o.invert(entry.seed)), c);
  CHECK(json::parse(product.out)["product"] == to_json(expected, o));

  const auto cert = invoke({"certify", "--pair", "bc-axb", "--elem", seed_text});
  REQUIRE(cert.code == cli::kExitOk);
  const auto closure = ctx.graph->closure(c, 256);
  CHECK(json::parse(cert.out)["certificate"] == to_json(l1_certificate(closure, *ctx.algebra), o));
}

TEST_CASE("exit codes") {
  CHECK(invoke({"closure", "--pair", "infinite-dihedral", "--elem", "1,-", "--budget", "16"}).code ==
        cli::kExitExhausted);
  CHECK(invoke({"closure", "--pair", "infinite-dihedral", "--elem", "1,-", "--budget", "16",
                "--expect-exhausted"})
            .code == cli::kExitOk);
  const auto unknown = invoke({"closure", "--pair", "nope", "--elem", "1"});
  CHECK(unknown.code == cli::kExitError);
  CHECK(json::parse(unknown.out)["error"] == "UnknownPair");
  const auto bad_elem = invoke({"coset", "--pair", "bc-axb", "--elem", "garbage"});
  CHECK(bad_elem.code == cli::kExitError);
  CHECK(json::parse(bad_elem.out)["error"] == "ParseError");
  const auto outside = invoke({"coset", "--pair", "bc-axb", "--elem", "0,-1"});
  CHECK(outside.code == cli::kExitError);
  CHECK(json::parse(outside.out)["error"] == "InvalidElement");
  CHECK(invoke({"coset", "--pair", "quasicyclic-dihedral", "--p", "6", "--elem", "0,+"}).code ==
        cli::kExitError);
  CHECK(invoke({"closure", "--format", "svg"}).code == cli::kExitError);
  CHECK(invoke({"certify", "--pair", "bc-axb", "--elem", "0,1", "--format", "dot"}).code == cli::kExitError);
  CHECK(invoke({"classify", "--pair", "bc-axb", "--elem", "0,1", "--seed", "0xZZ"}).code == cli::kExitError);
  CHECK(invoke({}).code == cli::kExitError);
}

TEST_CASE("output is byte-for-byte deterministic") {
  const std::vector<std::string> classify{"classify", "--pair", "heisenberg", "--elem",
                                          "1,1/2,0,0,1,1/3,0,0,1", "--seed", "42", "--samples", "50"};
  const auto first = invoke(classify);
  CHECK(first.code == cli::kExitOk);
  CHECK(first.out == invoke(classify).out);
  const auto catalog = invoke({"catalog"});
  CHECK(catalog.out == invoke({"catalog"}).out);
  CHECK(json::parse(catalog.out) == catalog_json());
}

TEST_CASE("--out writes the same bytes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "hecke_cli_out_test.json";
  const std::vector<std::string> args{"closure", "--pair", "group-algebra", "--elem", "(123)"};
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", path.string()});
  const auto r = invoke(with_out);
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == invoke(args).out);
  std::filesystem::remove(path);
}
