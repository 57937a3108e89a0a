#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hecke::cli {

enum class Format { Json, Dot, Text };

struct RunConfig {
  std::string command;
  std::string pair;
  std::optional<unsigned long> p;
  std::string elem;
  std::string a;
  std::string b;
  std::size_t coset_budget = 10000;
  std::size_t closure_budget = 256;
  std::size_t subgroup_budget = 4096;
  std::uint64_t seed = 0xC05E7;
  std::size_t samples = 100;
  Format format = Format::Json;
  std::string out_path;
  bool expect_exhausted = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitExhausted = 2;

/// Parses `args` (without the program name) and runs one command. Results go
/// to `out` (or the --out file); usage errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration.
int execute(const RunConfig& config, std::ostream& out);

}  // namespace hecke::cli
