#pragma once

// The `hgrig` command line. Exit codes: 0 all checks pass, 1 violation (the
// witness report is written), 2 usage or validation error, 3 inconclusive
// because of truncation, 4 resource cap.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hgrig {

enum ExitCode : int { exit_pass = 0, exit_violation = 1, exit_usage = 2, exit_truncation = 3, exit_cap = 4 };

enum class OutputFormat { json, dot, text };

struct RunConfig {
  std::string command;
  std::string subcommand;
  std::string lemma;  // check-lemma target, canonical name

  std::int64_t m = 2;
  std::int64_t n = 3;
  std::string sigma = "1,2;1,2;1,2;1,2;1,2";
  unsigned exotic_n = 1;

  int radius = -1;  // -1: the subcommand's default
  int r = 2;
  int s = 2;

  std::string u1;
  std::string u2;
  std::string u3;
  char line_type = 'a';

  std::size_t search_bound = 3;
  int search_radius = 2;
  int exponent_bound = 4;
  std::int64_t bound = 64;

  std::size_t i = 1;
  std::int64_t s1 = 1;
  std::int64_t s2 = -1;
  std::size_t tau = 1;
  bool force = false;
  int margin = 1;
  std::size_t k = 0;  // 0: the number of generators

  OutputFormat format = OutputFormat::json;
  std::string output;
  unsigned threads = 1;
};

/// Canonical check-lemma name for a name or numeric alias; empty if unknown.
std::string lemma_name(const std::string& token);

/// Parses `args` (without the program name) into a validated config.
/// Throws CLI::ParseError subclasses or ValidationError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes a validated config, writing artifacts to `out` (or the output
/// file) and diagnostics to `err`.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + execute with exceptions mapped to exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgrig
