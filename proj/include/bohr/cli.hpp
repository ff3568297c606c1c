#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bohr::cli {

enum class Command { radius, extremal, harmonic, verify, table };
enum class Format { json, csv, text };

struct RunConfig {
  Command command = Command::table;
  std::string target;  // subject of the command, e.g. "rpm" or "all"
  std::optional<int> p, m;
  std::optional<double> exponent_p, a0, r, mu, a, alpha, beta, delta, r_override;
  double lambda_re = 0.0;
  double lambda_im = 0.0;
  int n = 256;
  int p_max = 8;
  bool odd = false;
  bool experimental = false;
  std::uint64_t seed = 42;
  int samples = 500;
  double tol = 1e-9;
  unsigned threads = 1;
  Format format = Format::text;
  std::optional<std::string> output_path;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv (argv[0] is the program name) and runs the command.
/// Output goes to `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bohr::cli
