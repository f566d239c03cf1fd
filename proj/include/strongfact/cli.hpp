#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace strongfact {

/// One invocation of the command-line tool.
struct JobSpec {
  std::string command;  // check-cesaro, check-cesaro-j0, check-fourier, check-matrix, certify,
                        // verify-representing, suite
  std::string matrix;   // CSV or JSON path
  std::string gen;      // built-in generator
  std::string B;        // check-matrix: path or generator name for the factor matrix
  std::string g;
  std::string h;
  std::optional<std::string> p, q, r;
  std::size_t N = 0;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::size_t patterns = 64;
  std::size_t block_n = 0;  // certify: leading block, 0 = full size
  std::size_t block_m = 0;
  std::string kind = "cesaro";  // certify: cesaro or fourier
  std::size_t perturb_row = 1, perturb_col = 2;
  double eps = 1e-3;
  std::string basis = "chebyshev1";
  std::string op = "basis-operator";  // verify-representing: basis-operator, permuted, hardy-littlewood
  std::size_t samples = 20;
  std::string name;  // suite
  std::string out;   // empty: certificate goes to the output stream after the summary
  bool no_timestamp = false;
};

inline constexpr int kExitFactors = 0;
inline constexpr int kExitDoesNotFactor = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;
inline constexpr int kExitFailure = 70;

/// Runs a job. Writes a one-line summary to `out`, diagnostics to `err`.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Parses argv into a JobSpec and runs it.
int cli_main(int argc, char** argv);

}  // namespace strongfact
