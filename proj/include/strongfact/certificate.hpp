#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strongfact/exponent.hpp"
#include "strongfact/sequence.hpp"

namespace strongfact {

enum class Verdict { Factors, DoesNotFactor, Inconclusive };

std::string_view to_string(Verdict v) noexcept;

/// Entries of a pattern (r_ij) in the unit ball of l^inf, row-major.
struct SignPattern {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  double operator()(std::size_t i, std::size_t j) const noexcept { return values[(i - 1) * cols + (j - 1)]; }
};

/// Where a check failed. `row`/`col` are 1-based matrix indices; `ref_col`
/// is the column the multiplier was recovered from when the failure is an
/// inconsistent ratio; `sample` is set by the representing-operator check.
struct Witness {
  std::string reason;
  std::size_t row = 0;
  std::size_t col = 0;
  std::optional<std::size_t> ref_col;
  std::optional<std::size_t> sample;
  double found = 0.0;
  double expected = 0.0;
  std::optional<SignPattern> pattern;
  std::optional<double> lhs;
  std::optional<double> rhs;
};

struct NormValue {
  double value = 0.0;
  Exponent exponent;
};

/// Verdict of a factorization check.
///
/// Invariants: Factors implies g is present and residual <= tol;
/// DoesNotFactor implies a witness.
struct Certificate {
  std::string check;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<TruncatedSeq> g;
  std::optional<TruncatedSeq> h;
  std::optional<TruncatedSeq> alpha;
  std::optional<NormValue> g_norm;
  std::optional<NormValue> h_norm;
  double residual = 0.0;
  std::optional<double> c_hat;         // certifier runs only
  std::optional<double> vertex_c_hat;
  std::optional<Witness> witness;
  std::map<std::string, Exponent> exponents;
  double tol = 0.0;
  std::optional<std::uint64_t> seed;
  std::size_t truncation = 0;
  std::optional<std::size_t> j0;
  std::vector<std::string> notes;
};

/// JSON text with a fixed key order; identical certificates give identical bytes.
/// A timestamp field is added only when `timestamp` is non-empty.
/// Tagged object: {"kind": "LP" | "LP_WEIGHTED" | "KELLOGG_MIXED", "p", ["q"], ["weight"]}.
std::string to_json(const SeqSpaceSpec& space, int indent = -1);

std::string to_json(const Certificate& c, std::string_view timestamp = {}, int indent = 2);

}  // namespace strongfact
