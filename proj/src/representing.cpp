#include "strongfact/representing.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "strongfact/error.hpp"
#include "strongfact/rng.hpp"

namespace strongfact {

GridFunction representing_sample(const BasisSpec& basis, std::size_t N, std::uint64_t seed, std::size_t index) {
  // One stream per sample so that a sample does not depend on how many were drawn.
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + index);
  std::vector<double> c(N + 4);
  for (double& v : c) v = rng.uniform(-1.0, 1.0);
  const BasisSpec wide(basis.family, std::max(basis.count, c.size()));
  return synthesize(TruncatedSeq(std::move(c)), wide, basis.default_grid());
}

Certificate verify_representing(const CoefficientOperator& T, const BasisSpec& basis,
                                const std::function<double(double)>& h, const TruncatedSeq& g,
                                std::size_t samples, std::size_t N, double tol, std::uint64_t seed) {
  if (g.size() < N) {
    throw Error(ErrorCode::LengthMismatch,
                "g has " + std::to_string(g.size()) + " entries, need " + std::to_string(N));
  }
  for (std::size_t j = 0; j < N; ++j) {
    if (g[j] == 0.0) throw Error(ErrorCode::ZeroDiagonal, "g_" + std::to_string(j + 1) + " = 0");
  }
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be >= 1");

  Certificate c;
  c.check = "representing";
  c.g = TruncatedSeq(std::vector<double>(g.vec().begin(), g.vec().begin() + static_cast<std::ptrdiff_t>(N)));
  c.tol = tol;
  c.seed = seed;
  c.truncation = N;

  const BasisSpec spec(basis.family, std::max(basis.count, N));
  double worst = -1.0;
  Witness worst_w;
  for (std::size_t s = 0; s < samples; ++s) {
    const GridFunction x = representing_sample(spec, N, seed, s);
    const TruncatedSeq tx = T(x);
    if (tx.size() < N) {
      throw Error(ErrorCode::LengthMismatch, "operator returned " + std::to_string(tx.size()) + " coefficients");
    }
    const GridFunction hx = x.map([&](double t, double v) { return h(t) * v; });
    const TruncatedSeq alpha = basis_operator_coeffs(hx, spec, N);
    for (std::size_t j = 0; j < N; ++j) {
      const double expected = g[j] * alpha[j];
      const double dev = std::abs(tx[j] - expected);
      if (dev > worst) {
        worst = dev;
        worst_w = Witness{};
        worst_w.reason = "(T x)_j differs from g_j alpha_j(h x)";
        worst_w.row = j + 1;
        worst_w.col = j + 1;
        worst_w.sample = s;
        worst_w.found = tx[j];
        worst_w.expected = expected;
      }
    }
  }
  c.residual = worst;
  if (worst > tol) {
    c.witness = worst_w;
    c.verdict = Verdict::DoesNotFactor;
  } else {
    c.verdict = Verdict::Factors;
  }
  c.notes.push_back("basis " + std::string(to_string(basis.family)) + "; completeness of the family is assumed, "
                    "orthonormality is what the quadrature can confirm");
  return c;
}

}  // namespace strongfact
