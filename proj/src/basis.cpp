#include "strongfact/basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "strongfact/error.hpp"
#include "strongfact/rng.hpp"

namespace strongfact {

namespace {

constexpr double kPi = std::numbers::pi;

// Orthonormal Legendre p_{deg}(x) by the symmetric recurrence
// x p_k = a_{k+1} p_{k+1} + a_k p_{k-1}, a_k = k / sqrt(4k^2 - 1).
double legendre_orthonormal(std::size_t deg, double x) {
  double prev = 0.0;
  double cur = 1.0 / std::sqrt(2.0);
  for (std::size_t k = 0; k < deg; ++k) {
    const double a_next = (k + 1.0) / std::sqrt(4.0 * (k + 1.0) * (k + 1.0) - 1.0);
    const double a_cur = k == 0 ? 0.0 : k / std::sqrt(4.0 * k * k - 1.0);
    const double next = (x * cur - a_cur * prev) / a_next;
    prev = cur;
    cur = next;
  }
  return cur;
}

double chebyshev(std::size_t deg, double x, double first) {
  double prev = 1.0;
  double cur = deg == 0 ? 1.0 : first;
  for (std::size_t k = 1; k < deg; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(std::size_t deg, double x) {
  double prev = 1.0;
  double cur = deg == 0 ? 1.0 : 1.0 - x;
  for (std::size_t k = 1; k < deg; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

void check_domain(const GridFunction& f, const BasisSpec& spec) {
  const auto& g = *f.grid();
  if (g.a() != spec.lower() || g.b() != spec.upper()) {
    throw Error(ErrorCode::DomainMismatch, "grid interval does not match the " +
                                               std::string(to_string(spec.family)) + " interval");
  }
}

TruncatedSeq project(const GridFunction& f, const BasisSpec& spec, std::size_t N, bool sqrt_weight) {
  check_domain(f, spec);
  if (N > spec.count) {
    throw Error(ErrorCode::IndexOutOfRange,
                "requested " + std::to_string(N) + " coefficients of a family of size " + std::to_string(spec.count));
  }
  const auto x = f.nodes();
  const auto w = f.grid()->weights();
  const auto v = f.values();

  std::vector<double> wf(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double wt = spec.weighted() ? spec.weight(x[k]) : 1.0;
    wf[k] = w[k] * v[k] * (sqrt_weight ? std::sqrt(wt) : wt);
  }
  std::vector<double> a(N, 0.0);
  for (std::size_t n = 1; n <= N; ++n) {
    double s = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) s += wf[k] * eval_basis(spec, n, x[k]);
    a[n - 1] = s;
  }
  return TruncatedSeq(std::move(a));
}

GridPtr make_default_grid(BasisFamily family);

}  // namespace

std::string_view to_string(BasisFamily family) noexcept {
  switch (family) {
    case BasisFamily::TrigReal: return "trig";
    case BasisFamily::Legendre: return "legendre";
    case BasisFamily::Chebyshev1: return "chebyshev1";
    case BasisFamily::Chebyshev2: return "chebyshev2";
    case BasisFamily::Laguerre: return "laguerre";
  }
  return "?";
}

BasisFamily parse_basis_family(std::string_view name) {
  if (name == "trig" || name == "trig-real") return BasisFamily::TrigReal;
  if (name == "legendre") return BasisFamily::Legendre;
  if (name == "chebyshev1") return BasisFamily::Chebyshev1;
  if (name == "chebyshev2") return BasisFamily::Chebyshev2;
  if (name == "laguerre") return BasisFamily::Laguerre;
  throw Error(ErrorCode::ParseError, "unknown basis family '" + std::string(name) + "'");
}

BasisSpec::BasisSpec(BasisFamily f, std::size_t n) : family(f), count(n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "basis needs at least one function");
}

double BasisSpec::lower() const noexcept {
  switch (family) {
    case BasisFamily::TrigReal: return -kPi;
    case BasisFamily::Laguerre: return 0.0;
    default: return -1.0;
  }
}

double BasisSpec::upper() const noexcept {
  switch (family) {
    case BasisFamily::TrigReal: return kPi;
    case BasisFamily::Laguerre: return std::numeric_limits<double>::infinity();
    default: return 1.0;
  }
}

bool BasisSpec::weighted() const noexcept {
  return family == BasisFamily::Chebyshev1 || family == BasisFamily::Chebyshev2 ||
         family == BasisFamily::Laguerre;
}

double BasisSpec::weight(double x) const {
  switch (family) {
    case BasisFamily::Chebyshev1: return 1.0 / std::sqrt(1.0 - x * x);
    case BasisFamily::Chebyshev2: return std::sqrt(1.0 - x * x);
    case BasisFamily::Laguerre: return std::exp(-x);
    default: return 1.0;
  }
}

GridPtr BasisSpec::default_grid() const {
  // One shared grid per family so grid functions built from it combine pointwise.
  static std::mutex mu;
  static std::map<BasisFamily, GridPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[family];
  if (!slot) slot = make_default_grid(family);
  return slot;
}

namespace {

GridPtr make_default_grid(BasisFamily family) {
  switch (family) {
    case BasisFamily::TrigReal: return Grid::make(-kPi, kPi, QuadratureRule::gauss_legendre(32, 16));
    case BasisFamily::Legendre: return Grid::make(-1.0, 1.0, QuadratureRule::gauss_legendre(8, 16));
    case BasisFamily::Chebyshev1:
    case BasisFamily::Chebyshev2: return Grid::make(-1.0, 1.0, QuadratureRule::cosine(8, 16));
    case BasisFamily::Laguerre:
      return Grid::make(0.0, std::numeric_limits<double>::infinity(), QuadratureRule::gauss_laguerre(64));
  }
  return nullptr;
}

}  // namespace

double eval_basis(const BasisSpec& spec, std::size_t n, double x) {
  if (n < 1 || n > spec.count) {
    throw Error(ErrorCode::IndexOutOfRange,
                "basis index " + std::to_string(n) + " outside 1.." + std::to_string(spec.count));
  }
  const std::size_t deg = n - 1;
  switch (spec.family) {
    case BasisFamily::TrigReal: {
      if (n == 1) return 1.0 / std::sqrt(2.0 * kPi);
      const double k = static_cast<double>(n / 2);
      return (n % 2 == 0 ? std::cos(k * x) : std::sin(k * x)) / std::sqrt(kPi);
    }
    case BasisFamily::Legendre: return legendre_orthonormal(deg, x);
    case BasisFamily::Chebyshev1:
      return deg == 0 ? 1.0 / std::sqrt(kPi) : std::sqrt(2.0 / kPi) * chebyshev(deg, x, x);
    case BasisFamily::Chebyshev2: return std::sqrt(2.0 / kPi) * chebyshev(deg, x, 2.0 * x);
    case BasisFamily::Laguerre: return laguerre(deg, x);
  }
  return 0.0;
}

TruncatedSeq fourier_coeffs(const GridFunction& f, const BasisSpec& spec, std::size_t N) {
  return project(f, spec, N, false);
}

TruncatedSeq basis_operator_coeffs(const GridFunction& f, const BasisSpec& spec, std::size_t N) {
  return project(f, spec, N, true);
}

RepresentingSetup representing_setup(const BasisSpec& spec) {
  RepresentingSetup s;
  if (!spec.weighted()) {
    s.weight = [](double) { return 1.0; };
    s.multiplier = [](double) { return 1.0; };
    s.trivial = true;
    return s;
  }
  s.weight = [spec](double x) { return spec.weight(x); };
  s.multiplier = [spec](double x) { return std::sqrt(spec.weight(x)); };
  return s;
}

GridFunction synthesize(const TruncatedSeq& coeffs, const BasisSpec& spec, GridPtr grid) {
  const BasisSpec wide(spec.family, std::max(spec.count, coeffs.size()));
  return GridFunction::sample(std::move(grid), [&](double x) {
    double s = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] != 0.0) s += coeffs[k] * eval_basis(wide, k + 1, x);
    }
    return s;
  });
}

RandomTrigPolynomial random_trig_polynomial(std::size_t degree, std::uint64_t seed, GridPtr grid) {
  Rng rng(seed);
  std::vector<double> c(2 * degree + 1);
  for (double& v : c) v = rng.uniform(-1.0, 1.0);
  TruncatedSeq coeffs(std::move(c));
  GridFunction f = synthesize(coeffs, BasisSpec(BasisFamily::TrigReal, coeffs.size()), std::move(grid));
  return {std::move(coeffs), std::move(f)};
}

}  // namespace strongfact
