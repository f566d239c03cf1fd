#include "strongfact/suites.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "strongfact/basis.hpp"
#include "strongfact/error.hpp"
#include "strongfact/factorization.hpp"
#include "strongfact/matrix_op.hpp"
#include "strongfact/representing.hpp"
#include "strongfact/rng.hpp"
#include "strongfact/seq_norms.hpp"

namespace strongfact {

void SuiteResult::record(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failures;
  passed = false;
  if (messages.size() < 10) messages.push_back(what);
}

namespace {

SuiteResult hardy(std::uint64_t seed) {
  SuiteResult r;
  r.name = "hardy";
  constexpr std::size_t N = 256;
  const MatrixOp C = cesaro_matrix(N);
  const Exponent ps[] = {Exponent::rational(4, 3), Exponent::rational(2), Exponent::rational(3)};
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    std::vector<double> v(N);
    for (double& x : v) x = rng.uniform();
    const TruncatedSeq x(std::move(v));
    const TruncatedSeq cx = apply(C, x);
    for (const auto& p : ps) {
      const double lhs = lp_norm(cx, p);
      const double rhs = conjugate(p).value() * lp_norm(x, p);
      worst = std::max(worst, lhs / rhs);
      r.record(lhs <= rhs, "sample " + std::to_string(t) + ", p = " + p.to_string() + ": " + std::to_string(lhs) +
                               " > " + std::to_string(rhs));
    }
  }
  r.metrics["worst_ratio_to_constant"] = worst;
  r.metrics["norm_estimate_p2"] = operator_norm_estimate(C, 16, seed);
  return r;
}

SuiteResult kellogg(std::uint64_t seed) {
  SuiteResult r;
  r.name = "kellogg";
  constexpr std::size_t M = 256;
  const Exponent ps[] = {Exponent::rational(6, 5), Exponent::rational(3, 2), Exponent::rational(9, 5)};
  const Exponent two = Exponent::rational(2);
  Rng rng(seed);
  for (const auto& p : ps) {
    const Exponent pd = conjugate(p);
    for (int t = 0; t < 100; ++t) {
      std::vector<double> v(2 * M + 1);
      for (double& x : v) x = rng.uniform(-1.0, 1.0);
      const TruncatedSeq lambda(std::move(v), IndexDomain::ZSym);
      const double a = lp_norm(lambda, pd);
      const double b = kellogg_norm(lambda, pd, two);
      r.record(a <= b * (1.0 + 1e-12), "p = " + p.to_string() + ", sample " + std::to_string(t));
    }
  }
  return r;
}

SuiteResult hardy_littlewood(std::uint64_t seed) {
  SuiteResult r;
  r.name = "hardy-littlewood";
  constexpr std::size_t N = 64;
  Rng rng(seed);
  for (const auto& p : {Exponent::rational(4, 3), Exponent::rational(3, 2)}) {
    const double pv = p.value();
    std::vector<double> gamma(N), W(N);
    for (std::size_t k = 0; k < N; ++k) {
      const double n = static_cast<double>(k + 1);
      gamma[k] = std::pow(1.0 / (n + 1.0), (2.0 - pv) / pv);
      W[k] = 1.0 / std::pow(n + 1.0, 2.0 - pv);
    }
    const TruncatedSeq g(gamma), w(W);
    for (int t = 0; t < 100; ++t) {
      std::vector<double> v(N);
      for (double& x : v) x = rng.uniform(-1.0, 1.0);
      const TruncatedSeq x(std::move(v));
      const double a = lp_norm(g.times(x), p);
      const double b = weighted_lp_norm(x, p, w);
      r.record(std::abs(a - b) <= 1e-12 * b, "p = " + p.to_string() + ", sample " + std::to_string(t));
    }

    // M_gamma composed with the coefficient map represents through the trig basis with h = 1.
    const BasisSpec trig(BasisFamily::TrigReal, 16);
    const TruncatedSeq g16(std::vector<double>(gamma.begin(), gamma.begin() + 16));
    const Certificate c = verify_representing(
        [&](const GridFunction& f) { return g16.times(fourier_coeffs(f, trig, 16)); }, trig,
        [](double) { return 1.0; }, g16, 10, 16, kQuadratureTolerance, seed);
    r.record(c.verdict == Verdict::Factors, "representing check for p = " + p.to_string());
  }
  return r;
}

TruncatedSeq random_positive(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(0.5, 1.5) / std::sqrt(static_cast<double>(&x - v.data() + 1));
  return TruncatedSeq(std::move(v));
}

SuiteResult roundtrip(std::uint64_t seed) {
  SuiteResult r;
  r.name = "roundtrip";
  constexpr std::size_t N = 128;
  const Exponent p = Exponent::rational(4), q = Exponent::rational(2), rr = Exponent::rational(3);
  const MatrixOp C = cesaro_matrix(N);
  Rng rng(seed);
  for (int t = 0; t < 50; ++t) {
    const TruncatedSeq g = random_positive(rng, N);
    const TruncatedSeq h = random_positive(rng, N);
    const MatrixOp A = diagonal_sandwich(g, C, h);
    const Certificate c = cesaro_factor_check(A, h, p, q, rr);
    double err = 0.0;
    if (c.g) {
      for (std::size_t i = 0; i < N; ++i) err = std::max(err, std::abs((*c.g)[i] - g[i]));
    }
    r.record(c.verdict == Verdict::Factors && err <= 1e-12, "pair " + std::to_string(t) + " not recovered");

    const std::size_t positions = t == 0 ? N * (N - 1) / 2 : 64;
    for (std::size_t k = 0; k < positions; ++k) {
      std::size_t i, j;
      if (t == 0) {
        // k-th strictly upper entry in row-major order
        i = 1;
        std::size_t rem = k;
        while (rem >= N - i) rem -= N - i++;
        j = i + 1 + rem;
      } else {
        i = 1 + rng.below(N - 1);
        j = i + 1 + rng.below(N - i);
      }
      const Certificate pc = cesaro_factor_check(A.with_entry(i, j, A(i, j) + 1e-3), h, p, q, rr, 1e-6);
      r.record(pc.verdict == Verdict::DoesNotFactor,
               "perturbation at (" + std::to_string(i) + ", " + std::to_string(j) + ") not detected");
    }
  }

  for (std::size_t j0 : {2, 3}) {
    for (int t = 0; t < 10; ++t) {
      std::vector<double> hv = random_positive(rng, N).vec();
      std::fill(hv.begin(), hv.begin() + static_cast<std::ptrdiff_t>(j0 - 1), 0.0);
      const TruncatedSeq h(hv);
      const TruncatedSeq g = random_positive(rng, N);
      const MatrixOp A = diagonal_sandwich(g, C, h);
      const Certificate c = cesaro_factor_check_j0(A, h, p, q, rr);
      double err = 0.0;
      for (std::size_t i = j0; i <= N; ++i) err = std::max(err, std::abs((*c.g)[i - 1] - g[i - 1]));
      r.record(c.verdict == Verdict::Factors && c.j0 == j0 && err <= 1e-12,
               "j0 = " + std::to_string(j0) + " pair " + std::to_string(t) + " not recovered");
      for (int k = 0; k < 32; ++k) {
        const std::size_t i = 1 + rng.below(N - 1);
        const std::size_t j = i + 1 + rng.below(N - i);
        const Certificate pc = cesaro_factor_check_j0(A.with_entry(i, j, A(i, j) + 1e-3), h, p, q, rr, 1e-6);
        r.record(pc.verdict == Verdict::DoesNotFactor, "j0 perturbation not detected");
      }
    }
  }
  return r;
}

SuiteResult orthonormality(std::uint64_t) {
  SuiteResult r;
  r.name = "orthonormality";
  constexpr std::size_t N = 8;
  for (auto fam : {BasisFamily::TrigReal, BasisFamily::Legendre, BasisFamily::Chebyshev1, BasisFamily::Chebyshev2,
                   BasisFamily::Laguerre}) {
    const BasisSpec spec(fam, N);
    const GridPtr grid = spec.default_grid();
    double dev = 0.0;
    for (std::size_t i = 1; i <= N; ++i) {
      const GridFunction phi = GridFunction::sample(grid, [&](double x) { return eval_basis(spec, i, x); });
      const TruncatedSeq row = fourier_coeffs(phi, spec, N);
      for (std::size_t j = 1; j <= N; ++j) dev = std::max(dev, std::abs(row[j - 1] - (i == j ? 1.0 : 0.0)));
    }
    r.metrics[std::string(to_string(fam))] = dev;
    r.record(dev <= 1e-8, std::string(to_string(fam)) + ": Gram deviation " + std::to_string(dev));
  }
  return r;
}

SuiteResult parseval(std::uint64_t seed) {
  SuiteResult r;
  r.name = "parseval";
  const BasisSpec trig(BasisFamily::TrigReal, 65);
  const GridPtr grid = trig.default_grid();
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t degree = 1 + rng.below(32);
    const auto poly = random_trig_polynomial(degree, rng.next_u64(), grid);
    const TruncatedSeq c = fourier_coeffs(poly.f, trig, 2 * degree + 1);
    const double l2 = lp_norm(c, Exponent::rational(2));
    const double f2 = lp_function_norm(poly.f, Exponent::rational(2));
    worst = std::max(worst, std::abs(l2 - f2));
    r.record(std::abs(l2 - f2) <= 1e-9, "Parseval, sample " + std::to_string(t));
    for (const auto& rr : {Exponent::rational(4, 3), Exponent::rational(3, 2)}) {
      r.record(lp_norm(c, conjugate(rr)) <= lp_function_norm(poly.f, rr) + 1e-9,
               "Hausdorff-Young r = " + rr.to_string() + ", sample " + std::to_string(t));
    }
  }
  r.metrics["parseval_max_deviation"] = worst;
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"hardy", "kellogg", "hardy-littlewood", "roundtrip", "orthonormality", "parseval"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "hardy") return hardy(seed);
  if (name == "kellogg") return kellogg(seed);
  if (name == "hardy-littlewood") return hardy_littlewood(seed);
  if (name == "roundtrip") return roundtrip(seed);
  if (name == "orthonormality") return orthonormality(seed);
  if (name == "parseval") return parseval(seed);
  throw Error(ErrorCode::SpecError, "unknown suite '" + name + "'");
}

std::string to_json(const SuiteResult& r, int indent) {
  nlohmann::ordered_json j;
  j["suite"] = r.name;
  j["passed"] = r.passed;
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  j["messages"] = r.messages;
  j["metrics"] = r.metrics;
  return j.dump(indent);
}

}  // namespace strongfact
