// Acceptance criteria, one PASS/FAIL line each.
// Usage: acceptance [--criterion k]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "oracles.hpp"
#include "strongfact/basis.hpp"
#include "strongfact/certifier.hpp"
#include "strongfact/cli.hpp"
#include "strongfact/factorization.hpp"
#include "strongfact/representing.hpp"
#include "strongfact/seq_norms.hpp"

using namespace strongfact;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double naive_lp(const std::vector<double>& x, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (double v : x) s += std::pow(std::abs(v), p);
  return std::pow(s, 1.0 / p);
}

// Gauss rule from a symmetric tridiagonal Jacobi matrix (Golub-Welsch); mu0 is the total weight.
void golub_welsch(const std::vector<double>& diag, const std::vector<double>& off, double mu0, std::vector<double>& x,
                  std::vector<double>& w) {
  const int n = static_cast<int>(diag.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) J(k, k) = diag[k];
  for (int k = 0; k + 1 < n; ++k) J(k, k + 1) = J(k + 1, k) = off[k];
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  x.resize(n);
  w.resize(n);
  for (int k = 0; k < n; ++k) {
    x[k] = es.eigenvalues()(k);
    w[k] = mu0 * es.eigenvectors()(0, k) * es.eigenvectors()(0, k);
  }
}

void legendre_rule(int n, std::vector<double>& x, std::vector<double>& w) {
  std::vector<double> d(n, 0.0), o(n - 1);
  for (int k = 1; k < n; ++k) o[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  golub_welsch(d, o, 2.0, x, w);
}

// Composite rule on [a, b] with `panels` Gauss-Legendre panels of `order` nodes.
void composite(double a, double b, int panels, int order, std::vector<double>& x, std::vector<double>& w) {
  std::vector<double> gx, gw;
  legendre_rule(order, gx, gw);
  x.clear();
  w.clear();
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    for (int k = 0; k < order; ++k) {
      x.push_back(a + h * (p + 0.5 * (gx[k] + 1.0)));
      w.push_back(0.5 * h * gw[k]);
    }
  }
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  std::mt19937_64 gen(2024);
  int cases[3] = {0, 0, 0};
  for (int t = 0; t < 200; ++t) {
    const bool p_inf = t % 10 == 9;
    auto random_rational = [&] {
      const std::int64_t den = 1 + static_cast<std::int64_t>(gen() % 6);
      return Exponent::rational(den + static_cast<std::int64_t>(gen() % 20), den);
    };
    const Exponent p = p_inf ? Exponent::infinity() : random_rational();
    const Exponent q = random_rational();
    const Exponent s = multiplier_exponent(p, q);
    const double pv = p.value(), qv = q.value();
    if (pv <= qv) {
      ++cases[2];
      if (!s.is_infinite()) o.fail("case p <= q not infinite for p = " + p.to_string() + ", q = " + q.to_string());
    } else if (p_inf) {
      ++cases[1];
      if (!(s == q)) o.fail("case p = inf did not return q");
    } else {
      ++cases[0];
      const long double want = (long double)pv * qv / ((long double)pv - qv);
      if (std::abs((double)want - s.value()) > 1e-12 * s.value() || !s.is_exact())
        o.fail("pq/(p-q) mismatch at p = " + p.to_string() + ", q = " + q.to_string());
    }
    if (!(multiplier_exponent(p, Exponent::rational(1)) == conjugate(p))) o.fail("s_{p,1} != p' at p = " + p.to_string());

    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<double> h(64), f(64), hf(64);
    for (int k = 0; k < 64; ++k) {
      h[k] = u(gen);
      f[k] = u(gen);
      hf[k] = h[k] * f[k];
    }
    const double lhs = naive_lp(hf, qv);
    const double rhs = naive_lp(h, s.value()) * naive_lp(f, pv);
    const double sut_lhs = lp_norm(TruncatedSeq(hf), q);
    const double sut_rhs = lp_norm(TruncatedSeq(h), s) * lp_norm(TruncatedSeq(f), p);
    if (lhs > rhs * (1 + 1e-12) || sut_lhs > sut_rhs * (1 + 1e-12)) o.fail("Holder bound violated");
    if (std::abs(sut_lhs - lhs) > 1e-12 * lhs) o.fail("lp_norm disagrees with the direct sum");
  }
  o.detail = o.ok ? "200 pairs (cases " + std::to_string(cases[0]) + "/" + std::to_string(cases[1]) + "/" +
                        std::to_string(cases[2]) + ")"
                  : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  constexpr std::size_t N = 8;
  double worst_sut = 0.0, worst_oracle = 0.0;
  for (auto fam : {BasisFamily::TrigReal, BasisFamily::Legendre, BasisFamily::Chebyshev1, BasisFamily::Chebyshev2,
                   BasisFamily::Laguerre}) {
    const BasisSpec spec(fam, N);
    // oracle quadrature, independent of the library's grids
    std::vector<double> x, w;
    std::function<double(double)> weight = [](double) { return 1.0; };
    switch (fam) {
      case BasisFamily::TrigReal: composite(-kPi, kPi, 16, 20, x, w); break;
      case BasisFamily::Legendre: legendre_rule(20, x, w); break;
      case BasisFamily::Chebyshev1:
      case BasisFamily::Chebyshev2: {
        // x = cos(theta): dx = sin(theta) dtheta; weight folded in below
        std::vector<double> th, tw;
        composite(0.0, kPi, 4, 20, th, tw);
        for (std::size_t k = 0; k < th.size(); ++k) {
          x.push_back(std::cos(th[k]));
          const double s = std::sin(th[k]);
          w.push_back(fam == BasisFamily::Chebyshev1 ? tw[k] : tw[k] * s * s);
        }
        break;
      }
      case BasisFamily::Laguerre: {
        std::vector<double> d(40), off(39);
        for (int k = 0; k < 40; ++k) d[k] = 2.0 * k + 1.0;
        for (int k = 1; k < 40; ++k) off[k - 1] = k;
        golub_welsch(d, off, 1.0, x, w);
        break;
      }
    }
    for (std::size_t i = 1; i <= N; ++i) {
      for (std::size_t j = 1; j <= N; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) s += w[k] * eval_basis(spec, i, x[k]) * eval_basis(spec, j, x[k]);
        worst_oracle = std::max(worst_oracle, std::abs(s - (i == j ? 1.0 : 0.0)));
      }
      const GridFunction phi = GridFunction::sample(spec.default_grid(), [&](double t) { return eval_basis(spec, i, t); });
      const TruncatedSeq row = fourier_coeffs(phi, spec, N);
      for (std::size_t j = 1; j <= N; ++j) worst_sut = std::max(worst_sut, std::abs(row[j - 1] - (i == j ? 1.0 : 0.0)));
    }
  }
  if (worst_oracle > 1e-8) o.fail("oracle Gram deviation " + std::to_string(worst_oracle));
  if (worst_sut > 1e-8) o.fail("library Gram deviation " + std::to_string(worst_sut));
  char buf[128];
  std::snprintf(buf, sizeof buf, "max Gram deviation %.2e (library), %.2e (oracle quadrature)", worst_sut, worst_oracle);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome criterion3() {
  Outcome o;
  const GridPtr grid = BasisSpec(BasisFamily::TrigReal, 1).default_grid();
  std::vector<double> qx, qw;
  composite(-kPi, kPi, 40, 24, qx, qw);
  std::mt19937_64 gen(33);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + gen() % 32;
    const auto poly = random_trig_polynomial(d, gen(), grid);
    const BasisSpec trig(BasisFamily::TrigReal, 2 * d + 1);
    const TruncatedSeq c = fourier_coeffs(poly.f, trig, 2 * d + 1);
    const double l2 = lp_norm(c, Exponent::rational(2));
    const double f2 = lp_function_norm(poly.f, Exponent::rational(2));
    // oracle: orthonormality makes ||f||_2 the Euclidean norm of the generating coefficients
    const double oracle2 = naive_lp(poly.coeffs.vec(), 2.0);
    worst = std::max({worst, std::abs(l2 - f2), std::abs(f2 - oracle2)});
    if (std::abs(l2 - f2) > 1e-9) o.fail("Parseval off by " + std::to_string(std::abs(l2 - f2)));
    if (std::abs(f2 - oracle2) > 1e-9) o.fail("L^2 norm disagrees with the coefficient oracle");
    for (double r : {4.0 / 3.0, 1.5}) {
      // oracle L^r norm on an independent composite rule
      double s = 0.0;
      for (std::size_t k = 0; k < qx.size(); ++k) {
        double v = 0.0;
        for (std::size_t n = 1; n <= 2 * d + 1; ++n) v += poly.coeffs[n - 1] * eval_basis(trig, n, qx[k]);
        s += qw[k] * std::pow(std::abs(v), r);
      }
      const double fr_oracle = std::pow(s, 1.0 / r);
      const Exponent re = r < 1.4 ? Exponent::rational(4, 3) : Exponent::rational(3, 2);
      const double lhs = lp_norm(c, conjugate(re));
      if (lhs > lp_function_norm(poly.f, re) + 1e-9 || lhs > fr_oracle + 1e-9) o.fail("Hausdorff-Young violated");
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "100 polynomials, max Parseval deviation %.2e", worst);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome criterion4() {
  Outcome o;
  constexpr std::size_t N = 256;
  const MatrixOp C = cesaro_matrix(N);
  std::mt19937_64 gen(44);
  std::uniform_real_distribution<double> u(0, 1);
  int violations = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<double> x(N), cx(N);
    for (double& v : x) v = u(gen);
    double run = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      run += x[i];
      cx[i] = run / static_cast<double>(i + 1);
    }
    const TruncatedSeq xs(x), sut = apply(C, xs);
    for (double p : {4.0 / 3.0, 2.0, 3.0}) {
      const double pd = p / (p - 1.0);
      if (naive_lp(cx, p) > pd * naive_lp(x, p)) ++violations;
      const Exponent pe = p < 1.5 ? Exponent::rational(4, 3) : Exponent::rational(static_cast<int>(p));
      if (lp_norm(sut, pe) > conjugate(pe).value() * lp_norm(xs, pe)) ++violations;
    }
  }
  if (violations) o.fail(std::to_string(violations) + " Hardy violations");

  Eigen::MatrixXd Cd = Eigen::MatrixXd::Zero(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j <= i; ++j) Cd(i, j) = 1.0 / static_cast<double>(i + 1);
  const double exact = std::sqrt(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(Cd.transpose() * Cd).eigenvalues().maxCoeff());
  const double est = operator_norm_estimate(C, 16, 0);
  char buf[200];
  std::snprintf(buf, sizeof buf, "p=2 norm estimate %.10f (dense eigen-solve %.10f); required window [1.9, 2]", est, exact);
  if (!(est >= 1.9 && est <= 2.0)) o.fail(std::string("0 Hardy violations, but ") + buf);
  if (std::abs(est - exact) > 1e-8 * exact) o.fail("estimate disagrees with the dense eigen-solve");
  if (o.ok) o.detail = std::string("0 Hardy violations; ") + buf;
  return o;
}

Outcome criterion5() {
  Outcome o;
  constexpr std::size_t N = 128;
  const Exponent P = Exponent::rational(4), Q = Exponent::rational(2), R = Exponent::rational(3);
  std::mt19937_64 gen(55);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  std::size_t perturbations = 0;

  auto build = [&](const std::vector<double>& g, const std::vector<double>& h) {
    std::vector<double> a(N * N, 0.0);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j <= i; ++j) a[i * N + j] = g[i] * h[j] / static_cast<double>(i + 1);
    return MatrixOp(N, a);
  };
  auto random_vec = [&] {
    std::vector<double> v(N);
    for (std::size_t k = 0; k < N; ++k) v[k] = u(gen) * std::pow(static_cast<double>(k + 1), -0.5 * u(gen));
    return v;
  };

  for (int t = 0; t < 50; ++t) {
    const auto g = random_vec(), h = random_vec();
    const MatrixOp A = build(g, h);
    const TruncatedSeq hs(h);
    const Certificate c = cesaro_factor_check(A, hs, P, Q, R);
    if (c.verdict != Verdict::Factors) {
      o.fail("pair " + std::to_string(t) + " not FACTORS");
      continue;
    }
    for (std::size_t i = 0; i < N; ++i)
      if (std::abs((*c.g)[i] - g[i]) > 1e-12) o.fail("g not recovered within 1e-12 in pair " + std::to_string(t));

    std::vector<std::pair<std::size_t, std::size_t>> pos;
    if (t == 0) {
      for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = i + 1; j <= N; ++j) pos.emplace_back(i, j);
    } else {
      pos = {{1, 2}, {1, N}, {N - 1, N}};
      for (int k = 0; k < 64; ++k) {
        const std::size_t i = 1 + gen() % (N - 1);
        pos.emplace_back(i, i + 1 + gen() % (N - i));
      }
    }
    for (auto [i, j] : pos) {
      ++perturbations;
      if (cesaro_factor_check(A.with_entry(i, j, A(i, j) + 1e-3), hs, P, Q, R, 1e-6).verdict != Verdict::DoesNotFactor)
        o.fail("perturbation at (" + std::to_string(i) + "," + std::to_string(j) + ") not detected");
    }
  }
  for (std::size_t j0 : {2u, 3u}) {
    for (int t = 0; t < 10; ++t) {
      auto g = random_vec(), h = random_vec();
      for (std::size_t k = 0; k + 1 < j0; ++k) h[k] = 0.0;
      const MatrixOp A = build(g, h);
      const Certificate c = cesaro_factor_check_j0(A, TruncatedSeq(h), P, Q, R);
      if (c.verdict != Verdict::Factors || c.j0 != j0) o.fail("j0 = " + std::to_string(j0) + " not FACTORS");
      for (std::size_t i = j0; i <= N; ++i)
        if (std::abs((*c.g)[i - 1] - g[i - 1]) > 1e-12) o.fail("j0 g not recovered");
      for (int k = 0; k < 64; ++k) {
        const std::size_t i = 1 + gen() % (N - 1), j = i + 1 + gen() % (N - i);
        ++perturbations;
        if (cesaro_factor_check_j0(A.with_entry(i, j, A(i, j) + 1e-3), TruncatedSeq(h), P, Q, R, 1e-6).verdict !=
            Verdict::DoesNotFactor)
          o.fail("j0 perturbation not detected");
      }
    }
  }
  if (o.ok) o.detail = "50 pairs + 20 shifted pairs recovered; " + std::to_string(perturbations) + " perturbations flipped";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 gen(66);
  std::uniform_real_distribution<double> u(0.5, 1.5), v(-1, 1);
  int instances = 0;
  auto agree = [](double a, double b) {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    return std::abs(a - b) <= 1e-12 * std::max(std::abs(b), 1e-300);
  };
  for (const auto& s : {Exponent::rational(2), Exponent::rational(3), Exponent::rational(4, 3), Exponent::infinity()}) {
    const double sd = conjugate(s).value();
    for (std::size_t n = 1; n <= 4; ++n) {
      for (int rep = 0; rep < 3; ++rep) {
        std::vector<double> g(n), h(n);
        for (std::size_t k = 0; k < n; ++k) {
          g[k] = u(gen);
          h[k] = u(gen);
        }
        const MatrixOp A = diagonal_sandwich(TruncatedSeq(g), cesaro_matrix(n), TruncatedSeq(h));
        const std::vector<double> dense(A.data().begin(), A.data().end());
        const double brute = oracle::brute_cesaro(dense, n, h, sd, n, n);
        const auto res = certify_inequality_cesaro(A, TruncatedSeq(h), s, 64, rep);

        // the heuristic path on the same instance
        PatternProblem pp;
        pp.rows = pp.cols = n;
        pp.lhs = dense;
        pp.kernel.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j <= i; ++j) pp.kernel[i * n + j] = h[j] / static_cast<double>(i + 1);
        pp.dual_exponent = conjugate(s);
        CertifierOptions heur;
        heur.exhaustive_limit = 0;
        heur.seed = rep;
        const auto hres = certify_pattern_problem(pp, heur);

        ++instances;
        if (!res.exhaustive || !agree(res.vertex_c_hat, brute)) o.fail("exhaustive C_hat differs from brute force");
        if (!agree(hres.vertex_c_hat, brute)) o.fail("heuristic C_hat differs from brute force at n = " + std::to_string(n));
        if (res.c_hat > lp_norm(TruncatedSeq(g), s) + 1e-9) o.fail("C_hat exceeds ||g||_s");

        // a non-factoring instance of the same size, compared on vertices
        std::vector<double> noise(n * n);
        for (double& x : noise) x = v(gen);
        const MatrixOp B(n, noise);
        const auto nres = certify_inequality_cesaro(B, TruncatedSeq(h), s, 64, rep);
        ++instances;
        if (!agree(nres.vertex_c_hat, oracle::brute_cesaro(noise, n, h, sd, n, n)))
          o.fail("non-factoring instance differs from brute force");
      }
    }
  }
  const auto id = certify_inequality_cesaro(MatrixOp::identity(4), TruncatedSeq::constant(4, 1.0), Exponent::rational(2), 64, 0);
  if (!id.refuted || !(id.rhs <= 1e-12) || !(id.lhs > 0.0)) o.fail("identity not refuted");
  // recompute the refuting pattern's sides independently
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t i = 1; i <= 4; ++i) {
    double us = 0.0;
    for (std::size_t j = 1; j <= 4; ++j) {
      if (std::abs(id.pattern(i, j)) > 1.0) o.fail("pattern leaves the unit ball");
      if (i == j) lhs += id.pattern(i, j);
      if (j <= i) us += id.pattern(i, j);
    }
    rhs += std::pow(std::abs(us) / static_cast<double>(i), 2.0);
  }
  if (!(lhs > 0.0 && std::sqrt(rhs) <= 1e-12)) o.fail("refuting pattern does not check out");
  if (o.ok) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d instances agree with brute force; identity refuted with LHS = %.3f, RHS = %.1e",
                  instances, lhs, std::sqrt(rhs));
    o.detail = buf;
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 gen(77);
  std::uniform_real_distribution<double> u(-1, 1);
  double worst = 0.0;
  for (const auto& pe : {Exponent::rational(4, 3), Exponent::rational(3, 2)}) {
    const double p = pe.value();
    for (int t = 0; t < 100; ++t) {
      const std::size_t N = 1 + gen() % 200;
      std::vector<double> x(N), gamma(N), W(N), gx(N);
      double oracle = 0.0;
      for (std::size_t k = 0; k < N; ++k) {
        const double n = static_cast<double>(k + 1);
        x[k] = u(gen);
        gamma[k] = std::pow(1.0 / (n + 1.0), (2.0 - p) / p);
        W[k] = 1.0 / std::pow(n + 1.0, 2.0 - p);
        gx[k] = gamma[k] * x[k];
        oracle += std::pow(std::abs(x[k]), p) / std::pow(n + 1.0, 2.0 - p);
      }
      oracle = std::pow(oracle, 1.0 / p);
      const double a = lp_norm(TruncatedSeq(gx), pe);
      const double b = weighted_lp_norm(TruncatedSeq(x), pe, TruncatedSeq(W));
      const double d = std::max(std::abs(a - b), std::abs(b - oracle)) / b;
      worst = std::max(worst, d);
      if (d > 1e-12) o.fail("isometry off by " + std::to_string(d));
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "200 vectors, max relative gap %.2e", worst);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 gen(88);
  std::uniform_real_distribution<double> u(-1, 1);
  constexpr long M = 256;
  int violations = 0;
  double worst = 0.0;
  for (double p : {1.1, 1.25, 1.5, 1.75, 1.9}) {
    const double pd = p / (p - 1.0);
    for (int t = 0; t < 100; ++t) {
      std::vector<double> lam(2 * M + 1);
      for (double& v : lam) v = u(gen) * (gen() % 4 == 0 ? 0.0 : 1.0);
      // oracle: blocks {0}, {1,2}, {3,4}, {5..8}, ..., mirrored
      double outer = std::pow(std::abs(lam[M]), 2.0);
      for (long lo = 1, hi = 2; lo <= M; lo = hi + 1, hi *= 2) {
        double pos = 0.0, neg = 0.0;
        for (long k = lo; k <= std::min(hi, M); ++k) {
          pos += std::pow(std::abs(lam[M + k]), pd);
          neg += std::pow(std::abs(lam[M - k]), pd);
        }
        outer += std::pow(pos, 2.0 / pd) + std::pow(neg, 2.0 / pd);
      }
      const double mixed_oracle = std::sqrt(outer);
      const TruncatedSeq ls(lam, IndexDomain::ZSym);
      const double mixed = kellogg_norm(ls, Exponent::real(pd), Exponent::rational(2));
      const double plain = lp_norm(ls, Exponent::real(pd));
      worst = std::max(worst, std::abs(mixed - mixed_oracle) / mixed_oracle);
      if (plain > mixed * (1 + 1e-12)) ++violations;
      if (std::abs(mixed - mixed_oracle) > 1e-12 * mixed_oracle) o.fail("mixed norm disagrees with the block oracle");
    }
  }
  if (violations) o.fail(std::to_string(violations) + " embedding violations");
  char buf[96];
  std::snprintf(buf, sizeof buf, "500 sequences, 0 violations, block oracle gap %.1e", worst);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome criterion9() {
  Outcome o;
  constexpr std::size_t N = 16;
  const BasisSpec spec(BasisFamily::Chebyshev1, N);
  // h = w^{1/2} written out here, not taken from the library
  auto h = [](double x) { return std::pow(1.0 - x * x, -0.25); };
  auto T = [&](const GridFunction& f) { return fourier_coeffs(f, spec, N); };
  const Certificate good = verify_representing(T, spec, h, TruncatedSeq::constant(N, 1.0), 20, N, 1e-6, 9);
  auto Tp = [&](const GridFunction& f) {
    auto a = fourier_coeffs(f, spec, N).vec();
    std::swap(a[2], a[5]);
    return TruncatedSeq(a);
  };
  const Certificate bad = verify_representing(Tp, spec, h, TruncatedSeq::constant(N, 1.0), 20, N, 1e-6, 9);
  if (good.verdict != Verdict::Factors) o.fail("Chebyshev-I construction rejected, residual " + std::to_string(good.residual));
  if (bad.verdict != Verdict::DoesNotFactor) o.fail("permuted variant accepted");
  char buf[128];
  std::snprintf(buf, sizeof buf, "residual %.2e; permuted variant residual %.2e", good.residual, bad.residual);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome criterion10() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "strongfact_acceptance";
  fs::create_directories(dir);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  const std::vector<std::vector<std::string>> jobs = {
      {"check-cesaro", "--gen", "rank-one", "--g", "harmonic", "--h", "random", "--N", "64", "--p", "2", "--q", "2", "--r", "2"},
      {"certify", "--gen", "random-lower", "--h", "random", "--N", "10", "--q", "2", "--r", "3", "--patterns", "16"},
      {"verify-representing", "--basis", "chebyshev1", "--samples", "5"},
  };
  std::ostringstream sink;
  struct Redirect {
    std::streambuf* old;
    ~Redirect() { std::cout.rdbuf(old); }
  } guard{std::cout.rdbuf(sink.rdbuf())};
  int k = 0;
  for (const auto& base : jobs) {
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
      std::vector<std::string> args = {"strongfact"};
      args.insert(args.end(), base.begin(), base.end());
      const fs::path out = dir / ("job" + std::to_string(k) + "_" + std::to_string(rep) + ".json");
      for (const char* a : {"--seed", "1234", "--no-timestamp", "--out"}) args.emplace_back(a);
      args.push_back(out.string());
      std::vector<char*> argv;
      for (auto& a : args) argv.push_back(a.data());
      cli_main(static_cast<int>(argv.size()), argv.data());
      const std::string text = slurp(out);
      if (text.empty()) o.fail("job " + std::to_string(k) + " wrote no certificate");
      if (rep == 0) first = text;
      else if (text != first) o.fail("job " + std::to_string(k) + " not byte-identical");
    }
    ++k;
  }
  if (o.ok) o.detail = "3 jobs x 2 runs byte-identical";
  return o;
}

struct Criterion {
  const char* title;
  double budget_s;
  Outcome (*fn)();
};

const Criterion kCriteria[] = {
    {"exponent calculus", 1.0, criterion1},
    {"orthonormality", 5.0, criterion2},
    {"Parseval / Hausdorff-Young", 10.0, criterion3},
    {"Hardy's inequality", 5.0, criterion4},
    {"Cesaro round trip", 5.0, criterion5},
    {"certifier vs brute force", 30.0, criterion6},
    {"Hardy-Littlewood isometry", 1.0, criterion7},
    {"Kellogg embedding", 1.0, criterion8},
    {"representing operator", 10.0, criterion9},
    {"CLI determinism", 1.0, criterion10},
};

bool run_one(int k) {
  const Criterion& c = kCriteria[k - 1];
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.fn();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > c.budget_s) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "runtime %.2f s over the %.0f s budget", secs, c.budget_s);
    o.fail(buf);
  }
  std::printf("criterion %2d %-28s %s  (%.2f s) %s\n", k, c.title, o.ok ? "PASS" : "FAIL", secs, o.detail.c_str());
  std::fflush(stdout);
  return o.ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
    const int k = std::atoi(argv[2]);
    if (k < 1 || k > 10) {
      std::fprintf(stderr, "criterion must be 1..10\n");
      return 64;
    }
    return run_one(k) ? 0 : 1;
  }
  if (argc != 1) {
    std::fprintf(stderr, "usage: acceptance [--criterion k]\n");
    return 64;
  }
  bool all = true;
  for (int k = 1; k <= 10; ++k) all = run_one(k) && all;
  return all ? 0 : 1;
}
