#include "strongfact/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "strongfact/error.hpp"
#include "strongfact/rng.hpp"
#include "strongfact/seq_norms.hpp"

namespace strongfact {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

struct Thresholds {
  double rhs_zero;  // RHS at or below this counts as zero
  double lhs_min;   // LHS must exceed this for a zero-RHS pattern to refute
};

double ratio(double lhs, double rhs, const Thresholds& t) {
  if (rhs <= t.rhs_zero) return lhs > t.lhs_min ? kInf : 0.0;
  return lhs / rhs;
}

class Evaluator {
 public:
  Evaluator(const PatternProblem& p, Thresholds t) : p_(p), t_(t), s_(p.dual_exponent.value()) {}

  struct Value {
    double lhs;
    double rhs;
    double ratio;
  };

  Value operator()(const std::vector<double>& r) const {
    double lhs = 0.0;
    std::vector<double> u(p_.rows, 0.0);
    for (std::size_t i = 0; i < p_.rows; ++i) {
      double ui = 0.0;
      for (std::size_t j = 0; j < p_.cols; ++j) {
        const std::size_t k = i * p_.cols + j;
        lhs += p_.lhs[k] * r[k];
        ui += p_.kernel[k] * r[k];
      }
      u[i] = ui;
    }
    const double rhs = lp_norm(TruncatedSeq(std::move(u)), p_.dual_exponent);
    return {lhs, rhs, ratio(lhs, rhs, t_)};
  }

  // Greedy single-entry flips; the sides are updated incrementally within a pass.
  // Returns the number of evaluated candidates.
  std::size_t ascend(std::vector<double>& r, std::size_t max_passes) const {
    std::size_t count = 0;
    for (std::size_t pass = 0; pass < max_passes; ++pass) {
      double lhs = 0.0;
      std::vector<double> u(p_.rows, 0.0);
      for (std::size_t k = 0; k < r.size(); ++k) {
        lhs += p_.lhs[k] * r[k];
        u[k / p_.cols] += p_.kernel[k] * r[k];
      }
      double sum = 0.0;
      for (double ui : u) sum += std::pow(std::abs(ui), s_);
      double current = ratio(lhs, std::pow(sum, 1.0 / s_), t_);
      if (std::isinf(current)) return count;

      bool improved = false;
      for (std::size_t k = 0; k < r.size(); ++k) {
        const std::size_t i = k / p_.cols;
        const double new_lhs = lhs - 2.0 * p_.lhs[k] * r[k];
        const double new_ui = u[i] - 2.0 * p_.kernel[k] * r[k];
        const double new_sum =
            std::max(0.0, sum - std::pow(std::abs(u[i]), s_) + std::pow(std::abs(new_ui), s_));
        const double cand = ratio(new_lhs, std::pow(new_sum, 1.0 / s_), t_);
        ++count;
        if (cand > current * (1.0 + 1e-14) + 1e-300) {
          r[k] = -r[k];
          lhs = new_lhs;
          u[i] = new_ui;
          sum = new_sum;
          current = cand;
          improved = true;
        }
      }
      if (!improved) break;
    }
    return count;
  }

 private:
  const PatternProblem& p_;
  Thresholds t_;
  double s_;
};

// max sum_j a_j r_j subject to sum_j k_j r_j = 0, |r_j| <= 1.
// The value is min over lambda of sum_j |a_j - lambda k_j|, attained at a
// breakpoint lambda = a_j / k_j; the primal pattern takes sign(a_j - lambda k_j)
// off the tight set and spreads the balancing mass over it.
double solve_row_lp(const double* a, const double* k, std::size_t m, double* r) {
  const double kmax = [&] {
    double v = 0.0;
    for (std::size_t j = 0; j < m; ++j) v = std::max(v, std::abs(k[j]));
    return v;
  }();
  auto objective = [&](double lambda) {
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j) s += std::abs(a[j] - lambda * k[j]);
    return s;
  };

  double lambda = 0.0;
  if (kmax > 0.0) {
    double best = kInf;
    for (std::size_t j = 0; j < m; ++j) {
      if (k[j] == 0.0) continue;
      const double cand = a[j] / k[j];
      const double val = objective(cand);
      if (val < best) {
        best = val;
        lambda = cand;
      }
    }
  }

  double balance = 0.0;
  double tight_mass = 0.0;
  std::vector<bool> tight(m, false);
  for (std::size_t j = 0; j < m; ++j) {
    const double res = a[j] - lambda * k[j];
    const double scale = std::abs(a[j]) + std::abs(lambda * k[j]);
    if (std::abs(res) <= 1e-12 * scale || res == 0.0) {
      tight[j] = true;
      tight_mass += std::abs(k[j]);
      r[j] = 0.0;
    } else {
      r[j] = res > 0.0 ? 1.0 : -1.0;
      balance += k[j] * r[j];
    }
  }
  if (tight_mass > 0.0) {
    const double t = std::clamp(-balance / tight_mass, -1.0, 1.0);
    for (std::size_t j = 0; j < m; ++j) {
      if (tight[j] && k[j] != 0.0) r[j] = t * (k[j] > 0.0 ? 1.0 : -1.0);
    }
  }
  double value = 0.0;
  for (std::size_t j = 0; j < m; ++j) value += a[j] * r[j];
  return value;
}

InequalityResult certify_block(const PatternProblem& p, const CertifierOptions& opt) {
  const std::size_t nm = p.rows * p.cols;
  InequalityResult res;
  res.pattern = SignPattern{p.rows, p.cols, std::vector<double>(nm, 0.0)};
  if (nm == 0) {
    res.exhaustive = true;
    return res;
  }

  const double amax = max_abs(p.lhs);
  const double kmax = max_abs(p.kernel);
  const Thresholds th{1e-12 * kmax * static_cast<double>(std::max<std::size_t>(1, p.cols)),
                      amax > 0.0 ? opt.refute_tol * amax : kInf};
  Evaluator eval(p, th);

  double best = -kInf;
  std::vector<double> best_r(nm, 1.0);
  Evaluator::Value best_v{0.0, 0.0, 0.0};
  auto consider = [&](const std::vector<double>& r) {
    const auto v = eval(r);
    ++res.evaluated;
    if (v.ratio > best) {
      best = v.ratio;
      best_r = r;
      best_v = v;
    }
  };

  const std::size_t limit = std::min<std::size_t>(opt.exhaustive_limit, 24);
  std::vector<double> r(nm);
  if (nm <= limit) {
    res.exhaustive = true;
    const std::uint64_t total = std::uint64_t{1} << nm;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      for (std::size_t k = 0; k < nm; ++k) r[k] = ((mask >> k) & 1U) ? 1.0 : -1.0;
      consider(r);
    }
  } else {
    Rng rng(opt.seed);
    for (std::size_t t = 0; t < std::max<std::size_t>(1, opt.patterns); ++t) {
      for (double& v : r) v = rng.sign();
      res.evaluated += eval.ascend(r, opt.max_passes);
      consider(r);
    }
  }

  res.vertex_c_hat = std::max(best, 0.0);
  res.c_hat = res.vertex_c_hat;
  res.pattern.values = best_r;
  res.lhs = best_v.lhs;
  res.rhs = best_v.rhs;
  if (std::isinf(res.vertex_c_hat)) {
    res.refuted = true;
    return res;
  }

  // Refutation: every row solves its zero-RHS program; rows that gain nothing stay zero.
  std::vector<double> z(nm, 0.0);
  std::vector<double> row(p.cols);
  for (std::size_t i = 0; i < p.rows; ++i) {
    const double v = solve_row_lp(&p.lhs[i * p.cols], &p.kernel[i * p.cols], p.cols, row.data());
    if (v > th.lhs_min) std::copy(row.begin(), row.end(), z.begin() + static_cast<std::ptrdiff_t>(i * p.cols));
  }
  const auto zv = eval(z);
  ++res.evaluated;
  if (std::isinf(zv.ratio)) {
    res.refuted = true;
    res.c_hat = kInf;
    res.pattern.values = z;
    res.lhs = zv.lhs;
    res.rhs = zv.rhs;
  }
  return res;
}

InequalityResult certify_rowwise(const PatternProblem& p, const CertifierOptions& opt) {
  InequalityResult out;
  out.pattern = SignPattern{p.rows, p.cols, std::vector<double>(p.rows * p.cols, 0.0)};
  out.exhaustive = true;
  bool have = false;
  double best_lhs_refute = 0.0;
  for (std::size_t i = 0; i < p.rows; ++i) {
    PatternProblem single;
    single.rows = 1;
    single.cols = p.cols;
    single.lhs.assign(p.lhs.begin() + static_cast<std::ptrdiff_t>(i * p.cols),
                      p.lhs.begin() + static_cast<std::ptrdiff_t>((i + 1) * p.cols));
    single.kernel.assign(p.kernel.begin() + static_cast<std::ptrdiff_t>(i * p.cols),
                         p.kernel.begin() + static_cast<std::ptrdiff_t>((i + 1) * p.cols));
    single.dual_exponent = Exponent::rational(1);
    CertifierOptions o = opt;
    o.seed = opt.seed + i;
    InequalityResult r = certify_block(single, o);
    out.evaluated += r.evaluated;
    out.exhaustive = out.exhaustive && r.exhaustive;
    out.vertex_c_hat = std::max(out.vertex_c_hat, r.vertex_c_hat);

    const bool take = r.refuted ? (!out.refuted || r.lhs > best_lhs_refute)
                                : (!out.refuted && (!have || r.vertex_c_hat > out.c_hat));
    if (take) {
      have = true;
      out.refuted = out.refuted || r.refuted;
      out.c_hat = r.c_hat;
      out.lhs = r.lhs;
      out.rhs = r.rhs;
      if (r.refuted) best_lhs_refute = r.lhs;
      std::fill(out.pattern.values.begin(), out.pattern.values.end(), 0.0);
      std::copy(r.pattern.values.begin(), r.pattern.values.end(),
                out.pattern.values.begin() + static_cast<std::ptrdiff_t>(i * p.cols));
    }
  }
  if (out.refuted) out.c_hat = kInf;
  return out;
}

void check_block(const MatrixOp& A, std::size_t& n, std::size_t& m) {
  if (n == 0) n = A.size();
  if (m == 0) m = A.size();
  if (n > A.size() || m > A.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "block " + std::to_string(n) + "x" + std::to_string(m) +
                                                " exceeds a matrix of size " + std::to_string(A.size()));
  }
}

}  // namespace

InequalityResult certify_pattern_problem(const PatternProblem& problem, const CertifierOptions& options) {
  const std::size_t nm = problem.rows * problem.cols;
  if (problem.lhs.size() != nm || problem.kernel.size() != nm) {
    throw Error(ErrorCode::SizeMismatch, "pattern problem arrays do not match rows x cols");
  }
  if (problem.dual_exponent.is_infinite()) {
    throw Error(ErrorCode::DegenerateExponent, "the right-hand side needs a finite dual exponent");
  }
  return problem.rowwise ? certify_rowwise(problem, options) : certify_block(problem, options);
}

InequalityResult certify_inequality_cesaro(const MatrixOp& A, const TruncatedSeq& h, const Exponent& s_rq,
                                           std::size_t patterns, std::uint64_t seed, std::size_t n,
                                           std::size_t m) {
  if (s_rq == Exponent::rational(1)) {
    throw Error(ErrorCode::DegenerateExponent, "s_rq = 1 leaves no finite dual exponent");
  }
  if (patterns < 1) throw Error(ErrorCode::InvalidArgument, "patterns must be >= 1");
  if (h.size() != A.size()) throw Error(ErrorCode::LengthMismatch, "h must match the matrix size");
  check_block(A, n, m);

  PatternProblem p;
  p.rows = n;
  p.cols = m;
  p.dual_exponent = conjugate(s_rq);
  p.lhs.resize(n * m);
  p.kernel.assign(n * m, 0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      p.lhs[(i - 1) * m + (j - 1)] = A(i, j);
      if (j <= i) p.kernel[(i - 1) * m + (j - 1)] = h[j - 1] / static_cast<double>(i);
    }
  }
  CertifierOptions opt;
  opt.patterns = patterns;
  opt.seed = seed;
  return certify_pattern_problem(p, opt);
}

InequalityResult certify_inequality_fourier(const MatrixOp& Tphi, const Exponent& s, std::size_t patterns,
                                            std::uint64_t seed, std::size_t n, std::size_t m) {
  if (s == Exponent::rational(1)) {
    throw Error(ErrorCode::DegenerateExponent, "s = 1 leaves no finite dual exponent");
  }
  if (patterns < 1) throw Error(ErrorCode::InvalidArgument, "patterns must be >= 1");
  check_block(Tphi, n, m);

  PatternProblem p;
  p.rows = n;
  p.cols = m;
  p.dual_exponent = conjugate(s);
  p.rowwise = s.is_infinite();
  p.lhs.resize(n * m);
  p.kernel.assign(n * m, 0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      p.lhs[(i - 1) * m + (j - 1)] = Tphi(i, j);
      if (i == j) p.kernel[(i - 1) * m + (j - 1)] = 1.0;
    }
  }
  CertifierOptions opt;
  opt.patterns = patterns;
  opt.seed = seed;
  return certify_pattern_problem(p, opt);
}

Verdict verdict_from(const InequalityResult& result) {
  return result.refuted ? Verdict::DoesNotFactor : Verdict::Inconclusive;
}

}  // namespace strongfact
