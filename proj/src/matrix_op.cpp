#include "strongfact/matrix_op.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "strongfact/error.hpp"
#include "strongfact/rng.hpp"
#include "strongfact/seq_norms.hpp"

namespace strongfact {

MatrixOp::MatrixOp(std::size_t n, std::vector<double> row_major, SeqSpaceSpec domain, SeqSpaceSpec codomain)
    : n_(n), a_(std::move(row_major)), domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (a_.size() != n_ * n_) {
    throw Error(ErrorCode::SizeMismatch, "matrix of size " + std::to_string(n_) + " needs " +
                                             std::to_string(n_ * n_) + " entries, got " +
                                             std::to_string(a_.size()));
  }
  for (std::size_t k = 0; k < a_.size(); ++k) {
    if (!std::isfinite(a_[k])) {
      throw Error(ErrorCode::InvalidArgument, "non-finite matrix entry (" + std::to_string(k / n_ + 1) + ", " +
                                                  std::to_string(k % n_ + 1) + ")");
    }
  }
}

MatrixOp MatrixOp::zeros(std::size_t n) { return MatrixOp(n, std::vector<double>(n * n, 0.0)); }

MatrixOp MatrixOp::identity(std::size_t n) {
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = 1.0;
  return MatrixOp(n, std::move(a));
}

MatrixOp MatrixOp::diagonal(const TruncatedSeq& d) {
  const std::size_t n = d.size();
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = d[i];
  return MatrixOp(n, std::move(a));
}

MatrixOp MatrixOp::with_spaces(SeqSpaceSpec domain, SeqSpaceSpec codomain) const {
  MatrixOp out = *this;
  out.domain_ = std::move(domain);
  out.codomain_ = std::move(codomain);
  return out;
}

MatrixOp MatrixOp::with_entry(std::size_t i, std::size_t j, double value) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) {
    throw Error(ErrorCode::IndexOutOfRange, "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                                ") outside a matrix of size " + std::to_string(n_));
  }
  MatrixOp out = *this;
  out.a_[(i - 1) * n_ + (j - 1)] = value;
  return out;
}

MatrixOp MatrixOp::leading(std::size_t k) const {
  if (k > n_) throw Error(ErrorCode::IndexOutOfRange, "leading block larger than the matrix");
  std::vector<double> a(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    std::copy_n(a_.begin() + static_cast<std::ptrdiff_t>(i * n_), k, a.begin() + static_cast<std::ptrdiff_t>(i * k));
  }
  return MatrixOp(k, std::move(a), domain_, codomain_);
}

bool MatrixOp::all_zero() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](double v) { return v == 0.0; });
}

MatrixOp cesaro_matrix(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Cesaro matrix needs N >= 1");
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) a[(i - 1) * n + (j - 1)] = 1.0 / static_cast<double>(i);
  }
  return MatrixOp(n, std::move(a));
}

TruncatedSeq apply(const MatrixOp& T, const TruncatedSeq& x) {
  const std::size_t n = T.size();
  if (x.size() != n) {
    throw Error(ErrorCode::LengthMismatch, "operator of size " + std::to_string(n) +
                                               " applied to a sequence of length " + std::to_string(x.size()));
  }
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto r = T.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += r[j] * x[j];
    y[i - 1] = s;
  }
  return TruncatedSeq(std::move(y));
}

MatrixOp diagonal_sandwich(const TruncatedSeq& g, const MatrixOp& S, const TruncatedSeq& h) {
  const std::size_t n = S.size();
  if (g.size() != n || h.size() != n) {
    throw Error(ErrorCode::LengthMismatch, "multipliers of length " + std::to_string(g.size()) + " and " +
                                               std::to_string(h.size()) + " around an operator of size " +
                                               std::to_string(n));
  }
  std::vector<double> a(n * n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) a[(i - 1) * n + (j - 1)] = g[i - 1] * S(i, j) * h[j - 1];
  }
  return MatrixOp(n, std::move(a), S.domain(), S.codomain());
}

MatrixOp cesaro_shape(const TruncatedSeq& alpha, const TruncatedSeq& h, std::size_t j0) {
  const std::size_t n = h.size();
  if (j0 < 1 || j0 > n) throw Error(ErrorCode::IndexOutOfRange, "j0 outside 1..N");
  if (alpha.size() < n - j0 + 1) {
    throw Error(ErrorCode::LengthMismatch, "alpha needs at least N - j0 + 1 entries");
  }
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = j0; i <= n; ++i) {
    for (std::size_t j = j0; j <= i; ++j) a[(i - 1) * n + (j - 1)] = h[j - 1] * alpha[i - j0];
  }
  return MatrixOp(n, std::move(a));
}

MatrixOp random_lower(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) a[i * n + j] = rng.uniform(-1.0, 1.0);
  }
  return MatrixOp(n, std::move(a));
}

namespace {

std::vector<double> transpose_apply(const MatrixOp& T, const std::vector<double>& y) {
  const std::size_t n = T.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto r = T.row(i);
    const double yi = y[i - 1];
    if (yi == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] += r[j] * yi;
  }
  return out;
}

double euclid(const std::vector<double>& v) {
  return lp_norm(TruncatedSeq(v), Exponent::rational(2));
}

bool is_plain_l2(const SeqSpaceSpec& s) {
  return s.kind == SeqSpaceSpec::Kind::Lp && s.p == Exponent::rational(2);
}

}  // namespace

double operator_norm_estimate(const MatrixOp& T, std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "operator_norm_estimate needs trials >= 1");
  const std::size_t n = T.size();
  if (n == 0) return 0.0;
  Rng rng(seed);

  double best = 0.0;
  std::vector<double> best_x(n, 0.0);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<double> x(n);
    const bool nonneg = (t % 2 == 0);
    for (double& v : x) v = nonneg ? rng.uniform() : rng.uniform(-1.0, 1.0);
    TruncatedSeq xs(x);
    const double nx = norm_in(xs, T.domain());
    if (nx == 0.0) continue;
    const double ratio = norm_in(apply(T, xs), T.codomain()) / nx;
    if (ratio > best) {
      best = ratio;
      best_x = std::move(x);
    }
  }
  // Unit vectors e^j as extra candidates; cheap and exact for diagonal matrices.
  for (std::size_t j = 1; j <= n; ++j) {
    TruncatedSeq e = TruncatedSeq::unit(n, j);
    const double nx = norm_in(e, T.domain());
    const double ratio = norm_in(apply(T, e), T.codomain()) / nx;
    if (ratio > best) {
      best = ratio;
      best_x = e.vec();
    }
  }

  if (!is_plain_l2(T.domain()) || !is_plain_l2(T.codomain()) || best == 0.0) return best;

  std::vector<double> v = best_x;
  double nv = euclid(v);
  for (double& c : v) c /= nv;
  double prev = 0.0;
  for (int it = 0; it < 20000; ++it) {
    std::vector<double> w = transpose_apply(T, apply(T, TruncatedSeq(v)).vec());
    const double nw = euclid(w);
    if (nw == 0.0) break;
    for (std::size_t k = 0; k < n; ++k) v[k] = w[k] / nw;
    const double est = euclid(apply(T, TruncatedSeq(v)).vec());
    best = std::max(best, est);
    if (std::abs(est - prev) <= 1e-15 * est) break;
    prev = est;
  }
  return best;
}

}  // namespace strongfact
