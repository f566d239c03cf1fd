#include "strongfact/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "strongfact/error.hpp"
#include "strongfact/seq_norms.hpp"

namespace strongfact {

namespace {

constexpr const char* kTruncationNote =
    "g_norm is the norm of the truncated multiplier: finite-truncation evidence, a lower bound on the "
    "sequence norm";

Witness entry_witness(std::string reason, std::size_t i, std::size_t j, double found, double expected) {
  Witness w;
  w.reason = std::move(reason);
  w.row = i;
  w.col = j;
  w.found = found;
  w.expected = expected;
  return w;
}

Certificate inconclusive_zero(Certificate c) {
  c.verdict = Verdict::Inconclusive;
  c.notes.push_back("operator is identically zero; factorization is only considered for nontrivial operators");
  return c;
}

// Shared scan for the Cesaro shape with the first nonzero multiplier at j0.
Certificate cesaro_shape_check(const MatrixOp& A, const TruncatedSeq& h, const Exponent& p, const Exponent& q,
                               const Exponent& r, double tol, std::size_t j0, std::string check) {
  const std::size_t n = A.size();
  Certificate c;
  c.check = std::move(check);
  c.h = h;
  c.tol = tol;
  c.truncation = n;
  const Exponent s_rq = multiplier_exponent(r, q);
  const Exponent s_pr = multiplier_exponent(p, r);
  c.exponents = {{"p", p}, {"q", q}, {"r", r}, {"s_rq", s_rq}, {"s_pr", s_pr}};
  c.h_norm = NormValue{lp_norm(h, s_pr), s_pr};
  if (j0 != 1) c.j0 = j0;

  if (A.all_zero()) return inconclusive_zero(std::move(c));

  const double pivot = h[j0 - 1];
  std::vector<double> alpha(n - j0 + 1, 0.0);
  for (std::size_t i = j0; i <= n; ++i) alpha[i - j0] = A(i, j0) / pivot;

  double residual = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto row = A.row(i);
    for (std::size_t j = 1; j <= n; ++j) {
      const bool in_triangle = (i >= j0 && j >= j0 && j <= i);
      const double expected = in_triangle ? h[j - 1] * alpha[i - j0] : 0.0;
      const double dev = std::abs(row[j - 1] - expected);
      residual = std::max(residual, dev);
      if (dev > tol && !c.witness) {
        std::string reason;
        if (j > i) {
          reason = "entry above the diagonal must vanish";
        } else if (i < j0 || j < j0) {
          reason = "rows and columns before j0 must vanish";
        } else {
          reason = "row is not proportional to h (a_ij != h_j a_i,j0 / h_j0)";
        }
        c.witness = entry_witness(std::move(reason), i, j, row[j - 1], expected);
      }
    }
  }
  c.residual = residual;

  std::vector<double> g(n, 0.0);
  for (std::size_t i = j0; i <= n; ++i) g[i - 1] = static_cast<double>(i) * alpha[i - j0];
  c.alpha = TruncatedSeq(std::move(alpha));
  c.g = TruncatedSeq(std::move(g));
  c.g_norm = NormValue{lp_norm(*c.g, s_rq), s_rq};
  c.notes.push_back(kTruncationNote);
  if (j0 > 1) c.notes.push_back("g_i for i < j0 is not determined by the matrix and is reported as 0");

  c.verdict = c.witness ? Verdict::DoesNotFactor : Verdict::Factors;
  return c;
}

void require_length(const TruncatedSeq& h, std::size_t n) {
  if (h.size() != n) {
    throw Error(ErrorCode::LengthMismatch, "multiplier of length " + std::to_string(h.size()) +
                                               " for a matrix of size " + std::to_string(n));
  }
}

}  // namespace

Certificate cesaro_factor_check(const MatrixOp& A, const TruncatedSeq& h, const Exponent& p, const Exponent& q,
                                const Exponent& r, double tol) {
  require_length(h, A.size());
  if (A.size() == 0 || h[0] == 0.0) {
    throw Error(ErrorCode::ZeroPivot, "h_1 = 0; use the j0-shifted check");
  }
  return cesaro_shape_check(A, h, p, q, r, tol, 1, "cesaro");
}

Certificate cesaro_factor_check_j0(const MatrixOp& A, const TruncatedSeq& h, const Exponent& p, const Exponent& q,
                                   const Exponent& r, double tol) {
  require_length(h, A.size());
  std::size_t j0 = 0;
  for (std::size_t j = 1; j <= h.size(); ++j) {
    if (h[j - 1] != 0.0) {
      j0 = j;
      break;
    }
  }
  if (j0 == 0) throw Error(ErrorCode::AllZeroMultiplier, "h vanishes on the whole window");
  Certificate c = cesaro_shape_check(A, h, p, q, r, tol, j0, "cesaro-j0");
  c.j0 = j0;
  return c;
}

Certificate fourier_factor_check(const MatrixOp& Tphi, const Exponent& r, const Exponent& p, const Exponent& q,
                                 double tol) {
  const Exponent one = Exponent::rational(1);
  const Exponent two = Exponent::rational(2);
  if (!(one < r && r <= two)) throw Error(ErrorCode::ExponentRange, "need 1 < r <= 2, got r = " + r.to_string());
  if (!(r <= p) || p.is_infinite()) {
    throw Error(ErrorCode::ExponentRange, "need r <= p < inf, got p = " + p.to_string());
  }
  if (!(one < q)) throw Error(ErrorCode::ExponentRange, "need 1 < q, got q = " + q.to_string());

  const std::size_t n = Tphi.size();
  const Exponent r_dual = conjugate(r);
  const Exponent s = multiplier_exponent(r_dual, q);
  Certificate c;
  c.check = "fourier";
  c.tol = tol;
  c.truncation = n;
  c.exponents = {{"p", p}, {"q", q}, {"r", r}, {"r_dual", r_dual}, {"s_rdual_q", s}};

  if (Tphi.all_zero()) return inconclusive_zero(std::move(c));

  double residual = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      const double dev = std::abs(Tphi(i, j));
      residual = std::max(residual, dev);
      if (dev > tol && !c.witness) {
        c.witness = entry_witness("T(phi_j)_i must vanish for i != j", i, j, Tphi(i, j), 0.0);
      }
    }
  }
  c.residual = residual;

  std::vector<double> g(n);
  for (std::size_t i = 1; i <= n; ++i) g[i - 1] = Tphi(i, i);
  c.g = TruncatedSeq(std::move(g));
  c.g_norm = NormValue{lp_norm(*c.g, s), s};
  c.notes.push_back(kTruncationNote);
  c.verdict = c.witness ? Verdict::DoesNotFactor : Verdict::Factors;
  return c;
}

Certificate matrix_factor_check(const MatrixOp& A, const MatrixOp& B, const TruncatedSeq& h, double tol) {
  const std::size_t n = A.size();
  if (B.size() != n || h.size() != n) {
    throw Error(ErrorCode::SizeMismatch, "A, B and h must share the truncation size");
  }
  Certificate c;
  c.check = "matrix";
  c.h = h;
  c.tol = tol;
  c.truncation = n;

  if (A.all_zero()) return inconclusive_zero(std::move(c));

  std::vector<double> g(n, 0.0);
  double residual = 0.0;
  std::size_t unrecovered = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    std::optional<std::size_t> ref;
    for (std::size_t j = 1; j <= n; ++j) {
      if (std::abs(B(i, j) * h[j - 1]) > tol) {
        ref = j;
        break;
      }
    }
    if (ref) {
      g[i - 1] = A(i, *ref) / (B(i, *ref) * h[*ref - 1]);
    } else {
      ++unrecovered;
    }

    for (std::size_t j = 1; j <= n; ++j) {
      const bool forced_zero = std::abs(B(i, j)) <= tol;
      const double expected = forced_zero ? 0.0 : g[i - 1] * B(i, j) * h[j - 1];
      const double dev = std::abs(A(i, j) - expected);
      residual = std::max(residual, dev);
      if (dev > tol && !c.witness) {
        Witness w = entry_witness(forced_zero ? "a_ij must vanish where b_ij = 0"
                                              : "ratio a_ij / (b_ij h_j) differs from the recovered g_i",
                                  i, j, A(i, j), expected);
        if (!forced_zero && ref) w.ref_col = ref;
        c.witness = std::move(w);
      }
    }
  }
  c.residual = residual;
  c.g = TruncatedSeq(std::move(g));
  if (unrecovered > 0) {
    c.notes.push_back(std::to_string(unrecovered) +
                      " row(s) have no index with b_ij h_j != 0; g_i is set to 0 there");
  }
  c.verdict = c.witness ? Verdict::DoesNotFactor : Verdict::Factors;
  return c;
}

}  // namespace strongfact
