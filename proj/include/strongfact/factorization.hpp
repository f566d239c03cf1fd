#pragma once

#include "strongfact/certificate.hpp"
#include "strongfact/exponent.hpp"
#include "strongfact/matrix_op.hpp"
#include "strongfact/sequence.hpp"

namespace strongfact {

/// Default tolerance for shape identities that are exact in exact arithmetic.
inline constexpr double kShapeTolerance = 1e-9;
/// Default tolerance where quadrature enters.
inline constexpr double kQuadratureTolerance = 1e-6;

/// Does A = M_g C M_h for some g, with C the Cesaro matrix and h_1 != 0?
///
/// The operator factors iff A is lower triangular and every row is
/// proportional to h along its first column: a_ij = h_j a_i1 / h_1 for j <= i.
/// The multiplier is then g_i = i a_i1 / h_1 (alpha_i = a_i1 / h_1). Entries are
/// compared in absolute value against `tol`; the witness is the first violating
/// entry in row-major order.
///
/// The norm of g is reported at exponent s_rq and the norm of h at s_pr. Both
/// are finite-truncation values: they bound the sequence norms from below and
/// say nothing about membership of the infinite sequences.
///
/// ZeroPivot if h_1 = 0, LengthMismatch if h has the wrong length. The zero
/// matrix yields Inconclusive.
Certificate cesaro_factor_check(const MatrixOp& A, const TruncatedSeq& h, const Exponent& p, const Exponent& q,
                                const Exponent& r, double tol = kShapeTolerance);

/// Same question when the leading entries of h vanish. With
/// j0 = min{j : h_j != 0}, rows and columns before j0 must vanish and
/// a_ij = h_j alpha_{i-j0+1} on j0 <= j <= i. Recovers alpha and
/// g_i = i alpha_{i-j0+1} for i >= j0 (g_i = 0 before j0, where the rows carry
/// no information). AllZeroMultiplier if h = 0.
Certificate cesaro_factor_check_j0(const MatrixOp& A, const TruncatedSeq& h, const Exponent& p, const Exponent& q,
                                   const Exponent& r, double tol = kShapeTolerance);

/// Does T: L^p -> l^q factor through the Fourier operator L^r -> l^{r'}?
/// Column j of `Tphi` is T(phi_j). Factors iff Tphi is diagonal; g is the
/// diagonal and its norm is reported at s_{r'q}.
/// ExponentRange unless 1 < r <= 2, r <= p < inf and 1 < q.
Certificate fourier_factor_check(const MatrixOp& Tphi, const Exponent& r, const Exponent& p, const Exponent& q,
                                 double tol = kShapeTolerance);

/// Does A = M_g B M_h? g_i is recovered from the first column j with
/// |b_ij h_j| > tol and every other entry must satisfy
/// |a_ij - g_i b_ij h_j| <= tol (which forces a_ij = 0 where b_ij = 0).
/// SizeMismatch if the sizes disagree.
Certificate matrix_factor_check(const MatrixOp& A, const MatrixOp& B, const TruncatedSeq& h,
                                double tol = kShapeTolerance);

}  // namespace strongfact
