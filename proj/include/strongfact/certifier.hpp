#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "strongfact/certificate.hpp"
#include "strongfact/exponent.hpp"
#include "strongfact/matrix_op.hpp"
#include "strongfact/sequence.hpp"

namespace strongfact {

/// A finite instance of the domination inequality
///
///   sum_ij r_ij a_ij  <=  C || ( sum_j k_ij r_ij )_i ||_{s'},   r in B_{l^inf},
///
/// on an n x m block. `lhs` holds a_ij and `kernel` holds k_ij, both row-major.
/// With `rowwise` set, every row is a separate instance with right-hand side
/// |sum_j k_ij r_ij| (the s' = 1, single-row form).
struct PatternProblem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> lhs;
  std::vector<double> kernel;
  Exponent dual_exponent = Exponent::rational(1);
  bool rowwise = false;
};

struct CertifierOptions {
  std::size_t patterns = 64;
  std::uint64_t seed = 0;
  /// Exhaustive vertex enumeration when rows * cols <= this (capped at 24).
  std::size_t exhaustive_limit = 16;
  /// Passes of single-entry flips after each random start.
  std::size_t max_passes = 50;
  /// LHS threshold, relative to max |a_ij|, for a zero-RHS pattern to refute.
  double refute_tol = 1e-9;
};

/// Largest ratio LHS/RHS observed.
///
/// `vertex_c_hat` is the maximum over the searched {-1, +1} vertex patterns
/// (all of them when `exhaustive`). The refutation phase then solves, row by
/// row, max sum_j a_ij r_ij subject to sum_j k_ij r_ij = 0 and |r_ij| <= 1 (a
/// one-constraint linear program with a closed-form solution). When the
/// resulting pattern has RHS = 0 and LHS > 0, `refuted` is set and `c_hat` is
/// +inf; otherwise `c_hat` equals `vertex_c_hat`. The returned pattern is the
/// refuting one or the vertex maximizer.
struct InequalityResult {
  double c_hat = 0.0;
  double vertex_c_hat = 0.0;
  SignPattern pattern;
  double lhs = 0.0;
  double rhs = 0.0;
  bool refuted = false;
  bool exhaustive = false;
  std::size_t evaluated = 0;
};

InequalityResult certify_pattern_problem(const PatternProblem& problem, const CertifierOptions& options);

/// Cesaro form on the leading n x m block of A:
///   RHS = ( sum_{i<=n} i^{-s'} |sum_{j<=min(i,m)} h_j r_ij|^{s'} )^{1/s'},  s' = conjugate(s_rq).
/// n = m = 0 selects the full size. DegenerateExponent if s_rq = 1.
InequalityResult certify_inequality_cesaro(const MatrixOp& A, const TruncatedSeq& h, const Exponent& s_rq,
                                           std::size_t patterns, std::uint64_t seed, std::size_t n = 0,
                                           std::size_t m = 0);

/// Fourier form on the leading n x m block of Tphi:
///   RHS = ( sum_{i<=min(n,m)} |r_ii|^{s'} )^{1/s'}.
/// For s = inf the row-wise form sum_j r_j T(phi_j)_n <= C |r_n| (0 if n > m)
/// is used instead. DegenerateExponent if s = 1.
InequalityResult certify_inequality_fourier(const MatrixOp& Tphi, const Exponent& s, std::size_t patterns,
                                            std::uint64_t seed, std::size_t n = 0, std::size_t m = 0);

/// A certifier never proves factorization: a refutation maps to DoesNotFactor,
/// anything else to Inconclusive.
Verdict verdict_from(const InequalityResult& result);

}  // namespace strongfact
