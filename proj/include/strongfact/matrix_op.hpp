#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "strongfact/sequence.hpp"

namespace strongfact {

/// N x N truncation of an infinite matrix, a_ij = T(e^j)_i, stored row-major.
/// Indices in the accessors are 1-based to match the matrix notation.
class MatrixOp {
 public:
  MatrixOp() = default;
  MatrixOp(std::size_t n, std::vector<double> row_major,
           SeqSpaceSpec domain = SeqSpaceSpec::lp(Exponent::rational(2)),
           SeqSpaceSpec codomain = SeqSpaceSpec::lp(Exponent::rational(2)));

  static MatrixOp zeros(std::size_t n);
  static MatrixOp identity(std::size_t n);
  static MatrixOp diagonal(const TruncatedSeq& d);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return a_[(i - 1) * n_ + (j - 1)]; }
  std::span<const double> row(std::size_t i) const noexcept { return {a_.data() + (i - 1) * n_, n_}; }
  std::span<const double> data() const noexcept { return a_; }

  const SeqSpaceSpec& domain() const noexcept { return domain_; }
  const SeqSpaceSpec& codomain() const noexcept { return codomain_; }
  MatrixOp with_spaces(SeqSpaceSpec domain, SeqSpaceSpec codomain) const;

  /// Copy with a single entry replaced.
  MatrixOp with_entry(std::size_t i, std::size_t j, double value) const;

  /// Leading k x k block.
  MatrixOp leading(std::size_t k) const;

  bool all_zero() const noexcept;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
  SeqSpaceSpec domain_ = SeqSpaceSpec::lp(Exponent::rational(2));
  SeqSpaceSpec codomain_ = SeqSpaceSpec::lp(Exponent::rational(2));
};

/// b_ij = 1/i for j <= i, 0 otherwise.
MatrixOp cesaro_matrix(std::size_t n);

/// Matrix-vector product; LengthMismatch if x has the wrong length.
TruncatedSeq apply(const MatrixOp& T, const TruncatedSeq& x);

/// Matrix of M_g o S o M_h: entries g_i s_ij h_j.
MatrixOp diagonal_sandwich(const TruncatedSeq& g, const MatrixOp& S, const TruncatedSeq& h);

/// Lower-triangular matrix a_ij = h_j alpha_{i-j0+1} on j0 <= j <= i, zero
/// elsewhere (rows and columns before j0 vanish). j0 = 1 gives the plain
/// triangle h_j alpha_i.
MatrixOp cesaro_shape(const TruncatedSeq& alpha, const TruncatedSeq& h, std::size_t j0 = 1);

/// Entries uniform in [-1, 1] on and below the diagonal.
MatrixOp random_lower(std::size_t n, std::uint64_t seed);

/// Lower bound on ||T|| from the domain space's p to the codomain's exponent.
///
/// Samples `trials` random vectors (half of them nonnegative), normalizes them
/// in the domain norm and keeps the largest image norm. When both spaces are
/// l^2 the best sample seeds a power iteration on T^t T, whose iterates only
/// improve the bound. Deterministic for a given seed.
double operator_norm_estimate(const MatrixOp& T, std::size_t trials, std::uint64_t seed);

}  // namespace strongfact
