#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "strongfact/exponent.hpp"

namespace strongfact {

/// NAT1 stores indices 1..N; ZSYM stores -M..M (length 2M+1, index 0 in the middle).
enum class IndexDomain { Nat1, ZSym };

/// Finitely supported real sequence. Entries outside the window are zero.
class TruncatedSeq {
 public:
  TruncatedSeq() = default;
  explicit TruncatedSeq(std::vector<double> coeffs, IndexDomain domain = IndexDomain::Nat1);

  static TruncatedSeq zeros(std::size_t n);
  static TruncatedSeq constant(std::size_t n, double value);
  /// e^k on NAT1, 1-based.
  static TruncatedSeq unit(std::size_t n, std::size_t k);
  /// Window -M..M, all zero.
  static TruncatedSeq zsym_zeros(std::size_t half_width);

  IndexDomain domain() const noexcept { return domain_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }

  /// M for ZSYM windows; throws DomainMismatch on NAT1.
  std::size_t half_width() const;

  std::span<const double> values() const noexcept { return coeffs_; }
  const std::vector<double>& vec() const noexcept { return coeffs_; }

  /// Zero-based storage access.
  double operator[](std::size_t k) const noexcept { return coeffs_[k]; }

  /// NAT1: i in 1..N.
  double at1(std::size_t i) const;
  /// ZSYM: k in -M..M.
  double at_z(long k) const;

  bool all_zero() const noexcept;

  /// Entrywise product; LengthMismatch on different sizes or domains.
  TruncatedSeq times(const TruncatedSeq& other) const;
  TruncatedSeq scaled(double c) const;

 private:
  std::vector<double> coeffs_;
  IndexDomain domain_ = IndexDomain::Nat1;
};

/// Descriptor of the sequence spaces the library evaluates.
struct SeqSpaceSpec {
  enum class Kind { Lp, LpWeighted, KelloggMixed };

  Kind kind = Kind::Lp;
  Exponent p;
  Exponent q;                         // KelloggMixed only
  std::optional<TruncatedSeq> weight;  // LpWeighted only, strictly positive

  static SeqSpaceSpec lp(Exponent p);
  static SeqSpaceSpec weighted(Exponent p, TruncatedSeq weight);
  static SeqSpaceSpec kellogg(Exponent p, Exponent q);
};

}  // namespace strongfact
