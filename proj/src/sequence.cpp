#include "strongfact/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "strongfact/error.hpp"

namespace strongfact {

TruncatedSeq::TruncatedSeq(std::vector<double> coeffs, IndexDomain domain)
    : coeffs_(std::move(coeffs)), domain_(domain) {
  if (domain_ == IndexDomain::ZSym && coeffs_.size() % 2 == 0) {
    throw Error(ErrorCode::DomainMismatch,
                "ZSYM window needs odd length 2M+1, got " + std::to_string(coeffs_.size()));
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!std::isfinite(coeffs_[k])) {
      throw Error(ErrorCode::InvalidArgument, "non-finite entry at storage index " + std::to_string(k));
    }
  }
}

TruncatedSeq TruncatedSeq::zeros(std::size_t n) { return TruncatedSeq(std::vector<double>(n, 0.0)); }

TruncatedSeq TruncatedSeq::constant(std::size_t n, double value) {
  return TruncatedSeq(std::vector<double>(n, value));
}

TruncatedSeq TruncatedSeq::unit(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::IndexOutOfRange, "unit vector index " + std::to_string(k) + " outside 1.." +
                                                std::to_string(n));
  }
  std::vector<double> v(n, 0.0);
  v[k - 1] = 1.0;
  return TruncatedSeq(std::move(v));
}

TruncatedSeq TruncatedSeq::zsym_zeros(std::size_t half_width) {
  return TruncatedSeq(std::vector<double>(2 * half_width + 1, 0.0), IndexDomain::ZSym);
}

std::size_t TruncatedSeq::half_width() const {
  if (domain_ != IndexDomain::ZSym) throw Error(ErrorCode::DomainMismatch, "sequence is not ZSYM");
  return coeffs_.size() / 2;
}

double TruncatedSeq::at1(std::size_t i) const {
  if (domain_ != IndexDomain::Nat1) throw Error(ErrorCode::DomainMismatch, "sequence is not NAT1");
  if (i < 1 || i > coeffs_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." +
                                                std::to_string(coeffs_.size()));
  }
  return coeffs_[i - 1];
}

double TruncatedSeq::at_z(long k) const {
  const auto m = static_cast<long>(half_width());
  if (k < -m || k > m) {
    throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(k) + " outside the ZSYM window");
  }
  return coeffs_[static_cast<std::size_t>(k + m)];
}

bool TruncatedSeq::all_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double v) { return v == 0.0; });
}

TruncatedSeq TruncatedSeq::times(const TruncatedSeq& other) const {
  if (other.size() != size() || other.domain() != domain_) {
    throw Error(ErrorCode::LengthMismatch, "entrywise product of sequences of length " +
                                               std::to_string(size()) + " and " + std::to_string(other.size()));
  }
  std::vector<double> out(size());
  for (std::size_t k = 0; k < size(); ++k) out[k] = coeffs_[k] * other.coeffs_[k];
  return TruncatedSeq(std::move(out), domain_);
}

TruncatedSeq TruncatedSeq::scaled(double c) const {
  std::vector<double> out(coeffs_);
  for (double& v : out) v *= c;
  return TruncatedSeq(std::move(out), domain_);
}

SeqSpaceSpec SeqSpaceSpec::lp(Exponent p) {
  SeqSpaceSpec s;
  s.kind = Kind::Lp;
  s.p = p;
  return s;
}

SeqSpaceSpec SeqSpaceSpec::weighted(Exponent p, TruncatedSeq weight) {
  for (double w : weight.values()) {
    if (!(w > 0.0)) throw Error(ErrorCode::InvalidArgument, "weights must be strictly positive");
  }
  SeqSpaceSpec s;
  s.kind = Kind::LpWeighted;
  s.p = p;
  s.weight = std::move(weight);
  return s;
}

SeqSpaceSpec SeqSpaceSpec::kellogg(Exponent p, Exponent q) {
  SeqSpaceSpec s;
  s.kind = Kind::KelloggMixed;
  s.p = p;
  s.q = q;
  return s;
}

}  // namespace strongfact
