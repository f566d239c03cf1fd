#include "strongfact/seq_norms.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "strongfact/error.hpp"

namespace strongfact {

namespace {

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

// (sum |x_i|^p)^{1/p} over a span, scaled by the largest magnitude.
double span_lp(std::span<const double> x, const Exponent& p) {
  const double m = max_abs(x);
  if (m == 0.0 || p.is_infinite()) return m;
  if (p == Exponent::rational(1)) {
    double s = 0.0;
    for (double v : x) s += std::abs(v);
    return s;
  }
  const double pv = p.value();
  double s = 0.0;
  for (double v : x) {
    if (v != 0.0) s += std::pow(std::abs(v) / m, pv);
  }
  return m * std::pow(s, 1.0 / pv);
}

}  // namespace

double lp_norm(const TruncatedSeq& x, const Exponent& p) { return span_lp(x.values(), p); }

double weighted_lp_norm(const TruncatedSeq& x, const Exponent& p, const TruncatedSeq& weight) {
  if (weight.size() != x.size()) {
    throw Error(ErrorCode::LengthMismatch, "weight has length " + std::to_string(weight.size()) +
                                               ", sequence has length " + std::to_string(x.size()));
  }
  for (double w : weight.values()) {
    if (!(w > 0.0)) throw Error(ErrorCode::InvalidArgument, "weights must be strictly positive");
  }
  if (p.is_infinite()) return max_abs(x.values());

  const double m = max_abs(x.values());
  if (m == 0.0) return 0.0;
  const double pv = p.value();
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0.0) s += weight[i] * std::pow(std::abs(x[i]) / m, pv);
  }
  return m * std::pow(s, 1.0 / pv);
}

std::vector<KelloggBlock> kellogg_blocks(std::size_t half_width) {
  const auto M = static_cast<long>(half_width);
  std::vector<KelloggBlock> positive;
  for (int m = 1;; ++m) {
    const long hi = 1L << m;
    const long lo = (m == 1) ? 1 : (1L << (m - 1)) + 1;
    if (lo > M) break;
    positive.push_back({m, lo, std::min(hi, M)});
  }
  std::vector<KelloggBlock> blocks;
  blocks.reserve(2 * positive.size() + 1);
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
    blocks.push_back({-it->m, -it->last, -it->first});
  }
  blocks.push_back({0, 0, 0});
  blocks.insert(blocks.end(), positive.begin(), positive.end());
  return blocks;
}

double kellogg_norm(const TruncatedSeq& lambda, const Exponent& p, const Exponent& q) {
  if (lambda.domain() != IndexDomain::ZSym) {
    throw Error(ErrorCode::DomainMismatch, "the mixed norm is defined on ZSYM windows only");
  }
  const auto M = static_cast<long>(lambda.half_width());
  const auto values = lambda.values();

  std::vector<double> block_norms;
  for (const auto& b : kellogg_blocks(lambda.half_width())) {
    const auto first = static_cast<std::size_t>(b.first + M);
    const auto len = static_cast<std::size_t>(b.last - b.first + 1);
    block_norms.push_back(span_lp(values.subspan(first, len), p));
  }
  return span_lp(block_norms, q);
}

DualNormResult dual_norm(const TruncatedSeq& c, const Exponent& s) {
  const Exponent s_dual = conjugate(s);
  DualNormResult out;
  out.value = lp_norm(c, s_dual);
  std::vector<double> f(c.size(), 0.0);
  if (out.value == 0.0) {
    out.extremizer = TruncatedSeq(std::move(f), c.domain());
    return out;
  }

  auto sign = [](double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); };
  if (s.is_infinite()) {
    for (std::size_t i = 0; i < c.size(); ++i) f[i] = sign(c[i]);
  } else if (s_dual.is_infinite()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < c.size(); ++i) {
      if (std::abs(c[i]) > std::abs(c[best])) best = i;
    }
    f[best] = sign(c[best]);
  } else {
    const double e = s_dual.value() - 1.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != 0.0) f[i] = sign(c[i]) * std::pow(std::abs(c[i]) / out.value, e);
    }
  }
  out.extremizer = TruncatedSeq(std::move(f), c.domain());
  return out;
}

double norm_in(const TruncatedSeq& x, const SeqSpaceSpec& space) {
  switch (space.kind) {
    case SeqSpaceSpec::Kind::Lp: return lp_norm(x, space.p);
    case SeqSpaceSpec::Kind::LpWeighted:
      if (!space.weight) throw Error(ErrorCode::SpecError, "weighted space without a weight");
      return weighted_lp_norm(x, space.p, *space.weight);
    case SeqSpaceSpec::Kind::KelloggMixed: return kellogg_norm(x, space.p, space.q);
  }
  return 0.0;
}

}  // namespace strongfact
