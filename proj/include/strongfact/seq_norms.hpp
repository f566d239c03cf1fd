#pragma once

#include <utility>
#include <vector>

#include "strongfact/exponent.hpp"
#include "strongfact/sequence.hpp"

namespace strongfact {

/// (sum |x_i|^p)^{1/p}, or max |x_i| for p = inf.
///
/// Evaluated with max-scaling so that large or tiny entries do not overflow
/// or underflow the intermediate powers. Summation runs in index order.
double lp_norm(const TruncatedSeq& x, const Exponent& p);

/// (sum W_i |x_i|^p)^{1/p}. For p = inf the weight is ignored and the sup norm
/// is returned. LengthMismatch if W and x differ in length, InvalidArgument if
/// W has a non-positive entry.
double weighted_lp_norm(const TruncatedSeq& x, const Exponent& p, const TruncatedSeq& weight);

/// Dyadic block (m, first, last) with first <= last, indices in Z.
struct KelloggBlock {
  int m;
  long first;
  long last;
};

/// Disjoint dyadic blocks meeting the window -M..M, in increasing m.
/// I(0) = {0}; I(1) = {1, 2}; I(m) = {2^{m-1}+1 .. 2^m} for m >= 2; negative
/// blocks mirror the positive ones. A block that crosses the window edge is
/// clipped to the window.
std::vector<KelloggBlock> kellogg_blocks(std::size_t half_width);

/// Mixed norm (sum_m (sum_{k in I(m)} |l_k|^p)^{q/p})^{1/q} with the usual
/// max conventions at p = inf or q = inf. DomainMismatch unless ZSYM.
double kellogg_norm(const TruncatedSeq& lambda, const Exponent& p, const Exponent& q);

struct DualNormResult {
  double value = 0.0;
  TruncatedSeq extremizer;
};

/// sup { sum f_i c_i : ||f||_s <= 1 } = ||c||_{s'} together with a unit
/// vector f of l^s attaining it. For s = 1 the extremizer is a signed unit
/// vector at the first index of maximal |c_i|; for s = inf it is sign(c).
DualNormResult dual_norm(const TruncatedSeq& c, const Exponent& s);

/// Norm dispatch on a space descriptor.
double norm_in(const TruncatedSeq& x, const SeqSpaceSpec& space);

}  // namespace strongfact
