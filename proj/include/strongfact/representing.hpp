#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "strongfact/basis.hpp"
#include "strongfact/certificate.hpp"
#include "strongfact/factorization.hpp"
#include "strongfact/grid.hpp"
#include "strongfact/sequence.hpp"

namespace strongfact {

/// An operator from functions to coefficient sequences of length >= N.
using CoefficientOperator = std::function<TruncatedSeq(const GridFunction&)>;

/// Checks (T x)_j = g_j alpha_j(h x) for j <= N on `samples` seeded inputs.
///
/// alpha_j is the basis coefficient map of `basis` (basis_operator_coeffs, which
/// carries w^{1/2}). Inputs are random combinations of the first N + 4 basis
/// functions on the family's default grid, coefficients uniform in [-1, 1].
/// The witness is the worst entry of the worst sample.
///
/// ZeroDiagonal if some g_j = 0 with j <= N, LengthMismatch if g is shorter than N.
Certificate verify_representing(const CoefficientOperator& T, const BasisSpec& basis,
                                const std::function<double(double)>& h, const TruncatedSeq& g,
                                std::size_t samples, std::size_t N, double tol = kQuadratureTolerance,
                                std::uint64_t seed = 0);

/// The random inputs used by verify_representing, exposed for tests.
GridFunction representing_sample(const BasisSpec& basis, std::size_t N, std::uint64_t seed, std::size_t index);

}  // namespace strongfact
