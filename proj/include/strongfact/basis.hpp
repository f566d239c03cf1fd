#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "strongfact/grid.hpp"
#include "strongfact/sequence.hpp"

namespace strongfact {

enum class BasisFamily { TrigReal, Legendre, Chebyshev1, Chebyshev2, Laguerre };

std::string_view to_string(BasisFamily family) noexcept;
BasisFamily parse_basis_family(std::string_view name);

/// An orthonormal family (phi_n), n = 1..count, together with the interval
/// and orthogonality weight the family implies.
///
///   TrigReal     [-pi, pi]  w = 1            1/sqrt(2pi), cos(kx)/sqrt(pi), sin(kx)/sqrt(pi)
///   Legendre     [-1, 1]    w = 1            sqrt((2k+1)/2) P_k
///   Chebyshev1   [-1, 1]    w = (1-x^2)^-1/2 T_0/sqrt(pi), sqrt(2/pi) T_k
///   Chebyshev2   [-1, 1]    w = (1-x^2)^1/2  sqrt(2/pi) U_k
///   Laguerre     (0, inf)   w = e^-x         L_k
///
/// phi_n is the polynomial of degree n-1 for the polynomial families.
struct BasisSpec {
  BasisFamily family = BasisFamily::TrigReal;
  std::size_t count = 1;

  BasisSpec(BasisFamily f, std::size_t n);

  double lower() const noexcept;
  double upper() const noexcept;
  double weight(double x) const;
  bool weighted() const noexcept;

  /// Grid on which the family's integrals are resolved to near machine precision
  /// for the degrees used here (512 nodes for the trigonometric system).
  GridPtr default_grid() const;
};

/// phi_n(x), 1 <= n <= spec.count (IndexOutOfRange otherwise).
double eval_basis(const BasisSpec& spec, std::size_t n, double x);

/// a_n = integral f phi_n w dx, n = 1..N: coordinates of f in the weighted
/// orthonormal system. DomainMismatch if f's grid is not on the family's interval.
TruncatedSeq fourier_coeffs(const GridFunction& f, const BasisSpec& spec, std::size_t N);

/// Coefficients against b_n = w^{1/2} phi_n, the orthonormal basis of the
/// unweighted L^2 on the family's interval: integral f w^{1/2} phi_n dx.
/// This is the Fourier operator of that basis; it equals fourier_coeffs when w = 1.
TruncatedSeq basis_operator_coeffs(const GridFunction& f, const BasisSpec& spec, std::size_t N);

/// The weight w and the multiplier h = w^{1/2} that turn fourier_coeffs into a
/// representing operator. Unweighted families return w = h = 1 with trivial = true.
struct RepresentingSetup {
  std::function<double(double)> weight;
  std::function<double(double)> multiplier;
  bool trivial = false;
};

RepresentingSetup representing_setup(const BasisSpec& spec);

/// sum_k c_k phi_k on the given grid (c is NAT1, k = 1..c.size()).
GridFunction synthesize(const TruncatedSeq& coeffs, const BasisSpec& spec, GridPtr grid);

/// Trigonometric polynomial of degree <= degree with coefficients uniform in
/// [-1, 1] on phi_1..phi_{2 degree + 1}; the coefficient vector is returned too.
struct RandomTrigPolynomial {
  TruncatedSeq coeffs;
  GridFunction f;
};
RandomTrigPolynomial random_trig_polynomial(std::size_t degree, std::uint64_t seed, GridPtr grid);

}  // namespace strongfact
