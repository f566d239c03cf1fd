#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace strongfact {

/// An extended exponent p in [1, inf].
///
/// Three representations coexist: the distinguished value infinity, an exact
/// reduced rational num/den, and a floating-point fallback for inputs that are
/// not given as rationals. Arithmetic on rationals stays exact as long as the
/// intermediate products fit in 64 bits, otherwise the result degrades to a
/// floating-point exponent. Floating comparisons use kTolerance.
class Exponent {
 public:
  enum class Kind { Rational, Real, Infinite };

  static constexpr double kTolerance = 1e-12;

  /// Exponent 1.
  Exponent() = default;

  static Exponent rational(std::int64_t num, std::int64_t den = 1);
  static Exponent real(double value);
  static Exponent infinity() noexcept;

  /// Accepts "inf", "infinity", integers, "a/b" and finite decimals.
  /// Decimals are converted to exact rationals.
  static Exponent parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }
  bool is_finite() const noexcept { return kind_ != Kind::Infinite; }
  bool is_exact() const noexcept { return kind_ != Kind::Real; }

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  /// +inf for the infinite exponent.
  double value() const noexcept;

  /// "inf", "4/3", "2" or a shortest round-trip decimal.
  std::string to_string() const;

  friend bool operator==(const Exponent& a, const Exponent& b) noexcept;
  friend bool operator<(const Exponent& a, const Exponent& b) noexcept;
  friend bool operator<=(const Exponent& a, const Exponent& b) noexcept { return !(b < a); }
  friend bool operator>(const Exponent& a, const Exponent& b) noexcept { return b < a; }
  friend bool operator>=(const Exponent& a, const Exponent& b) noexcept { return !(a < b); }

 private:
  Kind kind_ = Kind::Rational;
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
  double real_ = 1.0;

  friend Exponent conjugate(const Exponent& p);
  friend Exponent multiplier_exponent(const Exponent& p, const Exponent& q);
};

/// p' with 1/p + 1/p' = 1; conjugate(1) = inf and conjugate(inf) = 1.
Exponent conjugate(const Exponent& p);

/// s_pq, the exponent for which the multipliers from l^p into l^q are l^{s_pq}:
///   pq/(p-q)  if 1 <= q < p < inf,
///   q         if 1 <= q < p = inf,
///   inf       if p <= q.
Exponent multiplier_exponent(const Exponent& p, const Exponent& q);

}  // namespace strongfact
