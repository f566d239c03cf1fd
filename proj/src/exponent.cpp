#include "strongfact/exponent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "strongfact/error.hpp"

namespace strongfact {

namespace {

using i128 = __int128;

bool fits_i64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Reduces num/den and returns an exact exponent, or a real one on overflow.
Exponent from_i128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (fits_i64(num) && fits_i64(den)) {
    return Exponent::rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
  }
  return Exponent::real(static_cast<double>(num) / static_cast<double>(den));
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Exponent Exponent::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "exponent with zero denominator");
  i128 n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n < d) {
    throw Error(ErrorCode::ExponentRange,
                "exponent " + std::to_string(num) + "/" + std::to_string(den) + " is below 1");
  }
  i128 g = gcd128(n, d);
  Exponent e;
  e.kind_ = Kind::Rational;
  e.num_ = static_cast<std::int64_t>(n / g);
  e.den_ = static_cast<std::int64_t>(d / g);
  e.real_ = static_cast<double>(e.num_) / static_cast<double>(e.den_);
  return e;
}

Exponent Exponent::real(double value) {
  if (std::isnan(value)) throw Error(ErrorCode::InvalidArgument, "exponent is NaN");
  if (std::isinf(value) && value > 0) return infinity();
  if (value < 1.0 - kTolerance) {
    throw Error(ErrorCode::ExponentRange, "exponent " + std::to_string(value) + " is below 1");
  }
  Exponent e;
  e.kind_ = Kind::Real;
  e.real_ = std::max(value, 1.0);
  return e;
}

Exponent Exponent::infinity() noexcept {
  Exponent e;
  e.kind_ = Kind::Infinite;
  e.num_ = 0;
  e.den_ = 0;
  e.real_ = std::numeric_limits<double>::infinity();
  return e;
}

Exponent Exponent::parse(std::string_view text) {
  std::string s = trim(text);
  std::string lower;
  for (char c : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "inf" || lower == "infinity" || lower == "+inf") return infinity();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::int64_t num = 0, den = 0;
    if (!parse_int(std::string_view(s).substr(0, slash), num) ||
        !parse_int(std::string_view(s).substr(slash + 1), den)) {
      throw Error(ErrorCode::ParseError, "malformed rational exponent '" + s + "'");
    }
    return rational(num, den);
  }

  std::int64_t whole = 0;
  if (parse_int(s, whole)) return rational(whole, 1);

  // Plain decimal "a.b" becomes an exact rational; anything else goes through strtod.
  if (auto dot = s.find('.'); dot != std::string::npos && s.find_first_of("eE") == std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    std::int64_t num = 0;
    if (frac <= 15 && parse_int(digits, num)) {
      i128 den = 1;
      for (std::size_t i = 0; i < frac; ++i) den *= 10;
      return from_i128(num, den);
    }
  }

  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw Error(ErrorCode::ParseError, "malformed exponent '" + s + "'");
  }
  return real(v);
}

double Exponent::value() const noexcept { return real_; }

std::string Exponent::to_string() const {
  switch (kind_) {
    case Kind::Infinite: return "inf";
    case Kind::Rational:
      return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    case Kind::Real: {
      std::ostringstream os;
      os.precision(17);
      os << real_;
      return os.str();
    }
  }
  return "?";
}

bool operator==(const Exponent& a, const Exponent& b) noexcept {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  if (a.kind_ == Exponent::Kind::Rational && b.kind_ == Exponent::Kind::Rational) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  return std::abs(a.real_ - b.real_) <= Exponent::kTolerance * std::max(1.0, std::abs(b.real_));
}

bool operator<(const Exponent& a, const Exponent& b) noexcept {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  if (a.kind_ == Exponent::Kind::Rational && b.kind_ == Exponent::Kind::Rational) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  return !(a == b) && a.real_ < b.real_;
}

Exponent conjugate(const Exponent& p) {
  switch (p.kind_) {
    case Exponent::Kind::Infinite: return Exponent::rational(1);
    case Exponent::Kind::Rational:
      if (p.num_ == p.den_) return Exponent::infinity();
      return from_i128(p.num_, static_cast<i128>(p.num_) - p.den_);
    case Exponent::Kind::Real:
      if (p.real_ - 1.0 <= Exponent::kTolerance) return Exponent::infinity();
      return Exponent::real(p.real_ / (p.real_ - 1.0));
  }
  return Exponent::infinity();
}

Exponent multiplier_exponent(const Exponent& p, const Exponent& q) {
  if (p <= q) return Exponent::infinity();
  if (p.is_infinite()) return q;
  if (p.kind_ == Exponent::Kind::Rational && q.kind_ == Exponent::Kind::Rational) {
    // (a/b)(c/d) / (a/b - c/d) = ac / (ad - cb)
    i128 num = static_cast<i128>(p.num_) * q.num_;
    i128 den = static_cast<i128>(p.num_) * q.den_ - static_cast<i128>(q.num_) * p.den_;
    return from_i128(num, den);
  }
  return Exponent::real(p.real_ * q.real_ / (p.real_ - q.real_));
}

}  // namespace strongfact
