#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>

#include "codim2/error.hpp"

namespace codim2 {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// High-precision real kernel: 80 significant decimal digits.
///
/// Closed-form Chern-root evaluations cancel terms of size up to rho^k, so
/// the kernel keeps a wide margin over the 50 digits that comparisons need.
using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<80>,
    boost::multiprecision::et_off>;

inline constexpr int kRealDigits = std::numeric_limits<Real>::digits10;

/// Transcendental comparisons closer than this abort instead of deciding.
inline const Real& precision_guard() {
  static const Real guard("1e-20");
  return guard;
}

inline Real pi() { return boost::math::constants::pi<Real>(); }

inline Real to_real(const BigInt& x) { return Real(x); }
inline Real to_real(const Rational& x) {
  return Real(boost::multiprecision::numerator(x)) /
         Real(boost::multiprecision::denominator(x));
}

inline bool is_integer(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

inline BigInt floor_sqrt(const BigInt& x) {
  if (x < 0) throw Error(ErrorKind::DomainError, "square root of a negative integer");
  return boost::multiprecision::sqrt(x);
}

inline bool is_perfect_square(const BigInt& x) {
  if (x < 0) return false;
  BigInt r = floor_sqrt(x);
  return r * r == x;
}

/// Floor division rounding toward negative infinity.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Exact decision of a * sqrt(k) <= b for integers a, b and k >= 0.
inline bool times_sqrt_le(const BigInt& a, const BigInt& k, const BigInt& b) {
  if (k < 0) throw Error(ErrorKind::DomainError, "negative radicand");
  if (a <= 0 && b >= 0) return true;
  if (a >= 0 && b < 0) return false;
  if (a > 0) return a * a * k <= b * b;
  // Both sides negative: |a| sqrt(k) >= |b|.
  return a * a * k >= b * b;
}

/// Exact decision of a * sqrt(k) < b.
inline bool times_sqrt_lt(const BigInt& a, const BigInt& k, const BigInt& b) {
  if (k < 0) throw Error(ErrorKind::DomainError, "negative radicand");
  if (a <= 0 && b > 0) return true;
  if (a >= 0 && b <= 0) return false;
  if (a > 0) return a * a * k < b * b;
  // a < 0 and b <= 0.
  return a * a * k > b * b;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

/// Fixed-point rendering with `digits` decimals.
inline std::string to_fixed(const Real& x, int digits = 6) {
  if (digits <= 0) {
    // Boost treats precision 0 as "all digits".
    return static_cast<BigInt>(boost::multiprecision::round(x)).str();
  }
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << x;
  std::string out = os.str();
  if (out.rfind("-0.", 0) == 0 && out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

/// Scientific rendering keeping `digits` significant digits.
inline std::string to_sci(const Real& x, int digits = 30) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

inline bool fits_int64(const BigInt& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

inline BigInt pow_int(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace codim2
