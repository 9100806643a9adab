#pragma once

#include <string>

#include <mpfr.h>

#include "kshift/index.hpp"

namespace kshift {

/// Minimal value-semantic wrapper over an MPFR float with an explicit
/// precision. Binary operations round to the larger operand precision.
class BigReal {
 public:
  explicit BigReal(int precision_bits = 80);
  BigReal(double value, int precision_bits);
  BigReal(const Index& value, int precision_bits);
  ~BigReal();

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;

  static BigReal pi(int precision_bits);
  static BigReal ln2(int precision_bits);

  int precision() const { return static_cast<int>(mpfr_get_prec(value_)); }
  /// Copy rounded to a new precision.
  BigReal with_precision(int precision_bits) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 20) const;

  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  friend BigReal operator-(const BigReal& a);

  friend BigReal sqrt(const BigReal& x);
  friend BigReal log(const BigReal& x);
  friend BigReal log2(const BigReal& x);
  friend BigReal sin(const BigReal& x);
  friend BigReal abs(const BigReal& x);

  friend int compare(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.value_, b.value_); }
  friend bool operator<(const BigReal& a, const BigReal& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return compare(a, b) > 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return compare(a, b) >= 0; }
  friend bool operator==(const BigReal& a, const BigReal& b) { return compare(a, b) == 0; }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

}  // namespace kshift
