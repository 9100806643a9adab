#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kshift {

/// Arbitrary-precision signed integer labelling basis vectors b_n, powers N
/// and the witness indices. Round-trips through decimal strings exactly.
class Index {
 public:
  Index() = default;
  Index(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit Index(mpz_class value) : value_(std::move(value)) {}

  /// Parses an optionally signed decimal literal; throws std::invalid_argument.
  static Index parse(std::string_view text);

  /// 2^exponent.
  static Index pow2(std::uint64_t exponent);

  std::string to_string() const { return value_.get_str(10); }

  const mpz_class& mpz() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  Index abs() const { return Index(mpz_class(::abs(value_))); }

  /// Number of bits in |n|; 0 for n = 0.
  std::uint64_t bit_length() const;

  /// True when |n| is an exact power of two (1, 2, 4, ...).
  bool is_power_of_two() const;

  bool fits_int64() const;
  /// Throws std::overflow_error when the value does not fit.
  std::int64_t to_int64() const;

  double to_double() const { return value_.get_d(); }

  Index& operator+=(const Index& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Index& operator-=(const Index& rhs) {
    value_ -= rhs.value_;
    return *this;
  }

  friend Index operator+(Index lhs, const Index& rhs) { return lhs += rhs; }
  friend Index operator-(Index lhs, const Index& rhs) { return lhs -= rhs; }
  friend Index operator-(const Index& v) { return Index(mpz_class(-v.value_)); }

  friend bool operator==(const Index& a, const Index& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Index& a, const Index& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class value_{0};
};

}  // namespace kshift
