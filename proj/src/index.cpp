#include "kshift/index.hpp"

#include <limits>
#include <stdexcept>

namespace kshift {

Index::Index(std::int64_t value) {
  // mpz_class has no int64 constructor on every platform; go through the C API.
  if (value >= std::numeric_limits<long>::min() && value <= std::numeric_limits<long>::max()) {
    value_ = static_cast<long>(value);
  } else {
    value_ = mpz_class(std::to_string(value), 10);
  }
}

Index Index::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty index literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("index literal has no digits: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed index literal: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Index(mpz_class(s, 10));
}

Index Index::pow2(std::uint64_t exponent) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, exponent);
  return Index(std::move(v));
}

std::uint64_t Index::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

bool Index::is_power_of_two() const {
  if (is_zero()) return false;
  mpz_class a = ::abs(value_);
  return mpz_popcount(a.get_mpz_t()) == 1;
}

bool Index::fits_int64() const {
  static_assert(sizeof(long) == 8, "Index assumes LP64");
  return mpz_fits_slong_p(value_.get_mpz_t()) != 0;
}

std::int64_t Index::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("index " + to_string() + " does not fit in 64 bits");
  return mpz_get_si(value_.get_mpz_t());
}

}  // namespace kshift
