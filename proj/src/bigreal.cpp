#include "kshift/bigreal.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace kshift {

namespace {

int merged(const BigReal& a, const BigReal& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigReal::BigReal(int precision_bits) {
  mpfr_init2(value_, std::max<mpfr_prec_t>(precision_bits, MPFR_PREC_MIN));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(double value, int precision_bits) : BigReal(precision_bits) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const Index& value, int precision_bits) : BigReal(precision_bits) {
  mpfr_set_z(value_, value.mpz().get_mpz_t(), MPFR_RNDN);
}

BigReal::~BigReal() {
  if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  // Steal the limbs; leave `other` as an empty shell that the destructor skips.
  *value_ = *other.value_;
  other.value_->_mpfr_d = nullptr;
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    if (value_->_mpfr_d == nullptr) mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) {
    if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
    *value_ = *other.value_;
    other.value_->_mpfr_d = nullptr;
  }
  return *this;
}

BigReal BigReal::pi(int precision_bits) {
  BigReal r(precision_bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

BigReal BigReal::ln2(int precision_bits) {
  BigReal r(precision_bits);
  mpfr_const_log2(r.value_, MPFR_RNDN);
  return r;
}

BigReal BigReal::with_precision(int precision_bits) const {
  BigReal r(precision_bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string BigReal::to_string(int digits) const {
  const int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, value_);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
  return std::string(buf.data());
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  mpfr_prec_round(value_, merged(*this, rhs), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  mpfr_prec_round(value_, merged(*this, rhs), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  mpfr_prec_round(value_, merged(*this, rhs), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  mpfr_prec_round(value_, merged(*this, rhs), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal operator-(const BigReal& a) {
  BigReal r(a.precision());
  mpfr_neg(r.value_, a.value_, MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_sqrt(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigReal log(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_log(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigReal log2(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_log2(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigReal sin(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_sin(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigReal abs(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_abs(r.value_, x.value_, MPFR_RNDN);
  return r;
}

}  // namespace kshift
