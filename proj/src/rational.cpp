#include "qint/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qint {

namespace mp = boost::multiprecision;

BigRational::BigRational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::invalid_argument("BigRational: zero denominator");
  normalize();
}

void BigRational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = mp::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

BigRational BigRational::operator-() const {
  BigRational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) { return *this += -rhs; }

BigRational& BigRational::operator*=(const BigRational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.num_ == 0) throw std::invalid_argument("BigRational: division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::string BigRational::to_fraction_string() const {
  std::string out = num_.str();
  if (den_ != 1) out += "/" + den_.str();
  return out;
}

std::string BigRational::to_decimal_string(int digits) const {
  if (digits < 0) throw std::invalid_argument("BigRational: negative digit count");
  bool negative = num_ < 0;
  BigInt p = negative ? BigInt(-num_) : num_;

  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  BigInt scaled = p * scale;
  BigInt whole = scaled / den_;
  BigInt rem = scaled % den_;

  // Round half to even on the discarded remainder.
  BigInt twice = rem * 2;
  if (twice > den_ || (twice == den_ && (whole % 2) != 0)) whole += 1;

  std::string body = whole.str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits) {
      body.insert(0, std::string(digits + 1 - body.size(), '0'));
    }
    body.insert(body.size() - digits, ".");
  }
  return negative && whole != 0 ? "-" + body : body;
}

double BigRational::to_double() const {
  // Split into integer part plus a 64-bit-precision fraction so that huge
  // numerators and denominators cancel before any double conversion.
  BigInt q = num_ / den_;
  BigInt r = num_ % den_;
  BigInt scaled = (r << 64) / den_;
  return static_cast<double>(q) + std::ldexp(static_cast<double>(scaled), -64);
}

}  // namespace qint
