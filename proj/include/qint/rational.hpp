#pragma once

/// Arbitrary-precision rationals, always in lowest terms with a positive
/// denominator.  Backed by boost::multiprecision integers; this wrapper
/// pins down the invariants and the decimal formatting used at output
/// boundaries (round-half-even at an explicit digit count).

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

namespace qint {

using BigInt = boost::multiprecision::cpp_int;

class BigRational {
 public:
  BigRational() : num_(0), den_(1) {}
  BigRational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  BigRational(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRational&, const BigRational&) = default;
  friend std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs) {
    BigInt l = lhs.num_ * rhs.den_;
    BigInt r = rhs.num_ * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_integer() const { return den_ == 1; }

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_fraction_string() const;

  /// Fixed-point decimal with `digits` fractional digits, round-half-even.
  std::string to_decimal_string(int digits) const;

  double to_double() const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;  // > 0
};

}  // namespace qint
