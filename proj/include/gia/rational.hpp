/*
 * Exact rational arithmetic over arbitrary-precision integers.
 *
 * Copyright 2026 The gia authors
 * Licensed under the Apache License, Version 2.0. See LICENSE for terms.
 */

#ifndef GIA_RATIONAL_HPP
#define GIA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace gia {

using Int = boost::multiprecision::cpp_int;

/// Exact fraction in canonical form: den > 0 and gcd(|num|, den) = 1 after
/// every construction and arithmetic operation. Comparison is exact
/// (cross-multiplication); nothing here ever rounds through a double.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(runtime/explicit)
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r(*this);
    r.num_ = -r.num_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Canonical form makes equality structural.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const Int lhs = a.num_ * b.den_;
    const Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Render with `digits` significant digits, round half to even, computed
  /// from the exact fraction. Fixed notation while the leading digit sits in
  /// [1e-4, 1e12); scientific ("d.dde-05") outside.
  std::string decimal(int digits = 6) const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    Int g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

namespace detail {

inline Int pow10(int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

// Decimal exponent of |num/den|, i.e. the e with 10^e <= |num/den| < 10^(e+1).
inline int decimal_exponent(const Int& num, const Int& den) {
  const Int a = boost::multiprecision::abs(num);
  const auto digits = [](const Int& x) {
    return static_cast<int>(x.str().size());
  };
  int e = digits(a) - digits(den);
  // a / den is within a factor of 10 of 10^e; settle by exact comparison.
  while ((e >= 0 && a < den * pow10(e)) || (e < 0 && a * pow10(-e) < den)) --e;
  while ((e + 1 >= 0 && a >= den * pow10(e + 1)) ||
         (e + 1 < 0 && a * pow10(-(e + 1)) >= den))
    ++e;
  return e;
}

}  // namespace detail

inline std::string Rational::decimal(int digits) const {
  if (digits < 1) throw std::domain_error("decimal: digits must be >= 1");
  if (num_ == 0) return "0";
  const bool neg = num_ < 0;
  const Int a = boost::multiprecision::abs(num_);
  int e = detail::decimal_exponent(a, den_);

  // Mantissa = round(|x| / 10^(e - digits + 1)), half to even.
  const int shift = digits - 1 - e;
  Int scaled_num = a;
  Int scaled_den = den_;
  if (shift >= 0)
    scaled_num *= detail::pow10(shift);
  else
    scaled_den *= detail::pow10(-shift);
  Int q = scaled_num / scaled_den;
  const Int r = scaled_num - q * scaled_den;
  const Int twice = r * 2;
  if (twice > scaled_den || (twice == scaled_den && (q & 1) == 1)) ++q;
  std::string mant = q.str();
  if (static_cast<int>(mant.size()) > digits) {  // rounded up to next power
    ++e;
    mant.resize(digits);
  }

  std::string out;
  if (e <= -5 || e >= 12) {
    out = mant.substr(0, 1);
    if (digits > 1) out += "." + mant.substr(1);
    out += e < 0 ? "e-" : "e+";
    const int ae = e < 0 ? -e : e;
    if (ae < 10) out += '0';
    out += std::to_string(ae);
  } else if (e >= digits - 1) {
    out = mant + std::string(e - digits + 1, '0');
  } else if (e >= 0) {
    out = mant.substr(0, e + 1) + "." + mant.substr(e + 1);
  } else {
    out = "0." + std::string(-e - 1, '0') + mant;
  }
  return neg ? "-" + out : out;
}

}  // namespace gia

#endif
