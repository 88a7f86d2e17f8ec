#ifndef JCF_RATIONAL_HPP
#define JCF_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "jcf/error.hpp"

namespace jcf {

/// Arbitrary-precision rational scalar, always stored in lowest terms with a
/// positive denominator. Zero is uniquely 0/1. Immutable value semantics:
/// every operation returns a fresh value, so scalars can be shared freely
/// across threads.
class Rational {
  public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(n) {}
    Rational(long long n) : value_(static_cast<long>(n)) {}

    Rational(long long num, long long den) {
        if (den == 0) raise(Errc::division_by_zero, "rational with zero denominator");
        value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        value_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }
    explicit Rational(const mpz_class& z) : value_(z) {}

    /// Parse the canonical text forms "p" and "p/q" (q > 0). Throws
    /// Errc::parse_error on anything else.
    static Rational parse(std::string_view text);

    /// Canonical rendering: "p" for integers, "p/q" otherwise.
    std::string str() const;

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational inv() const {
        if (is_zero()) raise(Errc::division_by_zero, "inverse of zero");
        return Rational(mpq_class(1 / value_));
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ + b.value_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ - b.value_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ * b.value_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) raise(Errc::division_by_zero, "division by zero");
        return Rational(mpq_class(a.value_ / b.value_));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    const mpq_class& raw() const { return value_; }

  private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace jcf

#endif
