#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "quadfunc/errors.hpp"

namespace quadfunc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored reduced: gcd(|num|, den) = 1 and
/// den >= 1. This is the only number type used by the math core; there is
/// no floating point anywhere downstream of it.
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(long long n) : v_(n) {}  // NOLINT: implicit by design
    BigRat(const BigInt& n) : v_(n) {}
    BigRat(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DomainError("BigRat: zero denominator");
        v_ = Rational(num) / Rational(den);
    }
    BigRat(long long num, long long den) : BigRat(BigInt(num), BigInt(den)) {}

    /// Accepts "p", "-p", "p/q".
    static BigRat parse(const std::string& text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    bool is_negative() const { return v_ < 0; }

    BigRat operator-() const { return BigRat(Rational(-v_)); }
    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw DomainError("BigRat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

    BigRat abs() const { return is_negative() ? -*this : *this; }
    BigRat pow(unsigned e) const;

    /// True when both numerator and denominator are perfect squares; if so
    /// `root` receives the positive square root.
    bool square_root(BigRat& root) const;

    /// "p" when integral, otherwise "p/q".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const BigRat& r);

private:
    using Rational = boost::multiprecision::cpp_rational;
    explicit BigRat(Rational v) : v_(std::move(v)) {}
    Rational v_;
};

}  // namespace quadfunc
