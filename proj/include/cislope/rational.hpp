#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "cislope/errors.hpp"

namespace cislope {

using BigInt = mpz_class;

// base^exp for a nonnegative exponent.
BigInt int_pow(const BigInt& base, unsigned long exp);

// Exact rational scalar. Always stored in lowest terms with positive
// denominator; every operation is exact. Division by zero throws
// domain_error. All quantities in this library are instances of this type
// or BigInt; nothing is ever rounded.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                 // NOLINT: implicit on purpose
    Rational(const BigInt& n) : v_(n) {}        // NOLINT: implicit on purpose
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    // The value as an integer; throws domain_error if the denominator is not 1.
    BigInt to_integer() const;

    // "p/q" in lowest terms, or just "p" when q == 1.
    std::string str() const;

    Rational operator-() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_; // canonical: lowest terms, positive denominator
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace cislope
