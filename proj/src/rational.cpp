#include "cislope/rational.hpp"

#include <ostream>

namespace cislope {

BigInt int_pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw domain_error("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

BigInt Rational::to_integer() const {
    if (!is_integer()) {
        throw domain_error("expected an integer, got " + str());
    }
    return v_.get_num();
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::operator-() const {
    Rational out;
    out.v_ = -v_;
    return out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw domain_error("division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace cislope
