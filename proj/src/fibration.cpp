#include "cislope/fibration.hpp"

#include <stdexcept>

#include "cislope/chow.hpp"
#include "cislope/combinatorics.hpp"

namespace cislope {

void FibrationConfig::validate() const {
    if (n < 2) {
        throw std::invalid_argument("FibrationConfig: n must be >= 2");
    }
    if (d < 2) {
        throw std::invalid_argument("FibrationConfig: d must be >= 2");
    }
    if (b < 0) {
        throw std::invalid_argument("FibrationConfig: base genus must be >= 0");
    }
    if (static_cast<int>(a.size()) != n - 1) {
        throw std::invalid_argument("FibrationConfig: expected n-1 twist degrees");
    }
}

BigInt FibrationConfig::eprime() const {
    return BigInt((n - 1) * d - (n + 1));
}

BigInt FibrationConfig::coeff_sum() const {
    BigInt s = 0;
    for (const BigInt& ai : a) {
        s += ai;
    }
    return s;
}

namespace {

BigInt eprime_of(int n, int d) {
    return BigInt(static_cast<long>(n - 1) * d - (n + 1));
}

BigInt bracket_of(int n, int d) {
    return BigInt(static_cast<long>(3 * n - 2) * d - (3 * n + 2));
}

} // namespace

Rational slope_bound(int n, int d) {
    if (n < 2 || d < 2) {
        throw std::invalid_argument("slope_bound: need n >= 2 and d >= 2");
    }
    const BigInt den = bracket_of(n, d);
    if (den == 0) {
        throw domain_error("slope bound undefined: denominator (3n-2)d - (3n+2) vanishes");
    }
    return Rational(24 * eprime_of(n, d), den);
}

BigInt genus(int n, int d) {
    if (n < 2 || d < 1) {
        throw std::invalid_argument("genus: need n >= 2 and d >= 1");
    }
    const BigInt twice = int_pow(d, n - 1) * eprime_of(n, d);
    // d^(n-1) * eprime is even for all integers n >= 2, d >= 1.
    return Rational(twice, 2).to_integer() + 1;
}

Rational slope_r(int n, int d) {
    return Rational(BigInt(d - 1) * bracket_of(n, d), 24);
}

BigInt chi_line_bundle(int n, int b, const BigInt& deg_e, const BigInt& d, const BigInt& a) {
    BigInt acc = binom_poly(d - 1, n) * (b - 1);
    acc += binom_poly(d, n + 1) * deg_e;
    acc += binom_poly(d - 1, n) * a;
    if (n % 2 == 0) {
        acc = -acc;
    }
    return acc;
}

ChiCoefficients chi_coefficients(int n, int d) {
    if (n < 2 || d < 1) {
        throw std::invalid_argument("chi_coefficients: need n >= 2 and d >= 1");
    }
    const BigInt bracket = bracket_of(n, d);
    ChiCoefficients out;
    out.a0 = Rational(int_pow(d, n - 1) * eprime_of(n, d), 2);
    out.a1 = Rational(bracket * int_pow(d, n - 1) * (d - 1) * (n - 1), 24);
    out.a2 = Rational(bracket * int_pow(d, n - 2) * (d - 1) * (n + 1), 24);
    return out;
}

InvariantReport invariants_closed(const FibrationConfig& cfg) {
    cfg.validate();
    const int n = cfg.n;
    const int d = cfg.d;
    const BigInt bracket_sum =
        BigInt(n - 1) * d * cfg.deg_e + BigInt(n + 1) * cfg.coeff_sum();
    const BigInt common = BigInt(d - 1) * int_pow(d, n - 2) * bracket_sum;

    InvariantReport out;
    out.k2 = Rational(eprime_of(n, d) * common);
    out.chi = Rational(bracket_of(n, d) * common, 24);
    out.genus = genus(n, d);
    if (bracket_of(n, d) != 0) {
        out.lambda = slope_bound(n, d);
        out.slope_equality = (out.k2 == *out.lambda * out.chi);
    }
    return out;
}

Rational k2_chow(const FibrationConfig& cfg) {
    cfg.validate();
    const RingSpec spec(cfg.n, cfg.deg_e);
    const Rational gamma_part =
        Rational(cfg.coeff_sum() + 2 * (cfg.b - 1) + cfg.deg_e);
    const ChowClass k_total = ChowClass::divisor(spec, Rational(cfg.eprime()), gamma_part);
    ChowClass acc = k_total * k_total;
    for (const BigInt& ai : cfg.a) {
        acc = acc * ChowClass::divisor(spec, cfg.d, Rational(ai));
    }
    const Rational k_x2 = acc.evaluate_top();
    const Rational base_term =
        Rational(4 * cfg.eprime() * int_pow(cfg.d, cfg.n - 1) * (cfg.b - 1));
    return k_x2 - base_term;
}

Rational chi_incl_excl(const FibrationConfig& cfg, const BigInt& twist) {
    cfg.validate();
    BigInt acc = 0;
    const unsigned long subsets = 1ul << cfg.a.size();
    for (unsigned long mask = 0; mask < subsets; ++mask) {
        BigInt d_part = -twist;
        BigInt a_part = 0;
        int bits = 0;
        for (size_t i = 0; i < cfg.a.size(); ++i) {
            if (mask & (1ul << i)) {
                d_part += cfg.d;
                a_part += cfg.a[i];
                ++bits;
            }
        }
        const BigInt term = chi_line_bundle(cfg.n, cfg.b, cfg.deg_e, d_part, a_part);
        if (bits % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return Rational(acc);
}

Rational pushforward_u(int n, int d, const BigInt& e) {
    const Rational r = slope_r(n, d);
    const Rational quad =
        Rational(e * e) - Rational(BigInt(n - 1) * d - n) * Rational(e) + 2 * (n - 1) * r;
    return Rational(int_pow(d, n - 1), 2) * quad;
}

Rational pushforward_v(int n, int d, const BigInt& e) {
    const Rational r = slope_r(n, d);
    const Rational quad =
        Rational(e * e) - Rational(BigInt(n) * d - (n + 1)) * Rational(e) + 2 * (n + 1) * r;
    return Rational(int_pow(d, n - 2), 2) * quad;
}

PushforwardCoefficients pushforward_uvr(int n, int d, int m) {
    if (n < 2 || d < 2 || m < 1) {
        throw std::invalid_argument("pushforward_uvr: need n >= 2, d >= 2, m >= 1");
    }
    const BigInt ep = eprime_of(n, d);
    if (ep <= 0) {
        throw domain_error("pushforward degrees undefined: relative canonical degree "
                           "(n-1)d - (n+1) is not positive");
    }
    PushforwardCoefficients out;
    out.e = m * ep;
    out.u = pushforward_u(n, d, out.e);
    out.v = pushforward_v(n, d, out.e);
    out.r = slope_r(n, d);
    return out;
}

} // namespace cislope
