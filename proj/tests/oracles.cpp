#include "oracles.hpp"

#include <stdexcept>

#include "cislope/combinatorics.hpp"

namespace cislope::oracles {

ChiCoefficients a_coeffs_bruteforce(int n, int d) {
    if (n < 2) {
        throw std::invalid_argument("a_coeffs_bruteforce: need n >= 2");
    }
    ChiCoefficients out;
    for (int k = 0; k <= n - 1; ++k) {
        const long sign = ((n + k + 1) % 2 == 0) ? 1 : -1;
        const BigInt choose = binom_poly(n - 1, k);
        const BigInt kd(static_cast<long>(k) * d);
        out.a0 += Rational(sign * choose * binom_poly(kd - 1, n));
        out.a1 += Rational(sign * choose * binom_poly(kd, n + 1));
        if (k >= 1) {
            out.a2 += Rational(sign * binom_poly(n - 2, k - 1) * binom_poly(kd - 1, n));
        }
    }
    return out;
}

namespace {

void enumerate_multisets(int slots, int remaining, std::vector<int>& exponents,
                         const std::vector<BigInt>& degrees, BigInt& acc) {
    if (slots == 1) {
        exponents.push_back(remaining);
        BigInt contribution = 0;
        for (size_t i = 0; i < exponents.size(); ++i) {
            contribution += exponents[i] * degrees[i];
        }
        acc += contribution;
        exponents.pop_back();
        return;
    }
    for (int take = 0; take <= remaining; ++take) {
        exponents.push_back(take);
        enumerate_multisets(slots - 1, remaining - take, exponents, degrees, acc);
        exponents.pop_back();
    }
}

} // namespace

BigInt deg_sym_splitting(int m, int rank, const BigInt& deg_e) {
    if (m < 0 || rank < 1) {
        throw std::invalid_argument("deg_sym_splitting: need m >= 0 and rank >= 1");
    }
    // Any split with the right total degree works; make it non-symmetric so
    // the check does not pass by accident of symmetry.
    std::vector<BigInt> degrees;
    BigInt assigned = 0;
    for (int i = 0; i + 1 < rank; ++i) {
        degrees.emplace_back(i + 1);
        assigned += i + 1;
    }
    degrees.push_back(deg_e - assigned);

    BigInt acc = 0;
    std::vector<int> exponents;
    enumerate_multisets(rank, m, exponents, degrees, acc);
    return acc;
}

Rational pushforward_degree_rr(const FibrationConfig& cfg, const BigInt& e) {
    cfg.validate();
    if (e < BigInt(static_cast<long>(cfg.n - 1) * cfg.d)) {
        throw domain_error("pushforward_degree_rr: twist below the vanishing guard");
    }
    BigInt rank = 0;
    for (int k = 0; k <= cfg.n - 1; ++k) {
        const BigInt value =
            binom_poly(cfg.n - 1, k) * binom_poly(e - k * cfg.d + cfg.n, cfg.n);
        if (k % 2 == 0) {
            rank += value;
        } else {
            rank -= value;
        }
    }
    const Rational chi = chi_incl_excl(cfg, e);
    return chi - Rational(rank * (1 - cfg.b));
}

namespace {

// Dense polynomial in T and G with G*G = 0, degrees 0..top, no top-degree
// normalization: coefficient pairs (pure T power, T power times G).
struct RawPoly {
    int top;
    std::vector<Rational> t;
    std::vector<Rational> g;

    explicit RawPoly(int top_) : top(top_), t(top_ + 1), g(top_ + 1) {}
};

RawPoly raw_mul(const RawPoly& a, const RawPoly& b) {
    RawPoly out(a.top);
    for (int i = 0; i <= a.top; ++i) {
        for (int j = 0; i + j <= a.top; ++j) {
            out.t[i + j] += a.t[i] * b.t[j];
            out.g[i + j] += a.t[i] * b.g[j] + a.g[i] * b.t[j];
        }
    }
    return out;
}

RawPoly raw_exp_neg(const RawPoly& rho) {
    RawPoly out(rho.top);
    out.t[0] = 1;
    RawPoly minus(rho.top);
    for (int k = 0; k <= rho.top; ++k) {
        minus.t[k] = -rho.t[k];
        minus.g[k] = -rho.g[k];
    }
    RawPoly power(rho.top);
    power.t[0] = 1;
    for (int k = 1; k <= rho.top; ++k) {
        power = raw_mul(power, minus);
        const Rational inv_fact = Rational(1) / Rational(factorial(k));
        for (int degree = 0; degree <= rho.top; ++degree) {
            out.t[degree] += power.t[degree] * inv_fact;
            out.g[degree] += power.g[degree] * inv_fact;
        }
    }
    return out;
}

} // namespace

ChowClass koszul_ch_bruteforce(const std::vector<ChowClass>& rhos) {
    if (rhos.empty() || rhos.size() > 20) {
        throw std::invalid_argument("koszul_ch_bruteforce: bad input size");
    }
    const RingSpec& spec = rhos.front().spec();
    const int top = spec.n + 1;

    RawPoly acc(top);
    const unsigned long subsets = 1ul << rhos.size();
    for (unsigned long mask = 0; mask < subsets; ++mask) {
        RawPoly sum(top);
        int bits = 0;
        for (size_t i = 0; i < rhos.size(); ++i) {
            if (mask & (1ul << i)) {
                sum.t[1] += rhos[i].t(1);
                sum.g[1] += rhos[i].g(1);
                ++bits;
            }
        }
        const RawPoly term = raw_exp_neg(sum);
        const Rational sign = (bits % 2 == 0) ? 1 : -1;
        for (int degree = 0; degree <= top; ++degree) {
            acc.t[degree] += term.t[degree] * sign;
            acc.g[degree] += term.g[degree] * sign;
        }
    }

    ChowClass out(spec);
    for (int degree = 0; degree <= top; ++degree) {
        if (!acc.t[degree].is_zero()) {
            out += ChowClass::monomial(spec, degree, false, acc.t[degree]);
        }
        if (degree >= 1 && !acc.g[degree].is_zero()) {
            out += ChowClass::monomial(spec, degree - 1, true, acc.g[degree]);
        }
    }
    return out;
}

} // namespace cislope::oracles
