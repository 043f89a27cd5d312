#include "cislope/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace cislope {

BigInt factorial(unsigned long k) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

BigInt binom_poly(const BigInt& x, unsigned long k) {
    BigInt num = 1;
    for (unsigned long i = 0; i < k; ++i) {
        num *= x - static_cast<long>(i);
    }
    // The falling factorial of an integer is always divisible by k!.
    BigInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), factorial(k).get_mpz_t());
    return out;
}

BigInt sigma_direct(unsigned long m, unsigned long l) {
    BigInt acc = 0;
    for (unsigned long k = 0; k <= m; ++k) {
        BigInt term = binom_poly(BigInt(static_cast<long>(m)), k);
        BigInt kpow;
        if (k == 0) {
            kpow = (l == 0) ? 1 : 0;
        } else {
            mpz_ui_pow_ui(kpow.get_mpz_t(), k, l);
        }
        term *= kpow;
        if (k % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

BigInt sigma_closed(unsigned long m, unsigned long l) {
    if (m > l) {
        return 0;
    }
    const BigInt mm(static_cast<long>(m));
    const BigInt sign = (m % 2 == 0) ? 1 : -1;
    if (l == m) {
        return sign * factorial(m);
    }
    if (l == m + 1) {
        // m(m+1) is even.
        return sign * Rational(mm * (mm + 1) * factorial(m), 2).to_integer();
    }
    if (l == m + 2) {
        // m(m+1)(m+2)(3m+1) is divisible by 24.
        return sign *
               Rational(mm * (mm + 1) * (mm + 2) * (3 * mm + 1) * factorial(m), 24).to_integer();
    }
    throw std::invalid_argument("sigma_closed: no closed form for l > m + 2");
}

BigInt sigma_recursive(unsigned long m, unsigned long l) {
    // row[j] = sigma(j, level) while walking level = 0..l.
    std::vector<BigInt> row(m + 1);
    row[0] = 1; // sigma(0, 0) = 0^0 = 1
    for (unsigned long j = 1; j <= m; ++j) {
        row[j] = 0; // sigma(j, 0) = (1 - 1)^j = 0
    }
    for (unsigned long level = 1; level <= l; ++level) {
        std::vector<BigInt> next(m + 1);
        next[0] = 0; // only the k = 0 term survives and 0^l = 0 for l >= 1
        for (unsigned long j = 1; j <= m; ++j) {
            next[j] = static_cast<long>(j) * (row[j] - row[j - 1]);
        }
        row = std::move(next);
    }
    return row[m];
}

} // namespace cislope
