#pragma once

#include "cislope/rational.hpp"

namespace cislope {

BigInt factorial(unsigned long k);

// Binomial coefficient as the polynomial x(x-1)...(x-k+1)/k!, defined for
// every integer x, negative tops included. binom_poly(-1, 3) == -1.
BigInt binom_poly(const BigInt& x, unsigned long k);

// sigma(m, l) = sum_{k=0}^{m} (-1)^k C(m,k) k^l, with the convention 0^0 = 1.
// Vanishes whenever m > l.
BigInt sigma_direct(unsigned long m, unsigned long l);

// Same quantity through the closed forms at l = m, m+1, m+2 (and zero for
// m > l). Throws std::invalid_argument when l > m + 2.
BigInt sigma_closed(unsigned long m, unsigned long l);

// Same quantity through sigma(m,l) = m*(sigma(m,l-1) - sigma(m-1,l-1)).
BigInt sigma_recursive(unsigned long m, unsigned long l);

} // namespace cislope
