#include "cislope/singularity.hpp"

#include <stdexcept>

namespace cislope {

namespace {

// gmpxx has no long long overloads; inputs are validated CLI integers, so
// the narrowing cast is exact on this platform.
BigInt big(long long x) {
    return BigInt(static_cast<long>(x));
}

long long narrowed(const BigInt& x, const char* what) {
    if (!x.fits_slong_p()) {
        throw domain_error(std::string(what) + " out of range");
    }
    return x.get_si();
}

} // namespace

void SingularityInput::validate() const {
    if (emb_dim < 3) {
        throw std::invalid_argument("SingularityInput: embedding dimension must be >= 3");
    }
    if (pg < 0) {
        throw std::invalid_argument("SingularityInput: geometric genus must be >= 0");
    }
    if (exc_count < 1) {
        throw std::invalid_argument("SingularityInput: need at least one exceptional curve");
    }
    if (mu0 < 0) {
        throw std::invalid_argument("SingularityInput: nullity must be >= 0");
    }
    // The nullity and twice the geometric genus bound each other; data
    // violating that cannot come from a smoothing.
    if (2 * pg - mu0 < 0) {
        throw domain_error("inconsistent resolution data: nullity exceeds twice the "
                           "geometric genus");
    }
}

long long exceptional_euler_number(long long exc_count, long long mu0) {
    return exc_count + 1 - mu0;
}

long long milnor_number(long long pg, long long k2, long long chi_top) {
    const BigInt mu = 12 * big(pg) + big(k2) + big(chi_top) - 1;
    if (mu < 0) {
        throw domain_error("negative Milnor number: resolution data inconsistent");
    }
    return narrowed(mu, "Milnor number");
}

SignatureReport signature_decomposition(const SingularityInput& input) {
    input.validate();
    SignatureReport out;
    out.chi_top = exceptional_euler_number(input.exc_count, input.mu0);
    out.mu = milnor_number(input.pg, input.k2, out.chi_top);
    out.mu_zero = input.mu0;
    out.mu_plus = 2 * input.pg - input.mu0; // validate() guarantees >= 0
    out.mu_minus = out.mu - out.mu_plus - out.mu_zero;
    if (out.mu_minus < 0) {
        throw domain_error("negative eigenvalue count: resolution data inconsistent");
    }
    out.sigma = out.mu_plus - out.mu_minus;
    return out;
}

Rational durfee_bound(int emb_dim, long long pg, long long exc_count) {
    if (emb_dim < 3) {
        throw std::invalid_argument("durfee_bound: embedding dimension must be >= 3");
    }
    return Rational(-8 * big(pg), 3 * emb_dim - 5) - Rational(big(exc_count));
}

Rational margin_closed_form(const SingularityInput& input) {
    input.validate();
    return Rational(big(input.k2)) +
           Rational(24 * (input.emb_dim - 2) * big(input.pg), 3 * input.emb_dim - 5);
}

SignatureReport check_bound(const SingularityInput& input) {
    SignatureReport out = signature_decomposition(input);
    out.bound = durfee_bound(input.emb_dim, input.pg, input.exc_count);
    const Rational sigma(big(out.sigma));
    out.satisfied = sigma <= out.bound;
    out.equality = sigma == out.bound;
    out.margin = out.bound - sigma;

    // Same verdict through the genus-versus-Milnor form:
    //   12(n-1)/(3n-5) pg <= mu + 1 - chi_top.
    const Rational lhs =
        Rational(12 * (input.emb_dim - 1) * big(input.pg), 3 * input.emb_dim - 5);
    const Rational rhs = Rational(big(out.mu)) + 1 - Rational(big(out.chi_top));
    if ((lhs <= rhs) != out.satisfied || (lhs == rhs) != out.equality) {
        throw std::logic_error("signature bound: equivalent forms disagree");
    }
    if (out.margin != margin_closed_form(input)) {
        throw std::logic_error("signature bound: margin routes disagree");
    }
    return out;
}

} // namespace cislope
