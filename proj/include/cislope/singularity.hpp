#pragma once

#include "cislope/rational.hpp"

namespace cislope {

// Numerical data of a resolution of a normal surface singularity that
// smooths inside a complete intersection.
struct SingularityInput {
    int emb_dim = 3;        // embedding dimension, >= 3
    long long pg = 0;       // geometric genus, >= 0
    long long k2 = 0;       // self-intersection of the canonical cycle
    long long exc_count = 1; // irreducible exceptional curves, >= 1
    long long mu0 = 0;      // nullity of the intersection form on the Milnor lattice

    // Throws std::invalid_argument on violated ranges.
    void validate() const;
};

struct SignatureReport {
    long long mu = 0;       // Milnor number
    long long mu_plus = 0;  // positive eigenvalues of the intersection form
    long long mu_minus = 0; // negative eigenvalues
    long long mu_zero = 0;  // nullity
    long long sigma = 0;    // signature mu_plus - mu_minus
    long long chi_top = 0;  // Euler number of the exceptional set
    Rational bound;         // upper bound -8pg/(3n-5) - exc_count for sigma
    bool satisfied = false; // sigma <= bound
    bool equality = false;  // sigma == bound
    Rational margin;        // bound - sigma = k2 + 24(n-2)/(3n-5) pg
};

// Euler number of the exceptional configuration: exc_count + 1 - mu0
// (each blown-down cycle of curves costs one independent homology class).
long long exceptional_euler_number(long long exc_count, long long mu0);

// mu = 12 pg + k2 + chi_top - 1. Throws domain_error when negative.
long long milnor_number(long long pg, long long k2, long long chi_top);

// mu_plus = 2 pg - mu0, mu_minus = mu - mu_plus - mu0, sigma, chi_top.
// Throws domain_error when any eigenvalue count comes out negative
// (inconsistent resolution data). Bound fields are left empty.
SignatureReport signature_decomposition(const SingularityInput& input);

// -8 pg / (3 emb_dim - 5) - exc_count.
Rational durfee_bound(int emb_dim, long long pg, long long exc_count);

// Full report: decomposition plus the bound, the verdict and the margin.
// The margin is recomputed from the closed form
// k2 + 24(emb_dim-2)/(3 emb_dim-5) * pg and both routes must agree;
// disagreement throws std::logic_error.
SignatureReport check_bound(const SingularityInput& input);

// bound - sigma without going through the decomposition.
Rational margin_closed_form(const SingularityInput& input);

} // namespace cislope
