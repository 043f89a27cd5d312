#pragma once

#include <optional>
#include <vector>

#include "cislope/rational.hpp"

namespace cislope {

// A family of complete-intersection curves: n-1 relative hypersurfaces of
// degree d inside a P^n-bundle over a base curve of genus b. deg_e is the
// degree of the bundle and a lists the n-1 twist degrees of the defining
// divisors d*T + a_i*G.
struct FibrationConfig {
    int n = 2;
    int d = 2;
    int b = 0;
    BigInt deg_e = 0;
    std::vector<BigInt> a;

    // Throws std::invalid_argument unless n >= 2, d >= 2, b >= 0 and a has
    // exactly n-1 entries.
    void validate() const;

    BigInt eprime() const;   // (n-1)d - (n+1)
    BigInt coeff_sum() const;
};

struct InvariantReport {
    Rational k2;  // relative canonical self-intersection
    Rational chi; // relative Euler characteristic
    BigInt genus; // fiber genus
    // Undefined exactly when the slope denominator vanishes, i.e. (n,d)=(2,2).
    std::optional<Rational> lambda;
    // k2 == lambda * chi; present whenever lambda is.
    std::optional<bool> slope_equality;
};

// Sharp lower bound 24((n-1)d - (n+1)) / ((3n-2)d - (3n+2)) for the slope of
// these families. Throws domain_error when the denominator vanishes.
Rational slope_bound(int n, int d);

// Genus of a smooth complete intersection of n-1 degree-d hypersurfaces in
// P^n: d^(n-1)((n-1)d - (n+1))/2 + 1.
BigInt genus(int n, int d);

// (d-1)((3n-2)d - (3n+2))/24; chi equals 24*r/(coefficient of the bracket),
// and the slope bound equals (d-1)*eprime/r when both are defined.
Rational slope_r(int n, int d);

// Euler characteristic on the bundle of O(-(d*T + a*G)) over a genus-b
// base:
//   (-1)^(n+1) * (C(d-1, n)(b-1) + C(d, n+1) deg_e + C(d-1, n) a),
// binomials in the polynomial sense. d = a = 0 recovers 1 - b.
BigInt chi_line_bundle(int n, int b, const BigInt& deg_e, const BigInt& d, const BigInt& a);

// chi(O_X) = a0*(b-1) + a1*deg_e + a2*sum(a_i) for the surface X.
struct ChiCoefficients {
    Rational a0; // d^(n-1)((n-1)d - (n+1))/2, also g - 1
    Rational a1; // ((3n-2)d - (3n+2))/24 * d^(n-1)(d-1)(n-1)
    Rational a2; // ((3n-2)d - (3n+2))/24 * d^(n-2)(d-1)(n+1)
};
ChiCoefficients chi_coefficients(int n, int d);

// k2 and chi from the closed formulas, plus genus, slope bound and the slope
// equality check. Exact throughout.
InvariantReport invariants_closed(const FibrationConfig& cfg);

// k2 recomputed by intersection theory on the bundle: expand
// (eprime*T + (sum a + 2b - 2 + deg_e)G)^2 * prod(dT + a_i G) and correct by
// the base term 4*eprime*d^(n-1)*(b-1).
Rational k2_chow(const FibrationConfig& cfg);

// chi(O_X(twist * T)) by inclusion-exclusion over the defining divisors:
//   sum_S (-1)^|S| chi_line_bundle(n, b, deg_e, |S|d - twist, sum_{i in S} a_i).
// twist = 0 gives chi(O_X) = chi + (g-1)(b-1).
Rational chi_incl_excl(const FibrationConfig& cfg, const BigInt& twist = 0);

// Degree of the pushforward of O_X(e) as a linear function
//   u * deg_fl + v * sum(a_i)
// of the bundle data, for any integer twist e.
Rational pushforward_u(int n, int d, const BigInt& e);
Rational pushforward_v(int n, int d, const BigInt& e);

struct PushforwardCoefficients {
    Rational u;
    Rational v;
    Rational r;
    BigInt e; // m * eprime
};

// u, v evaluated at e = m*eprime. Throws domain_error when eprime <= 0
// (degenerate fiber genus; no positive multiple of the relative canonical
// degree exists).
PushforwardCoefficients pushforward_uvr(int n, int d, int m);

} // namespace cislope
