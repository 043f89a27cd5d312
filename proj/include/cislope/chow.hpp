#pragma once

#include <vector>

#include "cislope/rational.hpp"

namespace cislope {

// Numerical intersection ring of a P^n-bundle over a curve, generated by the
// tautological divisor T and the fiber class G with
//
//   G * G = 0,   T^n * G = [point],   T^(n+1) = deg_e * [point],
//
// and everything above degree n+1 truncated to zero. A class is stored as
// two coefficient channels per degree k: one for T^k and one for T^(k-1)G.
struct RingSpec {
    int n;        // fiber dimension, >= 2
    BigInt deg_e; // degree of the rank n+1 bundle

    RingSpec(int n_, BigInt deg_e_);
    bool operator==(const RingSpec& o) const { return n == o.n && deg_e == o.deg_e; }
};

class ChowClass {
public:
    explicit ChowClass(const RingSpec& spec); // the zero class

    static ChowClass one(const RingSpec& spec);
    // t*T + g*G
    static ChowClass divisor(const RingSpec& spec, const Rational& t, const Rational& g);
    // coeff * T^t_power * G^(gamma ? 1 : 0)
    static ChowClass monomial(const RingSpec& spec, int t_power, bool gamma,
                              const Rational& coeff = Rational(1));

    const RingSpec& spec() const { return spec_; }
    int top_degree() const { return spec_.n + 1; }

    // Coefficient of T^k, 0 <= k <= n+1.
    const Rational& t(int k) const;
    // Coefficient of T^(k-1)G, 1 <= k <= n+1.
    const Rational& g(int k) const;

    bool is_zero() const;
    bool is_homogeneous_of_degree(int k) const;

    // Multiplicity of the point class: in top degree T^(n+1) and T^n G are
    // proportional, so this is t(n+1)*deg_e + g(n+1).
    Rational evaluate_top() const;

    ChowClass& operator+=(const ChowClass& o);
    ChowClass& operator-=(const ChowClass& o);
    ChowClass& operator*=(const Rational& s);

    friend ChowClass operator+(ChowClass a, const ChowClass& b) { a += b; return a; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { a -= b; return a; }
    friend ChowClass operator*(ChowClass a, const Rational& s) { a *= s; return a; }
    friend ChowClass operator*(const Rational& s, ChowClass a) { a *= s; return a; }

    // Graded product with truncation above degree n+1.
    friend ChowClass operator*(const ChowClass& a, const ChowClass& b);

    // Equality as numerical classes: coefficients match degree by degree,
    // with the top degree compared after reduction to the point class.
    friend bool operator==(const ChowClass& a, const ChowClass& b);
    friend bool operator!=(const ChowClass& a, const ChowClass& b) { return !(a == b); }

private:
    void require_same_ring(const ChowClass& o) const;
    void reduce_top();

    RingSpec spec_;
    std::vector<Rational> t_; // t_[k] multiplies T^k
    std::vector<Rational> g_; // g_[k] multiplies T^(k-1)G, g_[0] unused
};

// exp(sign * d) truncated at the ring's top degree; d must be homogeneous of
// degree 1 (or zero).
ChowClass exp_class(const ChowClass& d, int sign = 1);

// Alternating sum over all subsets S of the given degree-1 classes:
//   sum_S (-1)^|S| exp(-sum_{i in S} rho_i).
// This is the Chern character of the Koszul resolution cutting out the
// common zero locus of sections with first Chern classes rho_i.
ChowClass koszul_ch(const std::vector<ChowClass>& rhos);

// Closed form of koszul_ch for n-1 degree-1 classes (a complete-intersection
// surface inside the bundle):
//   (1 - S1/2 + P2/4 + S2/6) * prod(rho_i),
// where S1 = sum rho_i, P2 = sum_{i<j} rho_i rho_j, S2 = sum rho_i^2.
ChowClass ch_ci_surface(const std::vector<ChowClass>& rhos);

// Closed form for n degree-1 classes (a complete-intersection curve):
//   (1 - S1/2) * prod(rho_i).
ChowClass ch_ci_curve(const std::vector<ChowClass>& rhos);

// Todd class of the relative tangent bundle of the P^n-bundle, truncated at
// degree n+1. Built from n+1 formal roots summing to (n+1)T - deg_e*G; only
// the sum matters because G*G = 0.
ChowClass todd_relative(const RingSpec& spec);

// Degree of the pushforward to the base of the twist O(e) on the
// complete-intersection surface cut out by divisors d*T + a_i*G, computed by
// Riemann-Roch on the bundle: top degree of ch * exp(eT) * todd.
// deg_fl is the degree of the bundle; a must have n-1 entries.
Rational grr_pushforward_degree(int n, int d, int e, const BigInt& deg_fl,
                                const std::vector<BigInt>& a);

} // namespace cislope
