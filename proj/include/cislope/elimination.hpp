#pragma once

#include <map>
#include <string>
#include <string_view>

#include "cislope/rational.hpp"

namespace cislope {

// A linear relation sum_v coeff(v) * v + constant = 0 among named quantities.
// Variables with no stored coefficient are zero; zero coefficients are not
// stored, so equality is plain map comparison.
class LinearForm {
public:
    Rational coeff(std::string_view name) const;
    void set(const std::string& name, const Rational& value);
    Rational constant() const { return constant_; }
    void set_constant(const Rational& value) { constant_ = value; }

    // *this += factor * other (constant included).
    void add_scaled(const LinearForm& other, const Rational& factor);
    LinearForm scaled(const Rational& factor) const;

    bool is_zero() const;
    const std::map<std::string, Rational, std::less<>>& coefficients() const {
        return coeffs_;
    }

    bool operator==(const LinearForm& o) const {
        return coeffs_ == o.coeffs_ && constant_ == o.constant_;
    }

private:
    std::map<std::string, Rational, std::less<>> coeffs_;
    Rational constant_;
};

// Variable names shared by the two relations below:
//   K2      relative canonical self-intersection of the family
//   chi     relative Euler characteristic
//   degfL   degree of the pushforward bundle
//   c       number of nodes of the image curve
//   ell     degree of the vertical correction divisor
//   EC      intersection of the exceptional divisor with the curve class
//   deltaPa twice the arithmetic-genus drop of the image curve

// Comparing the arithmetic genus of a general member with its image of
// degree m under the pluricanonical map (e = m * eprime):
//   deltaPa - (dm/eprime) K2 + d^(n-1)e(d-1) degfL
//     + d^(n-1)(eprime+2d) c + d^(n-1)(eprime+d) ell + EC = 0.
// Requires eprime > 0.
LinearForm genus_drop_form(int n, int d, int m);

// Degree of the pushforward computed two ways:
//   (m(m-1)/2 - m^2 v/(d^(n-2) e^2)) K2 + chi
//     + (2dv/e - (1 - 1/(2m)) d^(n-1) e) c + (dv/e - 1) ell
//     - (u - dv) degfL = 0.
// Requires eprime > 0. When u - dv = 0 the relation still holds but cannot
// be solved for degfL; eliminate() reports that case instead of dividing.
LinearForm pushforward_degree_form(int n, int d, int m);

// K2 = lambda_coeff*chi + p1*deltaPa + p2*ell + p3*EC + c_coeff*c after
// eliminating degfL between the two relations.
struct EliminationCoefficients {
    Rational lambda_coeff;
    Rational p1;
    Rational p2;
    Rational p3;
    Rational c_coeff;
    int m = 0;
};

// Eliminates degfL and solves for K2. Throws domain_error when eprime <= 0,
// when u - dv = 0 (elimination singular), or when the combined K2
// coefficient vanishes. lambda_coeff always equals slope_bound(n, d).
EliminationCoefficients eliminate(int n, int d, int m);

} // namespace cislope
