#include "cislope/elimination.hpp"

#include <stdexcept>
#include <string>

#include "cislope/fibration.hpp"

namespace cislope {

Rational LinearForm::coeff(std::string_view name) const {
    const auto it = coeffs_.find(name);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void LinearForm::set(const std::string& name, const Rational& value) {
    if (value.is_zero()) {
        coeffs_.erase(name);
    } else {
        coeffs_[name] = value;
    }
}

void LinearForm::add_scaled(const LinearForm& other, const Rational& factor) {
    for (const auto& [name, value] : other.coeffs_) {
        set(name, coeff(name) + factor * value);
    }
    constant_ += factor * other.constant_;
}

LinearForm LinearForm::scaled(const Rational& factor) const {
    LinearForm out;
    out.add_scaled(*this, factor);
    return out;
}

bool LinearForm::is_zero() const {
    return coeffs_.empty() && constant_.is_zero();
}

namespace {

struct EliminationData {
    BigInt ep;
    BigInt e;
    Rational u;
    Rational v;
};

EliminationData elimination_data(int n, int d, int m, const char* who) {
    if (n < 2 || d < 2 || m < 1) {
        throw std::invalid_argument(std::string(who) + ": need n >= 2, d >= 2, m >= 1");
    }
    const PushforwardCoefficients uv = pushforward_uvr(n, d, m);
    EliminationData out;
    out.e = uv.e;
    out.ep = Rational(out.e, m).to_integer();
    out.u = uv.u;
    out.v = uv.v;
    return out;
}

} // namespace

LinearForm genus_drop_form(int n, int d, int m) {
    const EliminationData data = elimination_data(n, d, m, "genus_drop_form");
    const BigInt dn1 = int_pow(d, n - 1);
    LinearForm f;
    f.set("deltaPa", 1);
    // (d/e) m^2 = d m / eprime since e = m * eprime.
    f.set("K2", -Rational(BigInt(d) * m, data.ep));
    f.set("degfL", Rational(dn1 * data.e * (d - 1)));
    f.set("c", Rational(dn1 * (data.ep + 2 * d)));
    f.set("ell", Rational(dn1 * (data.ep + d)));
    f.set("EC", 1);
    return f;
}

LinearForm pushforward_degree_form(int n, int d, int m) {
    const EliminationData data = elimination_data(n, d, m, "pushforward_degree_form");
    const Rational e(data.e);
    const BigInt dn1 = int_pow(d, n - 1);
    const BigInt dn2 = int_pow(d, n - 2);
    LinearForm f;
    f.set("K2", Rational(BigInt(m) * (m - 1), 2) - Rational(m) * Rational(m) * data.v /
                    (Rational(dn2) * e * e));
    f.set("chi", 1);
    f.set("c", 2 * Rational(d) * data.v / e -
                   (Rational(1) - Rational(1, 2L * m)) * Rational(dn1) * e);
    f.set("ell", Rational(d) * data.v / e - 1);
    f.set("degfL", -(data.u - Rational(d) * data.v));
    return f;
}

EliminationCoefficients eliminate(int n, int d, int m) {
    const LinearForm genus_rel = genus_drop_form(n, d, m);
    const LinearForm degree_rel = pushforward_degree_form(n, d, m);

    const Rational u_minus_dv = -degree_rel.coeff("degfL");
    if (u_minus_dv.is_zero()) {
        throw domain_error("elimination singular: u - dv = 0 at n=" + std::to_string(n) +
                           ", d=" + std::to_string(d) + ", m=" + std::to_string(m));
    }

    // Scale the degree relation so its degfL coefficient cancels the one in
    // the genus relation, then add.
    const Rational t = genus_rel.coeff("degfL") / u_minus_dv;
    LinearForm combined = genus_rel;
    combined.add_scaled(degree_rel, t);
    if (!combined.coeff("degfL").is_zero()) {
        throw std::logic_error("eliminate: degfL failed to cancel");
    }

    const Rational kappa = -combined.coeff("K2");
    if (kappa.is_zero()) {
        throw domain_error("elimination degenerate: K2 coefficient vanishes at n=" +
                           std::to_string(n) + ", d=" + std::to_string(d) +
                           ", m=" + std::to_string(m));
    }

    EliminationCoefficients out;
    out.lambda_coeff = combined.coeff("chi") / kappa;
    out.p1 = combined.coeff("deltaPa") / kappa;
    out.p2 = combined.coeff("ell") / kappa;
    out.p3 = combined.coeff("EC") / kappa;
    out.c_coeff = combined.coeff("c") / kappa;
    out.m = m;
    return out;
}

} // namespace cislope
