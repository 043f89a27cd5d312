#include "cislope/chow.hpp"

#include <stdexcept>

#include "cislope/combinatorics.hpp"

namespace cislope {

RingSpec::RingSpec(int n_, BigInt deg_e_) : n(n_), deg_e(std::move(deg_e_)) {
    if (n < 2) {
        throw std::invalid_argument("RingSpec: fiber dimension must be >= 2");
    }
}

ChowClass::ChowClass(const RingSpec& spec)
    : spec_(spec), t_(spec.n + 2, Rational(0)), g_(spec.n + 2, Rational(0)) {}

ChowClass ChowClass::one(const RingSpec& spec) {
    ChowClass out(spec);
    out.t_[0] = 1;
    return out;
}

ChowClass ChowClass::divisor(const RingSpec& spec, const Rational& t, const Rational& g) {
    ChowClass out(spec);
    out.t_[1] = t;
    out.g_[1] = g;
    return out;
}

ChowClass ChowClass::monomial(const RingSpec& spec, int t_power, bool gamma,
                              const Rational& coeff) {
    const int degree = t_power + (gamma ? 1 : 0);
    if (t_power < 0 || degree > spec.n + 1) {
        throw std::invalid_argument("ChowClass::monomial: degree out of range");
    }
    ChowClass out(spec);
    if (gamma) {
        out.g_[degree] = coeff;
    } else {
        out.t_[degree] = coeff;
    }
    out.reduce_top();
    return out;
}

const Rational& ChowClass::t(int k) const {
    if (k < 0 || k > spec_.n + 1) {
        throw std::invalid_argument("ChowClass::t: degree out of range");
    }
    return t_[k];
}

const Rational& ChowClass::g(int k) const {
    if (k < 1 || k > spec_.n + 1) {
        throw std::invalid_argument("ChowClass::g: degree out of range");
    }
    return g_[k];
}

bool ChowClass::is_zero() const {
    for (int k = 0; k <= spec_.n + 1; ++k) {
        if (!t_[k].is_zero() || !g_[k].is_zero()) {
            return false;
        }
    }
    return true;
}

bool ChowClass::is_homogeneous_of_degree(int k) const {
    for (int j = 0; j <= spec_.n + 1; ++j) {
        if (j == k) {
            continue;
        }
        if (!t_[j].is_zero() || !g_[j].is_zero()) {
            return false;
        }
    }
    return true;
}

Rational ChowClass::evaluate_top() const {
    const int top = spec_.n + 1;
    return t_[top] * Rational(spec_.deg_e) + g_[top];
}

void ChowClass::require_same_ring(const ChowClass& o) const {
    if (!(spec_ == o.spec_)) {
        throw std::invalid_argument("ChowClass: mixing classes from different rings");
    }
}

// In top degree T^(n+1) = deg_e * T^n G, so fold the T channel into the G
// channel. Keeping the top degree in this normal form makes the truncated
// product associative and equality a plain coefficient comparison.
void ChowClass::reduce_top() {
    const int top = spec_.n + 1;
    if (!t_[top].is_zero()) {
        g_[top] += t_[top] * Rational(spec_.deg_e);
        t_[top] = 0;
    }
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
    require_same_ring(o);
    for (int k = 0; k <= spec_.n + 1; ++k) {
        t_[k] += o.t_[k];
        g_[k] += o.g_[k];
    }
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
    require_same_ring(o);
    for (int k = 0; k <= spec_.n + 1; ++k) {
        t_[k] -= o.t_[k];
        g_[k] -= o.g_[k];
    }
    return *this;
}

ChowClass& ChowClass::operator*=(const Rational& s) {
    for (int k = 0; k <= spec_.n + 1; ++k) {
        t_[k] *= s;
        g_[k] *= s;
    }
    return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    a.require_same_ring(b);
    const int top = a.spec_.n + 1;
    ChowClass out(a.spec_);
    for (int i = 0; i <= top; ++i) {
        for (int j = 0; i + j <= top; ++j) {
            const int k = i + j;
            // T^i * T^j
            out.t_[k] += a.t_[i] * b.t_[j];
            // T^i * T^(j-1)G and T^(i-1)G * T^j; the G*G products vanish.
            out.g_[k] += a.t_[i] * b.g_[j] + a.g_[i] * b.t_[j];
        }
    }
    out.reduce_top();
    return out;
}

bool operator==(const ChowClass& a, const ChowClass& b) {
    a.require_same_ring(b);
    ChowClass diff = a;
    diff -= b;
    diff.reduce_top();
    return diff.is_zero();
}

ChowClass exp_class(const ChowClass& d, int sign) {
    if (!d.is_homogeneous_of_degree(1) && !d.is_zero()) {
        throw std::invalid_argument("exp_class: argument must be a divisor class");
    }
    const RingSpec& spec = d.spec();
    ChowClass scaled = d * Rational(sign);
    ChowClass out = ChowClass::one(spec);
    ChowClass term = ChowClass::one(spec);
    for (int j = 1; j <= spec.n + 1; ++j) {
        term = term * scaled;
        term *= Rational(1, j);
        out += term;
    }
    return out;
}

namespace {

const RingSpec& common_spec(const std::vector<ChowClass>& rhos, const char* who) {
    if (rhos.empty()) {
        throw std::invalid_argument(std::string(who) + ": need at least one class");
    }
    for (const ChowClass& rho : rhos) {
        if (!rho.is_homogeneous_of_degree(1)) {
            throw std::invalid_argument(std::string(who) + ": inputs must be divisor classes");
        }
        if (!(rho.spec() == rhos.front().spec())) {
            throw std::invalid_argument(std::string(who) + ": inputs from different rings");
        }
    }
    return rhos.front().spec();
}

} // namespace

ChowClass koszul_ch(const std::vector<ChowClass>& rhos) {
    const RingSpec& spec = common_spec(rhos, "koszul_ch");
    if (rhos.size() > 20) {
        throw std::invalid_argument("koszul_ch: too many classes for subset enumeration");
    }
    ChowClass acc(spec);
    const unsigned long subsets = 1ul << rhos.size();
    for (unsigned long mask = 0; mask < subsets; ++mask) {
        ChowClass sum(spec);
        int bits = 0;
        for (size_t i = 0; i < rhos.size(); ++i) {
            if (mask & (1ul << i)) {
                sum += rhos[i];
                ++bits;
            }
        }
        ChowClass term = exp_class(sum, -1);
        if (bits % 2 == 1) {
            term *= Rational(-1);
        }
        acc += term;
    }
    return acc;
}

ChowClass ch_ci_surface(const std::vector<ChowClass>& rhos) {
    const RingSpec& spec = common_spec(rhos, "ch_ci_surface");
    if (static_cast<int>(rhos.size()) != spec.n - 1) {
        throw std::invalid_argument("ch_ci_surface: expected n-1 divisor classes");
    }
    ChowClass s1(spec);       // sum rho_i
    ChowClass s2(spec);       // sum rho_i^2
    ChowClass pairs(spec);    // sum_{i<j} rho_i rho_j
    ChowClass prod = ChowClass::one(spec);
    for (size_t i = 0; i < rhos.size(); ++i) {
        s1 += rhos[i];
        s2 += rhos[i] * rhos[i];
        for (size_t j = i + 1; j < rhos.size(); ++j) {
            pairs += rhos[i] * rhos[j];
        }
        prod = prod * rhos[i];
    }
    ChowClass head = ChowClass::one(spec);
    head -= s1 * Rational(1, 2);
    head += pairs * Rational(1, 4);
    head += s2 * Rational(1, 6);
    return head * prod;
}

ChowClass ch_ci_curve(const std::vector<ChowClass>& rhos) {
    const RingSpec& spec = common_spec(rhos, "ch_ci_curve");
    if (static_cast<int>(rhos.size()) != spec.n) {
        throw std::invalid_argument("ch_ci_curve: expected n divisor classes");
    }
    ChowClass s1(spec);
    ChowClass prod = ChowClass::one(spec);
    for (const ChowClass& rho : rhos) {
        s1 += rho;
        prod = prod * rho;
    }
    ChowClass head = ChowClass::one(spec);
    head -= s1 * Rational(1, 2);
    return head * prod;
}

ChowClass todd_relative(const RingSpec& spec) {
    const int top = spec.n + 1;
    // Coefficients q_k of the Todd series x/(1 - e^{-x}) = sum q_k x^k,
    // obtained as the reciprocal of s(x) = sum_j (-x)^j/(j+1)!.
    std::vector<Rational> s(top + 1), q(top + 1);
    for (int j = 0; j <= top; ++j) {
        Rational c = Rational(1, 1) / Rational(factorial(j + 1));
        s[j] = (j % 2 == 0) ? c : -c;
    }
    q[0] = 1;
    for (int k = 1; k <= top; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) {
            acc += s[j] * q[k - j];
        }
        q[k] = -acc;
    }

    auto todd_of = [&](const ChowClass& root) {
        ChowClass out(spec);
        ChowClass power = ChowClass::one(spec);
        out += power * q[0];
        for (int k = 1; k <= top; ++k) {
            power = power * root;
            out += power * q[k];
        }
        return out;
    };

    // The relative tangent bundle has n+1 roots adding up to
    // (n+1)T - deg_e*G. Since G*G = 0, any split with that sum gives the same
    // class; use T - deg_e*G once and T for the remaining n roots.
    ChowClass out = todd_of(ChowClass::divisor(spec, 1, Rational(-spec.deg_e)));
    const ChowClass td_t = todd_of(ChowClass::divisor(spec, 1, 0));
    for (int i = 0; i < spec.n; ++i) {
        out = out * td_t;
    }
    return out;
}

Rational grr_pushforward_degree(int n, int d, int e, const BigInt& deg_fl,
                                const std::vector<BigInt>& a) {
    if (static_cast<int>(a.size()) != n - 1) {
        throw std::invalid_argument("grr_pushforward_degree: expected n-1 twist degrees");
    }
    const RingSpec spec(n, deg_fl);
    std::vector<ChowClass> rhos;
    rhos.reserve(a.size());
    for (const BigInt& ai : a) {
        rhos.push_back(ChowClass::divisor(spec, d, Rational(ai)));
    }
    const ChowClass ch = ch_ci_surface(rhos);
    const ChowClass twist = exp_class(ChowClass::divisor(spec, e, 0));
    return (ch * twist * todd_relative(spec)).evaluate_top();
}

} // namespace cislope
