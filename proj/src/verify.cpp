#include "cislope/verify.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "cislope/chow.hpp"
#include "cislope/combinatorics.hpp"
#include "cislope/elimination.hpp"
#include "cislope/fibration.hpp"
#include "cislope/rational.hpp"
#include "cislope/sampler.hpp"
#include "cislope/singularity.hpp"

namespace cislope::verify {

void GridSpec::validate() const {
    if (n_lo < 2 || n_hi < n_lo) {
        throw std::invalid_argument("grid: need 2 <= n_lo <= n_hi");
    }
    if (d_lo < 2 || d_hi < d_lo) {
        throw std::invalid_argument("grid: need 2 <= d_lo <= d_hi");
    }
    if (n_hi > 12) {
        throw std::invalid_argument("grid: n_hi above 12 is not supported");
    }
    if (m_values.empty()) {
        throw std::invalid_argument("grid: need at least one m value");
    }
    for (int m : m_values) {
        if (m < 1) {
            throw std::invalid_argument("grid: m values must be >= 1");
        }
    }
}

namespace {

int parse_int(const std::string& text) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("grid: expected an integer, got '" + text + "'");
    }
    if (used != text.size()) {
        throw std::invalid_argument("grid: trailing characters in '" + text + "'");
    }
    return value;
}

std::pair<int, int> parse_range(const std::string& text) {
    const size_t dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = parse_int(text);
        return {v, v};
    }
    return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

void apply_grid_spec(GridSpec& grid, const std::string& text) {
    for (const std::string& part : split(text, ';')) {
        if (part.empty()) {
            continue;
        }
        const size_t eq = part.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("grid: expected key=value, got '" + part + "'");
        }
        const std::string key = part.substr(0, eq);
        const std::string value = part.substr(eq + 1);
        if (key == "n") {
            std::tie(grid.n_lo, grid.n_hi) = parse_range(value);
        } else if (key == "d") {
            std::tie(grid.d_lo, grid.d_hi) = parse_range(value);
        } else if (key == "m") {
            grid.m_values.clear();
            for (const std::string& item : split(value, ',')) {
                grid.m_values.push_back(parse_int(item));
            }
        } else {
            throw std::invalid_argument("grid: unknown key '" + key + "'");
        }
    }
}

GridSpec parse_grid(const std::string& text) {
    GridSpec grid;
    apply_grid_spec(grid, text);
    grid.validate();
    return grid;
}

bool VerifyResult::all_passed() const {
    for (const PropertyResult& p : properties) {
        if (!p.passed()) {
            return false;
        }
    }
    return true;
}

long VerifyResult::total_checked() const {
    long total = 0;
    for (const PropertyResult& p : properties) {
        total += p.checked;
    }
    return total;
}

namespace {

void expect(PropertyResult& res, bool ok, const std::string& point,
            const std::string& expected, const std::string& got) {
    if (!ok) {
        res.failures.push_back({res.name, point, expected, got});
    }
}

void expect_eq(PropertyResult& res, const std::string& point, const std::string& label,
               const Rational& want, const Rational& got) {
    expect(res, want == got, point, label + " = " + want.str(), got.str());
}

std::string fmt_nd(int n, int d) {
    return "(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
}

std::string fmt_config(const FibrationConfig& cfg) {
    std::ostringstream os;
    os << "(n=" << cfg.n << ",d=" << cfg.d << ",b=" << cfg.b << ",degE=" << cfg.deg_e
       << ",a=[";
    for (size_t i = 0; i < cfg.a.size(); ++i) {
        os << (i ? "," : "") << cfg.a[i];
    }
    os << "])";
    return os.str();
}

std::uint64_t mix_seed(std::initializer_list<long> parts) {
    std::uint64_t seed = 0x6b9d3c5a1ef2d847ull;
    for (long p : parts) {
        seed = seed * 1099511628211ull + static_cast<std::uint64_t>(p + 1000);
    }
    return seed;
}

} // namespace

PropertyResult check_sigma_identities(const GridSpec&) {
    PropertyResult res{.name = "sigma_identities"};
    for (unsigned long m = 0; m <= 8; ++m) {
        for (unsigned long l = 0; l <= 10; ++l) {
            ++res.checked;
            const std::string point =
                "(m=" + std::to_string(m) + ",l=" + std::to_string(l) + ")";
            const BigInt direct = sigma_direct(m, l);
            const BigInt recursive = sigma_recursive(m, l);
            expect_eq(res, point, "direct", Rational(direct), Rational(recursive));
            if (l <= m + 2) {
                expect_eq(res, point, "closed", Rational(direct),
                          Rational(sigma_closed(m, l)));
            }
            if (m > l) {
                expect_eq(res, point, "vanishing", Rational(0), Rational(direct));
            }
        }
    }
    return res;
}

PropertyResult check_chi_coefficient_extraction(const GridSpec& grid) {
    PropertyResult res{.name = "chi_coefficient_extraction"};
    for (int n = grid.n_lo; n <= grid.n_hi; ++n) {
        for (int d = grid.d_lo; d <= grid.d_hi; ++d) {
            ++res.checked;
            const std::string point = fmt_nd(n, d);
            const ChiCoefficients closed = chi_coefficients(n, d);

            FibrationConfig cfg{.n = n, .d = d, .b = 0, .deg_e = 0,
                                .a = std::vector<BigInt>(n - 1, BigInt(0))};
            const Rational a0 = -chi_incl_excl(cfg);
            cfg.b = 1;
            cfg.deg_e = 1;
            const Rational a1 = chi_incl_excl(cfg);
            cfg.deg_e = 0;
            cfg.a[0] = 1;
            const Rational a2 = chi_incl_excl(cfg);

            expect_eq(res, point, "a0", closed.a0, a0);
            expect_eq(res, point, "a1", closed.a1, a1);
            expect_eq(res, point, "a2", closed.a2, a2);
        }
    }
    return res;
}

PropertyResult check_genus_parity(const GridSpec& grid) {
    PropertyResult res{.name = "genus_parity"};
    for (int n = grid.n_lo; n <= grid.n_hi; ++n) {
        for (int d = grid.d_lo; d <= grid.d_hi; ++d) {
            ++res.checked;
            const std::string point = fmt_nd(n, d);
            const BigInt twice = int_pow(d, n - 1) * BigInt((n - 1) * d - (n + 1));
            expect(res, twice % 2 == 0, point, "d^(n-1)((n-1)d-(n+1)) even",
                   twice.get_str());
            expect_eq(res, point, "genus", Rational(genus(n, d)),
                      Rational(twice, 2) + 1);
            expect_eq(res, point, "a0+1", chi_coefficients(n, d).a0 + 1,
                      Rational(genus(n, d)));
        }
    }
    return res;
}

PropertyResult check_lambda_routes(const GridSpec& grid) {
    PropertyResult res{.name = "lambda_routes"};
    for (int n = grid.n_lo; n <= grid.n_hi; ++n) {
        for (int d = grid.d_lo; d <= grid.d_hi; ++d) {
            if ((3 * n - 2) * d == 3 * n + 2) {
                continue; // slope undefined
            }
            ++res.checked;
            const std::string point = fmt_nd(n, d);
            const Rational direct = slope_bound(n, d);
            const Rational eprime((n - 1L) * d - (n + 1));
            const Rational via_r = Rational(d - 1L) * eprime / slope_r(n, d);
            expect_eq(res, point, "lambda", direct, via_r);
        }
    }
    return res;
}

PropertyResult check_slope_equality(const GridSpec& grid) {
    PropertyResult res{.name = "slope_equality_grid"};
    for (int n = grid.n_lo; n <= grid.n_hi; ++n) {
        for (int d = grid.d_lo; d <= grid.d_hi; ++d) {
            for (int b = 0; b <= 2; ++b) {
                for (long deg_e = -2; deg_e <= 3; ++deg_e) {
                    for (int sample = 0; sample < 3; ++sample) {
                        Sampler rng(mix_seed({n, d, b, deg_e, sample}));
                        FibrationConfig cfg{.n = n, .d = d, .b = b, .deg_e = BigInt(deg_e),
                                            .a = {}};
                        for (int i = 0; i < n - 1; ++i) {
                            cfg.a.emplace_back(rng.in_range(-2, 2));
                        }
                        ++res.checked;
                        const std::string point = fmt_config(cfg);

                        const InvariantReport inv = invariants_closed(cfg);
                        expect(res, inv.chi.is_integer(), point, "chi integral",
                               inv.chi.str());
                        if (inv.lambda) {
                            expect_eq(res, point, "k2 = lambda*chi",
                                      *inv.lambda * inv.chi, inv.k2);
                            expect(res, inv.slope_equality.value_or(false), point,
                                   "slope_equality", "false");
                        }
                        expect_eq(res, point, "k2 via intersection theory", inv.k2,
                                  k2_chow(cfg));
                        const Rational chi_ox = inv.chi + Rational(inv.genus - 1) *
                                                              Rational(long(b) - 1);
                        expect_eq(res, point, "chi via inclusion-exclusion", chi_ox,
                                  chi_incl_excl(cfg));
                    }
                }
            }
        }
    }
    return res;
}

PropertyResult check_koszul_closed_forms(const GridSpec& grid) {
    PropertyResult res{.name = "koszul_closed_forms"};
    for (int n = grid.n_lo; n <= grid.n_hi; ++n) {
        for (int d = grid.d_lo; d <= grid.d_hi; ++d) {
            ++res.checked;
            const std::string point = fmt_nd(n, d);
            Sampler rng(mix_seed({n, d, 7}));
            const RingSpec spec(n, BigInt(rng.in_range(-2, 3)));

            std::vector<ChowClass> surface_rhos;
            for (int i = 0; i < n - 1; ++i) {
                surface_rhos.push_back(
                    ChowClass::divisor(spec, d, Rational(rng.in_range(-2, 2))));
            }
            expect(res, koszul_ch(surface_rhos) == ch_ci_surface(surface_rhos), point,
                   "koszul == surface closed form", "mismatch");

            std::vector<ChowClass> curve_rhos = surface_rhos;
            curve_rhos.push_back(
                ChowClass::divisor(spec, d + 1, Rational(rng.in_range(-2, 2))));
            const ChowClass koszul_curve = koszul_ch(curve_rhos);
            expect(res, koszul_curve == ch_ci_curve(curve_rhos), point,
                   "koszul == curve closed form", "mismatch");

            // Top-degree coefficient is exactly -(sum rho)(prod rho)/2.
            ChowClass s1(spec);
            ChowClass prod = ChowClass::one(spec);
            for (const ChowClass& rho : curve_rhos) {
                s1 += rho;
                prod = prod * rho;
            }
            expect_eq(res, point, "top coefficient",
                      (s1 * prod).evaluate_top() * Rational(-1, 2),
                      koszul_curve.evaluate_top());
        }
    }
    return res;
}

PropertyResult check_pushforward_linearity(const GridSpec& grid) {
    PropertyResult res{.name = "pushforward_linearity"};
    for (int n = grid.n_lo; n <= grid.n_hi; ++n) {
        for (int d = grid.d_lo; d <= grid.d_hi; ++d) {
            Sampler rng(mix_seed({n, d, 13}));
            std::vector<int> twists = {(n - 1) * d, (n - 1) * d + 1, (n - 1) * d + 2};
            const long eprime = (n - 1L) * d - (n + 1);
            if (eprime > 0) {
                for (int m : grid.m_values) {
                    twists.push_back(static_cast<int>(m * eprime));
                }
            }
            for (int e : twists) {
                ++res.checked;
                const std::string point =
                    fmt_nd(n, d) + " e=" + std::to_string(e);
                const Rational u = pushforward_u(n, d, e);
                const Rational v = pushforward_v(n, d, e);

                const std::vector<BigInt> zeros(n - 1, BigInt(0));
                expect_eq(res, point, "deg at trivial bundle", Rational(0),
                          grr_pushforward_degree(n, d, e, 0, zeros));
                expect_eq(res, point, "u", u,
                          grr_pushforward_degree(n, d, e, 1, zeros));
                std::vector<BigInt> unit = zeros;
                unit[0] = 1;
                expect_eq(res, point, "v", v,
                          grr_pushforward_degree(n, d, e, 0, unit));

                const long deg_fl = rng.in_range(-3, 3);
                std::vector<BigInt> a;
                BigInt a_sum = 0;
                for (int i = 0; i < n - 1; ++i) {
                    a.emplace_back(rng.in_range(-3, 3));
                    a_sum += a.back();
                }
                expect_eq(res, point, "u*degfL + v*sum(a)",
                          u * Rational(deg_fl) + v * Rational(a_sum),
                          grr_pushforward_degree(n, d, e, deg_fl, a));
            }
        }
    }
    return res;
}

PropertyResult check_elimination(const GridSpec& grid,
                                 std::vector<std::string>* diagnostics) {
    PropertyResult res{.name = "elimination_grid"};
    bool c_coeff_seen_nonzero = false;
    for (int n = grid.n_lo; n <= grid.n_hi; ++n) {
        for (int d = grid.d_lo; d <= grid.d_hi; ++d) {
            const long eprime = (n - 1L) * d - (n + 1);
            if (eprime <= 0 || (3 * n - 2) * d == 3 * n + 2) {
                continue;
            }
            for (int m : grid.m_values) {
                const std::string point = fmt_nd(n, d) + " m=" + std::to_string(m);
                EliminationCoefficients ec;
                try {
                    ec = eliminate(n, d, m);
                } catch (const domain_error& err) {
                    if (diagnostics) {
                        diagnostics->push_back(std::string("elimination skipped at ") +
                                               point + ": " + err.what());
                    }
                    continue;
                }
                ++res.checked;
                expect_eq(res, point, "lambda_coeff", slope_bound(n, d),
                          ec.lambda_coeff);
                expect(res, ec.p1 > 0 && ec.p2 > 0 && ec.p3 > 0, point,
                       "p1, p2, p3 positive",
                       ec.p1.str() + ", " + ec.p2.str() + ", " + ec.p3.str());
                if (!ec.c_coeff.is_zero()) {
                    c_coeff_seen_nonzero = true;
                }

                // Round trip: pick a random point on the solved relation and
                // confirm it satisfies both source relations.
                Sampler rng(mix_seed({n, d, m, 17}));
                LinearForm assignment;
                for (const char* var : {"chi", "deltaPa", "ell", "EC", "c"}) {
                    assignment.set(var, Rational(rng.in_range(-20, 20)));
                }
                const Rational k2 = ec.lambda_coeff * assignment.coeff("chi") +
                                    ec.p1 * assignment.coeff("deltaPa") +
                                    ec.p2 * assignment.coeff("ell") +
                                    ec.p3 * assignment.coeff("EC") +
                                    ec.c_coeff * assignment.coeff("c");
                assignment.set("K2", k2);
                const LinearForm degree_rel = pushforward_degree_form(n, d, m);
                Rational partial = degree_rel.constant();
                for (const auto& [name, value] : degree_rel.coefficients()) {
                    if (name != "degfL") {
                        partial += value * assignment.coeff(name);
                    }
                }
                assignment.set("degfL", partial / -degree_rel.coeff("degfL"));
                const LinearForm genus_rel = genus_drop_form(n, d, m);
                Rational residual = genus_rel.constant();
                for (const auto& [name, value] : genus_rel.coefficients()) {
                    residual += value * assignment.coeff(name);
                }
                expect_eq(res, point, "round trip residual", Rational(0), residual);
            }
        }
    }
    if (diagnostics && !c_coeff_seen_nonzero && res.checked > 0) {
        diagnostics->push_back(
            "c_coeff vanished at every elimination grid point (nodes of the image "
            "curve never lower the bound)");
    }
    return res;
}

PropertyResult check_signature_bound(const GridSpec&) {
    PropertyResult res{.name = "signature_bound"};

    // Rational double point chains: pg = 0, canonical cycle 0, negative
    // definite, so the bound holds with equality.
    for (long long exc : {1LL, 2LL, 8LL}) {
        ++res.checked;
        const std::string point = "(rdp chain, exc=" + std::to_string(exc) + ")";
        const SignatureReport rep =
            check_bound({.emb_dim = 3, .pg = 0, .k2 = 0, .exc_count = exc, .mu0 = 0});
        expect(res, rep.equality, point, "equality", "strict");
        expect_eq(res, point, "sigma", Rational(-exc), Rational(rep.sigma));
        expect_eq(res, point, "margin", Rational(0), rep.margin);
    }

    Sampler rng(mix_seed({23}));
    for (int sample = 0; sample < 200; ++sample) {
        const int emb = static_cast<int>(rng.in_range(3, 8));
        const long long pg = rng.in_range(0, 6);
        const long long exc = rng.in_range(1, 10);
        const long long mu0 = rng.in_range(0, std::min(2 * pg, exc));
        const long long k2 = rng.in_range(-(10 * pg + exc - mu0), 0);
        const SingularityInput input{.emb_dim = emb, .pg = pg, .k2 = k2,
                                     .exc_count = exc, .mu0 = mu0};
        ++res.checked;
        std::ostringstream os;
        os << "(emb=" << emb << ",pg=" << pg << ",k2=" << k2 << ",exc=" << exc
           << ",mu0=" << mu0 << ")";
        const std::string point = os.str();

        const SignatureReport rep = check_bound(input);
        expect_eq(res, point, "sigma = 4pg - mu0 - mu",
                  Rational(4 * pg - mu0 - rep.mu), Rational(rep.sigma));
        expect_eq(res, point, "margin", margin_closed_form(input), rep.margin);
        expect(res, rep.satisfied == (rep.margin >= 0), point,
               "satisfied iff margin >= 0", rep.margin.str());
        expect(res, rep.mu == rep.mu_plus + rep.mu_minus + rep.mu_zero, point,
               "eigenvalue counts sum to mu", std::to_string(rep.mu));
        if (emb == 3) {
            expect_eq(res, point, "margin at emb 3",
                      Rational(k2 + 6 * pg), rep.margin);
        }
    }
    return res;
}

VerifyResult run(const GridSpec& grid) {
    grid.validate();
    VerifyResult out;
    out.properties.push_back(check_sigma_identities(grid));
    out.properties.push_back(check_chi_coefficient_extraction(grid));
    out.properties.push_back(check_genus_parity(grid));
    out.properties.push_back(check_lambda_routes(grid));
    out.properties.push_back(check_slope_equality(grid));
    out.properties.push_back(check_koszul_closed_forms(grid));
    out.properties.push_back(check_pushforward_linearity(grid));
    out.properties.push_back(check_elimination(grid, &out.diagnostics));
    out.properties.push_back(check_signature_bound(grid));
    return out;
}

} // namespace cislope::verify
