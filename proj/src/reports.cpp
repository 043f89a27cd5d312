#include "cislope/reports.hpp"

#include <algorithm>
#include <sstream>

#include "cislope/elimination.hpp"

namespace cislope::reports {

namespace {

json num(const Rational& r) {
    return r.str();
}

json num(const BigInt& x) {
    if (x.fits_slong_p()) {
        return x.get_si();
    }
    return x.get_str();
}

json coeff_list(const std::vector<BigInt>& a) {
    json out = json::array();
    for (const BigInt& ai : a) {
        out.push_back(num(ai));
    }
    return out;
}

json envelope(const std::string& command, json inputs, json outputs, json diagnostics) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"outputs", std::move(outputs)},
                {"diagnostics", std::move(diagnostics)}};
}

} // namespace

json slope_report(int n, int d) {
    const Rational lambda = slope_bound(n, d); // throws when undefined
    json outputs{{"eprime", num(BigInt((n - 1) * d - (n + 1)))},
                 {"genus", num(genus(n, d))},
                 {"lambda", num(lambda)},
                 {"r", num(slope_r(n, d))}};
    return envelope("slope", json{{"n", n}, {"d", d}}, std::move(outputs),
                    json::array());
}

json fibration_report(const FibrationConfig& cfg) {
    cfg.validate();
    const InvariantReport inv = invariants_closed(cfg);
    const bool k2_match = (k2_chow(cfg) == inv.k2);
    const Rational chi_ox =
        inv.chi + Rational(inv.genus - 1) * Rational(long(cfg.b) - 1);
    const bool chi_match = (chi_incl_excl(cfg) == chi_ox);

    json outputs{{"k2", num(inv.k2)},
                 {"chi", num(inv.chi)},
                 {"genus", num(inv.genus)},
                 {"k2_chow_match", k2_match},
                 {"chi_incl_excl_match", chi_match}};
    outputs["lambda"] = inv.lambda ? num(*inv.lambda) : json(nullptr);
    outputs["slope_equality"] =
        inv.slope_equality ? json(*inv.slope_equality) : json(nullptr);

    json diagnostics = json::array();
    if (!inv.lambda) {
        diagnostics.push_back("slope bound undefined at this (n, d): "
                              "(3n-2)d - (3n+2) = 0");
    }
    if (inv.chi < 0) {
        diagnostics.push_back("chi < 0: no relatively minimal fibration has these "
                              "invariants");
    }

    json inputs{{"n", cfg.n},
                {"d", cfg.d},
                {"b", cfg.b},
                {"deg_e", num(cfg.deg_e)},
                {"coeffs", coeff_list(cfg.a)}};
    return envelope("fibration", std::move(inputs), std::move(outputs),
                    std::move(diagnostics));
}

json singularity_report(const SingularityInput& input, bool verbose) {
    const SignatureReport rep = check_bound(input);
    json outputs{{"mu", rep.mu},
                 {"mu_plus", rep.mu_plus},
                 {"mu_minus", rep.mu_minus},
                 {"mu_zero", rep.mu_zero},
                 {"sigma", rep.sigma},
                 {"chi_top", rep.chi_top},
                 {"bound", num(rep.bound)},
                 {"satisfied", rep.satisfied},
                 {"equality", rep.equality},
                 {"margin", num(rep.margin)}};

    json diagnostics = json::array();
    if (rep.equality) {
        diagnostics.push_back("bound attained: signature matches a rational double "
                              "point configuration");
    }
    if (verbose) {
        const int n = input.emb_dim;
        std::ostringstream os;
        os << "equivalent genus form: 12(n-1)/(3n-5) pg <= mu + 1 - chi_top, here "
           << Rational(12 * (n - 1) * BigInt(static_cast<long>(input.pg)), 3 * n - 5).str()
           << " <= " << (rep.mu + 1 - rep.chi_top);
        diagnostics.push_back(os.str());
        std::ostringstream conv;
        conv << "bound coefficient 8/(3n-5) = 8/" << (3 * n - 5)
             << " with n = emb_dim = " << n << "; the same value reads 8/(3n'-2) in "
             << "the shifted convention n' = n-1 = " << (n - 1)
             << "; margin = k2 + 24(n-2)/(3n-5) pg";
        diagnostics.push_back(conv.str());
    }

    json inputs{{"emb_dim", input.emb_dim},
                {"pg", input.pg},
                {"k2", input.k2},
                {"exc", input.exc_count},
                {"mu0", input.mu0}};
    return envelope("singularity", std::move(inputs), std::move(outputs),
                    std::move(diagnostics));
}

json eliminate_report(int n, int d, int m) {
    const EliminationCoefficients ec = eliminate(n, d, m);
    json outputs{{"m", ec.m},
                 {"lambda_coeff", num(ec.lambda_coeff)},
                 {"p1", num(ec.p1)},
                 {"p2", num(ec.p2)},
                 {"p3", num(ec.p3)},
                 {"c_coeff", num(ec.c_coeff)}};
    json diagnostics = json::array();
    if (ec.c_coeff.is_zero()) {
        diagnostics.push_back("c_coeff = 0: nodes of the image curve do not enter "
                              "the solved bound at this grid point");
    }
    return envelope("eliminate", json{{"n", n}, {"d", d}, {"m", m}},
                    std::move(outputs), std::move(diagnostics));
}

json verify_report(const verify::GridSpec& grid) {
    const verify::VerifyResult result = verify::run(grid);

    json properties = json::array();
    json failures = json::array();
    for (const verify::PropertyResult& prop : result.properties) {
        properties.push_back(json{{"name", prop.name},
                                  {"checked", prop.checked},
                                  {"failures", prop.failures.size()},
                                  {"passed", prop.passed()}});
        for (const verify::Failure& f : prop.failures) {
            failures.push_back(json{{"property", f.property},
                                    {"grid_point", f.grid_point},
                                    {"expected", f.expected},
                                    {"got", f.got}});
        }
    }

    json inputs{{"n", std::to_string(grid.n_lo) + ".." + std::to_string(grid.n_hi)},
                {"d", std::to_string(grid.d_lo) + ".." + std::to_string(grid.d_hi)},
                {"m", grid.m_values}};
    json outputs{{"all_passed", result.all_passed()},
                 {"total_checked", result.total_checked()},
                 {"properties", std::move(properties)},
                 {"failures", std::move(failures)}};
    return envelope("verify", std::move(inputs), std::move(outputs),
                    json(result.diagnostics));
}

bool has_crosscheck_mismatch(const json& report) {
    if (!report.contains("outputs")) {
        return false;
    }
    const json& outputs = report["outputs"];
    for (const char* key : {"k2_chow_match", "chi_incl_excl_match"}) {
        if (outputs.contains(key) && outputs[key].is_boolean() &&
            !outputs[key].get<bool>()) {
            return true;
        }
    }
    return false;
}

bool has_verify_failures(const json& report) {
    return report.contains("outputs") && report["outputs"].contains("all_passed") &&
           !report["outputs"]["all_passed"].get<bool>();
}

namespace {

std::string scalar_text(const json& value) {
    if (value.is_string()) {
        return value.get<std::string>();
    }
    if (value.is_null()) {
        return "undefined";
    }
    return value.dump();
}

void render_section(std::ostringstream& os, const std::string& title, const json& obj) {
    os << title << "\n";
    size_t width = 0;
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        width = std::max(width, key.size());
    }
    for (const auto& [key, value] : obj.items()) {
        if (value.is_array() && !value.empty() && value.front().is_object()) {
            os << "  " << key << ":\n";
            for (const json& row : value) {
                os << "    -";
                for (const auto& [k, v] : row.items()) {
                    os << " " << k << "=" << scalar_text(v);
                }
                os << "\n";
            }
            continue;
        }
        os << "  " << key << std::string(width - key.size() + 2, ' ')
           << scalar_text(value) << "\n";
    }
}

} // namespace

std::string render_table(const json& report) {
    std::ostringstream os;
    os << "command" << "  " << report.value("command", std::string("?")) << "\n";
    if (report.contains("inputs")) {
        render_section(os, "inputs", report["inputs"]);
    }
    if (report.contains("outputs")) {
        render_section(os, "outputs", report["outputs"]);
    }
    if (report.contains("diagnostics")) {
        for (const json& note : report["diagnostics"]) {
            os << "note: " << scalar_text(note) << "\n";
        }
    }
    return os.str();
}

} // namespace cislope::reports
