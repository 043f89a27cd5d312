#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>

#include "cislope/elimination.hpp"
#include "cislope/errors.hpp"
#include "cislope/fibration.hpp"
#include "cislope/reports.hpp"
#include "cislope/singularity.hpp"
#include "cislope/verify.hpp"

namespace {

using cislope::reports::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitInternal = 3;
constexpr int kExitVerifyFailed = 4;

void print_report(const json& report, const std::string& format) {
    if (format == "table") {
        std::cout << cislope::reports::render_table(report);
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

// Precedence: built-in defaults, then CI_SLOPE_GRID, then explicit flags.
cislope::verify::GridSpec resolve_grid(const std::string& grid_n,
                                       const std::string& grid_d,
                                       const std::string& grid_m) {
    cislope::verify::GridSpec grid;
    if (const char* env = std::getenv("CI_SLOPE_GRID")) {
        cislope::verify::apply_grid_spec(grid, env);
    }
    if (!grid_n.empty()) {
        cislope::verify::apply_grid_spec(grid, "n=" + grid_n);
    }
    if (!grid_d.empty()) {
        cislope::verify::apply_grid_spec(grid, "d=" + grid_d);
    }
    if (!grid_m.empty()) {
        cislope::verify::apply_grid_spec(grid, "m=" + grid_m);
    }
    grid.validate();
    return grid;
}

std::vector<cislope::BigInt> to_bigints(const std::vector<long long>& values) {
    std::vector<cislope::BigInt> out;
    out.reserve(values.size());
    for (long long v : values) {
        out.emplace_back(static_cast<long>(v));
    }
    return out;
}

struct CommandOutcome {
    json report;
    int exit_code = kExitOk;
};

// Shared by the CLI subcommands and batch lines.
CommandOutcome run_slope(int n, int d) {
    return {cislope::reports::slope_report(n, d), kExitOk};
}

CommandOutcome run_fibration(const cislope::FibrationConfig& cfg) {
    json report = cislope::reports::fibration_report(cfg);
    const int code =
        cislope::reports::has_crosscheck_mismatch(report) ? kExitInternal : kExitOk;
    return {std::move(report), code};
}

CommandOutcome run_singularity(const cislope::SingularityInput& input, bool verbose) {
    return {cislope::reports::singularity_report(input, verbose), kExitOk};
}

CommandOutcome run_eliminate(int n, int d, int m) {
    return {cislope::reports::eliminate_report(n, d, m), kExitOk};
}

CommandOutcome run_verify(const cislope::verify::GridSpec& grid) {
    json report = cislope::reports::verify_report(grid);
    const int code =
        cislope::reports::has_verify_failures(report) ? kExitVerifyFailed : kExitOk;
    return {std::move(report), code};
}

int classify(const std::exception& err) {
    if (dynamic_cast<const cislope::domain_error*>(&err)) {
        return kExitDomain;
    }
    if (dynamic_cast<const std::invalid_argument*>(&err)) {
        return kExitUsage;
    }
    return kExitInternal;
}

CommandOutcome run_batch_line(const json& request) {
    const std::string command = request.value("command", std::string());
    if (command == "slope") {
        return run_slope(request.at("n").get<int>(), request.at("d").get<int>());
    }
    if (command == "fibration") {
        cislope::FibrationConfig cfg;
        cfg.n = request.at("n").get<int>();
        cfg.d = request.at("d").get<int>();
        cfg.b = request.value("b", 0);
        cfg.deg_e = cislope::BigInt(static_cast<long>(request.value("deg_e", 0LL)));
        cfg.a = to_bigints(request.value("coeffs", std::vector<long long>{}));
        return run_fibration(cfg);
    }
    if (command == "singularity") {
        cislope::SingularityInput input;
        input.emb_dim = request.value("emb_dim", 3);
        input.pg = request.at("pg").get<long long>();
        input.k2 = request.at("k2").get<long long>();
        input.exc_count = request.at("exc").get<long long>();
        input.mu0 = request.value("mu0", 0LL);
        return run_singularity(input, request.value("verbose", false));
    }
    if (command == "eliminate") {
        return run_eliminate(request.at("n").get<int>(), request.at("d").get<int>(),
                             request.value("m", 100));
    }
    if (command == "verify") {
        return run_verify(resolve_grid(request.value("grid_n", std::string()),
                                       request.value("grid_d", std::string()),
                                       request.value("grid_m", std::string())));
    }
    throw std::invalid_argument("unknown command '" + command + "'");
}

int run_batch() {
    int worst = kExitOk;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        json out;
        int code = kExitOk;
        try {
            const json request = json::parse(line);
            CommandOutcome outcome = run_batch_line(request);
            out = std::move(outcome.report);
            code = outcome.exit_code;
        } catch (const json::exception& err) {
            out = json{{"error", err.what()}, {"exit_code", kExitUsage}};
            code = kExitUsage;
        } catch (const std::exception& err) {
            code = classify(err);
            out = json{{"error", err.what()}, {"exit_code", code}};
        }
        std::cout << out.dump() << "\n";
        worst = std::max(worst, code);
    }
    return worst;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact slope bounds, fibration invariants and signature "
                 "inequalities for families of complete-intersection curves"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    int n = 0, d = 0, b = 0, m = 100, emb_dim = 3;
    long long deg_e = 0, pg = 0, k2 = 0, exc = 1, mu0 = 0;
    std::vector<long long> coeffs;
    bool verbose = false;
    std::string grid_n, grid_d, grid_m;

    CLI::App* slope = app.add_subcommand("slope", "sharp lower slope bound for the family");
    slope->add_option("--n", n, "ambient projective dimension")->required();
    slope->add_option("--d", d, "relative hypersurface degree")->required();

    CLI::App* fibration =
        app.add_subcommand("fibration", "exact invariants of one configured family");
    fibration->add_option("--n", n, "ambient projective dimension")->required();
    fibration->add_option("--d", d, "relative hypersurface degree")->required();
    fibration->add_option("--b", b, "base curve genus")->capture_default_str();
    fibration->add_option("--deg-e", deg_e, "degree of the bundle")->capture_default_str();
    fibration->add_option("--coeffs", coeffs, "n-1 twist degrees, comma separated")
        ->delimiter(',');

    CLI::App* singularity =
        app.add_subcommand("singularity", "signature bound for a smoothable singularity");
    singularity->add_option("--emb-dim", emb_dim, "embedding dimension")
        ->capture_default_str();
    singularity->add_option("--pg", pg, "geometric genus")->required();
    singularity->add_option("--k2", k2, "canonical cycle self-intersection")->required();
    singularity->add_option("--exc", exc, "exceptional curve count")->required();
    singularity->add_option("--mu0", mu0, "intersection form nullity")
        ->capture_default_str();
    singularity->add_flag("--verbose", verbose, "include convention notes");

    CLI::App* eliminate =
        app.add_subcommand("eliminate", "solve the two counting relations for k2");
    eliminate->add_option("--n", n, "ambient projective dimension")->required();
    eliminate->add_option("--d", d, "relative hypersurface degree")->required();
    eliminate->add_option("--m", m, "pluricanonical multiple")->capture_default_str();

    CLI::App* verify = app.add_subcommand(
        "verify", "run every cross-route identity over a parameter grid");
    verify->add_option("--grid-n", grid_n, "n range as lo..hi (default 2..6)");
    verify->add_option("--grid-d", grid_d, "d range as lo..hi (default 2..6)");
    verify->add_option("--grid-m", grid_m,
                       "comma separated m values (default 5,10,100); "
                       "CI_SLOPE_GRID overrides the defaults for all three");

    CLI::App* batch = app.add_subcommand(
        "batch", "read JSON requests from stdin, one per line, and answer each");

    for (CLI::App* sub : {slope, fibration, singularity, eliminate, verify, batch}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::CallForAllHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kExitUsage;
    }

    try {
        if (batch->parsed()) {
            return run_batch();
        }
        CommandOutcome outcome;
        if (slope->parsed()) {
            outcome = run_slope(n, d);
        } else if (fibration->parsed()) {
            cislope::FibrationConfig cfg{.n = n, .d = d, .b = b,
                                         .deg_e = cislope::BigInt(static_cast<long>(deg_e)),
                                         .a = to_bigints(coeffs)};
            outcome = run_fibration(cfg);
        } else if (singularity->parsed()) {
            outcome = run_singularity({.emb_dim = emb_dim, .pg = pg, .k2 = k2,
                                       .exc_count = exc, .mu0 = mu0},
                                      verbose);
        } else if (eliminate->parsed()) {
            outcome = run_eliminate(n, d, m);
        } else if (verify->parsed()) {
            outcome = run_verify(resolve_grid(grid_n, grid_d, grid_m));
        }
        print_report(outcome.report, format);
        return outcome.exit_code;
    } catch (const cislope::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kExitInternal;
    }
}
