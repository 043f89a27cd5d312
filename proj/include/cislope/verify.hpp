#pragma once

#include <string>
#include <vector>

namespace cislope::verify {

// Parameter grid swept by the self-check properties. The defaults match the
// documented acceptance grid; CI_SLOPE_GRID overrides them in the CLI.
struct GridSpec {
    int n_lo = 2;
    int n_hi = 6;
    int d_lo = 2;
    int d_hi = 6;
    std::vector<int> m_values = {5, 10, 100};

    void validate() const; // throws std::invalid_argument
};

// Applies "n=2..6;d=2..6;m=5,10,100" (any subset of the three keys) to an
// existing grid. Throws std::invalid_argument on malformed input.
void apply_grid_spec(GridSpec& grid, const std::string& text);

// Same, starting from the defaults; validates the result.
GridSpec parse_grid(const std::string& text);

struct Failure {
    std::string property;
    std::string grid_point;
    std::string expected;
    std::string got;
};

struct PropertyResult {
    std::string name;
    long checked = 0;
    std::vector<Failure> failures;

    bool passed() const { return failures.empty(); }
};

struct VerifyResult {
    std::vector<PropertyResult> properties;
    std::vector<std::string> diagnostics;

    bool all_passed() const;
    long total_checked() const;
};

// Individual properties. Each one checks an identity between two or more
// independent computation routes at every point of (its slice of) the grid.
PropertyResult check_sigma_identities(const GridSpec& grid);
PropertyResult check_chi_coefficient_extraction(const GridSpec& grid);
PropertyResult check_genus_parity(const GridSpec& grid);
PropertyResult check_lambda_routes(const GridSpec& grid);
PropertyResult check_slope_equality(const GridSpec& grid);
PropertyResult check_koszul_closed_forms(const GridSpec& grid);
PropertyResult check_pushforward_linearity(const GridSpec& grid);
PropertyResult check_elimination(const GridSpec& grid, std::vector<std::string>* diagnostics);
PropertyResult check_signature_bound(const GridSpec& grid);

// Runs every property on the grid.
VerifyResult run(const GridSpec& grid);

} // namespace cislope::verify
