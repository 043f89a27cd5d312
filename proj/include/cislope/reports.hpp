#pragma once

#include <string>

#include <json.hpp>

#include "cislope/fibration.hpp"
#include "cislope/singularity.hpp"
#include "cislope/verify.hpp"

namespace cislope::reports {

using json = nlohmann::json;

// Every report has the same envelope:
//   {"command": ..., "inputs": {...}, "outputs": {...}, "diagnostics": [...]}
// Rationals serialize as strings "p/q" (or "p" when integral); machine-sized
// integers as JSON numbers. Object keys are emitted sorted, so serialized
// reports are byte-identical across runs.

json slope_report(int n, int d);
json fibration_report(const FibrationConfig& cfg);
json singularity_report(const SingularityInput& input, bool verbose);
json eliminate_report(int n, int d, int m);
json verify_report(const verify::GridSpec& grid);

// True when a report carries an internal cross-check that failed (the
// fibration dual routes). Such a report signals an implementation bug, not
// bad input.
bool has_crosscheck_mismatch(const json& report);

// True when a verify report found property failures.
bool has_verify_failures(const json& report);

// Plain-text rendering of the same values for --format table.
std::string render_table(const json& report);

} // namespace cislope::reports
