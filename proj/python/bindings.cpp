// Thin pybind11 layer over the report builders. Every report function
// returns the serialized JSON envelope; the package wrapper parses it into
// a dict so the python surface stays a plain-data API.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include <cislope/elimination.hpp>
#include <cislope/errors.hpp>
#include <cislope/fibration.hpp>
#include <cislope/reports.hpp>
#include <cislope/singularity.hpp>
#include <cislope/verify.hpp>

namespace py = pybind11;
using namespace cislope;

namespace {

std::vector<BigInt> to_bigints(const std::vector<long long>& values) {
    std::vector<BigInt> out;
    out.reserve(values.size());
    for (long long v : values) {
        out.emplace_back(static_cast<long>(v));
    }
    return out;
}

std::string slope_json(int n, int d) {
    return reports::slope_report(n, d).dump(2);
}

std::string fibration_json(int n, int d, int b, long long deg_e,
                           const std::vector<long long>& coeffs) {
    const FibrationConfig cfg{.n = n, .d = d, .b = b,
                              .deg_e = BigInt(static_cast<long>(deg_e)),
                              .a = to_bigints(coeffs)};
    return reports::fibration_report(cfg).dump(2);
}

std::string singularity_json(int emb_dim, long long pg, long long k2,
                             long long exc_count, long long mu0, bool verbose) {
    const SingularityInput input{.emb_dim = emb_dim, .pg = pg, .k2 = k2,
                                 .exc_count = exc_count, .mu0 = mu0};
    return reports::singularity_report(input, verbose).dump(2);
}

std::string eliminate_json(int n, int d, int m) {
    return reports::eliminate_report(n, d, m).dump(2);
}

std::string verify_json(const std::string& grid) {
    return reports::verify_report(verify::parse_grid(grid)).dump(2);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact invariants and slope bounds for complete-intersection "
              "fibrations; see the cislope package wrapper.";

    py::register_exception<domain_error>(m, "DomainError", PyExc_ArithmeticError);

    m.def("slope_json", &slope_json, py::arg("n"), py::arg("d"));
    m.def("fibration_json", &fibration_json, py::arg("n"), py::arg("d"),
          py::arg("b"), py::arg("deg_e"), py::arg("coeffs"));
    m.def("singularity_json", &singularity_json, py::arg("emb_dim"), py::arg("pg"),
          py::arg("k2"), py::arg("exc_count"), py::arg("mu0"),
          py::arg("verbose") = false);
    m.def("eliminate_json", &eliminate_json, py::arg("n"), py::arg("d"), py::arg("m"));
    m.def("verify_json", &verify_json, py::arg("grid") = std::string());

    m.def("slope_bound_str",
          [](int n, int d) { return slope_bound(n, d).str(); },
          py::arg("n"), py::arg("d"),
          "Sharp lower slope bound as an exact rational string.");
    m.def("genus_str",
          [](int n, int d) { return genus(n, d).get_str(); },
          py::arg("n"), py::arg("d"),
          "Fiber genus of the (n, d) family as a decimal string.");
}
