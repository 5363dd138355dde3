#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pfl/bounds.hpp"
#include "pfl/codec.hpp"
#include "pfl/construction.hpp"
#include "pfl/errors.hpp"
#include "pfl/montecarlo.hpp"
#include "pfl/optimizer.hpp"
#include "pfl/sign_string.hpp"
#include "pfl/z_table.hpp"

namespace py = pybind11;

namespace {

pfl::CodeSpec make_spec(int n, std::uint64_t k, double p, double delta,
                        int protected_levels) {
    pfl::CodeSpec spec;
    spec.n = n;
    spec.k = k;
    spec.p = p;
    spec.delta = delta;
    spec.protected_levels = protected_levels;
    pfl::validate(spec);
    return spec;
}

pfl::InfoSet info_for(const pfl::CodeSpec& spec) {
    const pfl::ZTable table = pfl::compute_z_table(
        spec.n, spec.p, spec.delta, spec.protected_levels);
    return pfl::select_info_set(table, spec.k);
}

py::dict estimate_to_dict(const pfl::FerEstimate& estimate) {
    py::dict out;
    out["trials"] = estimate.trials;
    out["erasures"] = estimate.erasures;
    out["fer"] = estimate.fer;
    out["ci_low"] = estimate.ci_low;
    out["ci_high"] = estimate.ci_high;
    out["stopped_on_target"] = estimate.stopped_on_target;
    return out;
}

const char* method_string(pfl::DecisionMethod method) {
    switch (method) {
        case pfl::DecisionMethod::kAnalyticUnique:
            return "analytic_unique";
        case pfl::DecisionMethod::kUncodedShortcut:
            return "uncoded_shortcut";
        case pfl::DecisionMethod::kMonteCarloTiebreak:
            return "monte_carlo_tiebreak";
    }
    return "unknown";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "polar codes over the binary erasure channel with a fault-prone "
              "successive cancellation decoder";

    py::register_exception<pfl::ConfigError>(m, "ConfigError",
                                             PyExc_ValueError);
    py::register_exception<pfl::ResourceError>(m, "ResourceError",
                                               PyExc_RuntimeError);

    m.def(
        "z_table",
        [](int n, double p, double delta, int protected_levels) {
            return pfl::compute_z_table(n, p, delta, protected_levels).values;
        },
        py::arg("n"), py::arg("p"), py::arg("delta") = 0.0,
        py::arg("protected_levels") = 0,
        "Erasure probability of every synthesized channel, by channel index.");

    m.def("expected_epsilon", &pfl::expected_epsilon, py::arg("p"),
          py::arg("delta"), py::arg("steps"),
          "Mean synthesized-channel erasure probability after `steps` faulty "
          "transforms.");

    m.def(
        "sign_string_to_index",
        [](const std::string& signs) { return pfl::sign_string_to_index(signs); },
        py::arg("signs"));
    m.def("index_to_sign_string", &pfl::index_to_sign_string, py::arg("index"),
          py::arg("level"));

    m.def("k_from_rate", &pfl::k_from_rate, py::arg("n"), py::arg("rate"));

    m.def(
        "info_set",
        [](int n, std::uint64_t k, double p, double delta,
           int protected_levels) {
            return info_for(make_spec(n, k, p, delta, protected_levels)).indices;
        },
        py::arg("n"), py::arg("k"), py::arg("p"), py::arg("delta") = 0.0,
        py::arg("protected_levels") = 0,
        "Indices of the k most reliable channels (ascending).");

    m.def(
        "polar_encode",
        [](const std::vector<std::uint8_t>& u, int n) {
            return pfl::polar_encode(u, n);
        },
        py::arg("u"), py::arg("n"));

    m.def(
        "fer_bounds",
        [](int n, std::uint64_t k, double p, double delta,
           int protected_levels) {
            const pfl::CodeSpec spec =
                make_spec(n, k, p, delta, protected_levels);
            const pfl::FerBounds bounds =
                pfl::fer_bounds(spec, info_for(spec));
            py::dict out;
            out["upper"] = bounds.upper;
            out["lower"] = bounds.lower;
            out["upper_trivialized"] = bounds.upper_trivialized;
            out["lower_trivialized"] = bounds.lower_trivialized;
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("p"), py::arg("delta") = 0.0,
        py::arg("protected_levels") = 0,
        "Union upper bound and pair-corrected lower bound on the frame "
        "erasure rate.");

    m.def(
        "estimate_fer",
        [](int n, std::uint64_t k, double p, double delta, int protected_levels,
           std::uint64_t trials, std::uint64_t seed,
           std::uint64_t target_erasures) {
            const pfl::CodeSpec spec =
                make_spec(n, k, p, delta, protected_levels);
            pfl::McOptions options;
            options.target_erasures = target_erasures;
            return estimate_to_dict(pfl::estimate_fer(
                spec, info_for(spec), trials, seed, options));
        },
        py::arg("n"), py::arg("k"), py::arg("p"), py::arg("delta") = 0.0,
        py::arg("protected_levels") = 0, py::arg("trials") = 10000,
        py::arg("seed") = 1, py::arg("target_erasures") = 0,
        "Monte Carlo frame-erasure estimate with a 95% Wilson interval.");

    m.def(
        "optimal_blocklength",
        [](double rate, double p, double delta, int n_max,
           std::uint64_t mc_budget, std::uint64_t seed, int protected_levels) {
            pfl::OptimizerOptions options;
            options.n_max = n_max;
            options.mc_budget = mc_budget;
            options.seed = seed;
            const pfl::BlocklengthDecision decision = pfl::optimal_blocklength(
                rate, p, delta, protected_levels, options);
            py::dict out;
            out["n_star"] = decision.n_star;
            out["method"] = method_string(decision.method);
            out["tiebreak_candidates"] = decision.tiebreak_candidates;
            py::list rows;
            for (const pfl::CandidateRow& row : decision.rows) {
                py::dict entry;
                entry["n"] = row.n;
                entry["k"] = row.k;
                entry["bounds_available"] = row.bounds_available;
                if (row.bounds_available) {
                    entry["upper"] = row.bounds.upper;
                    entry["lower"] = row.bounds.lower;
                }
                if (row.simulated) {
                    entry["mc_fer"] = row.mc_fer;
                }
                rows.append(entry);
            }
            out["rows"] = rows;
            return out;
        },
        py::arg("rate"), py::arg("p"), py::arg("delta"), py::arg("n_max") = 12,
        py::arg("mc_budget") = 20000, py::arg("seed") = 1,
        py::arg("protected_levels") = 0,
        "Frame-erasure-minimizing blocklength exponent over 0..n_max.");

    m.def(
        "protection_report",
        [](int n, int protected_levels, double p, double delta) {
            const pfl::ProtectionReport report =
                pfl::protection_report(n, protected_levels, p, delta);
            py::dict out;
            out["n"] = report.n;
            out["protected_levels"] = report.protected_levels;
            out["protected_units"] = report.protected_units;
            out["total_units"] = report.total_units;
            out["protected_fraction"] = report.protected_fraction;
            out["rate_loss"] = report.rate_loss;
            return out;
        },
        py::arg("n"), py::arg("protected_levels"), py::arg("p"),
        py::arg("delta"),
        "Memory cost and capacity cost of protecting the levels nearest the "
        "root.");

    m.def("rate_loss", &pfl::rate_loss, py::arg("delta"), py::arg("p"),
          py::arg("unprotected_levels"));

#ifdef PFL_VERSION_INFO
    m.attr("__version__") = PFL_VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
