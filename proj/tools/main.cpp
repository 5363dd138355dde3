// polar-fault-lab: construction, bounds, simulation, and blocklength
// optimization for polar codes decoded by fault-prone hardware.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pfl/bounds.hpp"
#include "pfl/codec.hpp"
#include "pfl/construction.hpp"
#include "pfl/errors.hpp"
#include "pfl/io.hpp"
#include "pfl/montecarlo.hpp"
#include "pfl/optimizer.hpp"
#include "pfl/rng.hpp"
#include "pfl/z_table.hpp"

namespace {

using pfl::CodeSpec;
using pfl::ConfigError;
using pfl::InfoSet;
using pfl::ZTable;

// Deletes every tracked output unless the command completed, so failed runs
// never leave partial files behind.
class OutputGuard {
  public:
    ~OutputGuard() {
        if (committed_) return;
        for (const std::string& path : paths_) {
            std::remove(path.c_str());
        }
    }
    const std::string& track(const std::string& path) {
        paths_.push_back(path);
        return paths_.back();
    }
    void commit() { committed_ = true; }

  private:
    std::vector<std::string> paths_;
    bool committed_ = false;
};

struct CommonOptions {
    int n = 0;
    double p = 0.5;
    double delta = 1e-6;
    int protected_levels = 0;
    std::vector<double> rates;
    std::uint64_t k = 0;
    bool k_given = false;
    bool n_given = false;
    std::uint64_t trials = 0;
    std::uint64_t seed = 1;
    int n_max = -1;
    std::string out;
    std::string format = "csv";
    std::string trace_path;
};

std::uint64_t resolve_k(const CommonOptions& opt) {
    if (opt.k_given != opt.rates.empty()) {
        // either both present or both absent
        throw ConfigError("give exactly one of --rate and --k");
    }
    if (opt.k_given) return opt.k;
    if (opt.rates.size() != 1) {
        throw ConfigError("this command takes a single --rate value");
    }
    return pfl::k_from_rate(opt.n, opt.rates.front());
}

CodeSpec make_spec(const CommonOptions& opt, std::uint64_t k) {
    CodeSpec spec;
    spec.n = opt.n;
    spec.k = k;
    spec.p = opt.p;
    spec.delta = opt.delta;
    spec.protected_levels = opt.protected_levels;
    pfl::validate(spec);
    return spec;
}

std::vector<double> rate_grid(double from, double to, double step) {
    std::vector<double> rates;
    for (int i = 0;; ++i) {
        const double r = from + step * i;
        if (r > to + 1e-12) break;
        rates.push_back(r);
    }
    return rates;
}

void cmd_construct(const CommonOptions& opt) {
    const std::uint64_t k = resolve_k(opt);
    const CodeSpec spec = make_spec(opt, k);
    const ZTable table =
        pfl::compute_z_table(spec.n, spec.p, spec.delta, spec.protected_levels);
    const InfoSet info = pfl::select_info_set(table, spec.k);

    OutputGuard guard;
    const std::string prefix = opt.out.empty() ? "code" : opt.out;
    pfl::io::write_code_json(guard.track(prefix + ".json"), spec, info);
    pfl::io::write_z_csv(guard.track(prefix + ".z.csv"),
                         pfl::io::sorted_z_rows(table));
    pfl::io::write_info_csv(guard.track(prefix + ".info.csv"), info);
    guard.commit();
    std::cout << prefix << ".json " << prefix << ".z.csv " << prefix
              << ".info.csv\n";
}

void cmd_bounds(const CommonOptions& opt) {
    OutputGuard guard;
    const std::string path = opt.out.empty() ? "bounds.csv" : opt.out;
    if (opt.n_given) {
        // Rate sweep (or a single --k point) at fixed n.
        std::vector<double> rates = opt.rates;
        if (opt.k_given) {
            if (!rates.empty()) {
                throw ConfigError("give exactly one of --rate and --k");
            }
            rates.push_back(static_cast<double>(opt.k) /
                            static_cast<double>(std::uint64_t{1} << opt.n));
        }
        if (rates.empty()) {
            throw ConfigError("--n needs --rate (list accepted) or --k");
        }
        const auto rows = pfl::bounds_sweep_rate(opt.n, opt.p, opt.delta,
                                                 opt.protected_levels, rates);
        pfl::io::write_rate_bounds_csv(guard.track(path), rows);
    } else {
        // Blocklength sweep at fixed rate.
        if (opt.n_max < 0) {
            throw ConfigError("bounds needs --n (rate sweep) or --n-max "
                              "(blocklength sweep)");
        }
        if (opt.rates.size() != 1 || opt.k_given) {
            throw ConfigError("a blocklength sweep takes exactly one --rate");
        }
        const double rate = opt.rates.front();
        std::vector<pfl::io::NBoundsRow> rows;
        for (int n = 0; n <= opt.n_max; ++n) {
            CodeSpec spec;
            spec.n = n;
            spec.k = pfl::k_from_rate(n, rate);
            spec.p = opt.p;
            spec.delta = opt.delta;
            spec.protected_levels = opt.protected_levels;
            const ZTable table = pfl::compute_z_table(n, spec.p, spec.delta,
                                                      spec.protected_levels);
            const InfoSet info = pfl::select_info_set(table, spec.k);
            rows.push_back({n, pfl::fer_bounds(spec, info)});
        }
        pfl::io::write_n_bounds_csv(guard.track(path), rows);
    }
    guard.commit();
    std::cout << path << "\n";
}

void cmd_simulate(const CommonOptions& opt) {
    const std::uint64_t k = resolve_k(opt);
    const CodeSpec spec = make_spec(opt, k);
    const ZTable table =
        pfl::compute_z_table(spec.n, spec.p, spec.delta, spec.protected_levels);
    const InfoSet info = pfl::select_info_set(table, spec.k);

    OutputGuard guard;
    if (!opt.trace_path.empty()) {
        // Debug dump: every intermediate message of frame 0, in compute order.
        std::vector<pfl::TraceEntry> trace;
        const std::uint64_t frame_key = pfl::rng::derive(opt.seed, 0);
        std::vector<std::uint8_t> u(spec.block_length(), 0);
        const auto payload_key =
            pfl::rng::derive(frame_key, pfl::rng::kStreamPayload);
        for (std::size_t j = 0; j < info.indices.size(); ++j) {
            u[info.indices[j]] =
                static_cast<std::uint8_t>(pfl::rng::bits(payload_key, j) & 1);
        }
        const auto x = pfl::polar_encode(u, spec.n);
        const auto y = pfl::transmit_bec(x, spec.p, frame_key);
        const auto faults = pfl::FaultPattern::sampled(
            spec.n, spec.delta, spec.protected_levels, frame_key);
        pfl::sc_decode(y, spec, info, {}, faults, &trace);
        std::vector<std::vector<std::string>> cells;
        cells.reserve(trace.size());
        for (const pfl::TraceEntry& entry : trace) {
            cells.push_back({std::to_string(entry.level),
                             std::to_string(entry.position),
                             std::to_string(static_cast<int>(entry.message)),
                             entry.fault_flag ? "1" : "0"});
        }
        pfl::io::write_csv(guard.track(opt.trace_path), {},
                           {"level", "position", "message", "fault_flag"},
                           cells);
    }

    pfl::McOptions mc;
    mc.target_erasures = 200;  // stop early once the estimate is solid
    mc.progress = [](std::uint64_t done, std::uint64_t total,
                     std::uint64_t erasures) {
        std::fprintf(stderr, "trials %llu/%llu fer=%.6g\n",
                     static_cast<unsigned long long>(done),
                     static_cast<unsigned long long>(total),
                     done ? static_cast<double>(erasures) /
                                static_cast<double>(done)
                          : 0.0);
    };
    const std::uint64_t budget = opt.trials ? opt.trials : 10000;
    const pfl::FerEstimate estimate =
        pfl::estimate_fer(spec, info, budget, opt.seed, mc);

    const bool json = opt.format == "json";
    const std::string path =
        opt.out.empty() ? (json ? "fer.json" : "fer.csv") : opt.out;
    if (json) {
        pfl::io::write_estimate_json(guard.track(path), estimate);
    } else {
        pfl::io::write_estimate_csv(guard.track(path), estimate);
    }
    guard.commit();
    std::cout << path << "\n";
}

void cmd_optimize(const CommonOptions& opt) {
    if (opt.rates.size() != 1 || opt.k_given) {
        throw ConfigError("optimize takes exactly one --rate");
    }
    pfl::OptimizerOptions options;
    options.n_max = opt.n_max < 0 ? 12 : opt.n_max;
    options.mc_budget = opt.trials ? opt.trials : 20000;
    options.seed = opt.seed;
    const pfl::BlocklengthDecision decision = pfl::optimal_blocklength(
        opt.rates.front(), opt.p, opt.delta, opt.protected_levels, options);

    OutputGuard guard;
    const bool json = opt.format == "json";
    const std::string path =
        opt.out.empty() ? (json ? "decision.json" : "decision.csv") : opt.out;
    if (json) {
        pfl::io::write_decision_json(guard.track(path), decision);
    } else {
        pfl::io::write_decision_csv(guard.track(path), decision);
    }
    guard.commit();
    std::cout << "n_star=" << decision.n_star << " method="
              << pfl::io::method_name(decision.method) << " " << path << "\n";
}

// Per-rate union upper bounds for every protection depth 0..n+1, with the
// memory-cost and rate-loss report attached to each row.
void cmd_uep(const CommonOptions& opt) {
    if (!opt.n_given) {
        throw ConfigError("uep needs --n");
    }
    const std::vector<double> rates =
        opt.rates.empty() ? rate_grid(0.02, 0.40, 0.02) : opt.rates;

    std::vector<std::vector<std::string>> cells;
    for (int np = 0; np <= opt.n + 1; ++np) {
        const pfl::ProtectionReport report =
            pfl::protection_report(opt.n, np, opt.p, opt.delta);
        const ZTable table = pfl::compute_z_table(opt.n, opt.p, opt.delta, np);
        for (double rate : rates) {
            const std::uint64_t k = pfl::k_from_rate(opt.n, rate);
            const InfoSet info = pfl::select_info_set(table, k);
            const double upper = pfl::fer_upper_from_table(table, info);
            cells.push_back({std::to_string(np), pfl::io::format_double(rate),
                             pfl::io::format_double(upper),
                             std::to_string(report.protected_units),
                             std::to_string(report.total_units),
                             pfl::io::format_double(report.protected_fraction),
                             pfl::io::format_double(report.rate_loss)});
        }
    }
    OutputGuard guard;
    const std::string path = opt.out.empty() ? "uep.csv" : opt.out;
    pfl::io::write_csv(guard.track(path), {},
                       {"protected_levels", "rate", "upper", "protected_units",
                        "total_units", "protected_fraction", "rate_loss"},
                       cells);
    guard.commit();
    std::cout << path << "\n";
}

void preset_fig3(const std::string& path, OutputGuard& guard) {
    const std::vector<double> rates = rate_grid(0.02, 0.50, 0.02);
    std::vector<std::vector<std::string>> cells;
    for (int n : {8, 10, 12}) {
        const auto rows = pfl::bounds_sweep_rate(n, 0.5, 1e-6, 0, rates);
        for (const pfl::RateBoundsRow& row : rows) {
            cells.push_back({std::to_string(n), pfl::io::format_double(row.rate),
                             pfl::io::format_double(row.bounds.upper),
                             pfl::io::format_double(row.bounds.lower),
                             row.bounds.upper_trivialized ? "1" : "0",
                             row.bounds.lower_trivialized ? "1" : "0"});
        }
    }
    pfl::io::write_csv(path, {},
                       {"n", "rate", "upper", "lower", "upper_trivialized",
                        "lower_trivialized"},
                       cells);
    (void)guard;
}

void preset_fig4(const std::string& path, OutputGuard& guard) {
    std::vector<std::vector<std::string>> cells;
    for (int n : {8, 10, 12}) {
        for (double delta : {1e-6, 0.0}) {
            const ZTable table = pfl::compute_z_table(n, 0.5, delta, 0);
            const auto rows = pfl::io::sorted_z_rows(table);
            for (std::size_t rank = 0; rank < rows.size(); ++rank) {
                cells.push_back({std::to_string(n),
                                 pfl::io::format_double(delta),
                                 std::to_string(rank),
                                 std::to_string(rows[rank].index),
                                 rows[rank].sign,
                                 pfl::io::format_double(rows[rank].z)});
            }
        }
    }
    pfl::io::write_csv(path, {},
                       {"n", "delta", "rank", "index", "sign_string",
                        "z_value"},
                       cells);
    (void)guard;
}

void preset_fig5(const std::string& path, OutputGuard& guard) {
    const std::vector<double> rates = {0.125, 0.1875, 0.25};
    std::vector<std::vector<std::string>> cells;
    for (int n = 4; n <= 12; ++n) {
        const auto rows = pfl::bounds_sweep_rate(n, 0.5, 1e-6, 0, rates);
        for (const pfl::RateBoundsRow& row : rows) {
            cells.push_back({pfl::io::format_double(row.rate),
                             std::to_string(n),
                             pfl::io::format_double(row.bounds.upper),
                             pfl::io::format_double(row.bounds.lower),
                             row.bounds.upper_trivialized ? "1" : "0",
                             row.bounds.lower_trivialized ? "1" : "0"});
        }
    }
    pfl::io::write_csv(path, {},
                       {"rate", "n", "upper", "lower", "upper_trivialized",
                        "lower_trivialized"},
                       cells);
    (void)guard;
}

void preset_fig6(const std::string& path, OutputGuard& guard) {
    const std::vector<double> rates = rate_grid(0.02, 0.40, 0.02);
    const int n = 10;
    std::vector<std::vector<std::string>> cells;
    for (int np : {0, 1, 2, 3, 4, 5, n + 1}) {
        const ZTable table = pfl::compute_z_table(n, 0.5, 1e-6, np);
        for (double rate : rates) {
            const InfoSet info =
                pfl::select_info_set(table, pfl::k_from_rate(n, rate));
            cells.push_back(
                {std::to_string(np), pfl::io::format_double(rate),
                 pfl::io::format_double(pfl::fer_upper_from_table(table, info))});
        }
    }
    pfl::io::write_csv(path, {}, {"protected_levels", "rate", "upper"}, cells);
    (void)guard;
}

void preset_fig7(const std::string& path, OutputGuard& guard) {
    const std::vector<double> rates = rate_grid(0.02, 0.40, 0.02);
    std::vector<std::vector<std::string>> cells;
    for (int n : {8, 10, 12}) {
        // Partially protected faulty decoder next to its fault-free twin.
        const struct {
            double delta;
            int np;
        } settings[] = {{1e-6, n - 5}, {0.0, 0}};
        for (const auto& s : settings) {
            const ZTable table = pfl::compute_z_table(n, 0.5, s.delta, s.np);
            for (double rate : rates) {
                const InfoSet info =
                    pfl::select_info_set(table, pfl::k_from_rate(n, rate));
                cells.push_back(
                    {std::to_string(n), std::to_string(s.np),
                     pfl::io::format_double(s.delta),
                     pfl::io::format_double(rate),
                     pfl::io::format_double(
                         pfl::fer_upper_from_table(table, info))});
            }
        }
    }
    pfl::io::write_csv(path, {},
                       {"n", "protected_levels", "delta", "rate", "upper"},
                       cells);
    (void)guard;
}

void cmd_reproduce(const std::string& preset, const CommonOptions& opt) {
    OutputGuard guard;
    const std::string path = opt.out.empty() ? preset + ".csv" : opt.out;
    guard.track(path);
    if (preset == "fig3") {
        preset_fig3(path, guard);
    } else if (preset == "fig4") {
        preset_fig4(path, guard);
    } else if (preset == "fig5") {
        preset_fig5(path, guard);
    } else if (preset == "fig6") {
        preset_fig6(path, guard);
    } else if (preset == "fig7") {
        preset_fig7(path, guard);
    } else {
        throw ConfigError("unknown preset '" + preset + "'");
    }
    guard.commit();
    std::cout << path << "\n";
}

void add_common_flags(CLI::App* cmd, CommonOptions& opt, bool with_n,
                      bool with_rate_k, bool with_trials, bool with_n_max) {
    if (with_n) {
        cmd->add_option("--n", opt.n, "blocklength exponent (N = 2^n)");
    }
    cmd->add_option("--p", opt.p, "channel erasure probability")
        ->capture_default_str();
    cmd->add_option("--delta", opt.delta, "per-write fault probability")
        ->capture_default_str();
    cmd->add_option("--protected-levels", opt.protected_levels,
                    "fault-free levels nearest the root")
        ->capture_default_str();
    if (with_rate_k) {
        cmd->add_option("--rate", opt.rates,
                        "code rate (comma separated list where a sweep applies)")
            ->delimiter(',');
        cmd->add_option("--k", opt.k, "information bits per frame");
    }
    if (with_trials) {
        cmd->add_option("--trials", opt.trials, "frame budget");
        cmd->add_option("--seed", opt.seed, "simulation seed")
            ->capture_default_str();
    }
    if (with_n_max) {
        cmd->add_option("--n-max", opt.n_max, "largest exponent examined");
    }
    cmd->add_option("--out", opt.out, "output path (or prefix)");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polar codes on the binary erasure channel with a fault-prone "
                 "successive cancellation decoder"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string preset;

    CLI::App* construct =
        app.add_subcommand("construct", "select an information set and export "
                                        "the code definition and Z table");
    add_common_flags(construct, opt, true, true, false, false);
    construct->get_option("--n")->required();

    CLI::App* bounds =
        app.add_subcommand("bounds", "analytic frame-erasure bounds, swept "
                                     "over rate (--n) or blocklength (--n-max)");
    add_common_flags(bounds, opt, true, true, false, true);

    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte Carlo frame-erasure estimate");
    add_common_flags(simulate, opt, true, true, true, false);
    simulate->get_option("--n")->required();
    simulate->add_option("--trace", opt.trace_path,
                         "also dump every intermediate message of frame 0 to "
                         "this CSV");

    CLI::App* optimize = app.add_subcommand(
        "optimize", "pick the frame-erasure-minimizing blocklength");
    add_common_flags(optimize, opt, false, true, true, true);

    CLI::App* uep = app.add_subcommand(
        "uep", "upper bounds for every protection depth 0..n+1");
    add_common_flags(uep, opt, true, true, false, false);
    uep->get_option("--n")->required();

    CLI::App* reproduce = app.add_subcommand(
        "reproduce", "regenerate a reference sweep (fig3..fig7)");
    reproduce->add_option("preset", preset, "one of fig3|fig4|fig5|fig6|fig7")
        ->required()
        ->check(CLI::IsMember({"fig3", "fig4", "fig5", "fig6", "fig7"}));
    reproduce->add_option("--out", opt.out, "output path");

    try {
        app.parse(argc, argv);
        opt.n_given = construct->count("--n") || bounds->count("--n") ||
                      simulate->count("--n") || uep->count("--n");
        opt.k_given = construct->count("--k") || bounds->count("--k") ||
                      simulate->count("--k") || optimize->count("--k");

        if (construct->parsed()) {
            cmd_construct(opt);
        } else if (bounds->parsed()) {
            cmd_bounds(opt);
        } else if (simulate->parsed()) {
            cmd_simulate(opt);
        } else if (optimize->parsed()) {
            cmd_optimize(opt);
        } else if (uep->parsed()) {
            cmd_uep(opt);
        } else if (reproduce->parsed()) {
            cmd_reproduce(preset, opt);
        }
        return 0;
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 2;
    } catch (const pfl::ResourceError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 3;
    } catch (const ConfigError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
}
