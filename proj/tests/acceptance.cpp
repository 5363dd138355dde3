// Acceptance gate: runs every release criterion end to end and prints one
// PASS/FAIL line per criterion.  Exits nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pfl/bounds.hpp"
#include "pfl/codec.hpp"
#include "pfl/construction.hpp"
#include "pfl/covariance.hpp"
#include "pfl/montecarlo.hpp"
#include "pfl/optimizer.hpp"
#include "pfl/rng.hpp"
#include "pfl/z_table.hpp"

using namespace pfl;

namespace {

int g_failures = 0;

void report(int index, const std::string& description, bool pass,
            const std::string& detail, double seconds) {
    std::printf("%s — criterion %2d: %s [%s; %.1fs]\n", pass ? "PASS" : "FAIL",
                index, description.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

std::string sci(double value) {
    std::ostringstream out;
    out.precision(4);
    out << value;
    return out.str();
}

// ---------------------------------------------------------------------------
// Criterion 1 & 2: optimal blocklength decisions.

bool criterion_optimal_blocklength(std::string& detail) {
    OptimizerOptions options;
    options.n_max = 12;
    const std::array<std::pair<double, int>, 3> cases{
        std::pair{0.1250, 7}, std::pair{0.1875, 8}, std::pair{0.2500, 9}};
    bool pass = true;
    std::ostringstream out;
    for (const auto& [rate, expected] : cases) {
        const BlocklengthDecision decision =
            optimal_blocklength(rate, 0.5, 1e-6, 0, options);
        const bool ok = decision.n_star == expected &&
                        decision.method == DecisionMethod::kAnalyticUnique;
        pass = pass && ok;
        out << "R=" << rate << "->N=" << (1 << decision.n_star)
            << (decision.method == DecisionMethod::kAnalyticUnique
                    ? ""
                    : "(not analytic)")
            << (ok ? " " : "(want N=" + std::to_string(1 << expected) + ") ");
    }
    detail = out.str();
    return pass;
}

bool criterion_uncoded_shortcut(std::string& detail) {
    const BlocklengthDecision decision = optimal_blocklength(0.5, 1e-7, 1e-6);
    detail = "n*=" + std::to_string(decision.n_star);
    return decision.n_star == 0 &&
           decision.method == DecisionMethod::kUncodedShortcut;
}

// ---------------------------------------------------------------------------
// Criterion 3 & 4: table mean identity and fault floor.

bool criterion_mean_identity(std::string& detail) {
    double worst = 0.0;
    for (int n = 1; n <= 14; ++n) {
        for (double p : {0.1, 0.5, 0.9}) {
            for (double delta : {0.0, 1e-6, 1e-2}) {
                const ZTable z = compute_z_table(n, p, delta, 0);
                long double sum = 0.0L;
                for (double value : z.values) sum += value;
                const double mean =
                    static_cast<double>(sum / static_cast<long double>(z.size()));
                const double want = 1.0 - (1.0 - p) * std::pow(1.0 - delta, n);
                worst = std::max(worst, std::abs(mean - want) / want);
            }
        }
    }
    detail = "max relative error " + sci(worst);
    return worst <= 1e-12;
}

bool criterion_floor(std::string& detail) {
    for (double delta : {1e-6, 1e-2}) {
        for (int n = 1; n <= 14; ++n) {
            for (double p : {0.1, 0.5, 0.9}) {
                const ZTable z = compute_z_table(n, p, delta, 0);
                for (double value : z.values) {
                    if (!(value >= delta)) {
                        detail = "violated at n=" + std::to_string(n) +
                                 " delta=" + sci(delta);
                        return false;
                    }
                }
            }
        }
    }
    detail = "every entry >= delta, n <= 14";
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 5: covariance vs exhaustive enumeration, plus bitwise delta=0.

std::array<int, 4> root_indicators_n2(const std::array<int, 4>& chan,
                                      const std::array<int, 8>& fault) {
    std::array<int, 4> level1{};
    for (int k = 0; k < 2; ++k) {
        const int a = chan[2 * k];
        const int b = chan[2 * k + 1];
        level1[2 * k + 0] = (a | b) | fault[2 * k + 0];
        level1[2 * k + 1] = (a & b) | fault[2 * k + 1];
    }
    std::array<int, 4> root{};
    for (int j = 0; j < 4; ++j) {
        const int a = level1[0 + (j >> 1)];
        const int b = level1[2 + (j >> 1)];
        root[j] = ((j & 1) ? (a & b) : (a | b)) | fault[4 + j];
    }
    return root;
}

bool criterion_covariance_oracle(std::string& detail) {
    double worst = 0.0;
    for (double p : {0.3, 0.5}) {
        for (double delta : {0.0, 0.25}) {
            std::array<double, 4> mean{};
            std::array<std::array<double, 4>, 4> second{};
            for (int c = 0; c < 16; ++c) {
                std::array<int, 4> chan;
                double w_chan = 1.0;
                for (int i = 0; i < 4; ++i) {
                    chan[i] = (c >> i) & 1;
                    w_chan *= chan[i] ? p : (1.0 - p);
                }
                for (int f = 0; f < 256; ++f) {
                    std::array<int, 8> fault;
                    double weight = w_chan;
                    for (int i = 0; i < 8; ++i) {
                        fault[i] = (f >> i) & 1;
                        weight *= fault[i] ? delta : (1.0 - delta);
                    }
                    const std::array<int, 4> root = root_indicators_n2(chan, fault);
                    for (int i = 0; i < 4; ++i) {
                        if (!root[i]) continue;
                        mean[i] += weight;
                        for (int j = 0; j < 4; ++j) {
                            if (root[j]) second[i][j] += weight;
                        }
                    }
                }
            }
            CodeSpec spec;
            spec.n = 2;
            spec.p = p;
            spec.delta = delta;
            const CovarianceMatrix cov = compute_covariance(spec);
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) {
                    const double want = second[i][j] - mean[i] * mean[j];
                    worst = std::max(worst, std::abs(cov.at(i, j) - want));
                }
            }
        }
    }
    if (worst > 1e-10) {
        detail = "worst enumeration gap " + sci(worst);
        return false;
    }

    // Fault-free reduction must be bitwise: the faulty recursion with
    // delta = 0 and the plain recursion share every intermediate value.
    for (double p : {0.3, 0.5}) {
        CovarianceMatrix reference{0, {p * (1.0 - p)}};
        std::vector<double> z{p};
        for (int level = 1; level <= 6; ++level) {
            const std::size_t m = reference.dim();
            CovarianceMatrix next;
            next.level = level;
            next.data.resize(4 * m * m);
            const std::size_t dim = 2 * m;
            for (std::size_t pa = 0; pa < m; ++pa) {
                const double za = z[pa];
                for (std::size_t pb = pa; pb < m; ++pb) {
                    const double zb = z[pb];
                    const double c = reference.at(pa, pb);
                    const double c2 = c * c;
                    next.data[(2 * pa) * dim + (2 * pb)] =
                        2.0 * (1.0 - za) * (1.0 - zb) * c + c2;
                    next.data[(2 * pa) * dim + (2 * pb + 1)] =
                        2.0 * (1.0 - za) * zb * c - c2;
                    next.data[(2 * pa + 1) * dim + (2 * pb)] =
                        2.0 * za * (1.0 - zb) * c - c2;
                    next.data[(2 * pa + 1) * dim + (2 * pb + 1)] =
                        2.0 * za * zb * c + c2;
                }
            }
            for (std::size_t i = 0; i < dim; ++i) {
                for (std::size_t j = 0; j < i; ++j) {
                    next.data[i * dim + j] = next.data[j * dim + i];
                }
            }
            z = z_step(z, 0.0);
            for (std::size_t i = 0; i < dim; ++i) {
                next.data[i * dim + i] = z[i] * (1.0 - z[i]);
            }
            reference = std::move(next);

            CodeSpec spec;
            spec.n = level;
            spec.p = p;
            spec.delta = 0.0;
            const CovarianceMatrix cov = compute_covariance(spec);
            for (std::size_t idx = 0; idx < cov.data.size(); ++idx) {
                if (cov.data[idx] != reference.data[idx]) {
                    detail = "delta=0 not bitwise at level " +
                             std::to_string(level);
                    return false;
                }
            }
        }
    }
    detail = "enumeration gap " + sci(worst) + "; delta=0 bitwise to level 6";
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 6: exhaustive decoder / indicator equivalence for n <= 4.

bool criterion_decoder_equivalence(std::string& detail) {
    std::uint64_t checked = 0;
    for (int n = 1; n <= 4; ++n) {
        const std::size_t block = std::size_t{1} << n;
        std::vector<FaultPattern> patterns;
        patterns.push_back(FaultPattern::none(n));
        patterns.push_back(FaultPattern::all_faults(n));
        const std::array<double, 4> densities{0.1, 0.3, 0.5, 0.9};
        for (std::uint64_t seed = 0; seed < 64; ++seed) {
            patterns.push_back(
                FaultPattern::sampled(n, densities[seed % 4], 0, seed));
        }

        const ZTable z = compute_z_table(n, 0.5, 0.0, 0);
        std::vector<InfoSet> info_sets;
        info_sets.push_back(select_info_set(z, block / 2));
        std::vector<std::uint32_t> everything(block);
        std::iota(everything.begin(), everything.end(), 0u);
        info_sets.push_back(InfoSet{std::move(everything)});

        CodeSpec spec;
        spec.n = n;
        for (std::uint32_t mask = 0; mask < (1u << block); ++mask) {
            std::vector<std::uint8_t> u(block), erased(block);
            for (std::size_t i = 0; i < block; ++i) {
                u[i] = static_cast<std::uint8_t>(rng::bits(0xACCE5 + n, mask) >>
                                                 i) & 1;
                erased[i] = static_cast<std::uint8_t>((mask >> i) & 1u);
            }
            const std::vector<std::uint8_t> x = polar_encode(u, n);
            std::vector<Message> y(block);
            for (std::size_t i = 0; i < block; ++i) {
                y[i] = erased[i] ? kErased : message_from_bit(x[i]);
            }
            for (const FaultPattern& faults : patterns) {
                const std::vector<std::uint8_t> ind =
                    indicator_tree(erased, faults);
                for (const InfoSet& info : info_sets) {
                    spec.k = info.size();
                    const DecodeResult result = sc_decode(y, spec, info, u, faults);
                    std::optional<std::uint32_t> want;
                    for (std::uint32_t i : info.indices) {
                        if (ind[i]) {
                            want = i;
                            break;
                        }
                    }
                    ++checked;
                    const bool erased_frame =
                        result.status == DecodeStatus::kFrameErasure;
                    if (erased_frame != want.has_value() ||
                        result.first_erased_index != want ||
                        (!erased_frame && result.decoded_bits != u)) {
                        detail = "mismatch at n=" + std::to_string(n) +
                                 " mask=" + std::to_string(mask);
                        return false;
                    }
                }
            }
        }
    }
    detail = std::to_string(checked) + " decode/oracle comparisons";
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 7: Monte Carlo estimate sandwiched by the analytic bounds.

bool criterion_bound_sandwich(std::string& detail) {
    CodeSpec spec;
    spec.n = 8;
    spec.k = k_from_rate(8, 0.25);
    spec.p = 0.5;
    spec.delta = 1e-6;
    const BoundsValidation validation =
        validate_bounds(spec, select_info_set(compute_z_table(8, 0.5, 1e-6, 0),
                                              spec.k),
                        200000, 1);
    detail = "CI [" + sci(validation.estimate.ci_low) + ", " +
             sci(validation.estimate.ci_high) + "] vs bounds [" +
             sci(validation.bounds.lower) + ", " + sci(validation.bounds.upper) +
             "]";
    return validation.pass && validation.estimate.trials == 200000;
}

// ---------------------------------------------------------------------------
// Criterion 8: protection equivalences and report numbers.

bool criterion_protection(std::string& detail) {
    for (int n : {4, 6}) {
        const ZTable shielded = compute_z_table(n, 0.5, 1e-2, n + 1);
        const ZTable clean = compute_z_table(n, 0.5, 0.0, 0);
        if (shielded.values != clean.values) {
            detail = "Z tables differ at n=" + std::to_string(n);
            return false;
        }
        CodeSpec faulty;
        faulty.n = n;
        faulty.k = std::uint64_t{1} << (n - 2);
        faulty.p = 0.5;
        faulty.delta = 1e-2;
        faulty.protected_levels = n + 1;
        CodeSpec fault_free = faulty;
        fault_free.delta = 0.0;
        fault_free.protected_levels = 0;
        const InfoSet info = select_info_set(clean, faulty.k);
        const FerBounds a = fer_bounds(faulty, info);
        const FerBounds b = fer_bounds(fault_free, info);
        if (a.upper != b.upper || a.lower != b.lower) {
            detail = "bounds differ at n=" + std::to_string(n);
            return false;
        }
    }

    const ProtectionReport report = protection_report(10, 5, 0.5, 1e-6);
    if (report.protected_units != 31 || report.total_units != 2047) {
        detail = "unit counts " + std::to_string(report.protected_units) + "/" +
                 std::to_string(report.total_units);
        return false;
    }
    if (std::abs(report.protected_fraction - 1.514e-2) > 1e-4) {
        detail = "fraction " + sci(report.protected_fraction);
        return false;
    }
    const double closed = (1.0 - std::pow(1.0 - 1e-6, 5)) * 0.5;
    const double got = rate_loss(1e-6, 0.5, 5);
    if (std::abs(got - closed) > 1e-12) {
        detail = "rate loss " + sci(got) + " vs " + sci(closed);
        return false;
    }
    detail = "31/2047, fraction " + sci(report.protected_fraction) +
             ", rate loss " + sci(got);
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 9: qualitative bound trends.

double upper_bound(int n, double rate, double p, double delta,
                   int protected_levels) {
    const ZTable z = compute_z_table(n, p, delta, protected_levels);
    const InfoSet info = select_info_set(z, k_from_rate(n, rate));
    return fer_upper_from_table(z, info);
}

bool criterion_trends(std::string& detail) {
    std::ostringstream out;
    bool pass = true;

    const double grow8 = upper_bound(8, 0.30, 0.5, 1e-6, 0);
    const double grow12 = upper_bound(12, 0.30, 0.5, 1e-6, 0);
    const bool a = grow12 > grow8;
    out << "(a) UB(n=12)=" << sci(grow12) << (a ? " > " : " !> ")
        << "UB(n=8)=" << sci(grow8) << " at R=0.30";
    pass = pass && a;

    const double shielded8 = upper_bound(8, 0.25, 0.5, 1e-6, 3);
    const double shielded12 = upper_bound(12, 0.25, 0.5, 1e-6, 7);
    const bool b = shielded12 < shielded8;
    out << "; (b) UB(n=12,np=7)=" << sci(shielded12) << (b ? " < " : " !< ")
        << "UB(n=8,np=3)=" << sci(shielded8);
    pass = pass && b;

    bool c = true;
    double previous = 2.0;
    for (int np = 0; np <= 11; ++np) {
        const double ub = upper_bound(10, 0.2, 0.5, 1e-6, np);
        if (np > 0 && ub > previous) c = false;
        previous = ub;
    }
    out << "; (c) UB nonincreasing in np at n=10: " << (c ? "yes" : "no");
    pass = pass && c;

    detail = out.str();
    return pass;
}

// ---------------------------------------------------------------------------
// Criterion 10: saturation fraction grows with blocklength.

bool criterion_saturation(std::string& detail) {
    std::ostringstream out;
    double previous = -1.0;
    bool pass = true;
    for (int n : {4, 6, 8, 10, 12}) {
        const ZTable z = compute_z_table(n, 0.5, 1e-2, 0);
        std::size_t saturated = 0;
        for (double value : z.values) {
            if (value > 0.999) ++saturated;
        }
        const double fraction =
            static_cast<double>(saturated) / static_cast<double>(z.size());
        if (fraction < previous) pass = false;
        previous = fraction;
        out << (n == 4 ? "" : " -> ") << sci(fraction);
    }
    detail = out.str();
    return pass;
}

}  // namespace

int main() {
    {
        Timer t;
        std::string detail;
        const bool pass = criterion_optimal_blocklength(detail);
        report(1, "optimal blocklengths 128/256/512 via analytic dominance",
               pass, detail, t.seconds());
    }
    {
        Timer t;
        std::string detail;
        const bool pass = criterion_uncoded_shortcut(detail);
        report(2, "uncoded shortcut when the raw channel beats the fault floor",
               pass, detail, t.seconds());
    }
    {
        Timer t;
        std::string detail;
        const bool pass = criterion_mean_identity(detail);
        report(3, "Z-table mean identity within 1e-12 relative", pass, detail,
               t.seconds());
    }
    {
        Timer t;
        std::string detail;
        const bool pass = criterion_floor(detail);
        report(4, "fault floor under every table entry (exact)", pass, detail,
               t.seconds());
    }
    {
        Timer t;
        std::string detail;
        const bool pass = criterion_covariance_oracle(detail);
        report(5, "covariance matches exhaustive enumeration at n=2", pass,
               detail, t.seconds());
    }
    {
        Timer t;
        std::string detail;
        const bool pass = criterion_decoder_equivalence(detail);
        report(6, "decoder equals erasure propagation on all n<=4 patterns",
               pass, detail, t.seconds());
    }
    {
        Timer t;
        std::string detail;
        const bool pass = criterion_bound_sandwich(detail);
        report(7, "Monte Carlo CI intersects the analytic bracket", pass,
               detail, t.seconds());
    }
    {
        Timer t;
        std::string detail;
        const bool pass = criterion_protection(detail);
        report(8, "full protection equals fault-free; report numbers", pass,
               detail, t.seconds());
    }
    {
        Timer t;
        std::string detail;
        const bool pass = criterion_trends(detail);
        report(9, "qualitative bound trends", pass, detail, t.seconds());
    }
    {
        Timer t;
        std::string detail;
        const bool pass = criterion_saturation(detail);
        report(10, "saturated-channel fraction nondecreasing in n", pass,
               detail, t.seconds());
    }
    if (g_failures > 0) {
        std::printf("%d of 10 criteria failed\n", g_failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
