#include <doctest.h>

#include <cmath>
#include <vector>

#include "pfl/rng.hpp"
#include "pfl/sign_string.hpp"
#include "pfl/transforms.hpp"
#include "pfl/z_table.hpp"

using namespace pfl;

TEST_CASE("sign strings map to indices with the leftmost step most "
          "significant") {
    CHECK(sign_string_to_index("") == 0);
    CHECK(sign_string_to_index("-") == 0);
    CHECK(sign_string_to_index("+") == 1);
    CHECK(sign_string_to_index("+-+") == 5);
    CHECK(index_to_sign_string(5, 3) == "+-+");
    CHECK(index_to_sign_string(0, 2) == "--");
    for (std::uint32_t i = 0; i < 16; ++i) {
        CHECK(sign_string_to_index(index_to_sign_string(i, 4)) == i);
    }
    CHECK_THROWS_AS(sign_string_to_index("+x"), ConfigError);
    CHECK_THROWS_AS(index_to_sign_string(4, 2), ConfigError);
}

TEST_CASE("fault-free level-2 table matches the hand-computed values") {
    const ZTable table = compute_z_table(2, 0.5, 0.0, 0);
    REQUIRE(table.size() == 4);
    // "--" = (2e-e^2) twice, "-+" = (2e-e^2) then square, and so on; every
    // value is a dyadic rational, so the comparison is exact.
    CHECK(table.values[0] == 0.9375);
    CHECK(table.values[1] == 0.5625);
    CHECK(table.values[2] == 0.4375);
    CHECK(table.values[3] == 0.0625);
}

TEST_CASE("each level doubling applies minus to even and plus to odd slots") {
    const double delta = 3e-3;
    ZTable prev = compute_z_table(5, 0.37, delta, 0);
    const std::vector<double> next = z_step(prev.values, delta);
    REQUIRE(next.size() == 2 * prev.size());
    for (std::size_t i = 0; i < prev.size(); ++i) {
        CHECK(next[2 * i] == t_minus_faulty(prev.values[i], delta));
        CHECK(next[2 * i + 1] == t_plus_faulty(prev.values[i], delta));
    }
}

TEST_CASE("table mean follows the closed form") {
    for (int n : {1, 4, 8, 10}) {
        for (double p : {0.1, 0.5, 0.9}) {
            for (double delta : {0.0, 1e-6, 1e-2}) {
                const ZTable table = compute_z_table(n, p, delta, 0);
                long double sum = 0.0L;
                for (double v : table.values) sum += v;
                const long double mean =
                    sum / static_cast<long double>(table.size());
                const double want = expected_epsilon(p, delta, n);
                CHECK(std::abs(static_cast<double>(mean) - want) <=
                      1e-12 * want);
            }
        }
    }
}

TEST_CASE("every entry keeps the fault floor") {
    for (double delta : {1e-6, 1e-2}) {
        for (int n : {1, 3, 6, 10}) {
            const ZTable table = compute_z_table(n, 0.5, delta, 0);
            for (double v : table.values) {
                CHECK(v >= delta);
                CHECK(v <= 1.0);
            }
        }
    }
}

TEST_CASE("protection disables faults on the steps nearest the root") {
    const int n = 6;
    const double p = 0.5;
    const double delta = 1e-2;
    const int protected_levels = 2;

    // Recompute by hand: faulty steps first, fault-free steps after.
    std::vector<double> want = {p};
    for (int step = 1; step <= n; ++step) {
        want = z_step(want, step <= n - protected_levels ? delta : 0.0);
    }
    const ZTable table = compute_z_table(n, p, delta, protected_levels);
    REQUIRE(table.values.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(table.values[i] == want[i]);
    }
}

TEST_CASE("full protection is bitwise identical to a fault-free decoder") {
    for (int n : {1, 4, 9}) {
        const ZTable faulty = compute_z_table(n, 0.5, 1e-2, n + 1);
        const ZTable clean = compute_z_table(n, 0.5, 0.0, 0);
        for (std::size_t i = 0; i < clean.size(); ++i) {
            CHECK(faulty.values[i] == clean.values[i]);
        }
    }
}

TEST_CASE("sampled transform paths are reproducible and well formed") {
    const auto path = sample_epsilon_path(0.5, 1e-3, 12, 99);
    REQUIRE(path.size() == 13);
    CHECK(path[0] == 0.5);
    for (int j = 1; j <= 12; ++j) {
        const bool plus = rng::bits(99, static_cast<std::uint64_t>(j)) & 1u;
        const double want = plus ? t_plus_faulty(path[j - 1], 1e-3)
                                 : t_minus_faulty(path[j - 1], 1e-3);
        CHECK(path[j] == want);
    }
    CHECK(sample_epsilon_path(0.5, 1e-3, 12, 99) == path);
}

TEST_CASE("z table argument validation") {
    CHECK_THROWS_AS(compute_z_table(-1, 0.5, 0.0, 0), ConfigError);
    CHECK_THROWS_AS(compute_z_table(3, 1.5, 0.0, 0), ConfigError);
    CHECK_THROWS_AS(compute_z_table(3, 0.5, 0.0, 5), ConfigError);
    CHECK_THROWS_AS(compute_z_table(3, 0.5, 0.0, -1), ConfigError);
    CHECK_THROWS_AS(expected_epsilon(0.5, 0.5, -1), ConfigError);
}
