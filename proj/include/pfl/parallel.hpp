#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace pfl {

// Worker-thread budget: POLAR_FAULT_LAB_THREADS if set (clamped to >= 1),
// otherwise the hardware concurrency.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("POLAR_FAULT_LAB_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && parsed >= 1) {
            return static_cast<unsigned>(parsed);
        }
        return 1;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Static range split over the thread budget.  Results must not depend on the
// split, so bodies may only touch disjoint state per index.
template <typename Body>
void parallel_for(std::size_t begin, std::size_t end, const Body& body) {
    const std::size_t total = end > begin ? end - begin : 0;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(thread_budget(), total));
    if (workers <= 1 || total < 2) {
        for (std::size_t i = begin; i < end; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = begin + w * chunk;
        const std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace pfl
