// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
// Seed configurable via HILB_ACCEPTANCE_SEED (default 1).

#include <cstdio>
#include <cstdlib>
#include <string>

#include "hilb/acceptance.hpp"

int main() {
    std::uint64_t seed = 1;
    if (const char* env = std::getenv("HILB_ACCEPTANCE_SEED")) seed = std::strtoull(env, nullptr, 10);

    hilb::acceptance::Summary summary = hilb::acceptance::run_all(seed);
    for (const auto& r : summary.results) {
        std::printf("[%s] criterion %2d: %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.number, r.name.c_str(),
                    r.seconds);
        if (!r.detail.empty()) std::printf("        %s\n", r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf(summary.pass ? "acceptance: ALL CRITERIA PASS\n" : "acceptance: FAILURE\n");
    return summary.pass ? 0 : 1;
}
