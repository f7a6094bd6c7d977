#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hilb {
namespace acceptance {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Summary {
    bool pass = true;
    std::uint64_t seed = 0;
    std::vector<CriterionResult> results;
};

// The ten checks of the certificate suite, in order. Each is deterministic
// under the given seed and uses exact arithmetic with zero tolerance.
CriterionResult identity_suite(std::uint64_t seed);                 // 1
CriterionResult chart_closure(std::uint64_t seed);                  // 2
CriterionResult dimension_ledger(std::uint64_t seed);               // 3
CriterionResult quadratic_reduction(std::uint64_t seed);            // 4
CriterionResult factorization_certificate(std::uint64_t seed);      // 5
CriterionResult degree90_separation(std::uint64_t seed);            // 6
CriterionResult inset_locus(std::uint64_t seed);                    // 7
CriterionResult jacobian_evidence(std::uint64_t seed);              // 8
CriterionResult section5_geometry(std::uint64_t seed);              // 9
CriterionResult minimality_evidence(std::uint64_t seed);            // 10 (report-only)

Summary run_all(std::uint64_t seed);

}  // namespace acceptance
}  // namespace hilb
