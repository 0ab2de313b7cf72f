#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "wpd2d/params.hpp"

namespace wpd2d::harness {

struct CriterionResult {
    std::string name;
    bool pass = false;
    long checks = 0;
    long failures = 0;
    double worst = 0.0;   // worst residual/gap seen, criterion-specific scale
    double seconds = 0.0; // wall time; the only field exempt from the
                          // fixed-seed determinism contract
    std::string detail;
};

struct AcceptanceReport {
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
};

// Certifies every closed form against brute-force or Monte-Carlo oracles and
// checks the qualitative trend suite at the default scenario. Deterministic
// for a fixed seed. n_scenarios drives the oracle-equivalence family
// (minimum 20).
AcceptanceReport run_acceptance(const SystemParams& defaults, int n_scenarios,
                                std::uint64_t seed, bool include_trends = true);

void print_report(const AcceptanceReport& report, std::ostream& out);

}  // namespace wpd2d::harness
