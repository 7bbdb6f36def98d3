#pragma once

// Named self-checks wiring the modules against each other: closed forms
// vs the discretized connection integral, the Bell mixing matrix vs the
// evolved Bell states, the concurrence/|b| identity, and the randomized
// oracle agreements.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace berry {

struct CheckResult {
    std::string name;
    double max_err;
    double tolerance;
    bool pass;
};

struct VerifyOptions {
    // overrides every per-check tolerance when set
    std::optional<double> tolerance;
    // randomized checks are skipped when seed == 0
    std::uint64_t seed = 12345;
};

std::vector<CheckResult> run_verify(const VerifyOptions& opts);

} // namespace berry
