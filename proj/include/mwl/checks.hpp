#pragma once

#include <string>
#include <vector>

namespace mwl {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// One-shot self-audit: operator exactness, local/nonlocal consistency,
/// residual decomposition E = E1 - E2, and the interpolation suite.
/// Deterministic for a given seed.
std::vector<CheckResult> run_self_checks(unsigned seed);

} // namespace mwl
