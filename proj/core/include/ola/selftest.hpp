#pragma once

#include <string>
#include <vector>

namespace ola {

struct SelfTestResult {
    std::string name;
    long long checked = 0;
    long long failed = 0;
    std::string first_failure;  // human-readable, empty when clean
};

/// Oracle-agreement suites, sized to finish in seconds:
/// kostka vs tableau enumeration, kl_poly vs the R-polynomial solver,
/// finite_verma_mult vs the low-rank closed forms, c_coeff vs the tensor
/// model. All pass iff every `failed` count is zero.
std::vector<SelfTestResult> run_selftests();

}  // namespace ola
