// Claim-verification suites. Every module invariant is exercised by exactly one
// named check; a check either passes, fails, or lands on discrepancy-documented
// when an in-repo oracle contradicts the closed-form claim it probes and that
// contradiction is the expected finding. The `all` report is the union of the
// six suites.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tmoyal/check.hpp"
#include "tmoyal/parallel.hpp"
#include "tmoyal/star.hpp"

namespace tmoyal {

enum class Suite { star, specfun, spectrum, recurrence, oracle, asympt };

inline const char* suite_name(Suite s) {
    switch (s) {
        case Suite::star: return "star";
        case Suite::specfun: return "specfun";
        case Suite::spectrum: return "spectrum";
        case Suite::recurrence: return "recurrence";
        case Suite::oracle: return "oracle";
        default: return "asympt";
    }
}

struct RunConfig {
    Rational theta_q{1, 1};
    Rational om1_q{1, 10};   // omega_12^1
    Rational om2_q{1, 20};   // omega_12^2
    std::uint64_t seed = 1;
    double tol = 1e-10;      // default tolerance for checks that do not pin one
    int p_max = 20;
    ExecPolicy policy = ExecPolicy::openmp;

    DeformationParams deformation() const { return {theta_q, om1_q, om2_q}; }
    double theta() const { return theta_q.to_double(); }
};

// Registered check names for one suite, in emission order.
const std::vector<std::string>& registry_names(Suite s);
// Throws std::logic_error if any name appears twice across all suites.
void registry_validate();

std::vector<CheckResult> run_suite(Suite s, const RunConfig& cfg);
std::vector<CheckResult> run_all_suites(const RunConfig& cfg);

}  // namespace tmoyal
