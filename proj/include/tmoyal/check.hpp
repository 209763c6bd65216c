// Named verification outcome shared by the library oracles and the CLI report.
#pragma once

#include <string>
#include <utility>

namespace tmoyal {

enum class CheckStatus { pass, fail, discrepancy_documented };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "discrepancy-documented";
    }
}

// status == pass  <=>  residual <= tolerance. "discrepancy-documented" is
// reserved for claims an in-repo oracle is expected to contradict; an
// unexpected miss stays a hard fail.
struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    CheckStatus status = CheckStatus::pass;
    std::string note;

    static CheckResult make(std::string name, double residual, double tolerance,
                            bool expected_contradiction, std::string note = {}) {
        CheckResult c;
        c.name = std::move(name);
        c.residual = residual;
        c.tolerance = tolerance;
        c.status = residual <= tolerance
                       ? CheckStatus::pass
                       : (expected_contradiction ? CheckStatus::discrepancy_documented
                                                 : CheckStatus::fail);
        c.note = std::move(note);
        return c;
    }
};

}  // namespace tmoyal
