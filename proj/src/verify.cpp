#include "tmoyal/verify.hpp"

#include <set>
#include <stdexcept>

#include "verify_util.hpp"

namespace tmoyal {

namespace verifydetail {
Emitter build_star_suite(const RunConfig&);
Emitter build_specfun_suite(const RunConfig&);
Emitter build_spectrum_suite(const RunConfig&);
Emitter build_recurrence_suite(const RunConfig&);
Emitter build_oracle_suite(const RunConfig&);
Emitter build_asympt_suite(const RunConfig&);

Emitter build_suite(Suite s, const RunConfig& cfg) {
    switch (s) {
        case Suite::star: return build_star_suite(cfg);
        case Suite::specfun: return build_specfun_suite(cfg);
        case Suite::spectrum: return build_spectrum_suite(cfg);
        case Suite::recurrence: return build_recurrence_suite(cfg);
        case Suite::oracle: return build_oracle_suite(cfg);
        default: return build_asympt_suite(cfg);
    }
}
}  // namespace verifydetail

const std::vector<std::string>& registry_names(Suite s) {
    static const std::vector<std::string> tables[6] = {
        verifydetail::build_star_suite(RunConfig{}).names(),
        verifydetail::build_specfun_suite(RunConfig{}).names(),
        verifydetail::build_spectrum_suite(RunConfig{}).names(),
        verifydetail::build_recurrence_suite(RunConfig{}).names(),
        verifydetail::build_oracle_suite(RunConfig{}).names(),
        verifydetail::build_asympt_suite(RunConfig{}).names(),
    };
    return tables[static_cast<int>(s)];
}

void registry_validate() {
    std::set<std::string> seen;
    for (int i = 0; i < 6; ++i)
        for (const std::string& name : registry_names(static_cast<Suite>(i)))
            if (!seen.insert(name).second)
                throw std::logic_error("duplicate check name in registry: " + name);
}

std::vector<CheckResult> run_suite(Suite s, const RunConfig& cfg) {
    return verifydetail::build_suite(s, cfg).run();
}

std::vector<CheckResult> run_all_suites(const RunConfig& cfg) {
    registry_validate();
    std::vector<CheckResult> all;
    for (int i = 0; i < 6; ++i) {
        auto part = run_suite(static_cast<Suite>(i), cfg);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

}  // namespace tmoyal
