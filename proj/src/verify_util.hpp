// Internal helpers shared by the verify suite sources.
#pragma once

#include <functional>

#include "tmoyal/prng.hpp"
#include "tmoyal/verify.hpp"

namespace tmoyal::verifydetail {

// Runs each registered check body in order, isolating exceptions into failed
// results so one broken check cannot take down the report.
class Emitter {
public:
    explicit Emitter(Suite suite) : suite_(suite) {}

    void add(const std::string& name, std::function<CheckResult()> body) {
        names_.push_back(name);
        bodies_.push_back(std::move(body));
    }

    std::vector<std::string> names() const { return names_; }

    std::vector<CheckResult> run() const {
        std::vector<CheckResult> out(bodies_.size());
        for (std::size_t i = 0; i < bodies_.size(); ++i) {
            try {
                out[i] = bodies_[i]();
            } catch (const std::exception& e) {
                out[i] = CheckResult{names_[i], INFINITY, 1.0, CheckStatus::fail,
                                     std::string("exception: ") + e.what()};
            }
            if (out[i].name != names_[i])
                out[i] = CheckResult{names_[i], INFINITY, 1.0, CheckStatus::fail,
                                     "check emitted mismatched name '" + out[i].name + "'"};
        }
        return out;
    }

private:
    Suite suite_;
    std::vector<std::string> names_;
    std::vector<std::function<CheckResult()>> bodies_;
};

// Random sparse exact polynomial: up to `max_terms` monomials of total degree
// <= max_deg, rational coefficients with small numerators/denominators.
inline PolyExact random_exact_poly(SplitMix64& rng, Basis basis, int max_deg, int max_terms = 6) {
    PolyExact p(basis);
    int nterms = static_cast<int>(rng.integer(1, max_terms));
    for (int t = 0; t < nterms; ++t) {
        int m = static_cast<int>(rng.integer(0, max_deg));
        int n = static_cast<int>(rng.integer(0, max_deg - m));
        ExactComplex c(QSqrt2(rng.rational(9, 4)), QSqrt2(rng.rational(9, 4)));
        p.add_term(m, n, c);
    }
    return p;
}

inline DeformationParams random_deformation(SplitMix64& rng, bool with_twist) {
    Rational theta = rng.positive_rational(6, 3);
    if (!with_twist) return {theta, Rational(0), Rational(0)};
    return {theta, rng.rational(2, 12), rng.rational(2, 12)};
}

// residual from a trial-failure count
inline CheckResult count_check(const std::string& name, int failures, const std::string& note) {
    return CheckResult::make(name, static_cast<double>(failures), 0.5, false, note);
}

}  // namespace tmoyal::verifydetail
