// asympt suite: the even series at infinity and its Bessel oracle, the lambda
// quadratic, the energy bound, and the energies-at-infinity consistency.
#include "verify_util.hpp"

#include <cmath>
#include <numbers>

#include "tmoyal/asympt.hpp"

namespace tmoyal::verifydetail {

namespace {
constexpr double kPi = std::numbers::pi;
}

Emitter build_asympt_suite(const RunConfig& cfg) {
    Emitter em(Suite::asympt);
    (void)cfg;

    em.add("asympt-series-coefficient-ode", [] {
        // applying (d^2 + rho^-1 d - B^2) to the partial sum term-by-term:
        // (2n)^2 c_n = B^2 c_{n-1}
        double worst = 0.0;
        for (double B : {0.5, 1.0, 2.0}) {
            double c_prev = 1.0;
            for (int n = 1; n <= 30; ++n) {
                double c = c_prev * (B * B / 4.0) / (static_cast<double>(n) * n);
                double lhs = 4.0 * n * n * c;
                double rhs = B * B * c_prev;
                worst = std::max(worst, std::abs(lhs - rhs) / rhs);
                c_prev = c;
            }
        }
        return CheckResult::make("asympt-series-coefficient-ode", worst, 1e-14, false,
                                 "(2n)^2 c_n = B^2 c_{n-1} term by term");
    });

    em.add("asympt-series-bessel", [] {
        double s = asymptotic_series(1.0, 2.0, 60).value;
        double oracle = bessel_i0_oracle(2.0);
        double worst = std::abs(s - oracle);
        worst = std::max(worst, std::abs(asymptotic_series(1.0, 0.0, 5, 3.25).value - 3.25));
        return CheckResult::make("asympt-series-bessel", worst, 1e-10, false,
                                 "series at B rho = 2 matches the integral-representation Bessel "
                                 "oracle; rho = 0 returns a0");
    });

    em.add("asympt-lambda-residual", [] {
        double worst = 0.0;
        for (double theta : {0.5, 1.0, 2.0})
            for (double k : {0.0, 1.0, std::sqrt(5.0)}) {
                double bound = energy_bound(theta, k);
                for (double e0 : {0.0, bound / 2.0, 0.9 * bound, bound})
                    worst = std::max(worst, lambda_quadratic_residual(theta, k, e0));
            }
        return CheckResult::make("asympt-lambda-residual", worst, 1e-12, false,
                                 "back-substitution of the root into the lambda quadratic");
    });

    em.add("asympt-energy-bound", [] {
        double worst_violation = -INFINITY, worst_gap = 0.0;
        for (int k = 0; k <= 10; ++k) {
            for (double theta : {0.5, 1.0, 2.0}) {
                double einf = k * k * theta * std::sqrt(kPi) / 32.0;
                double bound = energy_bound(theta, k);
                worst_violation = std::max(worst_violation, einf - bound);
                double gap_expect = 9.0 * theta / (8.0 * std::sqrt(kPi));
                worst_gap = std::max(worst_gap, std::abs((bound - einf) - gap_expect));
            }
        }
        double resid = std::max(worst_violation > -1e-15 ? 1.0 : 0.0, worst_gap);
        return CheckResult::make("asympt-energy-bound", resid, 1e-12, false,
                                 "E_inf(0,k) stays strictly below the bound with gap "
                                 "9 theta/(8 sqrt pi)");
    });

    em.add("asympt-theta-scaling", [] {
        double worst = 0.0;
        for (double c : {2.0, 4.0})
            for (double k : {0.0, 2.0}) {
                double l1 = lambda_solution(1.0, k, 0.2);
                double l2 = lambda_solution(c, k, 0.2 * c);
                worst = std::max(worst, std::abs(l1 / c - l2) / l2);
                worst = std::max(worst,
                                 std::abs(energy_bound(c, k) - c * energy_bound(1.0, k)) /
                                     energy_bound(c, k));
            }
        return CheckResult::make("asympt-theta-scaling", worst, 1e-12, false,
                                 "lambda -> lambda/c and bound -> c bound under theta -> c theta");
    });

    em.add("asympt-e81-consistency", [] {
        double worst = 0.0;
        for (int n = 0; n <= 4; ++n)
            for (double k : {0.0, 2.0})
                for (double e0_frac : {0.0, 0.5}) {
                    double e0 = e0_frac * energy_bound(1.0, k);
                    auto r = energy_at_infinity(1.0, k, n, lambda_solution(1.0, k, e0));
                    worst = std::max(worst, r.quadratic_residual);
                }
        return CheckResult::make("asympt-e81-consistency", worst, 1e-10, false,
                                 "E_{n,k} satisfies the closing quadratic display");
    });

    em.add("asympt-e81-n0-gap", [] {
        auto r = energy_at_infinity(1.0, 2.0, 0);
        double gap = std::abs(r.E_nk_infinity - r.E0_displayed);
        return CheckResult::make("asympt-e81-n0-gap", gap, 1e-12, true,
                                 "n=0 reduction gives pi gamma B/16 while the displayed ground "
                                 "value is gamma B sqrt(pi)/8; ratio 2/sqrt(pi)");
    });

    em.add("asympt-residual74-stability", [] {
        double r40 = residual_74(1.0, 0.0, 0.2, 40);
        double r80 = residual_74(1.0, 0.0, 0.2, 80);
        return CheckResult::make("asympt-residual74-stability", std::abs(r80 - r40) / r40, 1e-6,
                                 false, "term-matched residual stabilizes under truncation "
                                        "refinement; value " + std::to_string(r40));
    });

    return em;
}

}  // namespace tmoyal::verifydetail
