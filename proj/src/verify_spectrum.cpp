// spectrum suite: quantization, energies, normalization, and the inner-product
// claims under the r^2 dr dalpha convention.
#include "verify_util.hpp"

#include <cmath>
#include <numbers>

#include "tmoyal/spectrum.hpp"

namespace tmoyal::verifydetail {

namespace {
constexpr double kPi = std::numbers::pi;
}

Emitter build_spectrum_suite(const RunConfig& cfg) {
    Emitter em(Suite::spectrum);

    em.add("spectrum-constraint-alpha", [] {
        double worst = 0.0;
        const std::pair<double, double> cases[] = {{1, 0}, {0, 1}, {1, 1}, {0.3, 0.7}, {-2, 0.5}};
        for (auto [o1, o2] : cases) {
            double alpha = constraint_alpha(o1, o2);
            worst = std::max(worst, std::abs(o1 * std::sin(alpha) + o2 * std::cos(alpha)));
            if (!(alpha > -kPi / 2.0 - 1e-15 && alpha <= kPi / 2.0 + 1e-15)) worst = INFINITY;
        }
        worst = std::max(worst, std::abs(constraint_alpha(1, 0)));
        worst = std::max(worst, std::abs(constraint_alpha(0, 1) - kPi / 2.0));
        worst = std::max(worst, std::abs(constraint_alpha(1, 1) + kPi / 4.0));
        return CheckResult::make("spectrum-constraint-alpha", worst, 1e-12, false,
                                 "om1 sin(alpha) + om2 cos(alpha) = 0, principal value");
    });

    em.add("spectrum-kp-closed-form", [] {
        int failures = 0;
        double worst = 0.0;
        for (int p = 0; p <= 20; ++p) {
            long long radicand = static_cast<long long>(p + 1) * (4LL * p + 5LL);
            double k = quantized_k(p);
            if (static_cast<long long>(std::llround(k * k)) != radicand &&
                std::abs(k * k - radicand) > 1e-9 * radicand)
                ++failures;
            worst = std::max(worst, std::abs(k - std::sqrt(static_cast<double>(radicand))));
        }
        worst = std::max(worst, std::abs(quantized_k(0) - std::sqrt(5.0)));
        worst = std::max(worst, std::abs(quantized_k(1) - 3.0 * std::sqrt(2.0)));
        return CheckResult::make("spectrum-kp-closed-form", failures > 0 ? INFINITY : worst, 1e-12,
                                 false, "k_p^2 = (p+1)(4p+5); k_0 = sqrt5, k_1 = 3 sqrt2");
    });

    em.add("spectrum-onshell-kummer-index", [] {
        double worst = 0.0;
        for (double theta : {0.5, 1.0, 2.0})
            for (int p = 0; p <= 30; ++p) {
                auto kp = kummer_parameters(theta, quantized_k(p),
                                            twisted_energy(theta, p, Branch::plus), Branch::plus);
                worst = std::max(worst, std::abs(kp.a + p));
            }
        return CheckResult::make("spectrum-onshell-kummer-index", worst, 1e-12, false,
                                 "a = E/theta - nu - 1/2 equals -p on shell, p <= 30");
    });

    em.add("spectrum-branch-sum", [] {
        double worst = 0.0;
        for (double theta : {0.5, 1.0, 2.0})
            for (int p = 0; p <= 30; ++p) {
                double s = twisted_energy(theta, p, Branch::plus) +
                           twisted_energy(theta, p, Branch::minus);
                worst = std::max(worst, std::abs(s - theta * (3.0 - 2.0 * p)) /
                                            (theta * (3.0 + 2.0 * p)));
            }
        return CheckResult::make("spectrum-branch-sum", worst, 1e-12, false,
                                 "E+ + E- = theta (3 - 2p): the radical cancels");
    });

    em.add("spectrum-energy-monotonicity", [cfg] {
        FigureSeries fs = figure_series(1.0, cfg.p_max, cfg.policy);
        bool ok = fs.eplus_strictly_decreasing;
        for (std::size_t p = 1; p < fs.rows.size(); ++p)
            if (!(fs.rows[p].E_minus < fs.rows[p - 1].E_minus)) ok = false;
        return CheckResult::make("spectrum-energy-monotonicity", ok ? 0.0 : 1.0, 0.5, false,
                                 "E+ and E- both strictly decreasing in p");
    });

    em.add("spectrum-eminus-zero-p0", [] {
        double worst = 0.0;
        for (double theta : {0.5, 1.0, 2.0, 7.5})
            worst = std::max(worst, std::abs(twisted_energy(theta, 0, Branch::minus)));
        return CheckResult::make("spectrum-eminus-zero-p0", worst, 1e-14, false,
                                 "E-(p=0) = 0 at every theta");
    });

    em.add("spectrum-eplus-asymptote-formula", [] {
        double e20 = twisted_energy(1.0, 20, Branch::plus);
        return CheckResult::make("spectrum-eplus-asymptote-formula", std::abs(e20 - 21.0 / 8.0),
                                 0.05, false, "E+(20) approaches the energy-formula limit 21/8");
    });

    em.add("spectrum-eplus-asymptote-claim", [] {
        double e20 = twisted_energy(1.0, 20, Branch::plus);
        return CheckResult::make("spectrum-eplus-asymptote-claim", std::abs(e20 - 1.5), 0.05, true,
                                 "the stated limit 1.5 disagrees with the energy formula, whose "
                                 "large-p limit is 21/8 = 2.625");
    });

    em.add("spectrum-eminus-tail-slope", [cfg] {
        FigureSeries fs = figure_series(1.0, cfg.p_max, cfg.policy);
        return CheckResult::make("spectrum-eminus-tail-slope",
                                 std::abs(fs.eminus_tail_slope + 2.0), 0.05, false,
                                 "E- tail is linear with slope -2");
    });

    em.add("spectrum-a1-theta-scaling", [] {
        double worst = 0.0;
        for (double theta : {0.5, 2.0, 3.0})
            for (int p = 0; p <= 5; ++p) {
                double nu = kummer_parameters(1.0, quantized_k(p), 0.0, Branch::plus).nu;
                double lhs = normalization_A1_squared(theta, p) * std::pow(theta, 2.0 * nu + 1.5);
                double rhs = normalization_A1_squared(1.0, p);
                worst = std::max(worst, std::abs(lhs - rhs) / rhs);
            }
        return CheckResult::make("spectrum-a1-theta-scaling", worst, 1e-12, false,
                                 "A1^2(theta) = theta^-(2 nu_p + 3/2) A1^2(1)");
    });

    em.add("spectrum-a1-p0-value", [] {
        // independent half-integer gamma: Gamma(13/2) by recurrence unwinding
        double g = std::sqrt(kPi);
        for (double h = 0.5; h < 6.0; h += 1.0) g *= h;
        double expect = std::pow(2.0, 6.5) / (kPi * g);
        double got = normalization_A1_squared(1.0, 0);
        return CheckResult::make("spectrum-a1-p0-value", std::abs(got - expect) / expect, 1e-12,
                                 false, "A1^2(theta=1, p=0) = 2^(13/2) / (pi Gamma(13/2))");
    });

    em.add("spectrum-norm-p0", [] {
        double n0 = std::abs(inner_product(1.0, 0, 0, Measure::r2));
        return CheckResult::make("spectrum-norm-p0", std::abs(n0 - 1.0), 1e-8, false,
                                 "<f0, f0> = 1 under the r^2 dr dalpha convention");
    });

    em.add("spectrum-norm-p1", [] {
        double n1 = std::abs(inner_product(1.0, 1, 1, Measure::r2));
        return CheckResult::make("spectrum-norm-p1", std::abs(n1 - 1.0), 1e-8, true,
                                 "<f1, f1> = " + std::to_string(n1) +
                                     "; the normalization inherits the delta=1/2 moment gap");
    });

    em.add("spectrum-norm-p2", [] {
        double n2 = std::abs(inner_product(1.0, 2, 2, Measure::r2));
        return CheckResult::make("spectrum-norm-p2", std::abs(n2 - 1.0), 1e-8, true,
                                 "<f2, f2> = " + std::to_string(n2));
    });

    em.add("spectrum-overlap-p0-p1", [] {
        double o = std::abs(inner_product(1.0, 0, 1, Measure::r2));
        return CheckResult::make("spectrum-overlap-p0-p1", o, 1e-8, true,
                                 "distinct irrational k_p leave a nonzero angular overlap; "
                                 "orthogonality delta_pq cannot hold");
    });

    em.add("spectrum-ordinary-k-condition", [] {
        double worst = 0.0;
        for (auto [n, l] : {std::pair{3, 0}, {2, 1}, {4, 0}, {5, 2}}) {
            OrdinaryKCondition r = ordinary_k_condition(n, l, 1.0);
            worst = std::max(worst, r.residual);
        }
        return CheckResult::make("spectrum-ordinary-k-condition", worst, 1e-12, true,
                                 "E = theta(n+1/2) does not follow from the k condition by "
                                 "substitution; residuals up to " + std::to_string(worst));
    });

    return em;
}

}  // namespace tmoyal::verifydetail
