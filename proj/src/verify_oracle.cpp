// oracle suite: the finite-difference authority against the closed-form
// certificate spectrum, ODE residual certificates, and the indicial analysis.
#include "verify_util.hpp"

#include <cmath>

#include "tmoyal/radial.hpp"
#include "tmoyal/specfun.hpp"
#include "tmoyal/spectrum.hpp"

namespace tmoyal::verifydetail {

Emitter build_oracle_suite(const RunConfig& cfg) {
    Emitter em(Suite::oracle);

    em.add("oracle-fd-certificate", [cfg] {
        const double ks[] = {0.0, std::sqrt(5.0), 3.0 * std::sqrt(2.0)};
        const double thetas[] = {1.0, 2.0};
        struct Case { double theta, k; };
        std::vector<Case> cases;
        for (double th : thetas)
            for (double k : ks) cases.push_back({th, k});
        std::vector<double> errs(cases.size(), 0.0);
        parallel_for(static_cast<int>(cases.size()), cfg.policy, [&](int i) {
            FDProblem prob{cases[i].theta, cases[i].k, 0.0, 4000, 0.0};
            auto ev = fd_eigenvalues(prob, 4, ExecPolicy::serial);
            double worst = 0.0;
            for (int n = 0; n <= 3; ++n) {
                double exact = certificate_energy(cases[i].theta, cases[i].k, n);
                worst = std::max(worst, std::abs(ev[n] - exact) / exact);
            }
            errs[i] = worst;
        });
        double worst = 0.0;
        for (double e : errs) worst = std::max(worst, e);
        return CheckResult::make("oracle-fd-certificate", worst, 5e-4, false,
                                 "FD eigenvalues match (theta/2)(2n+|k|+1), n <= 3, "
                                 "k in {0, sqrt5, 3 sqrt2}, theta in {1,2}, n_points = 4000");
    });

    em.add("oracle-fd-order2", [] {
        const double exact = certificate_energy(1.0, 0.0, 0);
        double e1 = fd_eigenvalues({1.0, 0.0, 0.0, 1000, 0.0}, 1, ExecPolicy::serial)[0];
        double e2 = fd_eigenvalues({1.0, 0.0, 0.0, 2000, 0.0}, 1, ExecPolicy::serial)[0];
        double ratio = std::abs(e1 - exact) / std::abs(e2 - exact);
        return CheckResult::make("oracle-fd-order2", std::abs(ratio - 4.0), 0.6, false,
                                 "halving h cuts the eigenvalue error by 4 (order 2); measured "
                                 "ratio " + std::to_string(ratio));
    });

    em.add("oracle-untwisted-residual", [] {
        double r = ode_residual([](double x) { return std::exp(-x * x / 2.0); },
                                RadialEquation::equ_untwisted, 2.0, 0.0, 1.0, 0.0, {0.1, 4.0, 3000});
        return CheckResult::make("oracle-untwisted-residual", r, 1e-8, false,
                                 "e^{-r^2/2} solves the untwisted equation at theta=2, E=1");
    });

    em.add("oracle-rho-oracle-residual", [] {
        double worst = 0.0;
        struct Case { double k; int n; };
        for (auto [k, n] : {Case{std::sqrt(5.0), 0}, Case{3.0 * std::sqrt(2.0), 1}, Case{0.0, 2}}) {
            const double E = certificate_energy(1.0, k, n);
            const double b = k + 1.0;
            double r = ode_residual(
                [k, n, b](double rho) {
                    return std::pow(rho, k / 2.0) * std::exp(-rho) *
                           kummer_phi(static_cast<double>(-n), b, 2.0 * rho);
                },
                RadialEquation::equ_rho, 1.0, k, E, 0.0, {0.3, 4.0, 2200});
            worst = std::max(worst, r);
        }
        return CheckResult::make("oracle-rho-oracle-residual", worst, 1e-8, false,
                                 "rho^{k/2} e^{-B rho} Phi(-n, k+1; 2B rho) solves the rho-form "
                                 "equation at E = (theta/2)(2n+k+1)");
    });

    em.add("oracle-rho-closed-chain-residual", [] {
        const double k0 = std::sqrt(5.0);
        const double E = twisted_energy(1.0, 0, Branch::plus);  // 3
        auto kp = kummer_parameters(1.0, k0, E, Branch::plus);  // nu = 2.5, a = 0
        double r = ode_residual(
            [kp](double rho) {
                return std::pow(rho, kp.nu) * std::exp(-kp.B * rho) *
                       kummer_phi(kp.a, kp.b, 2.0 * kp.B * rho);
            },
            RadialEquation::equ_rho, 1.0, k0, E, 0.0, {0.3, 4.0, 2200});
        return CheckResult::make("oracle-rho-closed-chain-residual", r, 1e-8, true,
                                 "the closed-chain radial factor (nu = 1 + sqrt(1+k^2/4)) does "
                                 "not satisfy the rho-form equation: indicial mismatch");
    });

    em.add("oracle-indicial-gap", [] {
        double worst_frob = 0.0, gap = 0.0;
        for (double k : {0.0, 2.0, std::sqrt(5.0)}) {
            IndicialResult r = indicial_exponents(k);
            // the Frobenius pair must zero the indicial polynomial nu^2 - k^2/4
            for (double nu : {r.frobenius_plus, r.frobenius_minus})
                worst_frob = std::max(worst_frob, std::abs(nu * nu - k * k / 4.0));
            gap = std::max(gap, std::abs(r.closed_chain_plus - r.frobenius_plus));
        }
        if (worst_frob > 1e-12)
            return CheckResult::make("oracle-indicial-gap", INFINITY, 1e-12, false,
                                     "Frobenius pair fails its own indicial polynomial");
        return CheckResult::make("oracle-indicial-gap", gap, 1e-12, true,
                                 "closed-chain exponents 1 ± sqrt(1+k^2/4) differ from the "
                                 "indicial roots ±k/2 for every k; the confluent reduction drops "
                                 "a (nu^2 - k^2/4)/rho term that only ±k/2 cancels");
    });

    em.add("oracle-twist-linear-shift", [] {
        FDProblem base{1.0, std::sqrt(5.0), 0.0, 2000, 0.0};
        double e0 = fd_eigenvalues(base, 1, ExecPolicy::serial)[0];
        double slopes[2];
        const double ws[] = {1e-3, 5e-4};
        for (int i = 0; i < 2; ++i) {
            FDProblem p = base;
            p.twist_w = ws[i];
            slopes[i] = (fd_eigenvalues(p, 1, ExecPolicy::serial)[0] - e0) / ws[i];
        }
        return CheckResult::make("oracle-twist-linear-shift",
                                 std::abs(slopes[0] / slopes[1] - 1.0), 0.1,
                                 false, "first-order twist shifts the eigenvalue linearly; "
                                        "slopes " + std::to_string(slopes[0]) + " / " +
                                            std::to_string(slopes[1]));
    });

    em.add("oracle-residual-linearity", [] {
        auto u = [](double x) { return std::exp(-x * x / 3.0) * (1.0 + 0.5 * x); };
        auto u3 = [&u](double x) { return 3.0 * u(x); };
        double r1 = ode_residual(u, RadialEquation::equ_untwisted, 1.0, 1.0, 0.7, 0.0,
                                 {0.1, 5.0, 4000});
        double r3 = ode_residual(u3, RadialEquation::equ_untwisted, 1.0, 1.0, 0.7, 0.0,
                                 {0.1, 5.0, 4000});
        return CheckResult::make("oracle-residual-linearity", std::abs(r3 - r1) / r1, 1e-10, false,
                                 "residual(alpha u) = |alpha| residual(u); the normalized form is "
                                 "scale-invariant");
    });

    return em;
}

}  // namespace tmoyal::verifydetail
