// star suite: the polynomial-ring substrate (polyalg-*) and the star-product
// engine claims (star-*), exact mode wherever the claim is an exact identity.
#include "tmoyal/expr.hpp"
#include "verify_util.hpp"

#include <cmath>

namespace tmoyal::verifydetail {

namespace {

// Independent constant-coefficient Moyal product: plain epsilon-contraction
// series, no frame-determinant machinery. Oracle for the omega = 0 limit.
PolyExact moyal_const(const PolyExact& f, const PolyExact& g, const Rational& theta) {
    const int N = std::min(f.total_degree(), g.total_degree());
    const ExactComplex step = ExactComplex::i() * ExactComplex(theta * Rational(1, 2));
    PolyExact result = f * g;
    ExactComplex step_pow(1);
    Rational fact(1);
    for (int n = 1; n <= N; ++n) {
        step_pow *= step;
        fact = fact * Rational(n);
        PolyExact inner(Basis::cartesian);
        for (int k = 0; k <= n; ++k) {
            Rational c(1);
            for (int j = 1; j <= k; ++j) c = c * Rational(n - k + j) / Rational(j);
            if ((n - k) % 2 != 0) c = -c;
            inner += (f.derivative(1, k).derivative(2, n - k) *
                      g.derivative(2, k).derivative(1, n - k))
                         .scaled(ExactComplex(c));
        }
        result += inner.scaled(step_pow * ExactComplex(Rational(1) / fact));
    }
    return result;
}

template <class Fn>
CheckResult trial_sweep(const RunConfig& cfg, const std::string& name, int trials,
                        const std::string& note, Fn&& trial) {
    std::vector<char> ok(trials, 0);
    parallel_for(trials, cfg.policy, [&](int i) {
        try {
            SplitMix64 rng = SplitMix64::fork(cfg.seed, static_cast<std::uint64_t>(i));
            ok[i] = trial(rng) ? 1 : 0;
        } catch (const std::exception&) {
            ok[i] = 0;
        }
    });
    int failures = 0;
    for (char c : ok)
        if (!c) ++failures;
    return count_check(name, failures, note);
}

}  // namespace

Emitter build_star_suite(const RunConfig& cfg) {
    Emitter em(Suite::star);
    const DeformationParams d = cfg.deformation();

    em.add("polyalg-ring-axioms", [cfg] {
        return trial_sweep(cfg, "polyalg-ring-axioms", 200,
                           "associativity/commutativity/distributivity, exact equality",
                           [](SplitMix64& rng) {
                               PolyExact p = random_exact_poly(rng, Basis::cartesian, 6);
                               PolyExact q = random_exact_poly(rng, Basis::cartesian, 6);
                               PolyExact r = random_exact_poly(rng, Basis::cartesian, 6);
                               return (p * q) * r == p * (q * r) && p * q == q * p &&
                                      p * (q + r) == p * q + p * r && p + (-p) == PolyExact();
                           });
    });

    em.add("polyalg-diff-commute", [cfg] {
        return trial_sweep(cfg, "polyalg-diff-commute", 100, "d1 d2 p == d2 d1 p exactly",
                           [](SplitMix64& rng) {
                               PolyExact p = random_exact_poly(rng, Basis::cartesian, 6);
                               return p.derivative(1).derivative(2) ==
                                      p.derivative(2).derivative(1);
                           });
    });

    em.add("polyalg-eval-homomorphism", [cfg] {
        int failures = 0;
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            SplitMix64 rng = SplitMix64::fork(cfg.seed ^ 0xe1ULL, i);
            PolyExact p = random_exact_poly(rng, Basis::cartesian, 5);
            PolyExact q = random_exact_poly(rng, Basis::cartesian, 5);
            ExactComplex z1(rng.rational(5, 3), rng.rational(5, 3));
            ExactComplex z2(rng.rational(5, 3), rng.rational(5, 3));
            if ((p * q).evaluate(z1, z2) != p.evaluate(z1, z2) * q.evaluate(z1, z2)) ++failures;
            PolyFloat pf = to_float(p), qf = to_float(q);
            std::complex<double> w1{rng.uniform(-1, 1), rng.uniform(-1, 1)};
            std::complex<double> w2{rng.uniform(-1, 1), rng.uniform(-1, 1)};
            auto lhs = (pf * qf).evaluate(w1, w2);
            auto rhs = pf.evaluate(w1, w2) * qf.evaluate(w1, w2);
            worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs) + std::abs(rhs)));
        }
        double residual = failures > 0 ? 1.0 : worst;
        return CheckResult::make("polyalg-eval-homomorphism", residual, 1e-12, false,
                                 "evaluate(p*q) == evaluate(p)*evaluate(q), exact and float");
    });

    em.add("polyalg-change-basis-involution", [cfg] {
        return trial_sweep(
            cfg, "polyalg-change-basis-involution", 100,
            "change_basis is an exact involution commuting with ring ops", [](SplitMix64& rng) {
                Basis b = rng.integer(0, 1) ? Basis::cartesian : Basis::ladder;
                PolyExact p = random_exact_poly(rng, b, 6);
                PolyExact q = random_exact_poly(rng, b, 6);
                return p.change_basis().change_basis() == p &&
                       (p * q).change_basis() == p.change_basis() * q.change_basis() &&
                       (p + q).change_basis() == p.change_basis() + q.change_basis();
            });
    });

    em.add("polyalg-parse-render-roundtrip", [cfg] {
        return trial_sweep(cfg, "polyalg-parse-render-roundtrip", 100,
                           "parse(render(p)) == p exactly; float round-trip stable",
                           [](SplitMix64& rng) {
                               Basis b = rng.integer(0, 1) ? Basis::cartesian : Basis::ladder;
                               PolyExact p = random_exact_poly(rng, b, 5);
                               if (parse_expression<ExactComplex>(render(p), b) != p) return false;
                               PolyFloat pf = to_float(p);
                               PolyFloat g1 = parse_expression<std::complex<double>>(render(pf), b);
                               PolyFloat g2 = parse_expression<std::complex<double>>(render(g1), b);
                               return g1 == g2;
                           });
    });

    em.add("star-moyal-limit", [cfg] {
        return trial_sweep(cfg, "star-moyal-limit", 100,
                           "determinant mode at omega=0 equals the constant-coefficient "
                           "epsilon-contraction series exactly",
                           [](SplitMix64& rng) {
                               Rational theta = rng.positive_rational(6, 3);
                               DeformationParams d0(theta, Rational(0), Rational(0));
                               PolyExact f = random_exact_poly(rng, Basis::cartesian, 5);
                               PolyExact g = random_exact_poly(rng, Basis::cartesian, 5);
                               return star_product(f, g, d0) == moyal_const(f, g, theta);
                           });
    });

    em.add("star-omega0-associativity", [cfg] {
        return trial_sweep(cfg, "star-omega0-associativity", 200,
                           "associator vanishes exactly at omega = 0", [](SplitMix64& rng) {
                               Rational theta = rng.positive_rational(6, 3);
                               DeformationParams d0(theta, Rational(0), Rational(0));
                               PolyExact f = random_exact_poly(rng, Basis::cartesian, 6);
                               PolyExact g = random_exact_poly(rng, Basis::cartesian, 6);
                               PolyExact h = random_exact_poly(rng, Basis::cartesian, 6);
                               return associator(f, g, h, d0).is_zero();
                           });
    });

    em.add("star-xaction-closed-form", [cfg, d] {
        return trial_sweep(cfg, "star-xaction-closed-form", 100,
                           "x^mu f ± (i theta/2) einv d f equals the engine product exactly",
                           [d](SplitMix64& rng) {
                               PolyExact f = random_exact_poly(rng, Basis::cartesian, 5);
                               for (int mu = 1; mu <= 2; ++mu) {
                                   PolyExact x = PolyExact::variable(mu);
                                   if (x_action_closed_form(mu, f, Side::left, d) !=
                                       star_product(x, f, d))
                                       return false;
                                   if (x_action_closed_form(mu, f, Side::right, d) !=
                                       star_product(f, x, d))
                                       return false;
                               }
                               return true;
                           });
    });

    em.add("star-anticommutator-xmu", [cfg, d] {
        return trial_sweep(cfg, "star-anticommutator-xmu", 100,
                           "{x^mu, f} = 2 x^mu f exactly", [d](SplitMix64& rng) {
                               PolyExact f = random_exact_poly(rng, Basis::cartesian, 5);
                               for (int mu = 1; mu <= 2; ++mu) {
                                   PolyExact x = PolyExact::variable(mu);
                                   PolyExact two_xf = (x * f).scaled(ExactComplex(2));
                                   if (star_anticommutator(x, f, d) != two_xf) return false;
                               }
                               return true;
                           });
    });

    em.add("star-commutator-x1x2", [cfg] {
        return trial_sweep(cfg, "star-commutator-x1x2", 20,
                           "[x1,x2] = i theta (1 + om1 x2 - om2 x1) exactly, both modes",
                           [](SplitMix64& rng) {
                               DeformationParams dr = random_deformation(rng, true);
                               PolyExact x1 = PolyExact::variable(1), x2 = PolyExact::variable(2);
                               PolyExact expect = dr.einv<ExactComplex>(Basis::cartesian)
                                                      .scaled(ExactComplex::i() *
                                                              ExactComplex(dr.theta_q));
                               return star_commutator(x1, x2, dr) == expect &&
                                      star_commutator(x1, x2, dr, StarMode::vielbein) == expect;
                           });
    });

    em.add("star-jacobi", [cfg] {
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            SplitMix64 rng = SplitMix64::fork(cfg.seed ^ 0x1aULL, i);
            DeformationParams dr = random_deformation(rng, i % 2 == 0);
            worst = std::max(worst, jacobi_residual<ExactComplex>(dr));
            worst = std::max(worst, jacobi_residual<ExactComplex>(dr, StarMode::vielbein));
        }
        return CheckResult::make("star-jacobi", worst, 1e-15, false,
                                 "cyclic double commutators of the coordinates vanish");
    });

    em.add("star-vielbein-bracket", [d] {
        VielbeinBracket vb = vielbein_bracket(d);
        double resid = std::max({std::abs(vb.c1 + 2.0 * d.om1()), std::abs(vb.c2 + 2.0 * d.om2()),
                                 vb.quadratic_probe});
        return CheckResult::make("star-vielbein-bracket", resid, 1e-15, false,
                                 "[X1,X2] constants are (-2 om1, -2 om2); position-dependent "
                                 "remainder norm " +
                                     std::to_string(vb.linear_remainder) + " is O(omega^2)");
    });

    em.add("star-hamiltonian-omega0", [cfg] {
        DeformationParams d0(cfg.theta_q, Rational(0), Rational(0));
        return trial_sweep(cfg, "star-hamiltonian-omega0", 50,
                           "mu-operator actions equal the engine products exactly at omega = 0",
                           [d0](SplitMix64& rng) {
                               PolyExact f = random_exact_poly(rng, Basis::cartesian, 5);
                               PolyExact H = hamiltonian_polynomial<ExactComplex>();
                               return hamiltonian_action(f, Side::left, d0) ==
                                          star_product(H, f, d0) &&
                                      hamiltonian_action(f, Side::right, d0) ==
                                          star_product(f, H, d0) &&
                                      hamiltonian_action(f, Side::left, d0) -
                                              hamiltonian_action(f, Side::right, d0) ==
                                          star_commutator(H, f, d0);
                           });
    });

    em.add("star-hamiltonian-mu-gap", [cfg, d] {
        // mu_1/2 - L_{a abar} = (theta^2/8)(om2 d1 - om1 d2); doubled in left-right
        double worst = 0.0;
        bool closed_form_holds = true;
        PolyExact H = hamiltonian_polynomial<ExactComplex>();
        const ExactComplex th2_4(d.theta_q * d.theta_q * Rational(1, 4));
        for (int i = 0; i < 20; ++i) {
            SplitMix64 rng = SplitMix64::fork(cfg.seed ^ 0x7aULL, i);
            PolyExact f = random_exact_poly(rng, Basis::cartesian, 5);
            PolyExact gap = hamiltonian_action(f, Side::left, d) -
                            hamiltonian_action(f, Side::right, d) - star_commutator(H, f, d);
            PolyExact expect = (f.derivative(1).scaled(ExactComplex(d.om2_q)) -
                                f.derivative(2).scaled(ExactComplex(d.om1_q)))
                                   .scaled(th2_4);
            if (gap != expect) closed_form_holds = false;
            worst = std::max(worst, gap.max_abs_coeff());
        }
        if (!closed_form_holds)
            return CheckResult::make("star-hamiltonian-mu-gap", INFINITY, 1e-15, false,
                                     "gap does not match its closed form");
        return CheckResult::make("star-hamiltonian-mu-gap", worst, 1e-15, true,
                                 "mu operators are the symmetrized one-sided compositions, not "
                                 "left/right multiplication by a*abar; gap = "
                                 "(theta^2/4)(om2 d1 - om1 d2) f, zero only at omega = 0");
    });

    em.add("star-associator-scaling", [cfg] {
        SplitMix64 rng = SplitMix64::fork(cfg.seed ^ 0x5cULL, 0);
        PolyFloat f = to_float(random_exact_poly(rng, Basis::cartesian, 3));
        PolyFloat g = to_float(random_exact_poly(rng, Basis::cartesian, 3));
        PolyFloat h = to_float(random_exact_poly(rng, Basis::cartesian, 3));
        std::vector<double> scales{1e-2, 1e-3, 1e-4, 1e-5};
        std::vector<double> norms;
        for (double s : scales) {
            DeformationParams ds = DeformationParams::from_doubles(cfg.theta(), s, s / 2.0);
            norms.push_back(associator(f, g, h, ds).max_abs_coeff());
        }
        // least-squares slope in log10-log10
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const int m = static_cast<int>(scales.size());
        for (int i = 0; i < m; ++i) {
            double x = std::log10(scales[i]), y = std::log10(norms[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        return CheckResult::make("star-associator-scaling", std::abs(slope - 1.0), 0.1, false,
                                 "associator norm scales linearly in ||omega|| (log-log slope " +
                                     std::to_string(slope) + " over 3 decades)");
    });

    em.add("star-associator-x1x1x2", [d] {
        PolyExact x1 = PolyExact::variable(1), x2 = PolyExact::variable(2);
        PolyExact a = associator(x1, x1, x2, d);
        PolyExact expect = d.einv<ExactComplex>(Basis::cartesian)
                               .scaled(ExactComplex(d.theta_q * d.theta_q * d.om1_q * Rational(1, 4)));
        if (a != expect)
            return CheckResult::make("star-associator-x1x1x2", INFINITY, 1e-15, false,
                                     "associator does not match (theta^2/4) om1 einv");
        return CheckResult::make("star-associator-x1x1x2", a.max_abs_coeff(), 1e-15, true,
                                 "(x1,x1,x2) associator equals (theta^2/4) om1 einv exactly; "
                                 "nonzero whenever om1 != 0, against the associativity claim");
    });

    em.add("star-mode-order2-gap", [cfg, d] {
        // the two product forms agree exactly on any pair with a degree-1 operand
        SplitMix64 rng = SplitMix64::fork(cfg.seed ^ 0x2fULL, 0);
        PolyExact lin = PolyExact::variable(1);
        PolyExact g1 = random_exact_poly(rng, Basis::cartesian, 4);
        bool first_order_agrees = star_mode_gap(lin, g1, d).is_zero() &&
                                  star_mode_gap(g1, lin, d).is_zero();
        if (!first_order_agrees)
            return CheckResult::make("star-mode-order2-gap", INFINITY, 1e-15, false,
                                     "modes disagree already at first order");
        PolyExact f = PolyExact::variable(1).pow(2);
        PolyExact g = PolyExact::variable(2).pow(2);
        double gap = star_mode_gap(f, g, d).max_abs_coeff();
        return CheckResult::make("star-mode-order2-gap", gap, 1e-15, true,
                                 "determinant and vielbein forms coincide through order 1 and "
                                 "differ from bidifferential order 2 when omega != 0");
    });

    return em;
}

}  // namespace tmoyal::verifydetail
