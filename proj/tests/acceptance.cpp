// Acceptance suite: one criterion per block, one pass/fail line each, exit code
// equal to the number of failed criteria. Expected values marked as oracle
// results were computed from the independent routes kept in this repository
// (explicit sums, recurrence unwinding, quadrature, finite differences).
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tmoyal/asympt.hpp"
#include "tmoyal/cli.hpp"
#include "tmoyal/expr.hpp"
#include "tmoyal/prng.hpp"
#include "tmoyal/radial.hpp"
#include "tmoyal/recurrence.hpp"
#include "tmoyal/specfun.hpp"
#include "tmoyal/spectrum.hpp"
#include "tmoyal/star.hpp"

using namespace tmoyal;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

int g_failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail) {
    std::printf("AC%d %-28s %s  (%s)\n", idx, name.c_str(), ok ? "PASS" : "FAIL", detail.c_str());
    if (!ok) ++g_failures;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

// run_cli prints per-check lines; keep the acceptance output to one line per
// criterion by swallowing cout for the in-process invocations.
int quiet_cli(const std::vector<std::string>& args) {
    std::ostringstream sink;
    auto* old = std::cout.rdbuf(sink.rdbuf());
    int rc = run_cli(args);
    std::cout.rdbuf(old);
    return rc;
}

PolyExact random_poly(SplitMix64& rng, int max_deg) {
    PolyExact p(Basis::cartesian);
    for (int j = 0; j < 5; ++j) {
        int m = (int)rng.integer(0, max_deg);
        p.add_term(m, (int)rng.integer(0, max_deg - m),
                   ExactComplex(QSqrt2(rng.rational(9, 4)), QSqrt2(rng.rational(9, 4))));
    }
    return p;
}

// 1. Star algebra exactness: coordinate commutator and anticommutator identities.
void ac1() {
    bool ok = true;
    std::string detail = "20 commutator draws + 100 anticommutator polys, exact equality";
    for (int i = 0; i < 20 && ok; ++i) {
        SplitMix64 rng = SplitMix64::fork(101, i);
        DeformationParams d(rng.positive_rational(6, 3), rng.rational(2, 12), rng.rational(2, 12));
        PolyExact x1 = PolyExact::variable(1), x2 = PolyExact::variable(2);
        PolyExact expect =
            d.einv<ExactComplex>(Basis::cartesian).scaled(ExactComplex::i() * ExactComplex(d.theta_q));
        if (star_commutator(x1, x2, d) != expect) {
            ok = false;
            detail = "commutator mismatch at draw " + std::to_string(i);
        }
    }
    for (int i = 0; i < 100 && ok; ++i) {
        SplitMix64 rng = SplitMix64::fork(202, i);
        DeformationParams d(rng.positive_rational(6, 3), rng.rational(2, 12), rng.rational(2, 12));
        PolyExact f = random_poly(rng, 5);
        for (int mu = 1; mu <= 2; ++mu) {
            PolyExact x = PolyExact::variable(mu);
            if (star_anticommutator(x, f, d) != (x * f).scaled(ExactComplex(2))) {
                ok = false;
                detail = "anticommutator mismatch at poly " + std::to_string(i);
            }
        }
    }
    report(1, "star-algebra-exactness", ok, detail);
}

// 2. Flat associativity exact; twisted associator scaling and closed value.
void ac2() {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 200 && ok; ++i) {
        SplitMix64 rng = SplitMix64::fork(303, i);
        DeformationParams d0(rng.positive_rational(6, 3), Rational(0), Rational(0));
        if (!associator(random_poly(rng, 6), random_poly(rng, 6), random_poly(rng, 6), d0)
                 .is_zero()) {
            ok = false;
            detail = "flat associator nonzero at trial " + std::to_string(i);
        }
    }
    // log-log slope over 3 decades
    SplitMix64 rng = SplitMix64::fork(304, 0);
    PolyFloat f = to_float(random_poly(rng, 3)), g = to_float(random_poly(rng, 3)),
              h = to_float(random_poly(rng, 3));
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double scales[] = {1e-2, 1e-3, 1e-4, 1e-5};
    for (double s : scales) {
        DeformationParams ds = DeformationParams::from_doubles(1.0, s, s / 2.0);
        double x = std::log10(s), y = std::log10(associator(f, g, h, ds).max_abs_coeff());
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
    if (std::abs(slope - 1.0) > 0.1) {
        ok = false;
        detail = "scaling slope " + std::to_string(slope);
    }
    // closed twisted value, recorded against the associativity claim
    DeformationParams d(Rational(1), Rational(1, 10), Rational(1, 20));
    PolyExact x1 = PolyExact::variable(1), x2 = PolyExact::variable(2);
    PolyExact expect = d.einv<ExactComplex>(Basis::cartesian)
                           .scaled(ExactComplex(d.theta_q * d.theta_q * d.om1_q * Rational(1, 4)));
    if (associator(x1, x1, x2, d) != expect) {
        ok = false;
        detail = "twisted associator does not equal (theta^2/4) om1 einv";
    }
    if (ok)
        detail = "flat exact x200; slope " + std::to_string(slope) +
                 "; (x1,x1,x2) = (theta^2/4) om1 einv [discrepancy-documented vs associativity]";
    report(2, "associativity", ok, detail);
}

// 3. Special functions.
void ac3() {
    bool ok = true;
    std::string detail;
    double worst_ode = 0.0;
    for (double a : {-3.0, -1.5, 0.0, 1.5, 3.0})
        for (double b : {0.5, 1.5, 2.0, 3.0, 4.5})
            for (double z : {0.0, 1.0, 2.5, 5.0, 7.5, 9.0, 10.0})
                worst_ode = std::max(worst_ode, kummer_ode_residual({{a, 0}, {b, 0}, {z, 0}}));
    if (worst_ode >= 1e-10) ok = false;

    double worst_routes = 0.0;
    for (int n = 0; n <= 12; ++n)
        for (double sigma : {0.0, 0.5, 2.0, 5.0})
            for (double z : {0.0, 0.5, 2.0, 5.0, 10.0, 20.0})
                worst_routes = std::max(
                    worst_routes, std::abs(laguerre(n, sigma, z) - laguerre_via_phi(n, sigma, z)) /
                                      std::max(1.0, laguerre_term_scale(n, sigma, z)));
    for (int n = 0; n <= 10; ++n)
        for (double z : {-4.0, -1.0, 0.5, 2.0, 4.0})
            worst_routes = std::max(worst_routes,
                                    std::abs(hermite(n, z) - hermite_via_phi(n, z)) /
                                        std::max(1.0, std::abs(hermite(n, z))));
    if (worst_routes >= 1e-11) ok = false;

    double worst_quad = 0.0;
    for (int order : {8, 16, 32, 64})
        for (double sigma : {0.0, 0.5, 2.5}) {
            QuadratureRule rule = gauss_laguerre(sigma, order);
            for (int j = 1; j <= 2 * order - 1; j = 2 * j + 1) {
                double acc = 0.0;
                for (int i = 0; i < order; ++i) acc += rule.weights[i] * std::pow(rule.nodes[i], j);
                double exact = std::exp(log_gamma(sigma + j + 1.0));
                worst_quad = std::max(worst_quad, std::abs(acc - exact) / exact);
            }
        }
    if (worst_quad >= 1e-10) ok = false;

    double worst_magic = 0.0;
    for (double sigma : {0.0, 1.0, 2.5})
        for (int n = 0; n <= 8; ++n)
            for (int m = 0; m <= 8; ++m)
                worst_magic = std::max(worst_magic, laguerre_moment(n, m, sigma, 0.0).check.residual);
    if (worst_magic >= 1e-9) ok = false;

    auto gap = laguerre_moment(1, 0, 0.0, 0.5);
    bool gap_ok = std::abs(gap.value - (-kSqrtPi / 4.0)) < 1e-10 && gap.closed_form == 0.0 &&
                  gap.check.status == CheckStatus::discrepancy_documented;
    if (!gap_ok) ok = false;

    detail = "kummer ode " + sci(worst_ode) + "; routes " + sci(worst_routes) +
             "; quadrature " + sci(worst_quad) + "; orthogonality(delta=0) " +
             sci(worst_magic) + "; delta=1/2 miss = -sqrt(pi)/4 [documented]";
    report(3, "special-functions", ok, detail);
}

// 4. Quantization.
void ac4() {
    bool ok = true;
    auto ks = discover_kp(20);
    for (int p = 0; p <= 20; ++p)
        if (std::abs(ks[p] - std::sqrt((p + 1.0) * (4.0 * p + 5.0))) > 1e-12) ok = false;
    if (ks[0] != std::sqrt(5.0)) ok = false;
    if (std::abs(ks[1] - 3.0 * std::sqrt(2.0)) > 1e-15 * ks[1]) ok = false;
    report(4, "quantized-k", ok, "k_p = sqrt((p+1)(4p+5)) for p <= 20; k_0 = sqrt5, k_1 = 3 sqrt2");
}

// 5. Spectrum numbers.
void ac5() {
    bool ok = true;
    std::string detail;
    if (std::abs(twisted_energy(1.0, 0, Branch::plus) - 3.0) > 1e-12) ok = false;
    if (std::abs(twisted_energy(1.0, 0, Branch::minus)) > 1e-12) ok = false;
    FigureSeries fs = figure_series(1.0, 20);
    if (!fs.eplus_strictly_decreasing) ok = false;
    if (std::abs(fs.rows[20].E_plus - 21.0 / 8.0) > 0.05) ok = false;
    if (std::abs(fs.eminus_tail_slope + 2.0) > 0.05) ok = false;
    double worst_a = 0.0;
    for (double theta : {0.5, 1.0, 2.0})
        for (int p = 0; p <= 30; ++p)
            worst_a = std::max(worst_a,
                               std::abs(kummer_parameters(theta, quantized_k(p),
                                                          twisted_energy(theta, p, Branch::plus),
                                                          Branch::plus)
                                            .a +
                                        p));
    if (worst_a > 1e-12) ok = false;
    detail = "E0+ = 3, E0- = 0; E+(20) = " + std::to_string(fs.rows[20].E_plus) +
             " vs 21/8 [stated limit 1.5 documented]; tail slope " +
             std::to_string(fs.eminus_tail_slope) + "; onshell |a+p| <= " + sci(worst_a);
    report(5, "spectrum-numbers", ok, detail);
}

// 6. Normalization and overlaps.
void ac6() {
    bool ok = true;
    double n0 = std::abs(inner_product(1.0, 0, 0, Measure::r2));
    if (std::abs(n0 - 1.0) > 1e-8) ok = false;
    double n1 = std::abs(inner_product(1.0, 1, 1, Measure::r2));
    double n2 = std::abs(inner_product(1.0, 2, 2, Measure::r2));
    double o01 = std::abs(inner_product(1.0, 0, 1, Measure::r2));
    // p = 1 self-norm has the closed oracle value (sigma+7/4)/(sigma+1), sigma = 2 nu_1
    double sigma = 2.0 * kummer_parameters(1.0, quantized_k(1), 0.0, Branch::plus).nu;
    if (std::abs(n1 - (sigma + 1.75) / (sigma + 1.0)) > 1e-8) ok = false;
    // the deviations are real: orthonormality cannot hold
    if (!(std::abs(n1 - 1.0) > 1e-3 && std::abs(n2 - 1.0) > 1e-3 && o01 > 1e-6)) ok = false;
    report(6, "normalization", ok,
           "<f0,f0> = " + std::to_string(n0) + "; <f1,f1> = " + std::to_string(n1) +
               ", <f2,f2> = " + std::to_string(n2) + ", |<f0,f1>| = " + std::to_string(o01) +
               " [documented vs delta_pq]");
}

// 7. Radial oracle.
void ac7() {
    bool ok = true;
    double worst = 0.0;
    for (double theta : {1.0, 2.0})
        for (double k : {0.0, std::sqrt(5.0), 3.0 * std::sqrt(2.0)}) {
            auto ev = fd_eigenvalues({theta, k, 0.0, 4000, 0.0}, 4);
            for (int n = 0; n <= 3; ++n) {
                double exact = certificate_energy(theta, k, n);
                worst = std::max(worst, std::abs(ev[n] - exact) / exact);
            }
        }
    if (worst >= 5e-4) ok = false;

    double exact = certificate_energy(1.0, 0.0, 0);
    double e1 = fd_eigenvalues({1.0, 0.0, 0.0, 1000, 0.0}, 1)[0];
    double e2 = fd_eigenvalues({1.0, 0.0, 0.0, 2000, 0.0}, 1)[0];
    double ratio = std::abs(e1 - exact) / std::abs(e2 - exact);
    if (!(ratio > 3.4 && ratio < 4.6)) ok = false;

    auto kp = kummer_parameters(1.0, std::sqrt(5.0), 3.0, Branch::plus);
    double chain_resid = ode_residual(
        [kp](double rho) {
            return std::pow(rho, kp.nu) * std::exp(-kp.B * rho) * kummer_phi(kp.a, kp.b, 2 * rho);
        },
        RadialEquation::equ_rho, 1.0, std::sqrt(5.0), 3.0, 0.0, {0.3, 4.0, 2200});
    if (!(chain_resid > 1e-2)) ok = false;  // must fail loudly, that is the finding

    report(7, "radial-oracle", ok,
           "fd vs certificate rel err " + sci(worst) + "; error ratio " +
               std::to_string(ratio) + " (order 2); closed-chain rho-residual " +
               std::to_string(chain_resid) + " [documented]");
}

// 8. Asymptotics.
void ac8() {
    bool ok = true;
    double worst_l = 0.0;
    for (double theta : {0.5, 1.0, 2.0})
        for (double k : {0.0, 1.0, std::sqrt(5.0)}) {
            double bound = energy_bound(theta, k);
            for (double e0 : {0.0, bound / 2.0, 0.9 * bound, bound})
                worst_l = std::max(worst_l, lambda_quadratic_residual(theta, k, e0));
        }
    if (worst_l >= 1e-12) ok = false;

    double series = asymptotic_series(1.0, 2.0, 60).value;
    if (std::abs(series - bessel_i0_oracle(2.0)) > 1e-10) ok = false;
    if (std::abs(series - 2.2795853023360673) > 1e-10) ok = false;  // frozen oracle value

    for (int k = 0; k <= 10; ++k)
        if (!(k * k * kSqrtPi / 32.0 < energy_bound(1.0, k))) ok = false;

    auto e0 = energy_at_infinity(1.0, 2.0, 0, 0.0);
    double gap_ratio = e0.E0_displayed / e0.E_nk_infinity;
    if (std::abs(gap_ratio - 2.0 / kSqrtPi) > 1e-12) ok = false;

    report(8, "asymptotics", ok,
           "lambda residual " + sci(worst_l) + "; series = I0 oracle; bound strict for "
           "k <= 10; ground-value gap ratio " + std::to_string(gap_ratio) + " = 2/sqrt(pi) "
           "[documented]");
}

// 9. End-to-end through the CLI.
void ac9() {
    bool ok = true;
    std::string detail;
    fs::path tmp = fs::temp_directory_path() / "tmoyal_acceptance";
    fs::create_directories(tmp);
    std::string report_path = (tmp / "report.json").string();

    int rc = quiet_cli({"verify", "--suite", "all", "--seed", "7", "--out", report_path});
    if (rc != 0) {
        ok = false;
        detail = "verify exit code " + std::to_string(rc);
    } else {
        std::ifstream is(report_path);
        auto doc = nlohmann::json::parse(is);
        int fails = 0, discs = 0;
        std::vector<std::string> disc_names;
        for (const auto& c : doc["checks"]) {
            if (c["status"] == "fail") ++fails;
            if (c["status"] == "discrepancy-documented") {
                ++discs;
                disc_names.push_back(c["name"]);
            }
        }
        if (fails != 0) {
            ok = false;
            detail = std::to_string(fails) + " failing checks";
        }
        const char* expected[] = {
            "star-hamiltonian-mu-gap",       "star-associator-x1x1x2",
            "star-mode-order2-gap",          "specfun-moment-delta-half",
            "specfun-recurrence-ratio-beta-half", "spectrum-eplus-asymptote-claim",
            "spectrum-norm-p1",              "spectrum-norm-p2",
            "spectrum-overlap-p0-p1",        "spectrum-ordinary-k-condition",
            "recurrence-odd-channel",        "recurrence-split-gap",
            "oracle-rho-closed-chain-residual", "oracle-indicial-gap",
            "asympt-e81-n0-gap"};
        for (const char* name : expected) {
            bool found = false;
            for (const auto& n : disc_names)
                if (n == name) found = true;
            if (!found) {
                ok = false;
                detail += std::string(" missing discrepancy entry ") + name;
            }
        }
        if (ok)
            detail = "verify exit 0, 0 fails, " + std::to_string(discs) +
                     " discrepancy-documented entries, all 15 expected names present";
    }

    std::string s1 = (tmp / "s1.csv").string(), s2 = (tmp / "s2.csv").string();
    quiet_cli({"spectrum", "--theta", "1", "--pmax", "20", "--out", s1});
    quiet_cli({"spectrum", "--theta", "1", "--pmax", "20", "--out", s2});
    std::ifstream f1(s1, std::ios::binary), f2(s2, std::ios::binary);
    std::stringstream b1, b2;
    b1 << f1.rdbuf();
    b2 << f2.rdbuf();
    if (b1.str().empty() || b1.str() != b2.str()) {
        ok = false;
        detail += "; spectrum output not byte-stable";
    } else {
        detail += "; spectrum output byte-stable";
    }
    std::error_code ec;
    fs::remove_all(tmp, ec);
    report(9, "end-to-end", ok, detail);
}

}  // namespace

int main() {
    ac1();
    ac2();
    ac3();
    ac4();
    ac5();
    ac6();
    ac7();
    ac8();
    ac9();
    if (g_failures == 0)
        std::printf("acceptance: all 9 criteria PASS\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures;
}
