#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tmoyal/specfun.hpp"
#include "tmoyal/spectrum.hpp"

using namespace tmoyal;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("constraint angle") {
    CHECK(constraint_alpha(1.0, 0.0) == 0.0);
    CHECK(constraint_alpha(0.0, 1.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(constraint_alpha(1.0, 1.0) == doctest::Approx(-kPi / 4).epsilon(1e-15));
    CHECK_THROWS_AS(constraint_alpha(0.0, 0.0), std::invalid_argument);
    auto c = constraint_alpha_checked(0.0, 0.0);
    CHECK_FALSE(c.constrained);
}

TEST_CASE("untwisted branch energies and the k condition") {
    auto [ep, em] = ordinary_energies(1.0, 0.0, 0);
    CHECK(ep == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(em == doctest::Approx(0.5).epsilon(1e-15));
    auto [e2p, e2m] = ordinary_energies(1.0, std::sqrt(5.0), 0);
    CHECK(e2p == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(e2m == doctest::Approx(0.0));
    auto [e3p, e3m] = ordinary_energies(2.0, 0.0, 1);
    CHECK(e3p == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(e3m == doctest::Approx(-1.0).epsilon(1e-15));

    auto r = ordinary_k_condition(3, 0, 1.0);
    CHECK(r.k == 0.0);
    CHECK(r.residual == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.check.status == CheckStatus::discrepancy_documented);
    CHECK(ordinary_k_condition(2, 1, 1.0).k == 0.0);
    CHECK_THROWS_AS(ordinary_k_condition(1, 0, 1.0), std::domain_error);
}

TEST_CASE("quantized angular number") {
    CHECK(quantized_k(0) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-16));
    CHECK(quantized_k(1) == doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(quantized_k(2) == doctest::Approx(std::sqrt(39.0)).epsilon(1e-16));
    CHECK(quantized_k(2, -1) == -quantized_k(2));
    CHECK_THROWS_AS(quantized_k(1, 0), std::invalid_argument);
    for (int p = 0; p <= 30; ++p)
        CHECK(quantized_k(p) * quantized_k(p) ==
              doctest::Approx((p + 1.0) * (4.0 * p + 5.0)).epsilon(1e-14));
}

TEST_CASE("twisted branch energies") {
    CHECK(twisted_energy(1.0, 0, Branch::plus) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(twisted_energy(1.0, 0, Branch::minus) == 0.0);
    // E1+ = 1/2 + sqrt(11/2)
    CHECK(twisted_energy(1.0, 1, Branch::plus) ==
          doctest::Approx(2.8452078799117149).epsilon(1e-15));
    CHECK(std::abs(twisted_energy(1.0, 20, Branch::plus) - 21.0 / 8.0) < 0.05);
    // branch sum kills the radical
    for (double theta : {0.5, 1.0, 2.0})
        for (int p : {0, 3, 11}) {
            auto [ep, em] = twisted_energies(theta, p);
            CHECK(ep + em == doctest::Approx(theta * (3.0 - 2.0 * p)).epsilon(1e-13));
        }
    CHECK_THROWS_AS(twisted_energy(0.0, 1, Branch::plus), std::invalid_argument);
}

TEST_CASE("kummer parameters on and off shell") {
    auto kp = kummer_parameters(1.0, std::sqrt(5.0), 3.0, Branch::plus);
    CHECK(kp.nu == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(kp.B == 1.0);
    CHECK(kp.b == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(kp.a == doctest::Approx(0.0));

    auto kp1 = kummer_parameters(1.0, quantized_k(1), twisted_energy(1.0, 1, Branch::plus),
                                 Branch::plus);
    CHECK(std::abs(kp1.a + 1.0) < 1e-12);

    auto kp2 = kummer_parameters(2.0, 0.0, 5.0, Branch::plus);
    CHECK(kp2.B == 0.5);
    CHECK(kp2.nu == 2.0);
    CHECK(kp2.a == doctest::Approx(0.0));

    auto kpm = kummer_parameters(1.0, std::sqrt(5.0), 3.0, Branch::minus);
    CHECK(kpm.nu == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(kpm.b == doctest::Approx(0.0));

    for (double theta : {0.5, 1.0, 2.0})
        for (int p = 0; p <= 30; ++p) {
            auto k = kummer_parameters(theta, quantized_k(p),
                                       twisted_energy(theta, p, Branch::plus), Branch::plus);
            CHECK(std::abs(k.a + p) < 1e-12);
        }
}

TEST_CASE("normalization") {
    double g = std::sqrt(kPi);
    for (double h = 0.5; h < 6.0; h += 1.0) g *= h;  // Gamma(13/2)
    CHECK(normalization_A1_squared(1.0, 0) ==
          doctest::Approx(std::pow(2.0, 6.5) / (kPi * g)).epsilon(1e-13));
    CHECK(normalization_A1_squared(1.0, 0) == doctest::Approx(0.100075010211314).epsilon(1e-12));
    CHECK(normalization_A1(1.0, 0) > 0.0);
    for (double theta : {0.5, 2.0, 4.0})
        for (int p : {0, 2, 5}) {
            double nu = kummer_parameters(1.0, quantized_k(p), 0.0, Branch::plus).nu;
            CHECK(normalization_A1_squared(theta, p) * std::pow(theta, 2 * nu + 1.5) ==
                  doctest::Approx(normalization_A1_squared(1.0, p)).epsilon(1e-12));
        }
}

TEST_CASE("eigenstate evaluation") {
    for (int p : {0, 1, 3}) CHECK(eigenstate_eval(1.0, p, 0.0, 0.4) == std::complex<double>{0, 0});
    auto v = eigenstate_eval(1.0, 0, 1.0, 0.0);
    CHECK(v.real() == doctest::Approx(normalization_A1(1.0, 0) * std::exp(-1.0)).epsilon(1e-13));
    CHECK(v.imag() == 0.0);
    // modulus is independent of the angle
    for (double alpha : {0.3, 1.2, 5.9})
        CHECK(std::abs(eigenstate_eval(1.0, 2, 1.3, alpha)) ==
              doctest::Approx(std::abs(eigenstate_eval(1.0, 2, 1.3, 0.0))).epsilon(1e-13));
    CHECK_THROWS_AS(eigenstate_eval(1.0, 0, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("inner products under the r^2 dr measure") {
    CHECK(std::abs(inner_product(1.0, 0, 0, Measure::r2)) == doctest::Approx(1.0).epsilon(1e-8));
    // p = 1 self-norm carries the delta = 1/2 gap: (sigma + 7/4)/(sigma + 1), sigma = 2 nu_1
    double sigma = 2.0 * kummer_parameters(1.0, quantized_k(1), 0.0, Branch::plus).nu;
    double expect = (sigma + 1.75) / (sigma + 1.0);
    CHECK(std::abs(inner_product(1.0, 1, 1, Measure::r2)) ==
          doctest::Approx(expect).epsilon(1e-10));
    CHECK(std::abs(inner_product(1.0, 0, 1, Measure::r2)) > 1e-5);  // no orthogonality
    // p = 2 self-norm against termwise gamma integrals of z^(sigma+1/2) [L2^sigma]^2
    {
        double s2 = 2.0 * kummer_parameters(1.0, quantized_k(2), 0.0, Branch::plus).nu;
        double c0 = (s2 + 1.0) * (s2 + 2.0) / 2.0, c1 = s2 + 2.0;
        double s = s2 + 0.5;
        double I = c0 * c0 * gamma_fn(s + 1.0) - 2.0 * c0 * c1 * gamma_fn(s + 2.0) +
                   (c1 * c1 + c0) * gamma_fn(s + 3.0) - c1 * gamma_fn(s + 4.0) +
                   gamma_fn(s + 5.0) / 4.0;
        double assumed = gamma_fn(s2 + 3.0) * gamma_fn(s2 + 1.5) / (2.0 * gamma_fn(s2 + 1.0));
        CHECK(std::abs(inner_product(1.0, 2, 2, Measure::r2)) ==
              doctest::Approx(I / assumed).epsilon(1e-9));
    }
    // the lebesgue-measure variant differs from the r^2 one
    CHECK(std::abs(inner_product(1.0, 0, 0, Measure::r)) != doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("figure series") {
    FigureSeries fs = figure_series(1.0, 20, ExecPolicy::serial);
    REQUIRE(fs.rows.size() == 21);
    CHECK(fs.rows[0].k_p == doctest::Approx(std::sqrt(5.0)));
    CHECK(fs.rows[0].E_plus == doctest::Approx(3.0));
    CHECK(fs.rows[0].E_minus == 0.0);
    CHECK(fs.rows[0].kummer_a == doctest::Approx(0.0));
    CHECK(fs.eplus_strictly_decreasing);
    CHECK(fs.eminus_tail_slope == doctest::Approx(-2.0).epsilon(0.025));
    CHECK(std::abs(fs.rows[20].E_plus - 21.0 / 8.0) < 0.05);
    CHECK_THROWS_AS(figure_series(1.0, 0), std::invalid_argument);
}
