#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tmoyal/asympt.hpp"

using namespace tmoyal;

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);
}  // namespace

TEST_CASE("even series at infinity") {
    CHECK(asymptotic_series(1.0, 0.0, 8, 3.25).value == 3.25);
    // coefficient recurrence c_{n+1}/c_n = B^2/(2n+2)^2
    double B = 1.7;
    auto s2 = asymptotic_series(B, 1.0, 2).value;
    CHECK(s2 - 1.0 == doctest::Approx(B * B / 4.0).epsilon(1e-15));
    // converged sum equals the independent Bessel oracle (frozen I0(2))
    auto s = asymptotic_series(1.0, 2.0, 60);
    CHECK(s.value == doctest::Approx(2.2795853023360673).epsilon(1e-12));
    CHECK(s.value == doctest::Approx(bessel_i0_oracle(2.0)).epsilon(1e-12));
    CHECK(s.tail_bound < 1e-40);
    CHECK_THROWS_AS(asymptotic_series(1.0, 800.0, 10), std::overflow_error);
    CHECK_THROWS_AS(asymptotic_series(1.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("decay rate from the quadratic") {
    CHECK(lambda_solution(1.0, 0.0, 0.0) == doctest::Approx(3.0 / kSqrtPi).epsilon(1e-14));
    // double root exactly at the bound
    double b = energy_bound(1.0, 2.0);
    CHECK(lambda_solution(1.0, 2.0, b) ==
          doctest::Approx(1.5 / kSqrtPi).epsilon(1e-7));
    CHECK_THROWS_AS(lambda_solution(1.0, 0.0, 10.0), std::domain_error);

    for (double theta : {0.5, 1.0, 2.0})
        for (double k : {0.0, 1.0, std::sqrt(5.0)}) {
            double bound = energy_bound(theta, k);
            for (double e0 : {0.0, bound / 2.0, 0.9 * bound, bound})
                CHECK(lambda_quadratic_residual(theta, k, e0) < 1e-12);
        }
    auto st = make_asymptotic_state(1.0, 2.0, 0.2);
    CHECK(st.gamma == doctest::Approx(1.0));
    CHECK(st.B == 1.0);
    CHECK(st.lambda > 0.0);
}

TEST_CASE("energy bound") {
    CHECK(energy_bound(1.0, 0.0) == doctest::Approx(9.0 / (8.0 * kSqrtPi)).epsilon(1e-15));
    for (int k = 0; k <= 10; ++k) {
        double einf = k * k * kSqrtPi / 32.0;
        CHECK(einf < energy_bound(1.0, k));
        CHECK(energy_bound(1.0, k) - einf == doctest::Approx(9.0 / (8.0 * kSqrtPi)).epsilon(1e-12));
    }
    CHECK(energy_bound(3.0, 1.3) == doctest::Approx(3.0 * energy_bound(1.0, 1.3)).epsilon(1e-15));
}

TEST_CASE("energies at infinity") {
    // lambda = 0: only the centrifugal term survives, pi gamma B / 16 at n = 0
    auto r = energy_at_infinity(1.0, 2.0, 0, 0.0);
    double gammaB = 1.0;  // gamma = theta^2 k^2/4 = 1, B = 1
    CHECK(r.E_nk == doctest::Approx(kPi * gammaB / 16.0).epsilon(1e-14));
    CHECK(r.E_nk == r.E_nk_infinity);
    CHECK(r.E0_displayed == doctest::Approx(gammaB * kSqrtPi / 8.0).epsilon(1e-15));
    // the displayed value and the n=0 reduction differ by 2/sqrt(pi)
    CHECK(r.E0_displayed / r.E_nk_infinity == doctest::Approx(2.0 / kSqrtPi).epsilon(1e-13));

    for (int n = 0; n <= 4; ++n) {
        auto e = energy_at_infinity(1.0, 2.0, n);
        CHECK(e.quadratic_residual < 1e-10);
    }
    CHECK_THROWS_AS(energy_at_infinity(1.0, 1.0, -1), std::invalid_argument);
}

TEST_CASE("term-matched residual diagnostic") {
    double r40 = residual_74(1.0, 0.0, 0.2, 40);
    double r80 = residual_74(1.0, 0.0, 0.2, 80);
    CHECK(r40 > 0.0);
    CHECK(r80 == doctest::Approx(r40).epsilon(1e-9));  // stabilizes, no divergence
    double rg = residual_74(1.0, 2.0, 0.1, 40);
    CHECK(std::isfinite(rg));
    CHECK_THROWS_AS(residual_74(1.0, 0.0, 0.2, 1), std::invalid_argument);
}

TEST_CASE("theta scaling of the section quantities") {
    for (double c : {2.0, 5.0}) {
        CHECK(lambda_solution(c, 1.0, 0.1 * c) ==
              doctest::Approx(lambda_solution(1.0, 1.0, 0.1) / c).epsilon(1e-13));
        CHECK(energy_bound(c, 1.0) == doctest::Approx(c * energy_bound(1.0, 1.0)).epsilon(1e-14));
    }
}
