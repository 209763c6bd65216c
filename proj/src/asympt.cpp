#include "tmoyal/asympt.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tmoyal/specfun.hpp"

namespace tmoyal {

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);
}  // namespace

AsymptoticState make_asymptotic_state(double theta, double k, double E0) {
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
    AsymptoticState s;
    s.theta = theta;
    s.k = k;
    s.gamma = theta * theta * k * k / 4.0;
    s.B = 1.0 / theta;
    s.lambda = lambda_solution(theta, k, E0);
    return s;
}

SeriesSum asymptotic_series(double B, double rho, int n_terms, double a0) {
    if (n_terms < 1) throw std::invalid_argument("asymptotic_series: n_terms must be >= 1");
    const double x = B * rho;
    if (x > 700.0) throw std::overflow_error("asymptotic_series: B*rho too large");
    double term = a0, sum = a0;
    for (int n = 1; n < n_terms; ++n) {
        term *= (x * x / 4.0) / (static_cast<double>(n) * n);
        sum += term;
    }
    SeriesSum out;
    out.value = sum;
    // next term over 1 - ratio bounds the geometric-dominated tail
    double next = term * (x * x / 4.0) / (static_cast<double>(n_terms) * n_terms);
    double ratio = (x * x / 4.0) / (static_cast<double>(n_terms + 1) * (n_terms + 1));
    out.tail_bound = (ratio < 1.0) ? next / (1.0 - ratio) : INFINITY;
    return out;
}

double bessel_i0_oracle(double x) {
    // integrand is smooth and pi-periodic: the trapezoid rule converges
    // spectrally; 256 panels give machine accuracy for |x| <= ~30
    const int n = 256;
    double acc = 0.5 * (std::exp(x) + std::exp(-x));
    for (int j = 1; j < n; ++j) acc += std::exp(x * std::cos(kPi * j / n));
    return acc / n;
}

double lambda_solution(double theta, double k, double E0) {
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
    const double B = 1.0 / theta;
    const double gamma = theta * theta * k * k / 4.0;
    double disc = 9.0 * B * B / kPi - 8.0 * E0 * B * B * B / kSqrtPi + gamma * B * B * B * B;
    const double disc_scale = 9.0 * B * B / kPi + gamma * B * B * B * B;
    if (disc < 0.0 && disc > -1e-12 * disc_scale) disc = 0.0;  // E0 at the bound
    if (disc < 0.0)
        throw std::domain_error("lambda_solution: E0 = " + std::to_string(E0) +
                                " exceeds the bound " + std::to_string(energy_bound(theta, k)));
    return 1.5 * B / kSqrtPi + 0.5 * std::sqrt(disc);
}

double lambda_quadratic_residual(double theta, double k, double E0) {
    const double B = 1.0 / theta;
    const double gamma = theta * theta * k * k / 4.0;
    const double l = lambda_solution(theta, k, E0);
    return std::abs(l * l - 3.0 * B * l / kSqrtPi + 2.0 * E0 * B * B * B / kSqrtPi -
                    B * B * B * B * gamma / 4.0);
}

double energy_bound(double theta, double k) {
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
    return kSqrtPi * theta / 8.0 * (9.0 / kPi + k * k / 4.0);
}

InfinityEnergies energy_at_infinity(double theta, double k, int n, double lambda) {
    if (n < 0) throw std::invalid_argument("energy_at_infinity: n must be >= 0");
    const double B = 1.0 / theta;
    const double gamma = theta * theta * k * k / 4.0;
    const double gn32 = gamma_fn(n + 1.5);       // (n+1/2)! read as Gamma(n+3/2)
    const double fact_n = gamma_fn(n + 1.0);
    const double gn2 = gamma_fn(n + 2.0);        // (n+1)! read as Gamma(n+2)
    InfinityEnergies out;
    out.lambda_used = lambda;
    out.E_nk_infinity = gn32 * gn32 * gamma * B / (4.0 * gn2 * gn2);
    out.E_nk = (4.0 * n + 3.0) * lambda / (2.0 * B * B) -
               gn32 * gn32 * lambda * lambda / (fact_n * fact_n * B * B * B) +
               out.E_nk_infinity;
    out.E0_displayed = gamma * B * kSqrtPi / 8.0;
    // closing-display consistency:
    // B^3 (n!)^2 E / Gamma(n+3/2)^2 + lambda^2 - (4n+3)(n!)^2 lambda B / (2 Gamma(n+3/2)^2)
    //   - gamma B^4 / (4 (n+1)^2) = 0
    out.quadratic_residual =
        std::abs(B * B * B * fact_n * fact_n * out.E_nk / (gn32 * gn32) + lambda * lambda -
                 (4.0 * n + 3.0) * fact_n * fact_n * lambda * B / (2.0 * gn32 * gn32) -
                 gamma * B * B * B * B / (4.0 * (n + 1.0) * (n + 1.0)));
    return out;
}

InfinityEnergies energy_at_infinity(double theta, double k, int n) {
    // the quadratic's E0 input is taken at the displayed ground value
    const double B = 1.0 / theta;
    const double gamma = theta * theta * k * k / 4.0;
    const double e0 = gamma * B * kSqrtPi / 8.0;
    return energy_at_infinity(theta, k, n, lambda_solution(theta, k, e0));
}

double residual_74(double theta, double k, double E0, int n_terms, double rho_max, int grid_n) {
    if (n_terms < 2) throw std::invalid_argument("residual_74: n_terms must be >= 2");
    if (grid_n < 2) throw std::invalid_argument("residual_74: grid too small");
    const double B = 1.0 / theta;
    const double gamma = theta * theta * k * k / 4.0;
    const double lambda = lambda_solution(theta, k, E0);
    if (rho_max <= 0.0) rho_max = 5.0 / B;

    // c_n = B^(2n) / (2^(2n) (n!)^2)
    std::vector<double> c(n_terms);
    c[0] = 1.0;
    for (int n = 1; n < n_terms; ++n)
        c[n] = c[n - 1] * (B * B / 4.0) / (static_cast<double>(n) * n);

    double worst = 0.0;
    for (int j = 1; j <= grid_n; ++j) {
        const double rho = rho_max * j / grid_n;
        double s0 = 0, s1 = 0, s1n = 0, s2 = 0, s2n = 0, s2nn = 0;
        for (int n = 0; n < n_terms; ++n) {
            const double p2n = std::pow(rho, 2 * n);
            s0 += c[n] * p2n;
            s1 += c[n] * p2n / rho;                               // rho^(2n-1)
            s1n += 2.0 * n * c[n] * p2n / rho;                    // 2n rho^(2n-1)
            s2 += c[n] * p2n / (rho * rho);                       // rho^(2n-2)
            s2n += 2.0 * n * c[n] * p2n / (rho * rho);            // 2n rho^(2n-2)
            s2nn += 2.0 * n * (2.0 * n - 1.0) * c[n] * p2n / (rho * rho);
        }
        const double expr = (lambda * lambda - B * B) * s0 + (2.0 * E0 * B * B - lambda) * s1 -
                            2.0 * lambda * s1n - B * B * gamma * s2 + s2n + s2nn;
        worst = std::max(worst, std::abs(expr));
    }
    return worst;
}

}  // namespace tmoyal
