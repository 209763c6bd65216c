// Large-radius analysis in the rho = r^2 variable: the even-coefficient series
// solving (d^2 + rho^-1 d - B^2) chi = 0, the decay-rate lambda from its
// quadratic, the resulting energy bound, the energies at infinity, and the
// term-matched residual diagnostic.
#pragma once

#include "tmoyal/check.hpp"

namespace tmoyal {

struct AsymptoticState {
    double theta = 1.0;
    double k = 0.0;
    double gamma = 0.0;   // theta^2 k^2 / 4
    double B = 1.0;       // 1/theta
    double lambda = 0.0;  // decay rate, >= 0
    double a0 = 1.0;      // free amplitude
};

AsymptoticState make_asymptotic_state(double theta, double k, double E0);

// Partial sum a0 * sum_{n<n_terms} (B rho / 2)^{2n} / (n!)^2, the even series
// a_{n+2} = B^2/(n+2)^2 a_n. Its limit is the order-zero modified Bessel
// function at argument B*rho. Guards against overflow for B*rho > 700.
struct SeriesSum {
    double value = 0.0;
    double tail_bound = 0.0;  // bound on the dropped remainder
};
SeriesSum asymptotic_series(double B, double rho, int n_terms, double a0 = 1.0);

// Quadrature-free independent oracle: I0(x) by the periodic trapezoid rule on
// (1/pi) int_0^pi e^{x cos t} dt. Shares nothing with asymptotic_series.
double bessel_i0_oracle(double x);

// Positive root lambda = 3B/(2 sqrt pi) + (1/2) sqrt(9B^2/pi - 8 E0 B^3/sqrt pi + gamma B^4)
// of lambda^2 - 3B lambda/sqrt pi + 2 E0 B^3/sqrt pi - B^4 gamma/4 = 0.
// Throws when the discriminant is negative (E0 above the bound).
double lambda_solution(double theta, double k, double E0);
// back-substitution residual of the quadratic at the returned root
double lambda_quadratic_residual(double theta, double k, double E0);

// E_max = (sqrt(pi) theta / 8)(9/pi + k^2/4)
double energy_bound(double theta, double k);

// E_{n,k} = (4n+3) lambda / (2B^2) - Gamma(n+3/2)^2 lambda^2 / ((n!)^2 B^3)
//           + Gamma(n+3/2)^2 gamma B / (4 Gamma(n+2)^2)
// with (n+1/2)! and (n+1)! read as Gamma(n+3/2) and Gamma(n+2). The lambda = 0
// column is the energy at infinity. The displayed ground value
// gamma B sqrt(pi)/8 differs from the n=0 reduction pi gamma B/16 by 2/sqrt(pi);
// both are returned.
struct InfinityEnergies {
    double E_nk = 0.0;
    double E_nk_infinity = 0.0;     // lambda = 0 limit
    double lambda_used = 0.0;
    double E0_displayed = 0.0;      // gamma B sqrt(pi) / 8 = k^2 theta sqrt(pi) / 32
    double quadratic_residual = 0.0;  // closing-display consistency at E_nk
};
InfinityEnergies energy_at_infinity(double theta, double k, int n);
InfinityEnergies energy_at_infinity(double theta, double k, int n, double lambda);

// Max over a rho-grid of the six-sum term-matched expression with lambda from
// lambda_solution, truncated at n_terms. The matching is heuristic, so this is
// a reported diagnostic, not an assertion.
double residual_74(double theta, double k, double E0, int n_terms, double rho_max = 0.0,
                   int grid_n = 200);

}  // namespace tmoyal
