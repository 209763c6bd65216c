// Special-function kernel: gamma, Pochhammer, the Kummer confluent series and its
// ODE machinery, Laguerre/Hermite polynomials through both their explicit sums and
// their confluent-series forms, generalized Gauss-Laguerre quadrature, and the
// weighted Laguerre moment integrals.
#pragma once

#include <complex>
#include <vector>

#include "tmoyal/check.hpp"

namespace tmoyal {

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lanczos approximation (g = 607/128, 15 terms) with reflection; >= 12
// significant digits over the ranges used here. Poles at 0, -1, -2, ...
std::complex<double> gamma_fn(std::complex<double> z);
double gamma_fn(double z);
double log_gamma(double z);  // real z > 0

// Rising factorial lambda (lambda+1) ... (lambda+k-1); (lambda)_0 = 1.
std::complex<double> pochhammer(std::complex<double> lambda, int k);
double pochhammer(double lambda, int k);

struct KummerParams {
    std::complex<double> a, b, z;
};

// Confluent hypergeometric series. Terminates to a polynomial when `a` is a
// non-positive integer (detected within 1e-9); otherwise summed with
// compensated summation until the relative tail is < 1e-15 with a term-ratio
// safeguard. b must not be a non-positive integer.
std::complex<double> kummer_phi(std::complex<double> a, std::complex<double> b,
                                std::complex<double> z);
double kummer_phi(double a, double b, double z);

// |z F'' + (b - z) F' - a F| with derivatives taken through the shifted series.
double kummer_ode_residual(const KummerParams& p);
// Same residual for the second solution z^{1-b} Phi(1+a-b, 2-b; z).
double kummer_second_ode_residual(const KummerParams& p);

// Generalized Laguerre polynomial; `laguerre` sums the explicit gamma-ratio
// series, `laguerre_via_phi` goes through the confluent form. Both routes are
// kept as mutual oracles.
double laguerre(int n, double sigma, double z);
double laguerre_via_phi(int n, double sigma, double z);
// Sum of |term| over the explicit series; the meaningful scale for comparing
// the two routes where the alternating sum cancels.
double laguerre_term_scale(int n, double sigma, double z);

double hermite(int n, double z);
double hermite_via_phi(int n, double z);

// Nodes/weights for weight z^sigma e^{-z} on (0, inf). The rule integrates
// polynomials of degree <= 2*order-1 exactly and its weights sum to
// Gamma(sigma+1).
struct QuadratureRule {
    double sigma = 0.0;
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;

    double integrate_poly_values(const std::vector<double>& values) const;
};

// Golub-Welsch on the Jacobi matrix of the sigma-Laguerre weight; results are
// memoized per (sigma, order) behind a lock.
QuadratureRule gauss_laguerre(double sigma, int order);

// integral_0^inf e^{-z} z^(sigma+delta) L_n^sigma(z) L_m^sigma(z) dz evaluated
// by quadrature at polynomial-exact order, together with a CheckResult against
// the closed form delta_nm Gamma(n+sigma+1) Gamma(sigma+delta+1) / (n! Gamma(sigma+1)).
// The closed form is exact at delta = 0 and fails in general at delta != 0;
// those misses are expected and reported, never silently passed.
struct MomentResult {
    double value = 0.0;
    double closed_form = 0.0;
    CheckResult check;
};
MomentResult laguerre_moment(int n, int m, double sigma, double delta);

}  // namespace tmoyal
