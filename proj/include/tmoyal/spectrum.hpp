// Closed-form eigen-solution chain for the oscillator on the twisted plane:
// the polar-reduction constraint, the untwisted (B1) and twisted (B2) branches,
// the quantized angular number k_p, Kummer parameters, normalization, eigenstate
// evaluation and inner products, and the table of figure rows.
#pragma once

#include <complex>
#include <vector>

#include "tmoyal/check.hpp"
#include "tmoyal/parallel.hpp"

namespace tmoyal {

enum class Branch { plus, minus };

// Section-2.2 twist aliases: these take (omega1, omega2) = (omega_12^2, omega_12^1).
// alpha solves omega1 sin(alpha) + omega2 cos(alpha) = 0, principal value in
// (-pi/2, pi/2]. Both-zero input has no constraint; see constraint_alpha_checked.
double constraint_alpha(double omega1, double omega2);
struct ConstraintAlpha {
    double alpha = 0.0;
    bool constrained = true;  // false for omega1 = omega2 = 0 (untwisted plane)
};
ConstraintAlpha constraint_alpha_checked(double omega1, double omega2);

// E(l,k) = theta (3/2 ± sqrt(1 + k^2/4) - l)
std::pair<double, double> ordinary_energies(double theta, double k, int l);

// k = ±sqrt((n+l-1)^2 - 4) plus the residual of the claimed consequence
// E = theta(n + 1/2), which does not follow by substitution; the residual is
// reported, not asserted.
struct OrdinaryKCondition {
    double k = 0.0;
    double energy_claimed = 0.0;  // theta (n + 1/2)
    double energy_formula = 0.0;  // plus-branch E(l, k)
    double residual = 0.0;
    CheckResult check;
};
OrdinaryKCondition ordinary_k_condition(int n, int l, double theta);

// k_p = sign * sqrt((p+1)(4p+5)); both signs are admissible and the positive
// root is the default everywhere downstream.
double quantized_k(int p, int sign = +1);

// E_p^± = theta (3/2 ± sqrt(1 + (p+1)(4p+5)/4) - p)
double twisted_energy(double theta, int p, Branch branch);
std::pair<double, double> twisted_energies(double theta, int p);  // (plus, minus)

struct KummerParameters {
    double nu = 0.0;  // 1 ± sqrt(1 + k^2/4)
    double B = 0.0;   // 1/theta
    double a = 0.0;   // E/theta - nu - 1/2
    double b = 0.0;   // 2 nu + 1
};
KummerParameters kummer_parameters(double theta, double k, double E, Branch branch);

// Positive root of
// A1^2 = 2^(2nu+3/2) B^(2nu+3/2) [(2nu+1)_p]^2 Gamma(2nu+1)
//        / (pi p! Gamma(2nu+p+1) Gamma(2nu+3/2)),   nu = plus-branch nu_p.
double normalization_A1(double theta, int p);
double normalization_A1_squared(double theta, int p);

// f_p(r, alpha) = A1 r^(2 nu_p) e^(-B r^2) Phi(-p, 2nu_p+1; 2B r^2) e^(i k_p alpha)
std::complex<double> eigenstate_eval(double theta, int p, double r, double alpha);

// r2: the r^2 dr dalpha convention the closed-form normalization uses;
// r:  the standard polar measure, kept for comparison.
enum class Measure { r2, r };
std::complex<double> inner_product(double theta, int p, int q, Measure measure);

struct SpectrumEntry {
    int p = 0;
    double k_p = 0.0;
    double nu_p = 0.0;       // plus branch
    double B = 0.0;
    double kummer_a = 0.0;   // on-shell with E = E_p^+ this is -p
    double kummer_b = 0.0;
    double E_plus = 0.0;
    double E_minus = 0.0;
    double A1 = 0.0;
};

struct FigureSeries {
    std::vector<SpectrumEntry> rows;
    bool eplus_strictly_decreasing = false;
    double eminus_tail_slope = 0.0;  // least-squares fit over the trailing rows
};
FigureSeries figure_series(double theta, int p_max, ExecPolicy policy = ExecPolicy::openmp);

}  // namespace tmoyal
