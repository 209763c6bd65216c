// Independent numerical authority for the radial eigenproblems: cell-centered
// finite differences with the substitution chi = r^|k| u (natural flux condition
// at r = 0, Dirichlet at r_max), symmetrized to a tridiagonal eigenproblem
// solved by Sturm bisection; plus pointwise ODE residuals and the Frobenius
// indicial analysis.
#pragma once

#include <functional>
#include <vector>

#include "tmoyal/check.hpp"
#include "tmoyal/parallel.hpp"

namespace tmoyal {

struct FDProblem {
    double theta = 1.0;
    double k = 0.0;
    double r_max = 0.0;   // 0 -> default 8 sqrt(theta) max(1, sqrt|k|)
    int n_points = 2000;  // >= 200
    double twist_w = 0.0; // omega_1 / cos(alpha), first-order twist coefficient

    double effective_r_max() const;
};

// Lowest `count` eigenvalues E of the untwisted radial equation (twist_w = 0)
// or its first-order twisted form (twist_w != 0). Second-order accurate.
std::vector<double> fd_eigenvalues(const FDProblem& prob, int count,
                                   ExecPolicy policy = ExecPolicy::openmp);

// Closed-form certificate spectrum E_n = (theta/2)(2n + |k| + 1) of the
// untwisted equation, verified independently via ode_residual on
// r^|k| e^{-r^2/theta} L_n^|k|(2r^2/theta).
double certificate_energy(double theta, double k, int n);

enum class RadialEquation { equ_untwisted, equ_rho, equ_twisted };

struct ResidualOptions {
    double x_lo = 0.1;  // keeps the 5-point stencil away from the r=0 singularity
    double x_hi = 8.0;
    int grid_n = 8000;
};

// Max over the interior grid of |L chi| / max|chi| with 5-point-stencil
// derivatives. equ_untwisted and equ_twisted are in r; equ_rho is the
// rho = r^2 form.
double ode_residual(const std::function<double(double)>& solution, RadialEquation eq, double theta,
                    double k, double E, double twist_w = 0.0, ResidualOptions opts = {});

// Frobenius exponents of the rho-form equation at rho = 0 (roots of
// nu^2 - k^2/4 = 0) next to the exponents 1 ± sqrt(1 + k^2/4) the closed-form
// solution chain assigns; the two disagree for every k and the gap is reported.
struct IndicialResult {
    double frobenius_plus = 0.0, frobenius_minus = 0.0;
    double closed_chain_plus = 0.0, closed_chain_minus = 0.0;
    CheckResult check;
};
IndicialResult indicial_exponents(double k);

}  // namespace tmoyal
