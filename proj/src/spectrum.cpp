#include "tmoyal/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tmoyal/specfun.hpp"

namespace tmoyal {

namespace {
constexpr double kPi = std::numbers::pi;

void require_theta(double theta) {
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
}
}  // namespace

ConstraintAlpha constraint_alpha_checked(double omega1, double omega2) {
    ConstraintAlpha out;
    if (omega1 == 0.0 && omega2 == 0.0) {
        out.constrained = false;  // untwisted plane, no angle is singled out
        out.alpha = 0.0;
        return out;
    }
    if (omega1 == 0.0) {
        out.alpha = kPi / 2.0;  // cos(alpha) = 0
        return out;
    }
    out.alpha = std::atan(-omega2 / omega1);
    if (out.alpha == 0.0) out.alpha = 0.0 * std::abs(out.alpha);  // drop the sign of -0
    return out;
}

double constraint_alpha(double omega1, double omega2) {
    ConstraintAlpha c = constraint_alpha_checked(omega1, omega2);
    if (!c.constrained)
        throw std::invalid_argument("constraint angle undefined for omega1 = omega2 = 0");
    return c.alpha;
}

std::pair<double, double> ordinary_energies(double theta, double k, int l) {
    require_theta(theta);
    double s = std::sqrt(1.0 + k * k / 4.0);
    return {theta * (1.5 + s - l), theta * (1.5 - s - l)};
}

OrdinaryKCondition ordinary_k_condition(int n, int l, double theta) {
    require_theta(theta);
    double base = static_cast<double>(n + l - 1);
    if (base * base < 4.0)
        throw std::domain_error("ordinary_k_condition requires (n+l-1)^2 >= 4");
    OrdinaryKCondition out;
    out.k = std::sqrt(base * base - 4.0);
    out.energy_claimed = theta * (n + 0.5);
    out.energy_formula = ordinary_energies(theta, out.k, l).first;
    out.residual = std::abs(out.energy_claimed - out.energy_formula);
    out.check = CheckResult::make("ordinary-k-condition(n=" + std::to_string(n) +
                                      ",l=" + std::to_string(l) + ")",
                                  out.residual / theta, 1e-12, true,
                                  "E = theta(n+1/2) does not follow from the energy formula by "
                                  "substituting the k condition");
    return out;
}

double quantized_k(int p, int sign) {
    if (p < 0) throw std::invalid_argument("quantized_k: p must be >= 0");
    if (sign != 1 && sign != -1) throw std::invalid_argument("quantized_k: sign must be +1 or -1");
    // (p+1)(4p+5) exactly in integers before the square root
    long long m = static_cast<long long>(p + 1) * (4LL * p + 5LL);
    return sign * std::sqrt(static_cast<double>(m));
}

double twisted_energy(double theta, int p, Branch branch) {
    require_theta(theta);
    double k = quantized_k(p);
    double s = std::sqrt(1.0 + k * k / 4.0);
    return theta * (1.5 + (branch == Branch::plus ? s : -s) - p);
}

std::pair<double, double> twisted_energies(double theta, int p) {
    return {twisted_energy(theta, p, Branch::plus), twisted_energy(theta, p, Branch::minus)};
}

KummerParameters kummer_parameters(double theta, double k, double E, Branch branch) {
    require_theta(theta);
    KummerParameters out;
    double s = std::sqrt(1.0 + k * k / 4.0);
    out.nu = 1.0 + (branch == Branch::plus ? s : -s);
    out.B = 1.0 / theta;
    out.a = E / theta - out.nu - 0.5;
    out.b = 2.0 * out.nu + 1.0;
    return out;
}

double normalization_A1_squared(double theta, int p) {
    require_theta(theta);
    KummerParameters kp = kummer_parameters(theta, quantized_k(p), 0.0, Branch::plus);
    const double nu = kp.nu, B = kp.B;
    double log_fact_p = log_gamma(p + 1.0);
    double poch = pochhammer(2.0 * nu + 1.0, p);
    double logv = (2.0 * nu + 1.5) * std::log(2.0 * B) + 2.0 * std::log(std::abs(poch)) +
                  log_gamma(2.0 * nu + 1.0) - std::log(kPi) - log_fact_p -
                  log_gamma(2.0 * nu + p + 1.0) - log_gamma(2.0 * nu + 1.5);
    return std::exp(logv);
}

double normalization_A1(double theta, int p) { return std::sqrt(normalization_A1_squared(theta, p)); }

std::complex<double> eigenstate_eval(double theta, int p, double r, double alpha) {
    require_theta(theta);
    if (r < 0.0) throw std::invalid_argument("eigenstate_eval: r must be >= 0");
    KummerParameters kp = kummer_parameters(theta, quantized_k(p), 0.0, Branch::plus);
    double radial = normalization_A1(theta, p) * std::pow(r, 2.0 * kp.nu) *
                    std::exp(-kp.B * r * r) *
                    kummer_phi(static_cast<double>(-p), kp.b, 2.0 * kp.B * r * r);
    double phase = quantized_k(p) * alpha;
    return radial * std::complex<double>{std::cos(phase), std::sin(phase)};
}

std::complex<double> inner_product(double theta, int p, int q, Measure measure) {
    require_theta(theta);
    const double B = 1.0 / theta;
    KummerParameters kpp = kummer_parameters(theta, quantized_k(p), 0.0, Branch::plus);
    KummerParameters kpq = kummer_parameters(theta, quantized_k(q), 0.0, Branch::plus);

    // angular factor: 2*pi when k_p == k_q, else (e^{i(k_q-k_p)2pi} - 1)/(i(k_q-k_p))
    std::complex<double> angular;
    double dk = quantized_k(q) - quantized_k(p);
    if (p == q) {
        angular = 2.0 * kPi;
    } else {
        std::complex<double> idk{0.0, dk};
        angular = (std::exp(idk * (2.0 * kPi)) - 1.0) / idk;
    }

    // radial part via z = 2 B r^2:
    //   int r^(2nu_p + 2nu_q) e^(-2B r^2) Phi_p Phi_q r^s dr
    //     = (2B)^(-(nu_p+nu_q+(s+1)/2))/2 * int z^(nu_p+nu_q+(s-1)/2) e^(-z) Phi_p Phi_q dz
    const double s_pow = (measure == Measure::r2) ? 2.0 : 1.0;
    const double sigma = kpp.nu + kpq.nu + (s_pow - 1.0) / 2.0;
    const int order = p + q + 8;
    QuadratureRule rule = gauss_laguerre(sigma, order);
    double radial = 0.0;
    for (int i = 0; i < rule.order; ++i) {
        double z = rule.nodes[i];
        radial += rule.weights[i] * kummer_phi(static_cast<double>(-p), kpp.b, z) *
                  kummer_phi(static_cast<double>(-q), kpq.b, z);
    }
    double prefactor = 0.5 * std::pow(2.0 * B, -(kpp.nu + kpq.nu + (s_pow + 1.0) / 2.0));
    double A = normalization_A1(theta, p) * normalization_A1(theta, q);
    return A * prefactor * radial * angular;
}

FigureSeries figure_series(double theta, int p_max, ExecPolicy policy) {
    require_theta(theta);
    if (p_max < 1) throw std::invalid_argument("figure_series: p_max must be >= 1");
    FigureSeries out;
    out.rows.resize(p_max + 1);
    parallel_for(p_max + 1, policy, [&](int p) {
        SpectrumEntry e;
        e.p = p;
        e.k_p = quantized_k(p);
        e.E_plus = twisted_energy(theta, p, Branch::plus);
        e.E_minus = twisted_energy(theta, p, Branch::minus);
        KummerParameters kp = kummer_parameters(theta, e.k_p, e.E_plus, Branch::plus);
        e.nu_p = kp.nu;
        e.B = kp.B;
        e.kummer_a = kp.a;
        e.kummer_b = kp.b;
        e.A1 = normalization_A1(theta, p);
        out.rows[p] = e;
    });

    out.eplus_strictly_decreasing = true;
    for (int p = 1; p <= p_max; ++p)
        if (!(out.rows[p].E_plus < out.rows[p - 1].E_plus)) out.eplus_strictly_decreasing = false;

    // least-squares slope of E_minus over the trailing window [max(p_max-10, 0), p_max]
    int lo = std::max(0, p_max - 10);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (int p = lo; p <= p_max; ++p, ++m) {
        sx += p;
        sy += out.rows[p].E_minus;
        sxx += static_cast<double>(p) * p;
        sxy += p * out.rows[p].E_minus;
    }
    out.eminus_tail_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return out;
}

}  // namespace tmoyal
