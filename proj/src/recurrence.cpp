#include "tmoyal/recurrence.hpp"

#include <cmath>

#include "tmoyal/spectrum.hpp"

namespace tmoyal {

namespace {

std::complex<double> at(const std::vector<std::complex<double>>& a, int i) {
    if (i < 0 || i >= static_cast<int>(a.size())) return {0.0, 0.0};
    return a[i];
}

}  // namespace

SeriesTrace make_trace(double theta, double E, double k, double w, int n_max) {
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
    if (n_max < 2 || n_max % 2 != 0) throw std::invalid_argument("n_max must be even and >= 2");
    SeriesTrace t;
    t.theta = theta;
    t.E = E;
    t.k = k;
    t.w = w;
    t.coeffs.assign(n_max + 1, {0.0, 0.0});
    t.coeffs[0] = 1.0;  // homogeneous recurrence; a_0 normalizes the chain
    return t;
}

StepResult full_recurrence_step(const SeriesTrace& t, int n) {
    if (n < 0) throw std::invalid_argument("full_recurrence_step: n must be >= 0");
    const double th2 = t.theta * t.theta;
    const auto& a = t.coeffs;
    StepResult out;
    if (n % 2 == 0) {
        const double denom = static_cast<double>(n + 2) * (n + 2) - t.k * t.k;
        out.solved_index = n + 2;
        if (std::abs(denom) < 1e-12) {
            out.resonance = true;
            out.value = {0.0, 0.0};
            return out;
        }
        // ((n+2)^2 - k^2) a_{n+2} - w (n+1) a_{n+1} + (8E/th^2) a_n
        //   + (16 E w/th^2) a_{n-1} - (4/th^2) a_{n-2} - (8 w/th^2) a_{n-3} = 0
        std::complex<double> rhs = t.w * static_cast<double>(n + 1) * at(a, n + 1) -
                                   8.0 * t.E / th2 * at(a, n) -
                                   16.0 * t.E * t.w / th2 * at(a, n - 1) +
                                   4.0 / th2 * at(a, n - 2) + 8.0 * t.w / th2 * at(a, n - 3);
        out.value = rhs / denom;
        return out;
    }
    // odd instance with the odd slots zero: every surviving term carries w, and
    // the instance becomes (n+1) a_{n+1} = (16E/th^2) a_{n-1} - (8/th^2) a_{n-3}
    out.solved_index = n + 1;
    out.value = (16.0 * t.E / th2 * at(a, n - 1) - 8.0 / th2 * at(a, n - 3)) /
                static_cast<double>(n + 1);
    return out;
}

SplitStep split_recurrences(const SeriesTrace& t, int n) {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("split_recurrences: n must be even");
    const double th2 = t.theta * t.theta;
    const auto& a = t.coeffs;
    const double denom = static_cast<double>(n + 2) * (n + 2) - t.k * t.k;
    if (std::abs(denom) < 1e-12)
        throw ResonanceError(n, "resonance (n+2)^2 = k^2 at n = " + std::to_string(n));
    SplitStep out;
    out.via_recc1 = (-8.0 * t.E / th2 * at(a, n) + 4.0 / th2 * at(a, n - 2)) / denom;
    out.via_recc2 =
        (16.0 * t.E / th2 * at(a, n) - 8.0 / th2 * at(a, n - 2)) / static_cast<double>(n + 2);
    out.gap = std::abs(out.via_recc1 - out.via_recc2);
    out.k_equivalence = std::sqrt(static_cast<double>(n + 2) * (2 * n + 5) / 2.0);
    return out;
}

std::vector<double> discover_kp(int p_max) {
    if (p_max < 0) throw std::invalid_argument("discover_kp: p_max must be >= 0");
    std::vector<double> ks;
    ks.reserve(p_max + 1);
    for (int p = 0; p <= p_max; ++p) {
        const long long n = 2LL * p;
        // (n+2)(2n+5)/2 with even n is the integer (p+1)(4p+5)
        const long long radicand = (n + 2) * (2 * n + 5) / 2;
        ks.push_back(std::sqrt(static_cast<double>(radicand)));
    }
    return ks;
}

SeriesTrace series_consistency_report(double theta, double E, int p, int n_max, double w) {
    SeriesTrace t = make_trace(theta, E, quantized_k(p), w, n_max);
    const double th2 = theta * theta;
    for (int n = 0; n + 2 <= n_max; n += 2) {
        StepResult s = full_recurrence_step(t, n);
        if (s.resonance) throw ResonanceError(n, "resonance while generating the even chain");
        t.coeffs[n + 2] = s.value;
    }
    for (int n = 0; n + 2 <= n_max; n += 2) {
        // recc2 residual: -(n+2) a_{n+2} + (16E/th^2) a_n - (8/th^2) a_{n-2}
        std::complex<double> lhs = -static_cast<double>(n + 2) * at(t.coeffs, n + 2) +
                                   16.0 * E / th2 * at(t.coeffs, n) -
                                   8.0 / th2 * at(t.coeffs, n - 2);
        t.recc2_residuals.push_back(std::abs(lhs));
        // the odd coefficient the full recurrence would generate above this level
        const int n_odd = n + 1;
        const double denom = static_cast<double>(n_odd + 2) * (n_odd + 2) - t.k * t.k;
        t.odd_channel.push_back(std::abs(w) * std::abs(lhs) / std::abs(denom));
    }
    return t;
}

}  // namespace tmoyal
