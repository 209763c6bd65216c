// Series engine for the twisted radial equation. chi(r) = sum a_n r^n with
// a_0 = 1 and odd coefficients held at zero. Even instances of the five-term
// recurrence generate the even chain (recc1); odd instances, with the odd slots
// zeroed, collapse to a second expression for the top even coefficient (recc2,
// the whole w-channel divided by w). Demanding the two agree at level n fixes
// k = sqrt((n+2)(2n+5)/2), and at even n = 2p that is the quantized k_p.
#pragma once

#include <complex>
#include <vector>

#include "tmoyal/check.hpp"

namespace tmoyal {

struct ResonanceError : std::runtime_error {
    int level;
    ResonanceError(int n, const std::string& msg) : std::runtime_error(msg), level(n) {}
};

struct SeriesTrace {
    double theta = 1.0;
    double E = 0.0;
    double k = 0.0;
    double alpha = 0.0;  // constraint angle
    double w = 0.0;      // omega_1 / cos(alpha); the twist enters only through this
    std::vector<std::complex<double>> coeffs;     // a_0 .. a_nmax, odd entries zero
    std::vector<double> recc2_residuals;          // |recc2 LHS| per even level n
    std::vector<double> odd_channel;              // would-be odd coefficients (prop. to w)

    double max_recc2_residual() const {
        double m = 0.0;
        for (double r : recc2_residuals) m = std::max(m, r);
        return m;
    }
    double max_odd_channel() const {
        double m = 0.0;
        for (double r : odd_channel) m = std::max(m, std::abs(r));
        return m;
    }
};

SeriesTrace make_trace(double theta, double E, double k, double w, int n_max = 40);

// One instance of the full five-term recurrence on the stored coefficients.
// Even n: solves for a_{n+2} (the recc1 content plus the zeroed odd slots).
// Odd n: with odd entries held at zero the instance reduces to the w-channel;
// the returned value is the alternative expression for a_{n+1}.
struct StepResult {
    std::complex<double> value;
    int solved_index;   // n+2 for even n, n+1 for odd n
    bool resonance = false;
};
StepResult full_recurrence_step(const SeriesTrace& t, int n);

// Both candidate values of a_{n+2} at even n, their gap, and the k that would
// make them agree.
struct SplitStep {
    std::complex<double> via_recc1;
    std::complex<double> via_recc2;
    double gap;
    double k_equivalence;  // sqrt((n+2)(2n+5)/2)
};
SplitStep split_recurrences(const SeriesTrace& t, int n);

// k_p for p = 0..p_max from the per-level equivalence condition; integer
// arithmetic inside the radical, so it matches sqrt((p+1)(4p+5)) exactly.
std::vector<double> discover_kp(int p_max);

// Generates the even chain by recc1 at k = quantized k_p and the given E,
// then evaluates the recc2 residual on it per level. The residual vanishes at
// the trace's own level n = 2p by construction and is generally nonzero
// elsewhere; the full-recurrence residual equals |w| times it.
SeriesTrace series_consistency_report(double theta, double E, int p, int n_max, double w);

}  // namespace tmoyal
