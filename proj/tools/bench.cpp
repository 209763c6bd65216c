// Benchmark comparing the serial reference loops against the OpenMP kernels on
// the two hot sweeps: exact associator trials and finite-difference eigenvalue
// solves. Results from the two policies are asserted identical before timing.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "tmoyal/parallel.hpp"
#include "tmoyal/prng.hpp"
#include "tmoyal/radial.hpp"
#include "tmoyal/star.hpp"

using namespace tmoyal;

namespace {

double now_ms() {
    using clk = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clk::now().time_since_epoch()).count();
}

PolyExact random_poly(SplitMix64& rng, int max_deg) {
    PolyExact p(Basis::cartesian);
    for (int t = 0; t < 6; ++t) {
        int m = static_cast<int>(rng.integer(0, max_deg));
        int n = static_cast<int>(rng.integer(0, max_deg - m));
        p.add_term(m, n, ExactComplex(QSqrt2(rng.rational(9, 4)), QSqrt2(rng.rational(9, 4))));
    }
    return p;
}

// sweep 1: exact associators at omega = 0 over `trials` random triples
std::vector<double> associator_sweep(int trials, ExecPolicy pol) {
    std::vector<double> norms(trials);
    parallel_for(trials, pol, [&](int i) {
        SplitMix64 rng = SplitMix64::fork(42, static_cast<std::uint64_t>(i));
        DeformationParams d(rng.positive_rational(6, 3), Rational(0), Rational(0));
        PolyExact f = random_poly(rng, 6), g = random_poly(rng, 6), h = random_poly(rng, 6);
        norms[i] = associator(f, g, h, d).max_abs_coeff();
    });
    return norms;
}

// sweep 2: FD eigenvalues over a (theta, k) grid
std::vector<double> fd_sweep(int n_points, ExecPolicy pol) {
    const double ks[] = {0.0, 1.0, 2.0, 2.2360679774997896, 4.242640687119285};
    const double thetas[] = {1.0, 2.0};
    std::vector<FDProblem> probs;
    for (double th : thetas)
        for (double k : ks) probs.push_back({th, k, 0.0, n_points, 0.0});
    std::vector<double> out(probs.size() * 4);
    parallel_for(static_cast<int>(probs.size()), pol, [&](int i) {
        auto ev = fd_eigenvalues(probs[i], 4, ExecPolicy::serial);
        for (int n = 0; n < 4; ++n) out[i * 4 + n] = ev[n];
    });
    return out;
}

template <class F>
double timed(F&& fn, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        double t0 = now_ms();
        fn();
        best = std::min(best, now_ms() - t0);
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    int trials = 400, n_points = 3000;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--trials") trials = std::atoi(argv[i + 1]);
        if (flag == "--npoints") n_points = std::atoi(argv[i + 1]);
    }

    std::printf("threads available: %d\n\n", hardware_threads());

    auto a_serial = associator_sweep(trials, ExecPolicy::serial);
    auto a_openmp = associator_sweep(trials, ExecPolicy::openmp);
    if (a_serial != a_openmp) {
        std::fprintf(stderr, "associator sweep: policies disagree\n");
        return 1;
    }
    double t_as = timed([&] { associator_sweep(trials, ExecPolicy::serial); });
    double t_ao = timed([&] { associator_sweep(trials, ExecPolicy::openmp); });

    auto f_serial = fd_sweep(n_points, ExecPolicy::serial);
    auto f_openmp = fd_sweep(n_points, ExecPolicy::openmp);
    if (f_serial != f_openmp) {
        std::fprintf(stderr, "fd sweep: policies disagree\n");
        return 1;
    }
    double t_fs = timed([&] { fd_sweep(n_points, ExecPolicy::serial); });
    double t_fo = timed([&] { fd_sweep(n_points, ExecPolicy::openmp); });

    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial", "openmp", "speedup");
    std::printf("%-28s %8.1fms %8.1fms %7.2fx\n",
                ("associator x" + std::to_string(trials)).c_str(), t_as, t_ao, t_as / t_ao);
    std::printf("%-28s %8.1fms %8.1fms %7.2fx\n",
                ("fd eigensolve n=" + std::to_string(n_points)).c_str(), t_fs, t_fo, t_fs / t_fo);
    std::printf("\noutputs bitwise identical across policies\n");
    return 0;
}
