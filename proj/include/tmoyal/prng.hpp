// Seeded splitmix64 used for every randomized sweep: portable, deterministic,
// and cheap to fork per trial index so parallel sweeps stay reproducible.
#pragma once

#include <cstdint>

#include "tmoyal/rational.hpp"

namespace tmoyal {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // forked stream for trial i of a sweep seeded with `seed`
    static SplitMix64 fork(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        g.next();
        return g;
    }

    double uniform() { return (next() >> 11) * 0x1.0p-53; }  // [0,1)

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    long long integer(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(long long max_num, long long max_den) {
        long long num = integer(-max_num, max_num);
        long long den = integer(1, max_den);
        return Rational(num, den);
    }

    Rational positive_rational(long long max_num, long long max_den) {
        long long num = integer(1, max_num);
        long long den = integer(1, max_den);
        return Rational(num, den);
    }
};

}  // namespace tmoyal
