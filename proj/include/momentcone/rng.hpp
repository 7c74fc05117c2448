#pragma once

#include <cstdint>

#include "momentcone/scalar.hpp"

namespace momentcone::exactla {

/// splitmix64 stream; deterministic across platforms.  Derived streams make
/// per-(k, trial) sampling reproducible regardless of evaluation order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static Rng derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
        Rng r(seed);
        r.state_ ^= 0x9e3779b97f4a7c15ULL * (stream + 1);
        r.state_ += 0xbf58476d1ce4e5b9ULL * (index + 1);
        r.next();
        return r;
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    /// Random rational with numerator in [lo, hi] and denominator in [1, dmax].
    Scalar rational(long lo, long hi, long dmax) {
        return Scalar(mpq_class(uniform(lo, hi), uniform(1, dmax)));
    }

private:
    std::uint64_t state_;
};

}  // namespace momentcone::exactla
