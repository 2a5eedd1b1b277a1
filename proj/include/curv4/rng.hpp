#pragma once

#include <cmath>
#include <cstdint>

#include "curv4/types.hpp"

namespace curv4 {

// Deterministic splitmix64 generator. std::mt19937 with the standard
// distributions is not bit-portable across library implementations; this
// generator reproduces identical streams from the seed alone on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal (Box-Muller, one value cached).
    double normal() {
        if (has_cache_) {
            has_cache_ = false;
            return cache_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cache_ = r * std::sin(a);
        has_cache_ = true;
        return r * std::cos(a);
    }

private:
    std::uint64_t state_;
    double cache_ = 0.0;
    bool has_cache_ = false;
};

// Counter-based sub-stream: sample i of a scan gets Rng(derive_stream(seed, i)),
// so results merged over any partition of samples are order-independent.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    mix.next_u64();
    return mix.next_u64();
}

// Haar-distributed element of SO(4): Gaussian matrix, QR orthonormalization
// with the R-diagonal sign fix, then a column negation if det = -1.
Mat4 haar_so4(Rng& rng);

} // namespace curv4
