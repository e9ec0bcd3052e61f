// rng.hpp - seeded random draws with a stable draw order.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace gradreg {

// Wraps mt19937_64 with hand-rolled uniform/normal transforms so that the
// byte-for-byte output stream depends only on the seed, not on the standard
// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller; draws come in cached pairs.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Inclusive integer range.
    int uniform_int(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(eng_() % span);
    }

    std::uint64_t raw() { return eng_(); }

    // Derives an independent child seed; used to give each sub-generator
    // (phantom, elastic noise, remap noise, ...) its own stream.
    std::uint64_t fork() { return eng_() ^ 0x9e3779b97f4a7c15ull; }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace gradreg
