#pragma once

#include <cstdint>
#include <utility>

#include "qcorr/types.hpp"

namespace qcorr {

// Deterministic splittable stream: the sequence is a pure function of
// (seed, index), so draws for different indices are independent of each other
// and of evaluation order.  Core mixer is splitmix64.
class RandomStream {
  public:
    RandomStream(std::uint64_t seed, std::uint64_t index)
        : state_(mix(mix(seed ^ 0x8000000000000000ULL) ^
                     index * 0x9E3779B97F4A7C15ULL)) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1); never returns an endpoint.
    double uniform_open() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Uniform on [-1, 1).
    double uniform_symmetric() { return 2.0 * uniform() - 1.0; }

    // Standard normal pair via Box-Muller.
    std::pair<double, double> gaussian_pair() {
        const double u = uniform_open();
        const double v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double t = 2.0 * M_PI * v;
        return {r * std::cos(t), r * std::sin(t)};
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        auto [g0, g1] = gaussian_pair();
        spare_ = g1;
        have_spare_ = true;
        return g0;
    }

    Complex complex_gaussian() {
        auto [re, im] = gaussian_pair();
        return {re, im};
    }

    // Area-uniform point on the unit sphere: cos(theta) uniform on [-1, 1],
    // azimuth uniform on [0, 2*pi).
    Vec3 unit_vector() {
        const double z = uniform_symmetric();
        const double phi = 2.0 * M_PI * uniform();
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {rho * std::cos(phi), rho * std::sin(phi), z};
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace qcorr
