#pragma once

#include <cstdint>
#include <string_view>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace longview {

// Deterministic 64-bit generator (splitmix64 core). Distributions are
// implemented by hand so streams are bit-stable across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        // Rejection sampling to avoid modulo bias.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    Eigen::Vector3d unit_vector() {
        // Marsaglia: uniform on the sphere.
        double u = 2.0 * uniform() - 1.0;
        double theta = 2.0 * M_PI * uniform();
        double r = std::sqrt(std::max(0.0, 1.0 - u * u));
        return {r * std::cos(theta), r * std::sin(theta), u};
    }

    Eigen::Quaterniond uniform_quaternion() {
        // Shoemake's subgroup algorithm.
        double u1 = uniform(), u2 = uniform(), u3 = uniform();
        double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
        return Eigen::Quaterniond(a * std::sin(2 * M_PI * u2), a * std::cos(2 * M_PI * u2),
                                  b * std::sin(2 * M_PI * u3), b * std::cos(2 * M_PI * u3))
            .normalized();
    }

private:
    std::uint64_t state_;
};

// Derives an independent stream from a root seed, a purpose tag, and an index
// (layer number, object index, ...). FNV-1a over the tag keeps streams apart.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view tag, std::uint64_t index = 0) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    h ^= root + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
    return h;
}

} // namespace longview
