#pragma once

#include <cstdint>
#include <cmath>

namespace fblab {

inline std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Per-stream RNG keyed by (master seed, stream index). Each Monte Carlo walk
// owns stream index = walk id, so results do not depend on execution order
// or thread count. xoshiro256** core, splitmix64 seeding.
class StreamRng {
public:
    StreamRng(std::uint64_t master_seed, std::uint64_t stream)
    {
        std::uint64_t x = master_seed ^ (0xD2B74407B1CE6E93ull * (stream + 1));
        for (auto& w : s_) w = splitmix64(x);
    }

    std::uint64_t next_u64()
    {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0,1).
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    // Uniform direction on the unit sphere.
    void next_unit_vector(double& x, double& y, double& z)
    {
        const double u = 2.0 * next_double() - 1.0;   // cos(polar)
        const double phi = 6.283185307179586477 * next_double();
        const double s = std::sqrt(std::fmax(0.0, 1.0 - u * u));
        x = s * std::cos(phi);
        y = s * std::sin(phi);
        z = u;
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
    std::uint64_t s_[4];
};

} // namespace fblab
