#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace symtrack {

// Deterministic splittable RNG. A single master seed fans out into
// independent named streams (data workers, mask draws, weight init, ...)
// so that adding a consumer never perturbs the draws of another.
//
// The core generator is SplitMix64; children are derived by hashing the
// parent's base seed with a tag, so a split is independent of how much
// the parent has already been consumed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : base_(seed), state_(seed) {}

    Rng split(std::string_view tag) const {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ base_;
        for (char c : tag) {
            h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
            h *= 0x100000001b3ULL;
        }
        return Rng(mix(h));
    }

    Rng split(std::uint64_t salt) const {
        return Rng(mix(base_ ^ (salt * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL)));
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). Modulo bias is negligible for n << 2^64.
    int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

    bool coin() { return (next_u64() & 1ULL) != 0; }

    // Box-Muller; one value per call so consumption stays predictable.
    double normal() {
        double u1 = 1.0 - uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    std::uint64_t base_seed() const { return base_; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t base_;
    std::uint64_t state_;
};

} // namespace symtrack
