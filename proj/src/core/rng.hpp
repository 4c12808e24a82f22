#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace pod {

// Self-contained PRNG so that results are bit-identical across platforms
// and standard library versions. std::normal_distribution is
// implementation-defined, which would break the byte-identical output
// contract, so uniform and normal draws are generated here explicitly.
//
// Engine: splitmix64-seeded xoshiro256++.

namespace detail {

inline uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace detail

class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : state_) word = detail::splitmix64(sm);
        have_spare_ = false;
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    uint64_t below(uint64_t n) { return n ? next_u64() % n : 0; }

    // Standard normal via Box-Muller (deterministic everywhere).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            const size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t state_[4];
    double spare_ = 0.0;
    bool have_spare_;
};

// Derives an independent stream from the experiment's global seed and a
// stage name, e.g. substream(seed, "synth.patient", 7). Changing the seed
// of one stage never perturbs another.
inline uint64_t substream(uint64_t global_seed, std::string_view name, uint64_t index = 0) {
    uint64_t s = global_seed ^ detail::fnv1a64(name);
    s = detail::splitmix64(s);
    s ^= 0x632be59bd9b4e019ULL * (index + 1);
    return detail::splitmix64(s);
}

inline Rng substream_rng(uint64_t global_seed, std::string_view name, uint64_t index = 0) {
    return Rng(substream(global_seed, name, index));
}

} // namespace pod
