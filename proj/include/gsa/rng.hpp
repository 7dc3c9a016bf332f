#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace gsa {

/// Finalizer of the splitmix64 generator (Vigna). Bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Derives a sub-stream seed from a master seed and a path of integer tags.
///
/// Every sampling task owns a tag path (experiment id, replicate index, ...),
/// so parallel tasks draw from disjoint generators with no shared state and
/// results do not depend on scheduling order. The split is a pure function:
/// each tag is folded into the state through the splitmix64 finalizer.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> tags) noexcept {
    std::uint64_t h = mix64(master + 0x9e3779b97f4a7c15ull);
    for (std::uint64_t t : tags) {
        h = mix64(h ^ (t + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2)));
    }
    return h;
}

/// xoshiro256++ generator, seeded through splitmix64.
///
/// Chosen over std::mt19937_64 because its output sequence is fully specified
/// here, keeping results bit-identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept {
        std::uint64_t sm = seed;
        for (auto& word : state_) {
            sm += 0x9e3779b97f4a7c15ull;
            word = mix64(sm);
        }
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double strictly inside (0, 1): top 53 bits, offset by half an ulp.
    /// The open interval keeps quantile transforms away from infinite tails.
    double uniform01() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound). Lemire's multiply-shift rejection method.
    std::uint64_t uniform_below(std::uint64_t bound) noexcept {
        __uint128_t m = static_cast<__uint128_t>(next_u64()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (lo < threshold) {
                m = static_cast<__uint128_t>(next_u64()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

/// Fisher-Yates shuffle driven by Rng, so permutations are reproducible
/// independent of the standard library's std::shuffle implementation.
template <typename T>
void shuffle(std::span<T> values, Rng& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.uniform_below(i));
        std::swap(values[i - 1], values[j]);
    }
}

/// n resampled row indices in [0, n), drawn with replacement.
inline std::vector<std::size_t> resample_indices(std::size_t n, Rng& rng) {
    std::vector<std::size_t> rows(n);
    for (auto& r : rows) r = static_cast<std::size_t>(rng.uniform_below(n));
    return rows;
}

}  // namespace gsa
