#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>

namespace cycloscan::rng {

/// SplitMix64 output mixer (Stafford mix 13).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

inline constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

/// Seed for logical stream `stream` under `seed`: the (stream+1)-th output of
/// SplitMix64 seeded with `seed`. Bootstrap replicates, scan grid points and
/// Monte Carlo draws each run on their own stream, so parallel evaluation
/// produces results identical to sequential order.
constexpr std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) noexcept {
    return mix64(seed + kGamma * (stream + 1));
}

/// Counter-based uniform generator (SplitMix64):
///   state_{k+1} = state_k + 0x9e3779b97f4a7c15  (mod 2^64)
///   output_k    = mix64(state_{k+1})
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += kGamma;
        return mix64(state_);
    }

private:
    std::uint64_t state_;
};

/// Seeded random source used by every stochastic routine in the library.
///
/// All draws are fixed transforms of consecutive SplitMix64 outputs, so any
/// reimplementation that reproduces the 64-bit stream reproduces the series:
///   unit():     (next() >> 11) * 2^-53, uniform on [0, 1)
///   gaussian(): Box-Muller, sqrt(-2 ln(1 - u1)) * cos(2 pi u2), where u1 and
///               u2 are two consecutive unit() draws; exactly two 64-bit
///               outputs per gaussian, nothing cached
///   index(m):   floor(unit() * m), uniform on {0, ..., m-1}
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : gen_(seed) {}

    std::uint64_t next_u64() noexcept { return gen_.next(); }

    double unit() noexcept {
        return static_cast<double>(gen_.next() >> 11) * 0x1.0p-53;
    }

    double gaussian() noexcept {
        const double u1 = unit();
        const double u2 = unit();
        return std::sqrt(-2.0 * std::log(1.0 - u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    std::size_t index(std::size_t bound) noexcept {
        const auto raw = static_cast<std::size_t>(unit() * static_cast<double>(bound));
        return raw < bound ? raw : bound - 1;
    }

private:
    SplitMix64 gen_;
};

}  // namespace cycloscan::rng
