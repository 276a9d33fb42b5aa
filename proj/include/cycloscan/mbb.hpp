#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cycloscan/rng.hpp"

namespace cycloscan::mbb {

/// Resampling parameters: overlapping blocks of length `block_length`,
/// `replicates` Monte Carlo draws, replicate r seeded with
/// derive_stream(seed, r) so replicates are reproducible in any order.
struct BootstrapPlan {
    std::size_t block_length = 30;
    std::size_t replicates = 500;
    std::uint64_t seed = 0;
};

struct DistributionMeta {
    std::size_t n = 0;             // length of the bootstrapped sequence
    std::size_t block_length = 0;  // b
    std::size_t num_blocks = 0;    // k = floor(n / b)
    std::uint64_t seed = 0;
    std::string statistic;
};

/// Empirical sample of a bootstrap root statistic.
template <typename T>
struct Distribution {
    std::vector<T> samples;
    DistributionMeta meta;
};

using BootstrapDistribution = Distribution<double>;
using ComplexBootstrapDistribution = Distribution<std::complex<double>>;

/// k = floor(n / b). When b does not divide n the resampled length is k*b;
/// block sums still run over the full sample. Throws std::invalid_argument
/// unless 1 <= b <= n.
[[nodiscard]] std::size_t num_blocks(std::size_t n, std::size_t b);

/// Overlapping block sums Z_t = x_t + ... + x_{t+b-1} for t = 1..n-b+1.
/// Each sum is accumulated independently so equal inputs give bit-equal sums.
[[nodiscard]] std::vector<double> block_sums(std::span<const double> x, std::size_t b);
[[nodiscard]] std::vector<std::complex<double>> block_sums(
    std::span<const std::complex<double>> x, std::size_t b);

/// Draws k = floor(n/b) block start indices uniformly on {1, ..., n-b+1} and
/// concatenates the blocks; output length is exactly k*b.
[[nodiscard]] std::vector<double> resample(std::span<const double> x, std::size_t b,
                                           rng::Rng& rng);
[[nodiscard]] std::vector<std::complex<double>> resample(
    std::span<const std::complex<double>> x, std::size_t b, rng::Rng& rng);

/// Conditional expectation of the resampled mean, in closed form:
///   (1 / (b * (n-b+1))) * sum_t Z_{t,b},
/// since each resampled block sum is uniform over the n-b+1 block sums.
[[nodiscard]] double mbb_center(std::span<const double> x, std::size_t b);
[[nodiscard]] std::complex<double> mbb_center(std::span<const std::complex<double>> x,
                                              std::size_t b);

/// Monte Carlo sample of the bootstrap root of the mean:
///   sqrt(k*b) * (resampled mean - mbb_center).
/// A constant input yields an exact point mass at zero.
[[nodiscard]] BootstrapDistribution root_distribution(std::span<const double> x,
                                                      const BootstrapPlan& plan);
[[nodiscard]] ComplexBootstrapDistribution root_distribution(
    std::span<const std::complex<double>> x, const BootstrapPlan& plan);

/// Empirical quantile: the ceil(p * B)-th order statistic (1-indexed, no
/// interpolation). Throws std::invalid_argument unless p is in (0, 1) and the
/// sample is nonempty.
[[nodiscard]] double quantile(std::span<const double> samples, double p);
[[nodiscard]] double quantile(const BootstrapDistribution& dist, double p);

[[nodiscard]] std::vector<double> real_parts(const ComplexBootstrapDistribution& dist);
[[nodiscard]] std::vector<double> imag_parts(const ComplexBootstrapDistribution& dist);

}  // namespace cycloscan::mbb
