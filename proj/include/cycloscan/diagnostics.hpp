#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cycloscan/sim.hpp"

namespace cycloscan::diag {

/// Two-sample Kolmogorov-Smirnov statistic: the largest gap between the two
/// empirical distribution functions over the pooled sample points.
/// Throws std::invalid_argument when either sample is empty.
[[nodiscard]] double ks_distance(std::span<const double> a, std::span<const double> b);

struct ConsistencyRow {
    std::size_t n = 0;
    std::size_t block_length = 0;
    double ks = 0.0;
    std::size_t bootstrap_replicates = 0;
    std::size_t truth_replicates = 0;
};

/// Per sample size n: KS distance between the bootstrap root sample of one
/// pilot series (B replicates, b = ceil(n^q)) and a Monte Carlo sample of the
/// true root sqrt(n) * (mean - mu) over R independent series. mu comes from
/// the model, never from data. Distances should fall (up to Monte Carlo
/// slack) as n grows.
struct ConsistencyReport {
    double block_exponent = 0.0;
    std::uint64_t seed = 0;
    std::vector<ConsistencyRow> rows;
};

[[nodiscard]] ConsistencyReport consistency_check(const sim::Model& model,
                                                  std::span<const std::size_t> n_list,
                                                  double block_exponent, std::size_t B,
                                                  std::size_t R, std::uint64_t seed);

/// Start-uniformity of windowed variances: across R independent series,
/// the sample variance of (1/sqrt(b)) * (X_s + ... + X_{s+b-1}) for every
/// start s, against sigma2_ref (the model's closed-form limit when known,
/// otherwise the profile's own mean).
struct BlockVarianceProfile {
    double sup_dev = 0.0;
    double sigma2_ref = 0.0;
    std::vector<double> per_start;
};

[[nodiscard]] BlockVarianceProfile block_variance_profile(const sim::Model& model,
                                                          std::size_t n, std::size_t b,
                                                          std::size_t R, std::uint64_t seed);

}  // namespace cycloscan::diag
