#include "cycloscan/mbb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cycloscan/parallel.hpp"

namespace cycloscan::mbb {

namespace {

void check_block(std::size_t n, std::size_t b) {
    if (b < 1) throw std::invalid_argument("block length must be at least 1");
    if (b > n) throw std::invalid_argument("block length exceeds sample length");
}

template <typename T>
std::vector<T> block_sums_impl(std::span<const T> x, std::size_t b) {
    check_block(x.size(), b);
    std::vector<T> sums(x.size() - b + 1);
    for (std::size_t t = 0; t < sums.size(); ++t) {
        T acc{};
        for (std::size_t i = 0; i < b; ++i) acc += x[t + i];
        sums[t] = acc;
    }
    return sums;
}

/// Mean of the block sums, accumulated as an offset from the first sum so a
/// constant input reproduces its block sum bit-exactly.
template <typename T>
T mean_block_sum(const std::vector<T>& sums) {
    T acc{};
    for (const T& z : sums) acc += z - sums.front();
    return sums.front() + acc / static_cast<double>(sums.size());
}

template <typename T>
std::vector<T> resample_impl(std::span<const T> x, std::size_t b, rng::Rng& rng) {
    const std::size_t k = num_blocks(x.size(), b);
    const std::size_t starts = x.size() - b + 1;
    std::vector<T> out;
    out.reserve(k * b);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t s = rng.index(starts);
        out.insert(out.end(), x.begin() + s, x.begin() + s + b);
    }
    return out;
}

template <typename T>
Distribution<T> root_distribution_impl(std::span<const T> x, const BootstrapPlan& plan,
                                       std::string statistic) {
    if (plan.replicates < 1) throw std::invalid_argument("replicate count must be at least 1");
    const std::size_t k = num_blocks(x.size(), plan.block_length);
    const std::vector<T> sums = block_sums_impl(x, plan.block_length);
    const T center_sum = mean_block_sum(sums);

    std::vector<T> centered(sums.size());
    for (std::size_t t = 0; t < sums.size(); ++t) centered[t] = sums[t] - center_sum;

    const double kb = static_cast<double>(k) * static_cast<double>(plan.block_length);
    const double scale = std::sqrt(kb) / kb;

    Distribution<T> dist;
    dist.samples.resize(plan.replicates);
    dist.meta = DistributionMeta{x.size(), plan.block_length, k, plan.seed,
                                 std::move(statistic)};
    parallel_for(plan.replicates, [&](std::size_t r) {
        rng::Rng rep(rng::derive_stream(plan.seed, r));
        T acc{};
        for (std::size_t j = 0; j < k; ++j) acc += centered[rep.index(centered.size())];
        dist.samples[r] = acc * scale;
    });
    return dist;
}

}  // namespace

std::size_t num_blocks(std::size_t n, std::size_t b) {
    check_block(n, b);
    return n / b;
}

std::vector<double> block_sums(std::span<const double> x, std::size_t b) {
    return block_sums_impl(x, b);
}

std::vector<std::complex<double>> block_sums(std::span<const std::complex<double>> x,
                                             std::size_t b) {
    return block_sums_impl(x, b);
}

std::vector<double> resample(std::span<const double> x, std::size_t b, rng::Rng& rng) {
    return resample_impl(x, b, rng);
}

std::vector<std::complex<double>> resample(std::span<const std::complex<double>> x,
                                           std::size_t b, rng::Rng& rng) {
    return resample_impl(x, b, rng);
}

double mbb_center(std::span<const double> x, std::size_t b) {
    const auto sums = block_sums_impl(x, b);
    return mean_block_sum(sums) / static_cast<double>(b);
}

std::complex<double> mbb_center(std::span<const std::complex<double>> x, std::size_t b) {
    const auto sums = block_sums_impl(x, b);
    return mean_block_sum(sums) / static_cast<double>(b);
}

BootstrapDistribution root_distribution(std::span<const double> x, const BootstrapPlan& plan) {
    return root_distribution_impl(x, plan, "mean");
}

ComplexBootstrapDistribution root_distribution(std::span<const std::complex<double>> x,
                                               const BootstrapPlan& plan) {
    return root_distribution_impl(x, plan, "mean");
}

double quantile(std::span<const double> samples, double p) {
    if (samples.empty()) throw std::invalid_argument("empty sample");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("quantile order must lie in (0, 1)");
    const auto count = static_cast<double>(samples.size());
    // small slack absorbs binary rounding of p * B when the product is integral
    auto rank = static_cast<std::size_t>(std::ceil(p * count - 1e-9));
    rank = std::clamp<std::size_t>(rank, 1, samples.size());
    std::vector<double> work(samples.begin(), samples.end());
    std::nth_element(work.begin(), work.begin() + (rank - 1), work.end());
    return work[rank - 1];
}

double quantile(const BootstrapDistribution& dist, double p) {
    return quantile(std::span<const double>(dist.samples), p);
}

std::vector<double> real_parts(const ComplexBootstrapDistribution& dist) {
    std::vector<double> out(dist.samples.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = dist.samples[i].real();
    return out;
}

std::vector<double> imag_parts(const ComplexBootstrapDistribution& dist) {
    std::vector<double> out(dist.samples.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = dist.samples[i].imag();
    return out;
}

}  // namespace cycloscan::mbb
