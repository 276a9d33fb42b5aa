#include "cycloscan/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cycloscan/mbb.hpp"
#include "cycloscan/parallel.hpp"
#include "cycloscan/rng.hpp"

namespace cycloscan::diag {

double ks_distance(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("empty sample");
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());

    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < sa.size() && j < sb.size()) {
        const double v = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] <= v) ++i;
        while (j < sb.size() && sb[j] <= v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    return d;
}

ConsistencyReport consistency_check(const sim::Model& model,
                                    std::span<const std::size_t> n_list,
                                    double block_exponent, std::size_t B, std::size_t R,
                                    std::uint64_t seed) {
    if (!(block_exponent > 0.0 && block_exponent < 1.0)) {
        throw std::invalid_argument("block exponent must lie in (0, 1)");
    }
    if (n_list.empty()) throw std::invalid_argument("no sample sizes given");
    if (B < 1 || R < 1) throw std::invalid_argument("replicate counts must be positive");

    const double mu = sim::model_mean(model);
    ConsistencyReport report;
    report.block_exponent = block_exponent;
    report.seed = seed;

    for (std::size_t i = 0; i < n_list.size(); ++i) {
        const std::size_t n = n_list[i];
        if (n < 2) throw std::invalid_argument("sample size must be at least 2");
        const auto b = static_cast<std::size_t>(
            std::ceil(std::pow(static_cast<double>(n), block_exponent)));

        const auto pilot = sim::generate(model, n, rng::derive_stream(seed, 3 * i));
        mbb::BootstrapPlan plan{b, B, rng::derive_stream(seed, 3 * i + 1)};
        const auto boot = mbb::root_distribution(std::span<const double>(pilot), plan);

        std::vector<double> truth(R);
        const std::uint64_t truth_seed = rng::derive_stream(seed, 3 * i + 2);
        parallel_for(R, [&](std::size_t r) {
            const auto series = sim::generate(model, n, rng::derive_stream(truth_seed, r));
            double mean = 0.0;
            for (double v : series) mean += v;
            mean /= static_cast<double>(n);
            truth[r] = std::sqrt(static_cast<double>(n)) * (mean - mu);
        });

        report.rows.push_back(ConsistencyRow{
            n, b, ks_distance(boot.samples, truth), B, R});
    }
    return report;
}

BlockVarianceProfile block_variance_profile(const sim::Model& model, std::size_t n,
                                            std::size_t b, std::size_t R,
                                            std::uint64_t seed) {
    if (R < 2) throw std::invalid_argument("at least two replicates required");
    if (b < 1 || b > n) throw std::invalid_argument("block length must lie in [1, n]");

    const std::size_t starts = n - b + 1;
    std::vector<double> acc(starts, 0.0);
    std::vector<double> acc2(starts, 0.0);
    std::vector<double> prefix(n + 1);
    const double scale = 1.0 / std::sqrt(static_cast<double>(b));

    for (std::size_t r = 0; r < R; ++r) {
        const auto series = sim::generate(model, n, rng::derive_stream(seed, r));
        prefix[0] = 0.0;
        for (std::size_t t = 0; t < n; ++t) prefix[t + 1] = prefix[t] + series[t];
        for (std::size_t s = 0; s < starts; ++s) {
            const double w = (prefix[s + b] - prefix[s]) * scale;
            acc[s] += w;
            acc2[s] += w * w;
        }
    }

    BlockVarianceProfile profile;
    profile.per_start.resize(starts);
    const double rn = static_cast<double>(R);
    for (std::size_t s = 0; s < starts; ++s) {
        profile.per_start[s] = (acc2[s] - acc[s] * acc[s] / rn) / (rn - 1.0);
    }

    if (const auto known = sim::model_sigma2(model)) {
        profile.sigma2_ref = *known;
    } else {
        double mean = 0.0;
        for (double v : profile.per_start) mean += v;
        profile.sigma2_ref = mean / static_cast<double>(starts);
    }
    for (double v : profile.per_start) {
        profile.sup_dev = std::max(profile.sup_dev, std::abs(v - profile.sigma2_ref));
    }
    return profile;
}

}  // namespace cycloscan::diag
