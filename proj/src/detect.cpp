#include "cycloscan/detect.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cycloscan/ap.hpp"
#include "cycloscan/parallel.hpp"
#include "cycloscan/rng.hpp"

namespace cycloscan::detect {

namespace {

constexpr double kDegenerateHalfWidth = 1e-12;

void validate_config(const ScanConfig& cfg, std::size_t n) {
    if (cfg.lambda_grid.empty()) throw std::invalid_argument("empty frequency grid");
    if (!std::is_sorted(cfg.lambda_grid.begin(), cfg.lambda_grid.end())) {
        throw std::invalid_argument("frequency grid must be sorted");
    }
    if (cfg.lambda_grid.front() < 0.0 ||
        cfg.lambda_grid.back() > std::numbers::pi + 1e-12) {
        throw std::invalid_argument("frequency grid must lie in [0, pi]");
    }
    if (!(cfg.alpha_lo > 0.0 && cfg.alpha_hi < 1.0 && cfg.alpha_lo < cfg.alpha_hi)) {
        throw std::invalid_argument("quantile orders must satisfy 0 < lo < hi < 1");
    }
    if (cfg.replicates < 1) throw std::invalid_argument("replicate count must be at least 1");
    const auto abs_tau = static_cast<std::size_t>(std::abs(cfg.tau));
    if (abs_tau >= n) throw std::invalid_argument("lag exceeds sample");
    if (cfg.block_length > n - abs_tau) {
        throw std::invalid_argument("block exceeds effective sample");
    }
}

Band make_band(std::span<const double> samples, double lo_p, double hi_p, double scale,
               bool& degenerate) {
    Band band{mbb::quantile(samples, lo_p) * scale, mbb::quantile(samples, hi_p) * scale};
    degenerate = band.hi == band.lo;
    if (degenerate) {
        band.lo -= kDegenerateHalfWidth;
        band.hi += kDegenerateHalfWidth;
    }
    return band;
}

bool outside(double v, const Band& band) { return v < band.lo || v > band.hi; }

/// Exceedance of a widened band: each endpoint is scaled by `factor` away
/// from zero, matching how the root's quantiles spread about their center.
bool outside_widened(double v, const Band& band, double factor) {
    return v < factor * band.lo || v > factor * band.hi;
}

}  // namespace

std::vector<double> uniform_grid(std::size_t points) {
    if (points < 2) throw std::invalid_argument("grid needs at least two points");
    std::vector<double> grid(points);
    for (std::size_t j = 0; j < points; ++j) {
        grid[j] = static_cast<double>(j) * std::numbers::pi /
                  static_cast<double>(points - 1);
    }
    return grid;
}

ScanResult frequency_scan(std::span<const double> x, const ScanConfig& cfg) {
    validate_config(cfg, x.size());

    ScanResult result;
    result.tau = cfg.tau;
    result.n = x.size();
    result.alpha_lo = cfg.alpha_lo;
    result.alpha_hi = cfg.alpha_hi;
    result.points.resize(cfg.lambda_grid.size());

    parallel_for(cfg.lambda_grid.size(), [&](std::size_t g) {
        const double lambda = cfg.lambda_grid[g];
        mbb::BootstrapPlan plan{cfg.block_length, cfg.replicates,
                                rng::derive_stream(cfg.seed, g)};
        const auto est = cyclic::cyclic_estimate(x, lambda, cfg.tau);
        const auto dist = cyclic::cyclic_root_distribution(x, lambda, cfg.tau, plan);
        const double kb = static_cast<double>(dist.meta.num_blocks) *
                          static_cast<double>(dist.meta.block_length);
        const double unscale = 1.0 / std::sqrt(kb);

        ScanPoint& pt = result.points[g];
        pt.lambda = lambda;
        pt.estimate = est.value;
        pt.re_band = make_band(mbb::real_parts(dist), cfg.alpha_lo, cfg.alpha_hi, unscale,
                               pt.re_degenerate);
        pt.im_band = make_band(mbb::imag_parts(dist), cfg.alpha_lo, cfg.alpha_hi, unscale,
                               pt.im_degenerate);
        pt.reject = outside(pt.estimate.real(), pt.re_band) ||
                    outside(pt.estimate.imag(), pt.im_band);
    });
    return result;
}

std::vector<SignificantFrequency> significant_frequencies(const ScanResult& scan,
                                                          double prominence) {
    const auto& pts = scan.points;
    const std::size_t n = pts.size();
    std::vector<SignificantFrequency> out;

    auto magnitude = [&](std::size_t i) { return std::abs(pts[i].estimate); };
    auto prominent = [&](std::size_t i) {
        const bool re = !pts[i].re_degenerate &&
                        outside_widened(pts[i].estimate.real(), pts[i].re_band, prominence);
        const bool im = !pts[i].im_degenerate &&
                        outside_widened(pts[i].estimate.imag(), pts[i].im_band, prominence);
        return re || im;
    };

    std::size_t i = 0;
    while (i < n) {
        if (!pts[i].reject) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n && pts[j + 1].reject) ++j;

        bool qualifies = j > i;
        if (!qualifies) {
            // isolated point: must be a strict local |estimate| maximum
            qualifies = true;
            const std::size_t lo = i >= 2 ? i - 2 : 0;
            const std::size_t hi = std::min(n - 1, i + 2);
            for (std::size_t q = lo; q <= hi && qualifies; ++q) {
                if (q != i && magnitude(q) >= magnitude(i)) qualifies = false;
            }
        }
        if (qualifies) {
            std::size_t peak = i;
            for (std::size_t q = i + 1; q <= j; ++q) {
                if (magnitude(q) > magnitude(peak)) peak = q;
            }
            if (prominent(peak)) {
                out.push_back(SignificantFrequency{pts[peak].lambda, magnitude(peak), i, j});
            }
        }
        i = j + 1;
    }
    return out;
}

std::optional<int> infer_period(std::span<const double> lambdas, double tol, int t_max) {
    if (t_max < 1) throw std::invalid_argument("period bound must be at least 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (lambdas.empty()) return std::nullopt;

    auto circular_dist = [](double a, double b) {
        double d = std::abs(a - b);
        d = std::fmod(d, ap::kTwoPi);
        return std::min(d, ap::kTwoPi - d);
    };

    for (int period = 1; period <= t_max; ++period) {
        bool all_covered = true;
        for (double lambda : lambdas) {
            bool covered = false;
            for (int k = 0; k < period && !covered; ++k) {
                const double target = ap::kTwoPi * static_cast<double>(k) /
                                      static_cast<double>(period);
                covered = circular_dist(lambda, target) <= tol;
            }
            if (!covered) {
                all_covered = false;
                break;
            }
        }
        if (all_covered) return period;
    }
    return std::nullopt;
}

StationarityVerdict stationarity_diagnostic(std::span<const double> x,
                                            std::span<const std::int64_t> taus,
                                            const ScanConfig& config_template) {
    if (taus.empty()) throw std::invalid_argument("no lags given");

    StationarityVerdict verdict;
    for (std::size_t i = 0; i < taus.size(); ++i) {
        ScanConfig cfg = config_template;
        cfg.tau = taus[i];
        cfg.seed = rng::derive_stream(config_template.seed, i);
        const auto scan = frequency_scan(x, cfg);
        std::vector<double> nonzero;
        for (const auto& sig : significant_frequencies(scan)) {
            if (sig.first_index == 0) continue;  // cluster touching lambda = 0
            nonzero.push_back(sig.lambda);
        }
        if (!nonzero.empty()) verdict.no_evidence = false;
        verdict.frequencies_by_tau[taus[i]] = std::move(nonzero);
    }
    return verdict;
}

}  // namespace cycloscan::detect
