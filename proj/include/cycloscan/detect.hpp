#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cycloscan/cyclic.hpp"

namespace cycloscan::detect {

/// Frequency scan setup. The grid lives in [0, pi]; the upper half of the
/// frequency circle is determined by conjugate symmetry of the estimator on
/// real data. Grid point g runs its bootstrap on derive_stream(seed, g), so
/// points are independent and may be evaluated in parallel.
struct ScanConfig {
    std::int64_t tau = 1;
    std::vector<double> lambda_grid;
    std::size_t block_length = 30;
    std::size_t replicates = 500;
    double alpha_lo = 0.05;
    double alpha_hi = 0.95;
    std::uint64_t seed = 0;
};

struct Band {
    double lo = 0.0;
    double hi = 0.0;
};

/// One scanned frequency: the estimate against the bootstrap band of the
/// centered, un-rescaled root (resampled mean minus its conditional mean).
/// A degenerate component is one whose bootstrap spread was exactly zero
/// before the +-1e-12 widening; its band still drives the reject flag but
/// carries no calibration information.
struct ScanPoint {
    double lambda = 0.0;
    std::complex<double> estimate{0.0, 0.0};
    Band re_band;
    Band im_band;
    bool re_degenerate = false;
    bool im_degenerate = false;
    bool reject = false;
};

struct ScanResult {
    std::int64_t tau = 0;
    std::size_t n = 0;
    double alpha_lo = 0.05;
    double alpha_hi = 0.95;
    std::vector<ScanPoint> points;
};

/// Evenly spaced grid of `points` frequencies covering [0, pi].
[[nodiscard]] std::vector<double> uniform_grid(std::size_t points);

/// Tests a(lambda, tau) = 0 pointwise over the grid: at each lambda the
/// estimate is compared componentwise against the [alpha_lo, alpha_hi]
/// bootstrap quantile band of the centered root. Zero-spread bands widen to
/// +-1e-12 so a degenerate series is never rejected at its own value.
[[nodiscard]] ScanResult frequency_scan(std::span<const double> x, const ScanConfig& config);

/// A reported frequency cluster after the isolated-spike filter.
struct SignificantFrequency {
    double lambda = 0.0;     // grid frequency of the cluster peak
    double magnitude = 0.0;  // |estimate| at the peak
    std::size_t first_index = 0;
    std::size_t last_index = 0;
};

/// Family-wise widening factor used by significant_frequencies, calibrated on
/// null scans so that a 151-point grid is read as spike-free in the large
/// majority of runs while strong cyclic peaks survive.
inline constexpr double kDefaultProminence = 2.6;

/// Isolated-spike filter over a scan. Pointwise alpha_lo/alpha_hi bands
/// reject somewhere on almost every 151-point scan, so verdict-level
/// significance demands more than a bare band exit:
///   1. rejected points are grouped into maximal runs; a run qualifies when
///      it spans >= 2 adjacent points, or its single point is a strict local
///      maximum of |estimate| among the two nearest neighbours on each side;
///   2. the run's peak must stay outside its band after the band is widened
///      by `prominence`, the family-wise margin for the grid size, in a
///      component whose bootstrap spread was not degenerate (a zero-spread
///      band cannot grade an exceedance, so deterministic inputs carry no
///      spike evidence).
/// The reported frequency of a qualifying run is its peak-|estimate| point.
[[nodiscard]] std::vector<SignificantFrequency> significant_frequencies(
    const ScanResult& scan, double prominence = kDefaultProminence);

/// Smallest period T in [1, t_max] whose harmonic set {2*pi*k/T} covers every
/// input frequency within tol (circular distance); nullopt when no period
/// fits or the input is empty.
[[nodiscard]] std::optional<int> infer_period(std::span<const double> lambdas, double tol,
                                              int t_max);

struct StationarityVerdict {
    bool no_evidence = true;
    // tau -> significant nonzero frequencies (lambda = 0 cluster excluded)
    std::map<std::int64_t, std::vector<double>> frequencies_by_tau;
};

/// Runs frequency_scan at each lag with a per-lag derived seed and reports
/// significant nonzero frequencies. The cluster containing the lambda = 0
/// grid point never counts as evidence: the lag-tau mean autocovariance is
/// nonzero for any non-degenerate series, stationary or not.
[[nodiscard]] StationarityVerdict stationarity_diagnostic(std::span<const double> x,
                                                          std::span<const std::int64_t> taus,
                                                          const ScanConfig& config_template);

}  // namespace cycloscan::detect
