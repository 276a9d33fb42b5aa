#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "cycloscan/mbb.hpp"

namespace cycloscan::cyclic {

/// Sample cyclic autocorrelation at frequency lambda and lag tau.
struct CyclicEstimate {
    double lambda = 0.0;               // wrapped into [0, 2*pi)
    std::int64_t tau = 0;
    std::complex<double> value{0.0, 0.0};
    std::size_t n = 0;                 // sample size the estimate used
};

/// Demodulated product series W_t = X_t * X_{t+tau} * exp(-i*lambda*t) for
/// t = 1..n-tau. Requires 0 <= tau < n; throws std::invalid_argument
/// otherwise ("lag exceeds sample" when tau >= n).
[[nodiscard]] std::vector<std::complex<double>> w_series(std::span<const double> x,
                                                         double lambda, std::int64_t tau);

/// Mean of the demodulated products over the n - |tau| valid time points:
///   (1/(n-|tau|)) * sum_{t=1-min(tau,0)}^{n-max(tau,0)} X_t X_{t+tau} e^{-i*lambda*t}.
/// Negative lags use the shifted summation range directly. |tau| >= n throws.
[[nodiscard]] CyclicEstimate cyclic_estimate(std::span<const double> x, double lambda,
                                             std::int64_t tau);

/// Block bootstrap of the estimator: resamples blocks of the demodulated
/// product series (real and imaginary parts move together) and returns draws
/// of sqrt(k*b) * (resampled mean - mbb_center). The effective length is
/// m = n - |tau|; requires plan.block_length <= m.
[[nodiscard]] mbb::ComplexBootstrapDistribution cyclic_root_distribution(
    std::span<const double> x, double lambda, std::int64_t tau,
    const mbb::BootstrapPlan& plan);

/// Checks the identity estimate(2*pi - lambda) == conj(estimate(lambda)),
/// which holds for every real-valued series and lets a scan cover [0, pi]
/// only. Comparison within `tol` in absolute value.
[[nodiscard]] bool conj_symmetry_holds(std::span<const double> x, double lambda,
                                       std::int64_t tau, double tol = 1e-10);

}  // namespace cycloscan::cyclic
