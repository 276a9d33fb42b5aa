#include "cycloscan/cyclic.hpp"

#include <cmath>
#include <stdexcept>

#include "cycloscan/ap.hpp"

namespace cycloscan::cyclic {

namespace {

/// Products X_t * X_{t+tau} * exp(-i*lambda*t) over the valid index range,
/// for any sign of tau. The result has n - |tau| entries in time order.
std::vector<std::complex<double>> demodulated_products(std::span<const double> x,
                                                       double lambda, std::int64_t tau) {
    const auto n = static_cast<std::int64_t>(x.size());
    if (n == 0) throw std::invalid_argument("empty series");
    if (std::abs(tau) >= n) throw std::invalid_argument("lag exceeds sample");

    const std::int64_t first = 1 - std::min<std::int64_t>(tau, 0);
    const std::int64_t last = n - std::max<std::int64_t>(tau, 0);
    std::vector<std::complex<double>> w;
    w.reserve(static_cast<std::size_t>(last - first + 1));
    for (std::int64_t t = first; t <= last; ++t) {
        const double prod = x[static_cast<std::size_t>(t - 1)] *
                            x[static_cast<std::size_t>(t + tau - 1)];
        w.push_back(prod * std::polar(1.0, -lambda * static_cast<double>(t)));
    }
    return w;
}

}  // namespace

std::vector<std::complex<double>> w_series(std::span<const double> x, double lambda,
                                           std::int64_t tau) {
    if (tau < 0) throw std::invalid_argument("w_series requires a nonnegative lag");
    return demodulated_products(x, lambda, tau);
}

CyclicEstimate cyclic_estimate(std::span<const double> x, double lambda, std::int64_t tau) {
    const auto w = demodulated_products(x, lambda, tau);
    std::complex<double> acc{0.0, 0.0};
    for (const auto& v : w) acc += v;
    CyclicEstimate est;
    est.lambda = ap::wrap_frequency(lambda);
    est.tau = tau;
    est.value = acc / static_cast<double>(w.size());
    est.n = x.size();
    return est;
}

mbb::ComplexBootstrapDistribution cyclic_root_distribution(std::span<const double> x,
                                                           double lambda, std::int64_t tau,
                                                           const mbb::BootstrapPlan& plan) {
    const auto w = demodulated_products(x, lambda, tau);
    if (plan.block_length > w.size()) {
        throw std::invalid_argument("block exceeds effective sample");
    }
    auto dist = mbb::root_distribution(std::span<const std::complex<double>>(w), plan);
    dist.meta.statistic = "cyclic-mean";
    return dist;
}

bool conj_symmetry_holds(std::span<const double> x, double lambda, std::int64_t tau,
                         double tol) {
    const auto lhs = cyclic_estimate(x, ap::kTwoPi - lambda, tau).value;
    const auto rhs = std::conj(cyclic_estimate(x, lambda, tau).value);
    return std::abs(lhs - rhs) <= tol;
}

}  // namespace cycloscan::cyclic
