#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace cycloscan::ap {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Absolute tolerance for treating two frequencies as equal when merging
/// terms (grid-generated frequencies carry rounding noise).
inline constexpr double kFreqTol = 1e-9;

struct Term {
    double lambda = 0.0;                     // frequency in [0, 2*pi)
    std::complex<double> coeff{0.0, 0.0};
};

/// Finite trigonometric polynomial f(t) = sum_j a_j * exp(i * lambda_j * t)
/// evaluated on integer times. Synthesis uses exp(+i*lambda*t), analysis
/// (fourier_coefficient) uses exp(-i*lambda*t); the two conventions round-trip.
///
/// Terms are kept sorted by frequency, wrapped into [0, 2*pi) and merged when
/// closer than kFreqTol. A function is flagged real-valued when the lambda=0
/// coefficient is real and every other term has a conjugate partner at
/// 2*pi - lambda.
class APFunction {
public:
    APFunction() = default;
    explicit APFunction(std::vector<Term> terms);

    static APFunction constant(double value);

    /// amplitude * cos(lambda * t) as a pair of conjugate terms.
    static APFunction cosine(double lambda, double amplitude);

    [[nodiscard]] std::complex<double> eval(std::int64_t t) const;

    /// Real part of eval(); intended for real-valued functions.
    [[nodiscard]] double eval_real(std::int64_t t) const { return eval(t).real(); }

    /// Coefficient at `lambda` (0 when no term lies within kFreqTol of it).
    [[nodiscard]] std::complex<double> coefficient(double lambda) const;

    /// The lambda = 0 coefficient, i.e. the limiting window average.
    [[nodiscard]] std::complex<double> mean() const { return coefficient(0.0); }

    /// Explicit constant C such that every length-n window average deviates
    /// from the lambda=0 coefficient by at most C/n:
    ///   C = sum_{lambda != 0} |a(lambda)| * 2 / |1 - exp(i*lambda)|,
    /// from the closed form of the geometric sum of exp(i*lambda*t).
    [[nodiscard]] double rate_constant() const;

    [[nodiscard]] bool is_real_valued() const { return real_valued_; }
    [[nodiscard]] std::span<const Term> terms() const { return terms_; }
    [[nodiscard]] double l1_norm() const;

private:
    std::vector<Term> terms_;
    bool real_valued_ = true;  // the zero function is real-valued
};

/// Pointwise sum; terms at matching frequencies merge.
[[nodiscard]] APFunction sum(const APFunction& f, const APFunction& g);

/// Pointwise product; term frequencies add modulo 2*pi.
[[nodiscard]] APFunction product(const APFunction& f, const APFunction& g);

/// Window average (1/count) * sum_{j=start}^{start+count-1} samples(j) where
/// samples(j) is the j-th entry under 1-based time indexing.
/// Throws std::invalid_argument on an empty or out-of-range window.
[[nodiscard]] std::complex<double> mean_value_estimate(
    std::span<const std::complex<double>> samples, std::size_t start, std::size_t count);

/// Empirical Fourier coefficient (1/n) * sum_{t=1}^{n} x_t * exp(-i*lambda*t).
/// Throws std::invalid_argument on empty input.
[[nodiscard]] std::complex<double> fourier_coefficient(
    std::span<const std::complex<double>> values, double lambda);
[[nodiscard]] std::complex<double> fourier_coefficient(
    std::span<const double> values, double lambda);

/// Wraps a frequency into [0, 2*pi); values within kFreqTol of 2*pi snap to 0.
[[nodiscard]] double wrap_frequency(double lambda);

}  // namespace cycloscan::ap
