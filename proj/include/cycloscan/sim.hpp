#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cycloscan/ap.hpp"

namespace cycloscan::sim {

/// First-order autoregression with a periodically varying coefficient:
///   X_t = a_t * X_{t-1} + noise_sd * eps_t,   a_t = mean + amp * sin(freq * t),
/// eps_t i.i.d. standard normal. X is started at 0 at time 1 - burn_in, the
/// first burn_in steps are discarded, and the coefficient phase is tied to the
/// absolute (post-burn-in) time index, so the returned X_t uses a_t verbatim.
struct Par1Spec {
    std::size_t n = 300;
    double coeff_mean = 2.0 / 3.0;
    double coeff_amp = 1.0 / 3.0;
    double coeff_freq = ap::kTwoPi / 3.0;
    double noise_sd = 1.0;
    std::size_t burn_in = 200;
    std::uint64_t seed = 0;
};

/// Coefficient a_t. When freq is (numerically) a rational multiple of 2*pi
/// with denominator up to 1024 the coefficient is read from a precomputed
/// one-period table, which makes the periodicity a_{t+T} = a_t bit-exact.
[[nodiscard]] double par1_coefficient(const Par1Spec& spec, std::int64_t t);

/// Throws std::invalid_argument "explosive coefficient" when
/// sup_t |a_t| >= 1 (evaluated over the coefficient orbit on integer times),
/// and on n = 0 or negative noise_sd.
[[nodiscard]] std::vector<double> generate_par1(const Par1Spec& spec);

enum class BaseKind { IidGaussian, Ar1 };

/// Amplitude-modulated series X_t = f(t) * Z_t with a real-valued envelope f
/// and a stationary base Z (i.i.d. gaussian, or AR(1) with |phi| < 1 run
/// through a fixed 200-step burn-in).
struct ModulatedSpec {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    ap::APFunction envelope;
    BaseKind base = BaseKind::IidGaussian;
    double base_sd = 1.0;
    double base_phi = 0.0;
};

[[nodiscard]] std::vector<double> generate_modulated(const ModulatedSpec& spec);

[[nodiscard]] std::vector<double> generate_iid_gaussian(std::size_t n, double sd,
                                                        std::uint64_t seed);

/// Named generator for the diagnostics harness and the CLI: a model is a
/// distribution over series with a known mean value and, where available in
/// closed form, a known block-variance limit.
struct Model {
    enum class Kind { Zeros, IidGaussian, Par1, Modulated };

    Kind kind = Kind::IidGaussian;
    double sd = 1.0;        // IidGaussian
    Par1Spec par1{};        // Par1 (n and seed overridden per draw)
    ModulatedSpec mod{};    // Modulated (n and seed overridden per draw)

    static Model zeros();
    static Model iid(double sd);
    static Model par1_default();
    static Model modulated_cosine(double env_const, double cos_amp, double cos_freq,
                                  double sd);
};

[[nodiscard]] std::vector<double> generate(const Model& model, std::size_t n,
                                           std::uint64_t seed);

/// Mean value of E X_t; exactly 0 for every model built here.
[[nodiscard]] double model_mean(const Model& model);

/// Limit of Var((1/sqrt(b)) * sum of a length-b window) when available in
/// closed form: sd^2 for i.i.d. noise, 0 for zeros, and the mean value of
/// f^2 * sd^2 for an i.i.d.-modulated envelope f.
[[nodiscard]] std::optional<double> model_sigma2(const Model& model);

}  // namespace cycloscan::sim
