#include "cycloscan/sim.hpp"

#include <cmath>
#include <stdexcept>

#include "cycloscan/rng.hpp"

namespace cycloscan::sim {

namespace {

constexpr std::size_t kMaxOrbit = 1024;
constexpr std::size_t kBaseBurnIn = 200;

/// One period of a_t when freq * q is within 1e-9 of a multiple of 2*pi for
/// some q <= kMaxOrbit; empty when no small period exists.
std::vector<double> coefficient_orbit(const Par1Spec& spec) {
    for (std::size_t q = 1; q <= kMaxOrbit; ++q) {
        const double turns = spec.coeff_freq * static_cast<double>(q) / ap::kTwoPi;
        if (std::abs(turns - std::round(turns)) * ap::kTwoPi < 1e-9) {
            std::vector<double> orbit(q);
            for (std::size_t r = 0; r < q; ++r) {
                orbit[r] = spec.coeff_mean +
                           spec.coeff_amp * std::sin(spec.coeff_freq * static_cast<double>(r + 1));
            }
            return orbit;
        }
    }
    return {};
}

void validate_par1(const Par1Spec& spec, const std::vector<double>& orbit) {
    if (spec.n < 1) throw std::invalid_argument("series length must be at least 1");
    if (spec.noise_sd < 0.0) throw std::invalid_argument("negative noise sd");
    double sup = 0.0;
    if (!orbit.empty()) {
        for (double a : orbit) sup = std::max(sup, std::abs(a));
    } else {
        sup = std::abs(spec.coeff_mean) + std::abs(spec.coeff_amp);
    }
    if (sup >= 1.0) throw std::invalid_argument("explosive coefficient");
}

double orbit_value(const std::vector<double>& orbit, std::int64_t t) {
    const auto q = static_cast<std::int64_t>(orbit.size());
    std::int64_t r = (t - 1) % q;
    if (r < 0) r += q;
    return orbit[static_cast<std::size_t>(r)];
}

}  // namespace

double par1_coefficient(const Par1Spec& spec, std::int64_t t) {
    const auto orbit = coefficient_orbit(spec);
    if (!orbit.empty()) return orbit_value(orbit, t);
    return spec.coeff_mean + spec.coeff_amp * std::sin(spec.coeff_freq * static_cast<double>(t));
}

std::vector<double> generate_par1(const Par1Spec& spec) {
    const auto orbit = coefficient_orbit(spec);
    validate_par1(spec, orbit);

    rng::Rng gen(spec.seed);
    std::vector<double> out(spec.n);
    double x = 0.0;
    const auto first = 1 - static_cast<std::int64_t>(spec.burn_in);
    for (std::int64_t t = first; t <= static_cast<std::int64_t>(spec.n); ++t) {
        const double a = orbit.empty()
                             ? spec.coeff_mean +
                                   spec.coeff_amp * std::sin(spec.coeff_freq * static_cast<double>(t))
                             : orbit_value(orbit, t);
        x = a * x + spec.noise_sd * gen.gaussian();
        if (t >= 1) out[static_cast<std::size_t>(t - 1)] = x;
    }
    return out;
}

std::vector<double> generate_modulated(const ModulatedSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("series length must be at least 1");
    if (!spec.envelope.is_real_valued()) {
        throw std::invalid_argument("envelope must be real-valued");
    }
    if (spec.base == BaseKind::Ar1 && !(std::abs(spec.base_phi) < 1.0)) {
        throw std::invalid_argument("ar1 coefficient must satisfy |phi| < 1");
    }
    if (spec.base_sd < 0.0) throw std::invalid_argument("negative noise sd");

    rng::Rng gen(spec.seed);
    std::vector<double> out(spec.n);
    if (spec.base == BaseKind::IidGaussian) {
        for (std::size_t i = 0; i < spec.n; ++i) {
            out[i] = spec.envelope.eval_real(static_cast<std::int64_t>(i + 1)) *
                     (spec.base_sd * gen.gaussian());
        }
    } else {
        double z = 0.0;
        for (std::size_t i = 0; i < kBaseBurnIn; ++i) {
            z = spec.base_phi * z + spec.base_sd * gen.gaussian();
        }
        for (std::size_t i = 0; i < spec.n; ++i) {
            z = spec.base_phi * z + spec.base_sd * gen.gaussian();
            out[i] = spec.envelope.eval_real(static_cast<std::int64_t>(i + 1)) * z;
        }
    }
    return out;
}

std::vector<double> generate_iid_gaussian(std::size_t n, double sd, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("series length must be at least 1");
    if (sd < 0.0) throw std::invalid_argument("negative noise sd");
    rng::Rng gen(seed);
    std::vector<double> out(n);
    for (auto& v : out) v = sd * gen.gaussian();
    return out;
}

Model Model::zeros() {
    Model m;
    m.kind = Kind::Zeros;
    return m;
}

Model Model::iid(double sd) {
    Model m;
    m.kind = Kind::IidGaussian;
    m.sd = sd;
    return m;
}

Model Model::par1_default() {
    Model m;
    m.kind = Kind::Par1;
    return m;
}

Model Model::modulated_cosine(double env_const, double cos_amp, double cos_freq, double sd) {
    Model m;
    m.kind = Kind::Modulated;
    m.mod.envelope = ap::sum(ap::APFunction::constant(env_const),
                             ap::APFunction::cosine(cos_freq, cos_amp));
    m.mod.base = BaseKind::IidGaussian;
    m.mod.base_sd = sd;
    return m;
}

std::vector<double> generate(const Model& model, std::size_t n, std::uint64_t seed) {
    switch (model.kind) {
        case Model::Kind::Zeros:
            if (n < 1) throw std::invalid_argument("series length must be at least 1");
            return std::vector<double>(n, 0.0);
        case Model::Kind::IidGaussian:
            return generate_iid_gaussian(n, model.sd, seed);
        case Model::Kind::Par1: {
            Par1Spec spec = model.par1;
            spec.n = n;
            spec.seed = seed;
            return generate_par1(spec);
        }
        case Model::Kind::Modulated: {
            ModulatedSpec spec = model.mod;
            spec.n = n;
            spec.seed = seed;
            return generate_modulated(spec);
        }
    }
    throw std::invalid_argument("unknown model kind");
}

double model_mean(const Model&) { return 0.0; }

std::optional<double> model_sigma2(const Model& model) {
    switch (model.kind) {
        case Model::Kind::Zeros:
            return 0.0;
        case Model::Kind::IidGaussian:
            return model.sd * model.sd;
        case Model::Kind::Par1:
            return std::nullopt;
        case Model::Kind::Modulated:
            if (model.mod.base == BaseKind::IidGaussian) {
                const auto f2 = ap::product(model.mod.envelope, model.mod.envelope);
                return f2.mean().real() * model.mod.base_sd * model.mod.base_sd;
            }
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace cycloscan::sim
