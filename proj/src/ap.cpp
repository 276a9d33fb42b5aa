#include "cycloscan/ap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cycloscan::ap {

namespace {

bool near(double a, double b) { return std::abs(a - b) < kFreqTol; }

bool detect_real_valued(const std::vector<Term>& terms) {
    double l1 = 0.0;
    for (const auto& t : terms) l1 += std::abs(t.coeff);
    const double tol = 1e-12 * std::max(1.0, l1);
    for (const auto& t : terms) {
        if (near(t.lambda, 0.0)) {
            if (std::abs(t.coeff.imag()) > tol) return false;
            continue;
        }
        const double partner = kTwoPi - t.lambda;
        auto it = std::find_if(terms.begin(), terms.end(),
                               [&](const Term& u) { return near(u.lambda, partner); });
        if (it == terms.end()) return false;
        if (std::abs(it->coeff - std::conj(t.coeff)) > tol) return false;
    }
    return true;
}

}  // namespace

double wrap_frequency(double lambda) {
    double w = std::fmod(lambda, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (kTwoPi - w < kFreqTol) w = 0.0;
    return w;
}

APFunction::APFunction(std::vector<Term> terms) {
    for (auto& t : terms) t.lambda = wrap_frequency(t.lambda);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.lambda < b.lambda; });
    for (const auto& t : terms) {
        if (!terms_.empty() && near(terms_.back().lambda, t.lambda)) {
            terms_.back().coeff += t.coeff;
        } else {
            terms_.push_back(t);
        }
    }
    std::erase_if(terms_, [](const Term& t) { return t.coeff == std::complex<double>{}; });
    real_valued_ = detect_real_valued(terms_);
}

APFunction APFunction::constant(double value) {
    return APFunction({Term{0.0, {value, 0.0}}});
}

APFunction APFunction::cosine(double lambda, double amplitude) {
    const double w = wrap_frequency(lambda);
    if (near(w, 0.0)) return constant(amplitude);
    return APFunction({Term{w, {amplitude / 2.0, 0.0}},
                       Term{kTwoPi - w, {amplitude / 2.0, 0.0}}});
}

std::complex<double> APFunction::eval(std::int64_t t) const {
    std::complex<double> acc{0.0, 0.0};
    const auto td = static_cast<double>(t);
    for (const auto& term : terms_) {
        acc += term.coeff * std::polar(1.0, term.lambda * td);
    }
    return acc;
}

std::complex<double> APFunction::coefficient(double lambda) const {
    const double w = wrap_frequency(lambda);
    for (const auto& t : terms_) {
        if (near(t.lambda, w)) return t.coeff;
    }
    return {0.0, 0.0};
}

double APFunction::rate_constant() const {
    double c = 0.0;
    for (const auto& t : terms_) {
        if (near(t.lambda, 0.0)) continue;
        // |1 - exp(i*lambda)| = 2 * |sin(lambda / 2)|
        c += std::abs(t.coeff) / std::abs(std::sin(t.lambda / 2.0));
    }
    return c;
}

double APFunction::l1_norm() const {
    double l1 = 0.0;
    for (const auto& t : terms_) l1 += std::abs(t.coeff);
    return l1;
}

APFunction sum(const APFunction& f, const APFunction& g) {
    std::vector<Term> terms(f.terms().begin(), f.terms().end());
    terms.insert(terms.end(), g.terms().begin(), g.terms().end());
    return APFunction(std::move(terms));
}

APFunction product(const APFunction& f, const APFunction& g) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size() * g.terms().size());
    for (const auto& a : f.terms()) {
        for (const auto& b : g.terms()) {
            terms.push_back(Term{wrap_frequency(a.lambda + b.lambda), a.coeff * b.coeff});
        }
    }
    return APFunction(std::move(terms));
}

std::complex<double> mean_value_estimate(std::span<const std::complex<double>> samples,
                                         std::size_t start, std::size_t count) {
    if (count == 0) throw std::invalid_argument("empty averaging window");
    if (start < 1 || start - 1 + count > samples.size()) {
        throw std::invalid_argument("averaging window out of range");
    }
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = start - 1; j < start - 1 + count; ++j) acc += samples[j];
    return acc / static_cast<double>(count);
}

std::complex<double> fourier_coefficient(std::span<const std::complex<double>> values,
                                         double lambda) {
    if (values.empty()) throw std::invalid_argument("empty series");
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto t = static_cast<double>(i + 1);
        acc += values[i] * std::polar(1.0, -lambda * t);
    }
    return acc / static_cast<double>(values.size());
}

std::complex<double> fourier_coefficient(std::span<const double> values, double lambda) {
    if (values.empty()) throw std::invalid_argument("empty series");
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto t = static_cast<double>(i + 1);
        acc += values[i] * std::polar(1.0, -lambda * t);
    }
    return acc / static_cast<double>(values.size());
}

}  // namespace cycloscan::ap
