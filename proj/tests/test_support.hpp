#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "cycloscan/ap.hpp"
#include "cycloscan/rng.hpp"

namespace test_support {

namespace ap = cycloscan::ap;

/// Random trigonometric polynomial with up to max_terms terms. Frequencies
/// mix exact grid multiples 2*pi*k/32 with continuous draws kept away from 0
/// so the window-average rate constant stays finite and meaningful.
inline ap::APFunction random_ap_function(cycloscan::rng::Rng& rng, int max_terms = 6) {
    const int count = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(max_terms)));
    std::vector<ap::Term> terms;
    for (int i = 0; i < count; ++i) {
        double lambda;
        if (i == 0 && rng.unit() < 0.5) {
            lambda = 0.0;
        } else if (rng.unit() < 0.5) {
            lambda = ap::kTwoPi * static_cast<double>(1 + rng.index(31)) / 32.0;
        } else {
            lambda = 0.05 + rng.unit() * (ap::kTwoPi - 0.1);
        }
        const std::complex<double> coeff{rng.unit() * 1.4 - 0.7, rng.unit() * 1.4 - 0.7};
        terms.push_back(ap::Term{lambda, coeff});
    }
    return ap::APFunction(std::move(terms));
}

/// Random real-valued, non-constant trigonometric polynomial: a real constant
/// plus one or two conjugate cosine-like pairs on the 2*pi/64 grid with
/// amplitude at least 0.25, so the non-constant part is bounded away from 0.
inline ap::APFunction random_real_ap_function(cycloscan::rng::Rng& rng) {
    std::vector<ap::Term> terms;
    terms.push_back(ap::Term{0.0, {rng.unit() * 2.0 - 1.0, 0.0}});
    const int pairs = 1 + static_cast<int>(rng.index(2));
    for (int p = 0; p < pairs; ++p) {
        const double lambda = ap::kTwoPi * static_cast<double>(1 + rng.index(31)) / 64.0;
        const double mag = 0.25 + 0.75 * rng.unit();
        const double phase = ap::kTwoPi * rng.unit();
        const std::complex<double> coeff = std::polar(mag, phase);
        terms.push_back(ap::Term{lambda, coeff});
        terms.push_back(ap::Term{ap::kTwoPi - lambda, std::conj(coeff)});
    }
    return ap::APFunction(std::move(terms));
}

/// Materializes f(1), ..., f(count) for window-average tests.
inline std::vector<std::complex<double>> sample_function(const ap::APFunction& f,
                                                         std::size_t count) {
    std::vector<std::complex<double>> out(count);
    for (std::size_t t = 1; t <= count; ++t) {
        out[t - 1] = f.eval(static_cast<std::int64_t>(t));
    }
    return out;
}

/// Brute-force law of the bootstrap root of the mean: walks all (n-b+1)^k
/// block choices, materializes each pseudo-series and keys the root values on
/// a `quantum` grid. Deliberately independent of the engine's block-sum
/// shortcut so it can serve as its oracle.
inline std::map<std::int64_t, double> enumerate_root_law(const std::vector<double>& x,
                                                         std::size_t b, double quantum) {
    const std::size_t k = x.size() / b;
    const std::size_t starts = x.size() - b + 1;
    std::size_t outcomes = 1;
    for (std::size_t j = 0; j < k; ++j) outcomes *= starts;

    std::vector<double> means(outcomes);
    std::vector<std::size_t> digits(k, 0);
    for (std::size_t o = 0; o < outcomes; ++o) {
        std::vector<double> concat;
        concat.reserve(k * b);
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t i = 0; i < b; ++i) concat.push_back(x[digits[j] + i]);
        }
        double mean = 0.0;
        for (double v : concat) mean += v;
        means[o] = mean / static_cast<double>(concat.size());
        for (std::size_t j = 0; j < k; ++j) {
            if (++digits[j] < starts) break;
            digits[j] = 0;
        }
    }
    double center = 0.0;
    for (double m : means) center += m;
    center /= static_cast<double>(outcomes);

    const double scale = std::sqrt(static_cast<double>(k * b));
    std::map<std::int64_t, double> law;
    for (double m : means) {
        const auto key = std::llround(scale * (m - center) / quantum);
        law[key] += 1.0 / static_cast<double>(outcomes);
    }
    return law;
}

inline double total_variation(const std::map<std::int64_t, double>& p,
                              const std::map<std::int64_t, double>& q) {
    double tv = 0.0;
    for (const auto& [key, prob] : p) {
        const auto it = q.find(key);
        tv += std::abs(prob - (it == q.end() ? 0.0 : it->second));
    }
    for (const auto& [key, prob] : q) {
        if (!p.contains(key)) tv += prob;
    }
    return tv / 2.0;
}

}  // namespace test_support
