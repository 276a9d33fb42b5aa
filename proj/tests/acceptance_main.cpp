// Acceptance suite: end-to-end checks of the frequency-detection pipeline and
// the bootstrap engine at desk scale. Each criterion prints one PASS/FAIL
// line; the binary exits nonzero when any criterion fails.

#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cycloscan/ap.hpp"
#include "cycloscan/cyclic.hpp"
#include "cycloscan/detect.hpp"
#include "cycloscan/diagnostics.hpp"
#include "cycloscan/mbb.hpp"
#include "cycloscan/rng.hpp"
#include "cycloscan/sim.hpp"
#include "test_support.hpp"

using namespace cycloscan;

namespace {

const double kThird = ap::kTwoPi / 3.0;

struct Criterion {
    std::string name;
    bool pass = false;
    std::string detail;
};

detect::ScanConfig scan_config(std::uint64_t seed) {
    detect::ScanConfig cfg;
    cfg.tau = 1;
    cfg.lambda_grid = detect::uniform_grid(151);
    cfg.block_length = 30;
    cfg.replicates = 500;
    cfg.alpha_lo = 0.05;
    cfg.alpha_hi = 0.95;
    cfg.seed = seed;
    return cfg;
}

// 1. Periodic-model detection: over 10 fixed seeds the filtered significant
// set must be nonempty and confined to 0.15 rad around {0, 2*pi/3} in at
// least 8 seeds, and the detections pooled across seeds must identify
// period 3.
Criterion criterion_detection() {
    Criterion c{"periodic-model scan: spikes only at {0, 2pi/3}, period 3", false, ""};
    int clean_nonempty = 0;
    std::vector<double> pooled;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        sim::Par1Spec spec;
        spec.n = 300;
        spec.seed = seed;
        const auto x = sim::generate_par1(spec);
        const auto scan = detect::frequency_scan(x, scan_config(rng::derive_stream(seed, 7)));
        const auto sig = detect::significant_frequencies(scan);
        bool all_near = !sig.empty();
        for (const auto& s : sig) {
            pooled.push_back(s.lambda);
            const bool near = std::abs(s.lambda) <= 0.15 ||
                              std::abs(s.lambda - kThird) <= 0.15;
            all_near = all_near && near;
        }
        if (all_near) ++clean_nonempty;
    }
    const auto period = detect::infer_period(pooled, 0.15, 12);
    c.pass = clean_nonempty >= 8 && period.has_value() && *period == 3;
    c.detail = std::to_string(clean_nonempty) + "/10 seeds clean+nonempty, pooled period " +
               (period ? std::to_string(*period) : std::string("none"));
    return c;
}

// 2. Stationary negative control: the same scan on white noise must report no
// period in at least 8 of 10 seeds.
Criterion criterion_negative_control() {
    Criterion c{"white-noise scan: no period detected", false, ""};
    int null_period = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto x = sim::generate_iid_gaussian(300, 1.0, seed);
        const auto scan = detect::frequency_scan(x, scan_config(rng::derive_stream(seed, 7)));
        const auto sig = detect::significant_frequencies(scan);
        std::vector<double> lambdas;
        for (const auto& s : sig) lambdas.push_back(s.lambda);
        if (!detect::infer_period(lambdas, 0.15, 12).has_value()) ++null_period;
    }
    c.pass = null_period >= 8;
    c.detail = std::to_string(null_period) + "/10 seeds period-null";
    return c;
}

// 3. Resampler exactness at micro scale: for every series length n <= 6 and
// every block length b <= n, the Monte Carlo root law at B = 20000 must match
// brute-force enumeration over all (n-b+1)^k block choices within total
// variation 0.03.
Criterion criterion_micro_enumeration() {
    Criterion c{"micro-scale bootstrap law matches enumeration (TV <= 0.03)", false, ""};
    double worst = 0.0;
    const double quantum = 1e-9;
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(i + 1);
        for (std::size_t b = 1; b <= n; ++b) {
            const auto exact = test_support::enumerate_root_law(x, b, quantum);
            const auto dist = mbb::root_distribution(
                std::span<const double>(x),
                mbb::BootstrapPlan{b, 20000, rng::derive_stream(999, n * 10 + b)});
            std::map<std::int64_t, double> empirical;
            for (double v : dist.samples) {
                empirical[std::llround(v / quantum)] += 1.0 / 20000.0;
            }
            worst = std::max(worst, test_support::total_variation(exact, empirical));
        }
    }
    c.pass = worst <= 0.03;
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst TV %.4f", worst);
    c.detail = buf;
    return c;
}

// 4. Bootstrap law approaches the sampling law: KS distance between the
// bootstrap root sample of a periodic autoregression and the Monte Carlo
// truth must be non-increasing over n = 300 -> 1200 -> 4800 (slack 0.02) and
// at most 0.10 at n = 4800.
Criterion criterion_consistency_trend() {
    Criterion c{"bootstrap root law approaches sampling law (KS trend)", false, ""};
    const std::vector<std::size_t> n_list{300, 1200, 4800};
    const auto report =
        diag::consistency_check(sim::Model::par1_default(), n_list, 0.4, 1000, 1000, 2025);
    bool monotone = true;
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        if (report.rows[i].ks > report.rows[i - 1].ks + 0.02) monotone = false;
    }
    const double last = report.rows.back().ks;
    c.pass = monotone && last <= 0.10;
    char buf[96];
    std::snprintf(buf, sizeof buf, "ks = %.4f / %.4f / %.4f", report.rows[0].ks,
                  report.rows[1].ks, report.rows[2].ks);
    c.detail = buf;
    return c;
}

// 5. Windowed variances stabilize: for the modulated model 1 + 0.5 cos with
// unit white noise (limit 1.125 from the symbolic expansion), the sup over
// window starts of |variance - limit| must fall over b = 9 -> 51 -> 249
// (slack 0.02) and end at or below 0.1.
Criterion criterion_block_variance() {
    Criterion c{"windowed variances stabilize toward the closed-form limit", false, ""};
    const auto model = sim::Model::modulated_cosine(1.0, 0.5, kThird, 1.0);
    const auto sigma2 = sim::model_sigma2(model);
    if (!sigma2 || std::abs(*sigma2 - 1.125) > 1e-12) {
        c.detail = "closed-form limit not 1.125";
        return c;
    }
    const std::vector<std::size_t> blocks{9, 51, 249};
    std::vector<double> sups;
    for (std::size_t b : blocks) {
        sups.push_back(diag::block_variance_profile(model, 750, b, 2000, 1117).sup_dev);
    }
    const bool monotone = sups[1] <= sups[0] + 0.02 && sups[2] <= sups[1] + 0.02;
    c.pass = monotone && sups.back() <= 0.1;
    char buf[96];
    std::snprintf(buf, sizeof buf, "sup_dev = %.4f / %.4f / %.4f", sups[0], sups[1], sups[2]);
    c.detail = buf;
    return c;
}

// 6. Window-average rate bound: for 200 random trigonometric polynomials and
// random windows the deviation from the zero-frequency coefficient must stay
// within rate_constant / n (+1e-10 accumulation slack), with zero failures.
Criterion criterion_rate_bound() {
    Criterion c{"window-average rate bound: zero failures over 200 draws", false, ""};
    rng::Rng rng(60601);
    int failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = test_support::random_ap_function(rng);
        const std::size_t start = 1 + rng.index(100);
        const std::size_t count = 1 + rng.index(10000);
        const auto samples = test_support::sample_function(f, start + count - 1);
        const auto mean = ap::mean_value_estimate(samples, start, count);
        const double bound = f.rate_constant() / static_cast<double>(count) + 1e-10;
        if (std::abs(mean - f.mean()) > bound) ++failures;
    }
    c.pass = failures == 0;
    c.detail = std::to_string(failures) + " failures";
    return c;
}

// 7. Estimator symmetries: conjugate symmetry within 1e-10 and a real,
// nonnegative lag-0 frequency-0 estimate over 500 random real series, with
// zero failures.
Criterion criterion_symmetries() {
    Criterion c{"conjugate symmetry and real nonnegative a(0,0): zero failures", false, ""};
    rng::Rng rng(70707);
    int failures = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> x;
        const std::size_t n = 20 + rng.index(380);
        const int kind = static_cast<int>(rng.index(3));
        if (kind == 0) {
            x = sim::generate_iid_gaussian(n, 0.3 + rng.unit() * 2.0, rng.next_u64());
        } else if (kind == 1) {
            sim::Par1Spec spec;
            spec.n = n;
            spec.seed = rng.next_u64();
            x = sim::generate_par1(spec);
        } else {
            sim::ModulatedSpec spec;
            spec.n = n;
            spec.seed = rng.next_u64();
            spec.envelope = ap::sum(ap::APFunction::constant(1.0),
                                    ap::APFunction::cosine(0.3 + rng.unit() * 2.0, 0.5));
            x = sim::generate_modulated(spec);
        }
        const double lambda = rng.unit() * ap::kTwoPi;
        const auto tau = static_cast<std::int64_t>(rng.index(std::min<std::size_t>(11, n)));
        if (!cyclic::conj_symmetry_holds(x, lambda, tau, 1e-10)) ++failures;
        const auto zero_est = cyclic::cyclic_estimate(x, 0.0, 0).value;
        if (zero_est.imag() != 0.0 || zero_est.real() < 0.0) ++failures;
    }
    c.pass = failures == 0;
    c.detail = std::to_string(failures) + " failures";
    return c;
}

// 8. Variance identity: for 50 random non-constant real trigonometric
// polynomials, the numeric second moment minus squared mean at n = 1e5 must
// match the nonzero-term energy within 10 * rate_constant(f^2) / n and stay
// strictly positive.
Criterion criterion_variance_identity() {
    Criterion c{"variance identity for trigonometric polynomials: zero failures", false, ""};
    rng::Rng rng(80808);
    int failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = test_support::random_real_ap_function(rng);
        double energy = 0.0;
        for (const auto& term : f.terms()) {
            if (term.lambda != 0.0) energy += std::norm(term.coeff);
        }
        const std::size_t n = 100000;
        double sum = 0.0;
        double sum_sq = 0.0;
        for (std::size_t t = 1; t <= n; ++t) {
            const double v = f.eval_real(static_cast<std::int64_t>(t));
            sum += v;
            sum_sq += v * v;
        }
        const double mean = sum / static_cast<double>(n);
        const double estimate = sum_sq / static_cast<double>(n) - mean * mean;
        const double tol =
            10.0 * ap::product(f, f).rate_constant() / static_cast<double>(n);
        if (std::abs(estimate - energy) > tol || !(estimate > 0.0)) ++failures;
    }
    c.pass = failures == 0;
    c.detail = std::to_string(failures) + " failures";
    return c;
}

}  // namespace

int main() {
    std::vector<Criterion (*)()> criteria{
        criterion_detection,      criterion_negative_control, criterion_micro_enumeration,
        criterion_consistency_trend, criterion_block_variance, criterion_rate_bound,
        criterion_symmetries,     criterion_variance_identity,
    };

    int passed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        try {
            c = criteria[i]();
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
            c.name = "criterion " + std::to_string(i + 1);
        }
        std::printf("[%zu/8] %s  %s (%s)\n", i + 1, c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), c.detail.c_str());
        std::fflush(stdout);
        if (c.pass) ++passed;
    }
    std::printf("ACCEPTANCE: %d/8 criteria passed\n", passed);
    return passed == 8 ? 0 : 1;
}
