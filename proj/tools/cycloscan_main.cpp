// cycloscan: simulate periodically correlated series, estimate cyclic
// autocorrelations, scan frequencies against block-bootstrap bands, and run
// the bootstrap diagnostics.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 diagnostic criterion
// failed (diagnose only).

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cycloscan/ap.hpp"
#include "cycloscan/cyclic.hpp"
#include "cycloscan/detect.hpp"
#include "cycloscan/diagnostics.hpp"
#include "cycloscan/io.hpp"
#include "cycloscan/sim.hpp"

namespace {

using nlohmann::json;
namespace cs = cycloscan;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitCriterion = 3;

// period inference applied to scan results (matches the acceptance tolerance
// for reading harmonics off a pi/150 grid)
constexpr double kPeriodTol = 0.15;
constexpr int kPeriodMax = 12;

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_manifest(const std::string& command, const json& parameters,
                    std::uint64_t seed, const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs, const std::string& path) {
    json inputs_json = json::object();
    for (const auto& p : inputs) inputs_json[p] = cs::io::file_digest(p);
    json outputs_json = json::object();
    for (const auto& p : outputs) outputs_json[p] = cs::io::file_digest(p);
    const json manifest{{"command", command}, {"parameters", parameters},
                        {"seed", seed},       {"inputs", inputs_json},
                        {"outputs", outputs_json}, {"timestamp", timestamp_utc()}};
    cs::io::write_text_file(path, manifest.dump(2) + "\n");
    std::cout << path << "\n";
}

struct SimulateArgs {
    std::string model;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string out;
    double coeff_mean = 2.0 / 3.0;
    double coeff_amp = 1.0 / 3.0;
    double coeff_freq = cs::ap::kTwoPi / 3.0;
    double sd = 1.0;
    std::size_t burn_in = 200;
    double env_const = 1.0;
    double env_cos_amp = 0.5;
    double env_cos_freq = cs::ap::kTwoPi / 3.0;
    std::string base = "iid";
    double phi = 0.0;
};

int run_simulate(const SimulateArgs& a) {
    std::vector<double> series;
    if (a.model == "par1") {
        cs::sim::Par1Spec spec;
        spec.n = a.n;
        spec.coeff_mean = a.coeff_mean;
        spec.coeff_amp = a.coeff_amp;
        spec.coeff_freq = a.coeff_freq;
        spec.noise_sd = a.sd;
        spec.burn_in = a.burn_in;
        spec.seed = a.seed;
        series = cs::sim::generate_par1(spec);
    } else if (a.model == "modulated") {
        cs::sim::ModulatedSpec spec;
        spec.n = a.n;
        spec.seed = a.seed;
        spec.envelope = cs::ap::sum(cs::ap::APFunction::constant(a.env_const),
                                    cs::ap::APFunction::cosine(a.env_cos_freq, a.env_cos_amp));
        spec.base = a.base == "ar1" ? cs::sim::BaseKind::Ar1 : cs::sim::BaseKind::IidGaussian;
        spec.base_sd = a.sd;
        spec.base_phi = a.phi;
        series = cs::sim::generate_modulated(spec);
    } else {
        series = cs::sim::generate_iid_gaussian(a.n, a.sd, a.seed);
    }

    cs::io::write_series_csv(a.out, series);
    const json params{{"model", a.model},       {"n", a.n},
                      {"coeff_mean", a.coeff_mean}, {"coeff_amp", a.coeff_amp},
                      {"coeff_freq", a.coeff_freq}, {"sd", a.sd},
                      {"burn_in", a.burn_in},   {"env_const", a.env_const},
                      {"env_cos_amp", a.env_cos_amp}, {"env_cos_freq", a.env_cos_freq},
                      {"base", a.base},         {"phi", a.phi},
                      {"out", a.out}};
    write_manifest("simulate", params, a.seed, {}, {a.out}, a.out + ".manifest.json");
    return kExitOk;
}

struct ScanArgs {
    std::string input;
    std::int64_t tau = 1;
    std::size_t block = 30;
    std::size_t replicates = 500;
    std::size_t grid_points = 151;
    double alpha_lo = 0.05;
    double alpha_hi = 0.95;
    std::uint64_t seed = 0;
    std::string out;
};

int run_scan(const ScanArgs& a) {
    const auto series = cs::io::read_series_csv(a.input);

    cs::detect::ScanConfig cfg;
    cfg.tau = a.tau;
    cfg.lambda_grid = cs::detect::uniform_grid(a.grid_points);
    cfg.block_length = a.block;
    cfg.replicates = a.replicates;
    cfg.alpha_lo = a.alpha_lo;
    cfg.alpha_hi = a.alpha_hi;
    cfg.seed = a.seed;

    const auto scan = cs::detect::frequency_scan(series, cfg);
    const auto significant = cs::detect::significant_frequencies(scan);
    std::vector<double> lambdas;
    for (const auto& s : significant) lambdas.push_back(s.lambda);
    const auto period = cs::detect::infer_period(lambdas, kPeriodTol, kPeriodMax);

    const std::string tsv_path = a.out + ".tsv";
    const std::string json_path = a.out + ".json";
    cs::io::write_scan_tsv(tsv_path, scan);
    const json summary = cs::io::scan_summary(scan, significant, period);
    cs::io::write_text_file(json_path, summary.dump(2) + "\n");
    std::cout << summary.dump(2) << "\n";

    const json params{{"input", a.input},         {"tau", a.tau},
                      {"block", a.block},         {"replicates", a.replicates},
                      {"grid_points", a.grid_points}, {"alpha_lo", a.alpha_lo},
                      {"alpha_hi", a.alpha_hi},   {"out", a.out}};
    write_manifest("scan", params, a.seed, {a.input}, {tsv_path, json_path},
                   a.out + ".manifest.json");
    return kExitOk;
}

struct EstimateArgs {
    std::string input;
    double lambda = 0.0;
    std::int64_t tau = 0;
};

int run_estimate(const EstimateArgs& a) {
    const auto series = cs::io::read_series_csv(a.input);
    const auto est = cs::cyclic::cyclic_estimate(series, a.lambda, a.tau);
    std::cout << cs::io::to_json(est).dump(2) << "\n";
    return kExitOk;
}

struct DiagnoseArgs {
    std::string mode;
    std::string model = "iid";
    double sd = 1.0;
    std::vector<std::size_t> n_list{300, 1200, 4800};
    double q = 0.4;
    std::size_t B = 1000;
    std::size_t R = 1000;
    std::size_t n = 750;
    std::vector<std::size_t> b_list{50};
    std::size_t blockvar_R = 2000;
    double env_const = 1.0;
    double env_cos_amp = 0.5;
    double env_cos_freq = cs::ap::kTwoPi / 3.0;
    double max_ks = 0.10;
    double slack = 0.02;
    double max_supdev = 0.15;
    std::uint64_t seed = 0;
    std::string out;
};

cs::sim::Model parse_model(const DiagnoseArgs& a) {
    if (a.model == "zeros") return cs::sim::Model::zeros();
    if (a.model == "par1") return cs::sim::Model::par1_default();
    if (a.model == "modulated") {
        return cs::sim::Model::modulated_cosine(a.env_const, a.env_cos_amp, a.env_cos_freq,
                                                a.sd);
    }
    return cs::sim::Model::iid(a.sd);
}

int run_diagnose(const DiagnoseArgs& a) {
    const auto model = parse_model(a);
    json report;
    bool pass = true;

    if (a.mode == "consistency") {
        const auto rep = cs::diag::consistency_check(model, a.n_list, a.q, a.B, a.R, a.seed);
        for (std::size_t i = 1; i < rep.rows.size(); ++i) {
            if (rep.rows[i].ks > rep.rows[i - 1].ks + a.slack) pass = false;
        }
        if (rep.rows.back().ks > a.max_ks) pass = false;
        report = cs::io::to_json(rep);
        report["mode"] = "consistency";
        report["model"] = a.model;
        report["max_ks"] = a.max_ks;
        report["slack"] = a.slack;
        report["pass"] = pass;
    } else {
        json rows = json::array();
        double prev = 0.0;
        for (std::size_t i = 0; i < a.b_list.size(); ++i) {
            const auto prof = cs::diag::block_variance_profile(model, a.n, a.b_list[i],
                                                               a.blockvar_R, a.seed);
            if (i > 0 && prof.sup_dev > prev + a.slack) pass = false;
            if (i + 1 == a.b_list.size() && prof.sup_dev > a.max_supdev) pass = false;
            prev = prof.sup_dev;
            rows.push_back({{"b", a.b_list[i]},
                            {"sup_dev", prof.sup_dev},
                            {"sigma2", prof.sigma2_ref}});
        }
        report = json{{"mode", "blockvar"}, {"model", a.model},       {"n", a.n},
                      {"R", a.blockvar_R},  {"max_supdev", a.max_supdev},
                      {"slack", a.slack},   {"rows", rows},           {"pass", pass}};
    }

    std::cout << report.dump(2) << "\n";
    if (!a.out.empty()) {
        cs::io::write_text_file(a.out, report.dump(2) + "\n");
        const json params{{"mode", a.mode}, {"model", a.model}, {"out", a.out}};
        write_manifest("diagnose", params, a.seed, {}, {a.out}, a.out + ".manifest.json");
    }
    return pass ? kExitOk : kExitCriterion;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic autocorrelation scanning with block-bootstrap bands"};
    app.require_subcommand(1);

    SimulateArgs sim_args;
    auto* sim_cmd = app.add_subcommand("simulate", "generate a series as single-column CSV");
    sim_cmd->add_option("--model", sim_args.model, "par1 | modulated | iid")
        ->required()
        ->check(CLI::IsMember({"par1", "modulated", "iid"}));
    sim_cmd->add_option("--n", sim_args.n, "series length")->required();
    sim_cmd->add_option("--seed", sim_args.seed, "random seed")->required();
    sim_cmd->add_option("--out", sim_args.out, "output CSV path")->required();
    sim_cmd->add_option("--coeff-mean", sim_args.coeff_mean, "par1 coefficient mean");
    sim_cmd->add_option("--coeff-amp", sim_args.coeff_amp, "par1 coefficient amplitude");
    sim_cmd->add_option("--coeff-freq", sim_args.coeff_freq, "par1 coefficient frequency");
    sim_cmd->add_option("--sd", sim_args.sd, "noise standard deviation");
    sim_cmd->add_option("--burn-in", sim_args.burn_in, "par1 burn-in steps");
    sim_cmd->add_option("--env-const", sim_args.env_const, "modulated envelope constant");
    sim_cmd->add_option("--env-cos-amp", sim_args.env_cos_amp, "modulated cosine amplitude");
    sim_cmd->add_option("--env-cos-freq", sim_args.env_cos_freq, "modulated cosine frequency");
    sim_cmd->add_option("--base", sim_args.base, "modulated base: iid | ar1")
        ->check(CLI::IsMember({"iid", "ar1"}));
    sim_cmd->add_option("--phi", sim_args.phi, "ar1 base coefficient");

    ScanArgs scan_args;
    auto* scan_cmd = app.add_subcommand("scan", "frequency scan with bootstrap bands");
    scan_cmd->add_option("--input", scan_args.input, "input series CSV")->required();
    scan_cmd->add_option("--tau", scan_args.tau, "lag");
    scan_cmd->add_option("--block", scan_args.block, "block length");
    scan_cmd->add_option("--replicates", scan_args.replicates, "bootstrap replicates");
    scan_cmd->add_option("--grid-points", scan_args.grid_points, "grid points on [0, pi]");
    scan_cmd->add_option("--alpha-lo", scan_args.alpha_lo, "lower band order");
    scan_cmd->add_option("--alpha-hi", scan_args.alpha_hi, "upper band order");
    scan_cmd->add_option("--seed", scan_args.seed, "random seed")->required();
    scan_cmd->add_option("--out", scan_args.out, "output base path (.tsv/.json)")->required();

    EstimateArgs est_args;
    auto* est_cmd = app.add_subcommand("estimate", "single cyclic autocorrelation estimate");
    est_cmd->add_option("--input", est_args.input, "input series CSV")->required();
    est_cmd->add_option("--lambda", est_args.lambda, "frequency in radians")->required();
    est_cmd->add_option("--tau", est_args.tau, "lag")->required();

    DiagnoseArgs diag_args;
    auto* diag_cmd = app.add_subcommand("diagnose", "bootstrap consistency diagnostics");
    diag_cmd->add_option("--mode", diag_args.mode, "consistency | blockvar")
        ->required()
        ->check(CLI::IsMember({"consistency", "blockvar"}));
    diag_cmd->add_option("--model", diag_args.model, "zeros | iid | par1 | modulated")
        ->check(CLI::IsMember({"zeros", "iid", "par1", "modulated"}));
    diag_cmd->add_option("--sd", diag_args.sd, "model noise sd");
    diag_cmd->add_option("--n", diag_args.n_list, "sample sizes (consistency)")
        ->delimiter(',');
    diag_cmd->add_option("--q", diag_args.q, "block rule exponent: b = ceil(n^q)");
    diag_cmd->add_option("--B", diag_args.B, "bootstrap replicates");
    diag_cmd->add_option("--R", diag_args.R, "Monte Carlo truth replicates");
    diag_cmd->add_option("--series-n", diag_args.n, "series length (blockvar)");
    diag_cmd->add_option("--b", diag_args.b_list, "block lengths (blockvar)")->delimiter(',');
    diag_cmd->add_option("--blockvar-R", diag_args.blockvar_R, "replicates (blockvar)");
    diag_cmd->add_option("--env-const", diag_args.env_const, "modulated envelope constant");
    diag_cmd->add_option("--env-cos-amp", diag_args.env_cos_amp, "modulated cosine amplitude");
    diag_cmd->add_option("--env-cos-freq", diag_args.env_cos_freq,
                         "modulated cosine frequency");
    diag_cmd->add_option("--max-ks", diag_args.max_ks, "largest allowed final KS distance");
    diag_cmd->add_option("--slack", diag_args.slack, "monotonicity slack");
    diag_cmd->add_option("--max-supdev", diag_args.max_supdev,
                         "largest allowed final sup deviation");
    diag_cmd->add_option("--seed", diag_args.seed, "random seed")->required();
    diag_cmd->add_option("--out", diag_args.out, "report JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sim_cmd->parsed()) return run_simulate(sim_args);
        if (scan_cmd->parsed()) return run_scan(scan_args);
        if (est_cmd->parsed()) return run_estimate(est_args);
        if (diag_cmd->parsed()) return run_diagnose(diag_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
