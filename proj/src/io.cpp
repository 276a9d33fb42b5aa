#include "cycloscan/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cycloscan::io {

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

std::vector<double> read_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);

    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "x") {
        throw std::runtime_error(path + ": expected single-column CSV with header \"x\"");
    }

    std::vector<double> values;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        line = strip_cr(line);
        if (line.empty()) continue;
        std::size_t consumed = 0;
        double v = 0.0;
        try {
            v = std::stod(line, &consumed);
        } catch (const std::exception&) {
            throw std::runtime_error(path + ": bad value at row " + std::to_string(row));
        }
        if (consumed != line.size() || !std::isfinite(v)) {
            throw std::runtime_error(path + ": bad value at row " + std::to_string(row));
        }
        values.push_back(v);
    }
    if (values.empty()) throw std::runtime_error(path + ": series is empty");
    return values;
}

void write_series_csv(const std::string& path, std::span<const double> x) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "x\n";
    for (double v : x) out << format_double(v) << "\n";
    if (!out) throw std::runtime_error("failed writing " + path);
}

void write_scan_tsv(const std::string& path, const detect::ScanResult& scan) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "lambda\tre\tre_lo\tre_hi\tim\tim_lo\tim_hi\treject\n";
    for (const auto& pt : scan.points) {
        out << format_double(pt.lambda) << '\t' << format_double(pt.estimate.real()) << '\t'
            << format_double(pt.re_band.lo) << '\t' << format_double(pt.re_band.hi) << '\t'
            << format_double(pt.estimate.imag()) << '\t' << format_double(pt.im_band.lo)
            << '\t' << format_double(pt.im_band.hi) << '\t' << (pt.reject ? 1 : 0) << "\n";
    }
    if (!out) throw std::runtime_error("failed writing " + path);
}

nlohmann::json to_json(const mbb::BootstrapDistribution& dist) {
    nlohmann::json meta{{"n", dist.meta.n},
                        {"b", dist.meta.block_length},
                        {"k", dist.meta.num_blocks},
                        {"seed", dist.meta.seed},
                        {"statistic", dist.meta.statistic}};
    return nlohmann::json{{"meta", meta}, {"samples", dist.samples}};
}

nlohmann::json to_json(const mbb::ComplexBootstrapDistribution& dist) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& v : dist.samples) samples.push_back({v.real(), v.imag()});
    nlohmann::json meta{{"n", dist.meta.n},
                        {"b", dist.meta.block_length},
                        {"k", dist.meta.num_blocks},
                        {"seed", dist.meta.seed},
                        {"statistic", dist.meta.statistic}};
    return nlohmann::json{{"meta", meta}, {"samples", samples}};
}

nlohmann::json to_json(const cyclic::CyclicEstimate& est) {
    return nlohmann::json{{"lambda", est.lambda},
                          {"tau", est.tau},
                          {"re", est.value.real()},
                          {"im", est.value.imag()},
                          {"n", est.n}};
}

nlohmann::json to_json(const diag::ConsistencyReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        rows.push_back({{"n", row.n},
                        {"b", row.block_length},
                        {"ks", row.ks},
                        {"B", row.bootstrap_replicates},
                        {"R", row.truth_replicates}});
    }
    return nlohmann::json{{"block_exponent", report.block_exponent},
                          {"seed", report.seed},
                          {"rows", rows}};
}

nlohmann::json scan_summary(const detect::ScanResult& scan,
                            const std::vector<detect::SignificantFrequency>& significant,
                            std::optional<int> period) {
    nlohmann::json lambdas = nlohmann::json::array();
    for (const auto& sig : significant) lambdas.push_back(sig.lambda);
    nlohmann::json summary{{"n", scan.n},
                           {"tau", scan.tau},
                           {"alpha_lo", scan.alpha_lo},
                           {"alpha_hi", scan.alpha_hi},
                           {"grid_points", scan.points.size()},
                           {"significant_lambdas", lambdas}};
    if (period) {
        summary["inferred_period"] = *period;
    } else {
        summary["inferred_period"] = nullptr;
    }
    return summary;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::uint64_t hash = 14695981039346656037ULL;
    char c;
    while (in.get(c)) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace cycloscan::io
