#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "cycloscan/cyclic.hpp"
#include "cycloscan/detect.hpp"
#include "cycloscan/diagnostics.hpp"
#include "cycloscan/mbb.hpp"

namespace cycloscan::io {

/// Series files are single-column CSV: header "x", one value per row, the
/// time index implicit in row order (row 1 = t = 1).
/// Throws std::runtime_error on malformed or non-finite input.
[[nodiscard]] std::vector<double> read_series_csv(const std::string& path);
void write_series_csv(const std::string& path, std::span<const double> x);

/// Scan table, one row per grid point:
///   lambda  re  re_lo  re_hi  im  im_lo  im_hi  reject
void write_scan_tsv(const std::string& path, const detect::ScanResult& scan);

[[nodiscard]] nlohmann::json to_json(const mbb::BootstrapDistribution& dist);
[[nodiscard]] nlohmann::json to_json(const mbb::ComplexBootstrapDistribution& dist);
[[nodiscard]] nlohmann::json to_json(const cyclic::CyclicEstimate& est);
[[nodiscard]] nlohmann::json to_json(const diag::ConsistencyReport& report);

[[nodiscard]] nlohmann::json scan_summary(
    const detect::ScanResult& scan,
    const std::vector<detect::SignificantFrequency>& significant,
    std::optional<int> period);

/// Shortest-round-trip decimal form used for every numeric cell we write.
[[nodiscard]] std::string format_double(double v);

/// FNV-1a 64-bit digest of a file's bytes, as "fnv1a64:<hex>".
[[nodiscard]] std::string file_digest(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace cycloscan::io
