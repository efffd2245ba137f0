#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ulp/harness.hpp"

namespace ulp {

/// Where one run writes its results.
struct RunManifest {
  SimulationConfig config;
  std::filesystem::path table_csv;
  std::filesystem::path gap_csv;
  std::filesystem::path plot_csv;
  std::filesystem::path run_log;
  std::string version;

  /// Standard file names under `directory`.
  static RunManifest in_directory(const std::filesystem::path& directory,
                                  const SimulationConfig& config);

  /// Throws ConfigError when two outputs share a path.
  void validate() const;
};

inline constexpr std::string_view kTableHeader =
    "snr_db,scheme,u,m,bit_errors,bits_total,ber,std_err,low_confidence";
inline constexpr std::string_view kGapHeader = "snr_db,scheme_a,scheme_b,gap";
inline constexpr std::string_view kPlotHeader = "snr_db,scheme,ber";

struct GapRow {
  double snr_db = 0.0;
  std::string scheme_a;
  std::string scheme_b;
  double gap = 0.0;
};

/// Scheme pairs compared per SNR, (suboptimal, optimal) orientation:
/// conventional LZFP/LMMSEP, the u = 0 unified pair, the u = 1 unified pair,
/// and the two reductions of the unified construction onto the conventional one.
const std::vector<std::pair<std::string, std::string>>& gap_pairs();

/// Gap rows for every pair in gap_pairs() present in the table.
std::vector<GapRow> gap_rows(const BerTable& table);

void write_table_csv(const BerTable& table, std::ostream& out);
void write_gap_csv(const std::vector<GapRow>& rows, std::ostream& out);
void write_plot_csv(const BerTable& table, std::ostream& out);
/// One JSON object per record with full-precision values and provenance.
void write_run_log(const BerTable& table, std::ostream& out);

/// Records from text produced by write_table_csv. BER and standard error are
/// recomputed from the integer counts, so the round trip is exact.
std::vector<BerRecord> parse_table_csv(std::string_view text);

/// Result CSV plus the gap CSV next to it. I/O failure raises IoError.
void emit_table(const BerTable& table, const std::filesystem::path& table_path,
                const std::filesystem::path& gap_path);
void emit_plot_data(const BerTable& table, const std::filesystem::path& path);
void emit_run_log(const BerTable& table, const std::filesystem::path& path);

/// All four outputs of a manifest.
void emit_all(const BerTable& table, const RunManifest& manifest);

}  // namespace ulp
