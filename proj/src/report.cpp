#include "ulp/report.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "ulp/errors.hpp"
#include "ulp/text.hpp"

namespace ulp {
namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void write_file(const std::filesystem::path& path,
                const std::function<void(std::ostream&)>& body) {
  std::ofstream out = open_output(path);
  body(out);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

std::string hex64(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << v;
  return s.str();
}

}  // namespace

RunManifest RunManifest::in_directory(const std::filesystem::path& directory,
                                      const SimulationConfig& config) {
  return RunManifest{config,
                     directory / "ber_table.csv",
                     directory / "ber_gaps.csv",
                     directory / "ber_plot.csv",
                     directory / "run_log.jsonl",
                     std::string(library_version())};
}

void RunManifest::validate() const {
  const std::set<std::filesystem::path> unique{table_csv.lexically_normal(),
                                               gap_csv.lexically_normal(),
                                               plot_csv.lexically_normal(),
                                               run_log.lexically_normal()};
  if (unique.size() != 4) throw ConfigError("output paths must be distinct");
  config.validate();
}

const std::vector<std::pair<std::string, std::string>>& gap_pairs() {
  static const std::vector<std::pair<std::string, std::string>> pairs{
      {"LZFP", "LMMSEP"},
      {"LZFP-u0", "LMMSEP-u0"},
      {"ULZFP", "ULMMSEP"},
      {"LZFP-u0", "LZFP"},
      {"LMMSEP-u0", "LMMSEP"},
  };
  return pairs;
}

std::vector<GapRow> gap_rows(const BerTable& table) {
  std::set<double> snrs;
  for (const BerRecord& r : table.records) snrs.insert(r.snr_db);
  std::vector<GapRow> rows;
  for (double snr : snrs) {
    for (const auto& [a, b] : gap_pairs()) {
      try {
        rows.push_back({snr, a, b, ber_gap(table, a, b, snr)});
      } catch (const LookupError&) {
        // pair not simulated in this run
      }
    }
  }
  return rows;
}

void write_table_csv(const BerTable& table, std::ostream& out) {
  out << kTableHeader << '\n';
  for (const BerRecord& r : table.records) {
    out << format_shortest(r.snr_db) << ',' << r.scheme.name() << ','
        << format_shortest(r.scheme.u) << ',' << format_shortest(r.scheme.m) << ','
        << r.bit_errors << ',' << r.bits_total << ',' << format_scientific(r.ber()) << ','
        << format_scientific(r.standard_error()) << ','
        << (r.low_confidence() ? "true" : "false") << '\n';
  }
}

void write_gap_csv(const std::vector<GapRow>& rows, std::ostream& out) {
  out << kGapHeader << '\n';
  for (const GapRow& g : rows) {
    out << format_shortest(g.snr_db) << ',' << g.scheme_a << ',' << g.scheme_b << ','
        << format_scientific(g.gap) << '\n';
  }
}

void write_plot_csv(const BerTable& table, std::ostream& out) {
  out << "# BER spans several decades: plot ber on a logarithmic axis, one series per scheme\n";
  out << kPlotHeader << '\n';
  for (const SchemeMode& scheme : table.config.schemes) {
    for (const BerRecord& r : table.records) {
      if (r.scheme == scheme) {
        out << format_shortest(r.snr_db) << ',' << r.scheme.name() << ','
            << format_shortest(r.ber()) << '\n';
      }
    }
  }
}

void write_run_log(const BerTable& table, std::ostream& out) {
  const SimulationConfig& c = table.config;
  nlohmann::ordered_json config_json{
      {"M_T", c.tx_antennas},
      {"K_t", c.candidate_users},
      {"K_at", c.active_users},
      {"n_realizations", c.realizations},
      {"frames_per_realization", c.frames_per_realization},
      {"symbols_per_frame", c.symbols_per_frame},
      {"normalize_data_block_only", c.normalize_data_block_only},
      {"snr_offset_db", c.snr_offset_db},
  };
  for (const BerRecord& r : table.records) {
    nlohmann::ordered_json line{
        {"scheme", r.scheme.name()},
        {"label", to_string(r.scheme.label())},
        {"family", r.scheme.family == PrecoderFamily::unified ? "unified" : "conventional"},
        {"u", r.scheme.u},
        {"m", r.scheme.m},
        {"snr_db", r.snr_db},
        {"noise_variance", snr_db_to_noise_variance(r.snr_db + c.snr_offset_db)},
        {"bit_errors", r.bit_errors},
        {"bits_total", r.bits_total},
        {"ber", r.ber()},
        {"std_err", r.standard_error()},
        {"low_confidence", r.low_confidence()},
        {"master_seed", table.metadata.master_seed},
        {"config_hash", hex64(table.metadata.config_hash)},
        {"version", table.metadata.version},
        {"config", config_json},
    };
    out << line.dump() << '\n';
  }
}

std::vector<BerRecord> parse_table_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || trim(line) != kTableHeader) {
    throw ConfigError("result table: missing header '" + std::string(kTableHeader) + "'");
  }
  std::vector<BerRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 9) {
      throw ConfigError("result table line " + std::to_string(line_no) + ": expected 9 fields");
    }
    BerRecord r;
    r.snr_db = parse_double(f[0], "snr_db");
    r.scheme = SchemeMode::parse(f[1]);
    if (r.scheme.u != parse_double(f[2], "u") || r.scheme.m != parse_double(f[3], "m")) {
      throw ConfigError("result table line " + std::to_string(line_no) +
                        ": u/m columns disagree with scheme " + f[1]);
    }
    r.bit_errors = parse_unsigned(f[4], "bit_errors");
    r.bits_total = parse_unsigned(f[5], "bits_total");
    if (r.bit_errors > r.bits_total) {
      throw ConfigError("result table line " + std::to_string(line_no) +
                        ": bit_errors exceeds bits_total");
    }
    records.push_back(std::move(r));
  }
  return records;
}

void emit_table(const BerTable& table, const std::filesystem::path& table_path,
                const std::filesystem::path& gap_path) {
  write_file(table_path, [&](std::ostream& out) { write_table_csv(table, out); });
  write_file(gap_path, [&](std::ostream& out) { write_gap_csv(gap_rows(table), out); });
}

void emit_plot_data(const BerTable& table, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_plot_csv(table, out); });
}

void emit_run_log(const BerTable& table, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_run_log(table, out); });
}

void emit_all(const BerTable& table, const RunManifest& manifest) {
  manifest.validate();
  emit_table(table, manifest.table_csv, manifest.gap_csv);
  emit_plot_data(table, manifest.plot_csv);
  emit_run_log(table, manifest.run_log);
}

}  // namespace ulp
