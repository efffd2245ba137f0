#include "ulp/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ulp/config.hpp"
#include "ulp/errors.hpp"
#include "ulp/harness.hpp"
#include "ulp/report.hpp"
#include "ulp/text.hpp"

namespace ulp {
namespace {

// Flag values kept as text so that they are validated by the same parsers as
// config-file values and reported under the config key name.
struct RunFlags {
  std::string config_path;
  std::string seed;
  std::string snr;
  std::string schemes;
  std::string realizations;
  std::string frames;
  std::string symbols;
  std::string snr_offset_db;
  std::string out_dir;
  unsigned workers = 1;
};

void add_run_flags(CLI::App& cmd, RunFlags& f, bool single_point) {
  cmd.add_option("--config", f.config_path, "Flat key = value config file");
  cmd.add_option("--seed", f.seed, "Master seed (64-bit)");
  if (single_point) {
    cmd.add_option("--snr", f.snr, "Nominal SNR in dB")->required();
    cmd.add_option("--scheme", f.schemes,
                   "Scheme: LZFP, LMMSEP, ULZFP, ULMMSEP, LZFP-u0, LMMSEP-u0 "
                   "(optionally :u=X:m=Y)")
        ->required();
  } else {
    cmd.add_option("--snr", f.snr, "Comma-separated SNR list in dB");
    cmd.add_option("--schemes", f.schemes, "Comma-separated scheme list");
  }
  cmd.add_option("--realizations", f.realizations, "Channel realizations per point");
  cmd.add_option("--frames", f.frames, "Frames per realization");
  cmd.add_option("--symbols", f.symbols, "Symbol vectors per frame");
  cmd.add_option("--snr-offset-db", f.snr_offset_db, "Global SNR calibration offset in dB");
  cmd.add_option("--out", f.out_dir, "Output directory");
  cmd.add_option("--workers", f.workers, "Worker threads (does not change results)")
      ->check(CLI::PositiveNumber);
}

SimulationConfig build_config(const RunFlags& f) {
  SimulationConfig config;
  if (!f.config_path.empty()) config = parse_config_file(f.config_path);
  const std::pair<const std::string*, const char*> overrides[] = {
      {&f.seed, "master_seed"},
      {&f.snr, "snr_db_list"},
      {&f.schemes, "schemes"},
      {&f.realizations, "n_realizations"},
      {&f.frames, "frames_per_realization"},
      {&f.symbols, "symbols_per_frame"},
      {&f.snr_offset_db, "snr_offset_db"},
  };
  for (const auto& [value, key] : overrides) {
    if (!value->empty()) set_config_value(config, key, *value);
  }
  config.validate();
  return config;
}

int run_sweep_command(const RunFlags& flags, std::ostream& out) {
  const SimulationConfig config = build_config(flags);
  const RunManifest manifest =
      RunManifest::in_directory(flags.out_dir.empty() ? "results" : flags.out_dir, config);
  manifest.validate();
  const BerTable table = run_sweep(config, {flags.workers});
  emit_all(table, manifest);
  write_table_csv(table, out);
  out << '\n';
  write_gap_csv(gap_rows(table), out);
  return kExitOk;
}

int run_point_command(const RunFlags& flags, std::ostream& out) {
  SimulationConfig config = build_config(flags);
  if (config.snr_db_list.size() != 1 || config.schemes.size() != 1) {
    throw ConfigError("point: expected exactly one --scheme and one --snr value");
  }
  BerTable table;
  table.config = config;
  table.metadata = {config.master_seed, config_hash(config), std::string(library_version())};
  table.records.push_back(
      run_point(config, config.schemes.front(), config.snr_db_list.front(), {flags.workers}));
  if (!flags.out_dir.empty()) emit_all(table, RunManifest::in_directory(flags.out_dir, config));
  write_table_csv(table, out);
  return kExitOk;
}

int run_gaps_command(const std::string& table_path, const std::string& out_dir,
                     std::ostream& out) {
  std::ifstream in(table_path, std::ios::binary);
  if (!in) throw IoError("cannot read result table " + table_path);
  std::ostringstream text;
  text << in.rdbuf();
  BerTable table;
  table.records = parse_table_csv(text.str());
  const std::vector<GapRow> rows = gap_rows(table);
  if (!out_dir.empty()) {
    const auto path = std::filesystem::path(out_dir) / "ber_gaps.csv";
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot write " + path.string());
    write_gap_csv(rows, file);
    if (!file) throw IoError("write failed for " + path.string());
  }
  write_gap_csv(rows, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear and unified linear precoding BER simulator for MU-MIMO downlink",
               "ulpsim"};
  app.set_version_flag("--version", std::string(library_version()));
  app.require_subcommand(1);

  RunFlags sweep_flags;
  CLI::App* sweep = app.add_subcommand("sweep", "Run every (scheme, SNR) point of a config");
  add_run_flags(*sweep, sweep_flags, false);

  RunFlags point_flags;
  CLI::App* point = app.add_subcommand("point", "Run a single scheme at a single SNR");
  add_run_flags(*point, point_flags, true);

  std::string table_path;
  std::string gaps_out;
  CLI::App* gaps = app.add_subcommand("gaps", "Compute BER gaps from an existing result CSV");
  gaps->add_option("table", table_path, "Result CSV written by sweep")->required();
  gaps->add_option("--out", gaps_out, "Directory for ber_gaps.csv");

  std::vector<const char*> argv;
  argv.push_back("ulpsim");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (*sweep) return run_sweep_command(sweep_flags, out);
    if (*point) return run_point_command(point_flags, out);
    return run_gaps_command(table_path, gaps_out, out);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const LookupError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumericalError;
  }
}

}  // namespace ulp
