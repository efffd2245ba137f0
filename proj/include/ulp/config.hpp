#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ulp/precoder.hpp"

namespace ulp {

/// Full description of a Monte Carlo experiment.
///
/// Everything that influences the numbers lives here; the worker count does
/// not (see ExecutionOptions).
struct SimulationConfig {
  std::size_t tx_antennas = 8;       // M_T
  std::size_t candidate_users = 20;  // K_t
  std::size_t active_users = 8;      // K_at
  std::vector<double> snr_db_list{14.0, 20.0, 30.0};
  std::vector<SchemeMode> schemes = default_schemes();
  std::uint64_t realizations = 1000;
  std::uint64_t frames_per_realization = 10;
  std::uint64_t symbols_per_frame = 100;
  std::uint64_t master_seed = 1;
  bool normalize_data_block_only = false;
  double snr_offset_db = 0.0;

  /// Throws ConfigError naming the offending key.
  void validate() const;

  /// n_realizations * frames * symbols * K_at * 2.
  std::uint64_t bits_per_point() const noexcept;

  PowerNormalization power_normalization() const noexcept {
    return normalize_data_block_only ? PowerNormalization::data_block
                                     : PowerNormalization::full_matrix;
  }
};

/// Flat `key = value` text, one key per line, in a fixed order. Parsing the
/// output reproduces the config exactly.
std::string to_config_text(const SimulationConfig& config);

/// FNV-1a over to_config_text().
std::uint64_t config_hash(const SimulationConfig& config);

/// Applies `key = value` lines from `text` on top of `base`.
///
/// `#` starts a comment; blank lines are ignored. Unknown keys, repeated keys
/// and malformed values raise ConfigError naming the key and its domain. The
/// result is validated.
SimulationConfig parse_config_text(std::string_view text,
                                   const SimulationConfig& base = SimulationConfig{});

/// Reads a config file; a missing or unreadable file is an IoError.
SimulationConfig parse_config_file(const std::filesystem::path& path,
                                   const SimulationConfig& base = SimulationConfig{});

/// Applies one key = value assignment (as read from a config file).
void set_config_value(SimulationConfig& config, std::string_view key, std::string_view value);

std::vector<double> parse_snr_list(std::string_view text);
std::vector<SchemeMode> parse_scheme_list(std::string_view text);

}  // namespace ulp
