#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ulp/config.hpp"
#include "ulp/precoder.hpp"

namespace ulp {

/// Scheduling knobs that must not change any result.
struct ExecutionOptions {
  unsigned workers = 1;
};

/// Error count of one (scheme, SNR) point.
struct BerRecord {
  SchemeMode scheme;
  double snr_db = 0.0;
  std::uint64_t bit_errors = 0;
  std::uint64_t bits_total = 0;

  double ber() const noexcept;
  /// sqrt(ber (1 - ber) / bits_total).
  double standard_error() const noexcept;
  /// Fewer than 10 errors: reported, not asserted against.
  bool low_confidence() const noexcept { return bit_errors < 10; }
};

struct RunMetadata {
  std::uint64_t master_seed = 0;
  std::uint64_t config_hash = 0;
  std::string version;
};

struct BerTable {
  SimulationConfig config;
  RunMetadata metadata;
  std::vector<BerRecord> records;  // ordered by (snr_db, scheme order in config)

  /// Throws LookupError when absent.
  const BerRecord& at(std::string_view scheme_name, double snr_db) const;
};

/// E_s / N_0 per stream with unit symbol energy: N0 = 10^(-snr_db / 10).
double snr_db_to_noise_variance(double snr_db) noexcept;

std::string_view library_version() noexcept;

/// Bit errors of one realization; the unit of parallel work.
std::uint64_t run_realization(const SimulationConfig& config, const SchemeMode& scheme,
                              double snr_db, std::uint32_t realization);

/// Sums count_errors(r) over r in [0, total) on `workers` threads.
///
/// Each index is evaluated exactly once and the integer sum does not depend on
/// scheduling. If any evaluation throws, the failure with the lowest index is
/// rethrown as NumericalError prefixed with `context` and the index.
std::uint64_t sum_over_realizations(
    std::uint64_t total, unsigned workers,
    const std::function<std::uint64_t(std::uint32_t)>& count_errors, std::string_view context);

/// Monte Carlo BER of one scheme at one nominal SNR.
///
/// Realization r draws its channel pool, bits and noise from
/// realization_stream(master_seed, r); the precoder regularizes with
/// sigma2 = N0 at snr_db + snr_offset_db. The error count is independent of
/// the worker count. A numerical failure raises NumericalError naming the
/// lowest failing realization.
BerRecord run_point(const SimulationConfig& config, const SchemeMode& scheme, double snr_db,
                    const ExecutionOptions& options = {});

/// run_point for every (scheme, SNR) pair of the config.
BerTable run_sweep(const SimulationConfig& config, const ExecutionOptions& options = {});

/// ber(a) - ber(b) at snr_db.
double ber_gap(const BerTable& table, std::string_view scheme_a, std::string_view scheme_b,
               double snr_db);

}  // namespace ulp
