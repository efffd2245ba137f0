#include "ulp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "ulp/channel.hpp"
#include "ulp/errors.hpp"
#include "ulp/modem.hpp"
#include "ulp/random.hpp"
#include "ulp/text.hpp"

#ifndef ULP_VERSION_STRING
#define ULP_VERSION_STRING "ulpsim-dev"
#endif

namespace ulp {

double BerRecord::ber() const noexcept {
  return bits_total == 0 ? 0.0
                         : static_cast<double>(bit_errors) / static_cast<double>(bits_total);
}

double BerRecord::standard_error() const noexcept {
  if (bits_total == 0) return 0.0;
  const double p = ber();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(bits_total));
}

const BerRecord& BerTable::at(std::string_view scheme_name, double snr_db) const {
  for (const BerRecord& r : records) {
    if (r.snr_db == snr_db && r.scheme.name() == scheme_name) return r;
  }
  throw LookupError("no record for scheme " + std::string(scheme_name) + " at " +
                    format_shortest(snr_db) + " dB");
}

double snr_db_to_noise_variance(double snr_db) noexcept {
  return std::pow(10.0, -snr_db / 10.0);
}

std::string_view library_version() noexcept { return ULP_VERSION_STRING; }

std::uint64_t run_realization(const SimulationConfig& config, const SchemeMode& scheme,
                              double snr_db, std::uint32_t realization) {
  const std::size_t users = config.active_users;
  const double n0 = snr_db_to_noise_variance(snr_db + config.snr_offset_db);
  const double noise_sigma = std::sqrt(n0);

  RandomStream rng = realization_stream(config.master_seed, realization);
  const UserPool pool = draw_user_pool(rng, config.candidate_users, config.tx_antennas);
  const ChannelMatrix channel = select_users(pool, users);
  const Precoder precoder =
      build_precoder(channel, scheme, n0, config.power_normalization());
  const ReceiveChain chain(channel, precoder);

  const std::size_t bit_count = 2 * users;
  const std::size_t words = (bit_count + 31) / 32;
  BitBlock bits(bit_count);
  BitBlock decided(bit_count);
  std::vector<Complex> symbols(users);
  std::vector<Complex> noise(users);
  std::vector<Complex> estimate(users);

  std::uint64_t errors = 0;
  const std::uint64_t vectors = config.frames_per_realization * config.symbols_per_frame;
  for (std::uint64_t v = 0; v < vectors; ++v) {
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint32_t word = rng.next_u32();
      const std::size_t end = std::min(bit_count, 32 * (w + 1));
      for (std::size_t b = 32 * w; b < end; ++b) bits[b] = (word >> (b - 32 * w)) & 1u;
    }
    qpsk_modulate(bits, symbols);
    for (Complex& z : noise) z = noise_sigma * rng.complex_normal();
    chain.receive(symbols, noise, estimate);
    qpsk_demodulate(estimate, decided);
    for (std::size_t b = 0; b < bit_count; ++b) errors += bits[b] != decided[b];
  }
  return errors;
}

std::uint64_t sum_over_realizations(
    std::uint64_t total, unsigned workers,
    const std::function<std::uint64_t(std::uint32_t)>& count_errors, std::string_view context) {
  std::vector<std::uint64_t> errors(total, 0);
  std::atomic<std::uint64_t> next{0};
  std::mutex failure_mutex;
  std::uint64_t failed_at = std::numeric_limits<std::uint64_t>::max();
  std::string failure;

  auto work = [&] {
    for (std::uint64_t r = next++; r < total; r = next++) {
      try {
        errors[r] = count_errors(static_cast<std::uint32_t>(r));
      } catch (const Error& e) {
        const std::lock_guard lock(failure_mutex);
        if (r < failed_at) {
          failed_at = r;
          failure = e.what();
        }
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  if (failed_at != std::numeric_limits<std::uint64_t>::max()) {
    throw NumericalError(std::string(context) + ", realization " + std::to_string(failed_at) +
                         ": " + failure);
  }
  return std::accumulate(errors.begin(), errors.end(), std::uint64_t{0});
}

BerRecord run_point(const SimulationConfig& config, const SchemeMode& scheme, double snr_db,
                    const ExecutionOptions& options) {
  config.validate();
  scheme.validate();
  const std::uint64_t errors = sum_over_realizations(
      config.realizations, options.workers,
      [&](std::uint32_t r) { return run_realization(config, scheme, snr_db, r); },
      scheme.name() + " at " + format_shortest(snr_db) + " dB");
  return BerRecord{scheme, snr_db, errors, config.bits_per_point()};
}

BerTable run_sweep(const SimulationConfig& config, const ExecutionOptions& options) {
  config.validate();
  BerTable table;
  table.config = config;
  table.metadata = {config.master_seed, config_hash(config), std::string(library_version())};

  std::vector<double> snrs = config.snr_db_list;
  std::sort(snrs.begin(), snrs.end());
  for (double snr : snrs) {
    for (const SchemeMode& scheme : config.schemes) {
      table.records.push_back(run_point(config, scheme, snr, options));
    }
  }
  return table;
}

double ber_gap(const BerTable& table, std::string_view scheme_a, std::string_view scheme_b,
               double snr_db) {
  return table.at(scheme_a, snr_db).ber() - table.at(scheme_b, snr_db).ber();
}

}  // namespace ulp
