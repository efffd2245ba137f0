#pragma once

#include <array>
#include <cstdint>

#include "ulp/numerics.hpp"

namespace ulp {

/// Philox4x32-10 counter-based block function (Salmon et al., Random123).
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter generate(Counter counter, Key key) noexcept;
};

/// Sequential view of one Philox stream.
///
/// The key carries the master seed; counter words 2 and 3 identify the stream
/// and words 0..1 index blocks within it. Every draw consumes a fixed number
/// of 32-bit words, so two streams with equal identity yield identical values
/// regardless of which thread or process draws them.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint32_t stream_hi, std::uint32_t stream_lo) noexcept;

  std::uint32_t next_u32() noexcept;

  /// Uniform on the open interval (0, 1) with 53 random bits; two words.
  double uniform() noexcept;

  /// CN(0, 1) via Box-Muller on exactly two uniforms.
  Complex complex_normal() noexcept;

  std::uint64_t words_consumed() const noexcept { return words_consumed_; }

 private:
  void refill() noexcept;

  Philox4x32::Key key_;
  Philox4x32::Counter counter_;
  Philox4x32::Counter block_{};
  unsigned index_ = 4;
  std::uint64_t words_consumed_ = 0;
};

/// Stream for one Monte Carlo realization.
///
/// Neither scheme nor SNR is part of the key: every (scheme, SNR) point sees
/// the same channel pool, bits and unit-variance noise for realization r.
RandomStream realization_stream(std::uint64_t master_seed, std::uint32_t realization) noexcept;

}  // namespace ulp
