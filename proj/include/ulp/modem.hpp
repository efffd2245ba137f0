#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ulp/channel.hpp"
#include "ulp/numerics.hpp"
#include "ulp/precoder.hpp"
#include "ulp/random.hpp"

namespace ulp {

/// Bits as 0/1 bytes; two consecutive bits form one QPSK symbol.
using BitBlock = std::vector<std::uint8_t>;

/// Gray-mapped QPSK: (b0, b1) -> ((1 - 2 b0) + i (1 - 2 b1)) / sqrt(2).
/// Throws FramingError for odd length or values other than 0/1.
std::vector<Complex> qpsk_modulate(std::span<const std::uint8_t> bits);

/// Unchecked variant writing bits.size() / 2 symbols into `out`.
void qpsk_modulate(std::span<const std::uint8_t> bits, std::span<Complex> out) noexcept;

/// Sign decisions: b0 = (Re < 0), b1 = (Im < 0); zero decides 0.
BitBlock qpsk_demodulate(std::span<const Complex> symbols);

void qpsk_demodulate(std::span<const Complex> symbols, std::span<std::uint8_t> out) noexcept;

/// i.i.d. CN(0, n0) samples, each consuming two uniforms of `rng`.
std::vector<Complex> draw_awgn(RandomStream& rng, std::size_t n, double n0);

/// Physical downlink with receiver AGC for one (channel, precoder) pair.
///
/// Computes x_hat = beta^{-1} (H F_data x) + beta^{-1} z. The gain applies to
/// both terms separately so that the noise contribution is exactly additive.
class ReceiveChain {
 public:
  ReceiveChain(const ChannelMatrix& channel, const Precoder& precoder);

  std::size_t stream_count() const noexcept { return gain_.cols(); }
  std::size_t receiver_count() const noexcept { return gain_.rows(); }

  void receive(std::span<const Complex> symbols, std::span<const Complex> noise,
               std::span<Complex> estimate) const;

  std::vector<Complex> receive(std::span<const Complex> symbols,
                               std::span<const Complex> noise) const;

 private:
  ComplexMatrix gain_;  // H F_data
  double inv_beta_;
};

std::vector<Complex> transmit_receive(const ChannelMatrix& channel, const Precoder& precoder,
                                      std::span<const Complex> symbols,
                                      std::span<const Complex> noise);

}  // namespace ulp
