#include "ulp/modem.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ulp/errors.hpp"

namespace ulp {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

}  // namespace

std::vector<Complex> qpsk_modulate(std::span<const std::uint8_t> bits) {
  if (bits.size() % 2 != 0) {
    throw FramingError("qpsk_modulate: " + std::to_string(bits.size()) +
                       " bits is not a whole number of symbols");
  }
  for (std::uint8_t b : bits) {
    if (b > 1) throw FramingError("qpsk_modulate: bit value " + std::to_string(b));
  }
  std::vector<Complex> out(bits.size() / 2);
  qpsk_modulate(bits, out);
  return out;
}

void qpsk_modulate(std::span<const std::uint8_t> bits, std::span<Complex> out) noexcept {
  for (std::size_t s = 0; s < out.size(); ++s) {
    out[s] = {(1.0 - 2.0 * bits[2 * s]) * kInvSqrt2, (1.0 - 2.0 * bits[2 * s + 1]) * kInvSqrt2};
  }
}

BitBlock qpsk_demodulate(std::span<const Complex> symbols) {
  BitBlock out(2 * symbols.size());
  qpsk_demodulate(symbols, out);
  return out;
}

void qpsk_demodulate(std::span<const Complex> symbols, std::span<std::uint8_t> out) noexcept {
  for (std::size_t s = 0; s < symbols.size(); ++s) {
    out[2 * s] = symbols[s].real() < 0.0 ? 1 : 0;
    out[2 * s + 1] = symbols[s].imag() < 0.0 ? 1 : 0;
  }
}

std::vector<Complex> draw_awgn(RandomStream& rng, std::size_t n, double n0) {
  if (!(n0 >= 0.0) || !std::isfinite(n0)) {
    throw ConfigError("draw_awgn: noise variance must be finite and non-negative");
  }
  const double sigma = std::sqrt(n0);
  std::vector<Complex> z(n);
  for (Complex& v : z) v = sigma * rng.complex_normal();
  return z;
}

ReceiveChain::ReceiveChain(const ChannelMatrix& channel, const Precoder& precoder)
    : gain_(matmul(channel.h, precoder.data_block())), inv_beta_(1.0 / precoder.beta) {}

void ReceiveChain::receive(std::span<const Complex> symbols, std::span<const Complex> noise,
                           std::span<Complex> estimate) const {
  if (symbols.size() != gain_.cols() || noise.size() != gain_.rows() ||
      estimate.size() != gain_.rows()) {
    throw ShapeError("transmit_receive: expected " + std::to_string(gain_.cols()) +
                     " symbols and " + std::to_string(gain_.rows()) + " noise samples, got " +
                     std::to_string(symbols.size()) + " and " + std::to_string(noise.size()));
  }
  for (std::size_t i = 0; i < gain_.rows(); ++i) {
    const auto row = gain_.row(i);
    Complex y{};
    for (std::size_t k = 0; k < row.size(); ++k) y += row[k] * symbols[k];
    estimate[i] = inv_beta_ * y + inv_beta_ * noise[i];
  }
}

std::vector<Complex> ReceiveChain::receive(std::span<const Complex> symbols,
                                           std::span<const Complex> noise) const {
  std::vector<Complex> estimate(gain_.rows());
  receive(symbols, noise, estimate);
  return estimate;
}

std::vector<Complex> transmit_receive(const ChannelMatrix& channel, const Precoder& precoder,
                                      std::span<const Complex> symbols,
                                      std::span<const Complex> noise) {
  if (precoder.f.rows() != channel.antenna_count() ||
      precoder.data_columns > precoder.f.cols()) {
    throw ShapeError("transmit_receive: precoder does not match the channel");
  }
  return ReceiveChain(channel, precoder).receive(symbols, noise);
}

}  // namespace ulp
