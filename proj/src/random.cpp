#include "ulp/random.hpp"

#include <cmath>
#include <numbers>

namespace ulp {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

Philox4x32::Counter Philox4x32::generate(Counter ctr, Key key) noexcept {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

RandomStream::RandomStream(std::uint64_t seed, std::uint32_t stream_hi,
                           std::uint32_t stream_lo) noexcept
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      counter_{0, 0, stream_lo, stream_hi} {}

void RandomStream::refill() noexcept {
  block_ = Philox4x32::generate(counter_, key_);
  if (++counter_[0] == 0) ++counter_[1];
  index_ = 0;
}

std::uint32_t RandomStream::next_u32() noexcept {
  if (index_ == 4) refill();
  ++words_consumed_;
  return block_[index_++];
}

double RandomStream::uniform() noexcept {
  const std::uint64_t hi = next_u32();
  const std::uint64_t lo = next_u32();
  const std::uint64_t bits = ((hi << 32) | lo) >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

Complex RandomStream::complex_normal() noexcept {
  const double u1 = uniform();
  const double u2 = uniform();
  // |g|^2 = -2 ln u1 splits evenly over two real dimensions; scale to unit power.
  const double r = std::sqrt(-std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

RandomStream realization_stream(std::uint64_t master_seed, std::uint32_t realization) noexcept {
  return RandomStream(master_seed, 0, realization);
}

}  // namespace ulp
