#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "ulp/random.hpp"

namespace ulp {
namespace {

// Known-answer vectors published with Random123 for philox4x32-10.
TEST(Philox4x32, KnownAnswerZero) {
  const auto out = Philox4x32::generate({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(out, (Philox4x32::Counter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
}

TEST(Philox4x32, KnownAnswerAllOnes) {
  const auto out = Philox4x32::generate({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                        {0xffffffffu, 0xffffffffu});
  EXPECT_EQ(out, (Philox4x32::Counter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
}

TEST(Philox4x32, KnownAnswerPiDigits) {
  const auto out = Philox4x32::generate({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                                        {0xa4093822u, 0x299f31d0u});
  EXPECT_EQ(out, (Philox4x32::Counter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(RandomStream, SameIdentitySameSequence) {
  RandomStream a(42, 7, 3);
  RandomStream b(42, 7, 3);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next_u32(), b.next_u32());
}

TEST(RandomStream, DistinctIdentitiesDiffer) {
  RandomStream base(42, 7, 3);
  RandomStream other_seed(43, 7, 3);
  RandomStream other_hi(42, 8, 3);
  RandomStream other_lo(42, 7, 4);
  const auto first = base.next_u32();
  EXPECT_NE(first, other_seed.next_u32());
  EXPECT_NE(first, other_hi.next_u32());
  EXPECT_NE(first, other_lo.next_u32());
}

TEST(RandomStream, FixedWordConsumption) {
  RandomStream s(1, 0, 0);
  s.next_u32();
  EXPECT_EQ(s.words_consumed(), 1u);
  s.uniform();
  EXPECT_EQ(s.words_consumed(), 3u);
  s.complex_normal();
  EXPECT_EQ(s.words_consumed(), 7u);
}

TEST(RandomStream, CrossesBlockBoundariesSequentially) {
  RandomStream s(5, 1, 2);
  const auto block0 = Philox4x32::generate({0, 0, 2, 1}, {5, 0});
  const auto block1 = Philox4x32::generate({1, 0, 2, 1}, {5, 0});
  for (unsigned i = 0; i < 4; ++i) EXPECT_EQ(s.next_u32(), block0[i]);
  for (unsigned i = 0; i < 4; ++i) EXPECT_EQ(s.next_u32(), block1[i]);
}

TEST(RandomStream, UniformStaysInOpenInterval) {
  RandomStream s(9, 0, 0);
  double sum = 0.0;
  constexpr int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  // mean of U(0,1): standard error sqrt(1/12 / n)
  EXPECT_NEAR(sum / n, 0.5, 3.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST(RealizationStream, KeyedBySeedAndRealization) {
  auto first = [](RandomStream s) { return s.next_u32(); };
  const auto base = first(realization_stream(1, 0));
  EXPECT_EQ(base, first(realization_stream(1, 0)));
  EXPECT_NE(base, first(realization_stream(1, 1)));
  EXPECT_NE(base, first(realization_stream(2, 0)));
}

TEST(RealizationStream, ManyStreamsDoNotCollide) {
  std::set<std::uint32_t> seen;
  for (std::uint32_t r = 0; r < 2000; ++r) seen.insert(realization_stream(3, r).next_u32());
  EXPECT_GT(seen.size(), 1995u);
}

}  // namespace
}  // namespace ulp
