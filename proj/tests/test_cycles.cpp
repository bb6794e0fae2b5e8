#include <gtest/gtest.h>

#include <random>

#include "egs/cycles.hpp"
#include "support.hpp"

namespace egs {
namespace {

TEST(Witness, Verification) {
  auto g = testing::cycle(5);
  EXPECT_TRUE(verify_witness(g, {{0, 1, 2, 3, 4}, 5}));
  EXPECT_TRUE(verify_witness(g, {{2, 1, 0, 4, 3}, 5}));
  EXPECT_FALSE(verify_witness(g, {{0, 1, 2, 3, 4}, 4}));
  EXPECT_FALSE(verify_witness(g, {{0, 1, 2}, 3}));
  EXPECT_FALSE(verify_witness(g, {{0, 1, 0, 1}, 4}));
  EXPECT_FALSE(verify_witness(g, {{0, 1, 2, 3, 9}, 5}));
  EXPECT_FALSE(verify_witness(g, {{0, 1}, 2}));
}

TEST(FixedLength, K4HasFourCycle) {
  auto w = has_cycle_of_length(testing::complete(4), 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->length, 4u);
  EXPECT_TRUE(verify_witness(testing::complete(4), *w));
}

TEST(FixedLength, RejectsShortLengths) {
  EXPECT_THROW(has_cycle_of_length(testing::complete(4), 2), std::invalid_argument);
  EXPECT_THROW(find_power_of_two_cycle(testing::complete(4), 1), std::invalid_argument);
}

TEST(FixedLength, LongerThanGraph) { EXPECT_FALSE(has_cycle_of_length(testing::cycle(5), 6)); }

TEST(Spectrum, Petersen) {
  const auto p = testing::petersen();
  const std::set<std::size_t> expected{5, 6, 8, 9};
  EXPECT_EQ(cycle_spectrum_bruteforce(p), expected);
  EXPECT_EQ(testing::cycle_lengths_dp(p), expected);
  for (std::size_t len = 3; len <= 10; ++len)
    EXPECT_EQ(has_cycle_of_length(p, len).has_value(), expected.count(len) == 1) << len;
}

TEST(PowerOfTwo, PetersenGivesEight) {
  auto w = find_power_of_two_cycle(testing::petersen());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->length, 8u);
  EXPECT_TRUE(verify_witness(testing::petersen(), *w));
}

TEST(PowerOfTwo, ExponentCap) {
  auto c16 = testing::cycle(16);
  EXPECT_FALSE(find_power_of_two_cycle(c16, 3));
  auto w = find_power_of_two_cycle(c16, 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->length, 16u);
}

TEST(PowerOfTwo, DisconnectedUsesLargeComponent) {
  // C5 beside C8: only the second component carries a power-of-two cycle.
  GraphBuilder<1> b(13);
  for (Vertex v = 0; v < 5; ++v) b.add_edge(v, (v + 1) % 5);
  for (Vertex v = 0; v < 8; ++v) b.add_edge(5 + v, 5 + (v + 1) % 8);
  auto g = b.build();
  auto w = find_power_of_two_cycle(g);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->length, 8u);
  EXPECT_TRUE(verify_witness(g, *w));
}

TEST(PowerOfTwo, WideGraphs) {
  // 64-cycle on vertices 6..69 plus a triangle: needs two words per row.
  GraphBuilder<2> b(70);
  for (Vertex v = 0; v < 64; ++v) b.add_edge(6 + v, 6 + (v + 1) % 64);
  b.add_edge(0, 1).add_edge(1, 2).add_edge(0, 2);
  auto g = b.build();
  EXPECT_FALSE(find_power_of_two_cycle(g, 5));
  auto w = find_power_of_two_cycle(g, 6);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->length, 64u);
  EXPECT_TRUE(verify_witness(g, *w));
}

TEST(FixedLength, AgreesWithDynamicProgramming) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> order(3, 12);
  std::uniform_real_distribution<double> density(0.1, 0.6);
  for (int t = 0; t < 1500; ++t) {
    auto g = testing::random_graph(rng, order(rng), density(rng));
    const auto spectrum = testing::cycle_lengths_dp(g);
    ASSERT_EQ(cycle_spectrum_bruteforce(g), spectrum);
    for (std::size_t len = 3; len <= g.order(); ++len) {
      auto w = has_cycle_of_length(g, len);
      ASSERT_EQ(w.has_value(), spectrum.count(len) == 1) << testing::reference_graph6(g) << " L=" << len;
      if (w) {
        ASSERT_EQ(w->length, len);
        ASSERT_TRUE(verify_witness(g, *w));
      }
    }
  }
}

}  // namespace
}  // namespace egs
