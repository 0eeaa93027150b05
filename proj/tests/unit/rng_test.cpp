// Copyright 2026 The popgym-cpp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "popgym/rng.hpp"

namespace popgym {
namespace {

TEST(Pcg32Test, MatchesReferenceOutput) {
  // pcg32_srandom_r(&rng, 42, 54) from the PCG reference demo.
  Pcg32 rng(42, 54);
  const std::uint32_t expected[] = {0xa15c02b7, 0x7b47f409, 0xba1d3330,
                                    0x83d2f293, 0xbfa4784b, 0xcbed606e};
  for (std::uint32_t want : expected) EXPECT_EQ(rng.next_u32(), want);
}

TEST(RngStreamTest, SameSeedAndLabelRepeat) {
  Pcg32 a = rng_stream(EpisodeSeed(99), streams::kLevel);
  Pcg32 b = rng_stream(EpisodeSeed(99), streams::kLevel);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next_u32(), b.next_u32());
}

TEST(RngStreamTest, LabelsAndSeedsDiffer) {
  Pcg32 level = rng_stream(EpisodeSeed(1), streams::kLevel);
  Pcg32 noise = rng_stream(EpisodeSeed(1), streams::kNoise);
  Pcg32 other = rng_stream(EpisodeSeed(2), streams::kLevel);
  int same_label = 0;
  int same_seed = 0;
  for (int i = 0; i < 64; ++i) {
    const auto l = level.next_u32();
    same_label += l == noise.next_u32() ? 1 : 0;
    same_seed += l == other.next_u32() ? 1 : 0;
  }
  EXPECT_LT(same_label, 2);
  EXPECT_LT(same_seed, 2);
}

TEST(RngStreamTest, NoiseUnaffectedByLevelConsumption) {
  std::vector<double> quiet;
  {
    Pcg32 level = rng_stream(EpisodeSeed(5), streams::kLevel);
    Pcg32 noise = rng_stream(EpisodeSeed(5), streams::kNoise);
    level.next_u32();
    for (int i = 0; i < 100; ++i) quiet.push_back(noise.normal());
  }
  Pcg32 level = rng_stream(EpisodeSeed(5), streams::kLevel);
  Pcg32 noise = rng_stream(EpisodeSeed(5), streams::kNoise);
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 37; ++j) level.next_u64();
    ASSERT_EQ(noise.normal(), quiet[static_cast<std::size_t>(i)]);
  }
}

TEST(Pcg32Test, UniformMeanWithinThreeSigma) {
  constexpr int kDraws = 1'000'000;
  Pcg32 rng = rng_stream(EpisodeSeed(2024), streams::kLevel);
  double sum = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  // Var U(0,1) = 1/12.
  const double three_sigma = 3.0 * std::sqrt(1.0 / 12.0 / kDraws);
  EXPECT_NEAR(sum / kDraws, 0.5, three_sigma);
}

TEST(Pcg32Test, BelowIsUniform) {
  constexpr int kBins = 7;
  constexpr int kDraws = 700'000;
  Pcg32 rng(3, 9);
  std::vector<int> hist(kBins, 0);
  for (int i = 0; i < kDraws; ++i) {
    const auto v = rng.below(kBins);
    ASSERT_LT(v, static_cast<std::uint32_t>(kBins));
    ++hist[v];
  }
  // Binomial sd per bin; 5 sd leaves ~1e-5 chance of a false alarm over 7 bins.
  const double p = 1.0 / kBins;
  const double sd = std::sqrt(kDraws * p * (1 - p));
  for (int h : hist) EXPECT_NEAR(h, kDraws * p, 5 * sd);
}

TEST(Pcg32Test, NormalMomentsWithinBounds) {
  constexpr int kDraws = 400'000;
  Pcg32 rng(11, 12);
  double s = 0.0;
  double s2 = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const double z = rng.normal();
    s += z;
    s2 += z * z;
  }
  const double mean = s / kDraws;
  const double var = s2 / kDraws - mean * mean;
  EXPECT_NEAR(mean, 0.0, 4.0 / std::sqrt(kDraws));
  // sd of the sample variance of N(0,1) is sqrt(2/n).
  EXPECT_NEAR(var, 1.0, 4.0 * std::sqrt(2.0 / kDraws));
}

TEST(Pcg32Test, ShuffleIsPermutation) {
  Pcg32 rng(7, 7);
  std::vector<int> v(52);
  for (int i = 0; i < 52; ++i) v[static_cast<std::size_t>(i)] = i;
  rng.shuffle(std::span<int>(v));
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 52; ++i) EXPECT_EQ(sorted[static_cast<std::size_t>(i)], i);
}

}  // namespace
}  // namespace popgym
