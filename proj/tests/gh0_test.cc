// Copyright 2026 The ghapprox Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ghapprox/gh0.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "ghapprox/random_instances.h"
#include "oracles.h"
#include "test_util.h"

namespace ghapprox {
namespace {

using testing::ThrowsCode;
using testing::TwoPoint;

double Exhaustive(const FunctionOnSpace& f, const FunctionOnSpace& g) {
  return oracle::CoupledGh0(f.space()->ToMatrix(), f.values(), g.space()->ToMatrix(), g.values());
}

TEST(Gh0DistanceTest, Examples) {
  const SpaceRef two = TwoPoint(1.0);
  const FunctionOnSpace f(two, {0.0, 0.0});
  EXPECT_EQ(Gh0Distance(f, f).value, 0.0);

  const FunctionOnSpace zero(testing::Singleton(), {0.0});
  const FunctionOnSpace c(testing::Singleton(), {-2.5});
  EXPECT_EQ(Gh0Distance(zero, c).value, 2.5);
  EXPECT_EQ(Gh0Distance(zero, c).value, Exhaustive(zero, c));

  const FunctionOnSpace g(two, {0.3, 0.3});
  const Gh0Result r = Gh0Distance(f, g);
  EXPECT_EQ(r.value, Exhaustive(f, g));
  EXPECT_EQ(r.value, 0.3);
  EXPECT_EQ(r.witness_i.image(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.witness_j.image(), (std::vector<std::size_t>{0, 1}));
}

TEST(Gh0DistanceTest, DecoupledEqualsCoupledEnumeration) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const FunctionOnSpace f = RandomFunction(rng, RandomSmallSpace(rng, 3));
    const FunctionOnSpace g = RandomFunction(rng, RandomSmallSpace(rng, 3));
    EXPECT_EQ(Gh0Distance(f, g, SearchMethod::kExact).value, Exhaustive(f, g)) << trial;
  }
}

TEST(Gh0DistanceTest, BranchAndBoundMatchesExact) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const FunctionOnSpace f = RandomFunction(rng, RandomSmallSpace(rng, 4));
    const FunctionOnSpace g = RandomFunction(rng, RandomSmallSpace(rng, 4));
    const Gh0Result exact = Gh0Distance(f, g, SearchMethod::kExact);
    const Gh0Result bnb = Gh0Distance(f, g, SearchMethod::kBranchAndBound);
    EXPECT_EQ(bnb.value, exact.value);
    EXPECT_EQ(bnb.witness_i.image(), exact.witness_i.image());
    EXPECT_EQ(bnb.witness_j.image(), exact.witness_j.image());
    EXPECT_EQ(Gh0UpperBound(f, g, exact.witness_i, exact.witness_j).value, exact.value);
  }
}

TEST(Gh0DistanceTest, RelaxedMetricLaws) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 1000; ++trial) {
    const FunctionOnSpace f = RandomFunction(rng, RandomSmallSpace(rng, 4));
    const FunctionOnSpace g = RandomFunction(rng, RandomSmallSpace(rng, 4));
    const FunctionOnSpace h = RandomFunction(rng, RandomSmallSpace(rng, 4));
    const double fg = Gh0Distance(f, g).value;
    EXPECT_EQ(fg, Gh0Distance(g, f).value);
    EXPECT_GE(2.0 * (fg + Gh0Distance(g, h).value) - Gh0Distance(f, h).value, -1e-12);
    const FunctionOnSpace g_same = RandomFunction(rng, f.space());
    EXPECT_LE(Gh0Distance(f, g_same).value, SupNormDistance(f, g_same));
  }
}

TEST(Gh0UpperBoundTest, Components) {
  const SpaceRef two = TwoPoint(1.0);
  const FunctionOnSpace f(two, {0.0, 1.0});
  const PointMap id = PointMap::Identity(two);
  const Gh0Bound same = Gh0UpperBound(f, f, id, id);
  EXPECT_EQ(same.value, 0.0);

  const FunctionOnSpace g(testing::Singleton(), {0.25});
  const PointMap i = PointMap::Constant(two, g.space(), 0);
  const PointMap j = PointMap::Constant(g.space(), two, 1);
  const Gh0Bound b = Gh0UpperBound(f, g, i, j);
  EXPECT_EQ(b.distortion_i, 1.0);
  EXPECT_EQ(b.codefect_i, 0.0);
  EXPECT_EQ(b.supnorm_i, 0.75);
  EXPECT_EQ(b.distortion_j, 0.0);
  EXPECT_EQ(b.codefect_j, 1.0);
  EXPECT_EQ(b.supnorm_j, 0.75);
  EXPECT_EQ(b.value, 1.0);
  EXPECT_TRUE(ThrowsCode([&] { Gh0UpperBound(f, g, i, i); }, ErrorCode::kSpaceMismatch));
}

TEST(Gh0UpperBoundTest, NeverBelowExactValue) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const FunctionOnSpace f = RandomFunction(rng, RandomSmallSpace(rng, 4));
    const FunctionOnSpace g = RandomFunction(rng, RandomSmallSpace(rng, 4));
    const PointMap i = RandomMap(rng, f.space(), g.space());
    const PointMap j = RandomMap(rng, g.space(), f.space());
    EXPECT_GE(Gh0UpperBound(f, g, i, j).value, Exhaustive(f, g));
  }
}

TEST(TransferFunctionTest, Examples) {
  const SpaceRef s = testing::LineGrid(5);
  const FunctionOnSpace f(s, {3, 1, 4, 1, 5});
  EXPECT_EQ(TransferFunction(f, PointMap::Identity(s)).values(), f.values());
  const SpaceRef sub = Subspace(s, std::vector<std::size_t>{4, 2});
  const PointMap incl(sub, s, {4, 2});
  const FunctionOnSpace c = TransferFunction(FunctionOnSpace::Constant(s, 7.0), incl);
  EXPECT_EQ(c.values(), (std::vector<double>{7.0, 7.0}));
  EXPECT_EQ(c.space(), sub);
  EXPECT_EQ(TransferFunction(f, incl).values(), (std::vector<double>{5, 4}));
}

TEST(TransferFunctionTest, SineOnCircleNet) {
  const SpaceRef circle = FromPointCloud(PointCloud(testing::CirclePoints(32)));
  std::vector<double> sines;
  for (double t : testing::CircleAngles(32)) sines.push_back(std::sin(t));
  const FunctionOnSpace f_hat(circle, sines);
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < 32; k += 4) idx.push_back(k);
  const PointMap i(Subspace(circle, idx), circle, idx);
  const PointMap j = ApproximateInverse(i);
  const FunctionOnSpace f_check = TransferFunction(f_hat, i);

  for (std::size_t a = 0; a < idx.size(); ++a) EXPECT_EQ(f_check.values()[a], f_hat.values()[i(a)]);
  const double r = CoverRadius(*circle, idx);
  EXPECT_EQ(r, oracle::CoverRadius(circle->ToMatrix(), idx));
  const Gh0Bound b = Gh0UpperBound(f_check, f_hat, i, j);
  EXPECT_EQ(b.supnorm_i, 0.0);
  EXPECT_EQ(b.distortion_i, 0.0);
  EXPECT_EQ(b.codefect_i, r);
  // Every point is within r of its projection, so the value term is an
  // oscillation at that scale and the projection distorts by at most 3r.
  EXPECT_LE(b.supnorm_j, Oscillation(f_hat, r * (1 + 1e-12)));
  EXPECT_LE(b.value, std::max(3.0 * r, Oscillation(f_hat, r * (1 + 1e-12))));
}

}  // namespace
}  // namespace ghapprox
