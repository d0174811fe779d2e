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

#include "ghapprox/measures.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "ghapprox/random_instances.h"
#include "margin_setup.h"
#include "oracles.h"
#include "test_util.h"

namespace ghapprox {
namespace {

using testing::ThrowsCode;

TEST(PushforwardTest, InjectiveIdentityKeepsWeights) {
  const SpaceRef s = FromPointCloud(PointCloud({{2.0}, {-1.0}, {0.5}}));
  const FunctionOnSpace f(s, {2.0, -1.0, 0.5});
  const GroupedMeasure g = Pushforward(f, SignedMeasure(s, {0.25, -3.0, 1.5}), 0.0);
  EXPECT_EQ(g.support, (std::vector<double>{-1.0, 0.5, 2.0}));
  EXPECT_EQ(g.weights, (std::vector<double>{-3.0, 1.5, 0.25}));
  EXPECT_EQ(g.preimages, (std::vector<std::vector<std::size_t>>{{1}, {2}, {0}}));
}

TEST(PushforwardTest, ConstantFunctionCollapsesToOneGroup) {
  const SpaceRef s = testing::LineGrid(3);
  const GroupedMeasure g =
      Pushforward(FunctionOnSpace::Constant(s, 4.0), SignedMeasure(s, {1.0, -0.5, -0.5}), 0.0);
  EXPECT_EQ(g.support, (std::vector<double>{4.0}));
  EXPECT_EQ(g.weights, (std::vector<double>{0.0}));
}

TEST(PushforwardTest, ToleranceMergesNearbyValues) {
  const double tau = 1e-6;
  const SpaceRef s = testing::LineGrid(3);
  const FunctionOnSpace f(s, {1.0, 1.0 + tau / 2, 2.0});
  const SignedMeasure mu(s, {1.0, 2.0, 5.0});
  const GroupedMeasure g = Pushforward(f, mu, tau);
  EXPECT_EQ(g.support, (std::vector<double>{1.0, 2.0}));
  EXPECT_EQ(g.weights, (std::vector<double>{3.0, 5.0}));
  EXPECT_EQ(Pushforward(f, mu, 0.0).support.size(), 3u);
}

TEST(PushforwardTest, PreservesMass) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> dyadic(-16, 16);
  std::uniform_real_distribution<double> real(-1.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const SpaceRef s = RandomSmallSpace(rng, 8);
    const FunctionOnSpace f = RandomFunction(rng, s);
    std::vector<double> exact(s->size()), rough(s->size());
    for (double& w : exact) w = dyadic(rng) / 8.0;
    for (double& w : rough) w = real(rng);
    double in_exact = 0.0, in_rough = 0.0, out_exact = 0.0, out_rough = 0.0;
    for (std::size_t k = 0; k < s->size(); ++k) {
      in_exact += exact[k];
      in_rough += rough[k];
    }
    for (double w : Pushforward(f, SignedMeasure(s, exact), 0.0).weights) out_exact += w;
    for (double w : Pushforward(f, SignedMeasure(s, rough), 0.0).weights) out_rough += w;
    EXPECT_EQ(out_exact, in_exact);
    EXPECT_NEAR(out_rough, in_rough, 1e-12);
  }
}

TEST(PushforwardTest, RejectsForeignMeasure) {
  const FunctionOnSpace f(testing::TwoPoint(1.0), {0, 1});
  EXPECT_TRUE(ThrowsCode([&] { Pushforward(f, SignedMeasure(testing::TwoPoint(2.0), {1, 1}), 0.0); },
                         ErrorCode::kDomainMismatch));
}

TEST(SeparatesCheckTest, AllFunctionsSeparate) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const SeparationResult r = SeparatesCheck(FunctionFamily::AllFunctions(RandomSmallSpace(rng, 8)));
    EXPECT_TRUE(r.separates);
    EXPECT_FALSE(r.witness.has_value());
  }
}

TEST(SeparatesCheckTest, ConstantFamilyWitness) {
  const SpaceRef s = testing::TwoPoint(1.0);
  const SeparationResult r =
      SeparatesCheck(FunctionFamily::ExplicitList(s, {FunctionOnSpace::Constant(s, 3.0)}));
  EXPECT_FALSE(r.separates);
  EXPECT_EQ(r.rank, 1u);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->weights(), (std::vector<double>{1.0, -1.0}));
}

TEST(SeparatesCheckTest, InjectiveFunctionSeparates) {
  const SpaceRef s = testing::LineGrid(6);
  const FunctionOnSpace id(s, testing::GridCoordinates(6));
  EXPECT_TRUE(SeparatesCheck(FunctionFamily::ExplicitList(s, {id})).separates);
  EXPECT_TRUE(SeparatesCheck(FunctionFamily::LinearSpan(s, {id})).separates);
}

TEST(SeparatesCheckTest, AgreesWithNullSpaceOracle) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> size(1, 6), members(1, 3), value(0, 2);
  int separating = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const SpaceRef s = RandomSmallSpace(rng, static_cast<std::size_t>(size(rng)));
    std::vector<FunctionOnSpace> fs;
    std::vector<std::vector<double>> raw;
    const int m = members(rng);
    for (int k = 0; k < m; ++k) {
      std::vector<double> v(s->size());
      for (double& x : v) x = value(rng) * 0.5;
      raw.push_back(v);
      fs.emplace_back(s, v);
    }
    const SeparationResult r = SeparatesCheck(FunctionFamily::ExplicitList(s, fs));
    const std::size_t nullity = oracle::LevelSystemNullity(raw, s->size());
    EXPECT_EQ(r.separates, nullity == 0) << trial;
    EXPECT_EQ(r.rank, s->size() - nullity) << trial;
    if (r.separates) {
      ++separating;
      continue;
    }
    ASSERT_TRUE(r.witness.has_value());
    const std::vector<double>& w = r.witness->weights();
    double max_abs = 0.0;
    for (double x : w) max_abs = std::max(max_abs, std::abs(x));
    EXPECT_NEAR(max_abs, 1.0, 1e-12);
    const auto first = std::find_if(w.begin(), w.end(), [](double x) { return std::abs(x) > 1e-12; });
    ASSERT_NE(first, w.end());
    EXPECT_GT(*first, 0.0);
    for (const FunctionOnSpace& f : fs) {
      for (double mass : Pushforward(f, *r.witness, 0.0).weights) EXPECT_NEAR(mass, 0.0, 1e-9);
    }
  }
  EXPECT_GT(separating, 20);
  EXPECT_LT(separating, 180);
}

TEST(FunctionFamilyTest, SpanRejectsDependentBasis) {
  const SpaceRef s = testing::LineGrid(3);
  const FunctionOnSpace f(s, {1, 2, 3});
  const FunctionOnSpace g(s, {2, 4, 6});
  EXPECT_TRUE(ThrowsCode([&] { FunctionFamily::LinearSpan(s, {f, g}); }, ErrorCode::kInvalidArgument));
}

TEST(FunctionFamilyTest, KindNamesRoundTrip) {
  for (FamilyKind k : {FamilyKind::kExplicitList, FamilyKind::kLinearSpan, FamilyKind::kAllFunctions}) {
    EXPECT_EQ(ParseFamilyKind(FamilyKindName(k)), k);
  }
}

TEST(DiscriminatoryMarginTest, SinglePoint) {
  const SpaceRef s = testing::Singleton();
  const FunctionFamily zero = FunctionFamily::ExplicitList(s, {FunctionOnSpace(s, {0.0})});
  EXPECT_GT(DiscriminatoryMargin(Activation::Logistic(), zero, 5, {1, 1}, {-1, 1}, 0), 0.0);
}

TEST(DiscriminatoryMarginTest, ConstantsOnTwoPoints) {
  const SpaceRef s = testing::TwoPoint(1.0);
  const FunctionFamily c = FunctionFamily::ExplicitList(s, {FunctionOnSpace::Constant(s, 1.0)});
  EXPECT_LT(DiscriminatoryMargin(Activation::Logistic(), c, 50, {1, 4}, {-2, 2}, 3), 1e-8);
  EXPECT_EQ(DiscriminatoryMargin(Activation::Logistic(), c, 1, {1, 4}, {-2, 2}, 3), 0.0);
}

TEST(DiscriminatoryMarginTest, CalibratedFloorAcrossSeeds) {
  const SpaceRef s = margin::Space();
  const Activation sigma = Activation::Logistic();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_GT(DiscriminatoryMargin(sigma, margin::SeparatingFamily(s), margin::kSamples,
                                   margin::kLambdaRange, margin::kThetaRange, seed),
              margin::kFloor);
    EXPECT_LT(DiscriminatoryMargin(sigma, margin::ConstantFamily(s), margin::kSamples,
                                   margin::kLambdaRange, margin::kThetaRange, seed),
              margin::kNonSeparatingCeiling);
  }
}

TEST(DiscriminatoryMarginTest, Deterministic) {
  const SpaceRef s = margin::Space();
  const FunctionFamily f = margin::SeparatingFamily(s);
  EXPECT_EQ(DiscriminatoryMargin(Activation::Logistic(), f, 40, {1, 2}, {0, 1}, 9),
            DiscriminatoryMargin(Activation::Logistic(), f, 40, {1, 2}, {0, 1}, 9));
}

}  // namespace
}  // namespace ghapprox
