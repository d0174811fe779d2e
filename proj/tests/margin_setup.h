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

#ifndef GHAPPROX_TESTS_MARGIN_SETUP_H_
#define GHAPPROX_TESTS_MARGIN_SETUP_H_

#include <vector>

#include "ghapprox/measures.h"
#include "ghapprox/metric_space.h"

namespace ghapprox::margin {

// Four equally spaced points on [0, 1]; span{identity} separates them and the
// constants do not.
inline SpaceRef Space() {
  return FromPointCloud(PointCloud({{0.0}, {1.0 / 3.0}, {2.0 / 3.0}, {1.0}}));
}

inline FunctionFamily SeparatingFamily(const SpaceRef& s) {
  return FunctionFamily::LinearSpan(s, {FunctionOnSpace(s, {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0})});
}

inline FunctionFamily ConstantFamily(const SpaceRef& s) {
  return FunctionFamily::ExplicitList(s, {FunctionOnSpace::Constant(s, 1.0)});
}

inline constexpr std::size_t kSamples = 200;
inline constexpr Interval kLambdaRange{1.0, 8.0};
inline constexpr Interval kThetaRange{-4.0, 4.0};

// Smallest margin of SeparatingFamily over seeds 0..999 as printed by
// tools/calibrate_margin (logistic sigma, the settings above).
inline constexpr double kCalibratedMinimum = 0.120718;
// Half the calibrated minimum.
inline constexpr double kFloor = 0.06;
inline constexpr double kNonSeparatingCeiling = 1e-8;

}  // namespace ghapprox::margin

#endif  // GHAPPROX_TESTS_MARGIN_SETUP_H_
