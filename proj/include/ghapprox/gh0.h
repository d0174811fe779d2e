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

#ifndef GHAPPROX_GH0_H_
#define GHAPPROX_GH0_H_

#include "ghapprox/isometry.h"
#include "ghapprox/metric_space.h"
#include "ghapprox/point_map.h"

namespace ghapprox {

// C0-Gromov-Hausdorff distance between functions on finite metric spaces. For
// f on X and g on Y a pair of maps i: X -> Y, j: Y -> X certifies eps when both
// are eps-isometries and
//   ||g o i - f||_inf <= eps,   ||g - f o j||_inf <= eps.
// The two conditions never couple i and j except through eps, so the exact
// value is max(min_i cost(i), min_j cost(j)).

struct Gh0Result {
  double value = 0.0;
  PointMap witness_i;  // D(f) -> D(g)
  PointMap witness_j;  // D(g) -> D(f)
};

Gh0Result Gh0Distance(const FunctionOnSpace& f, const FunctionOnSpace& g,
                      SearchMethod method = SearchMethod::kBranchAndBound);

// The six quantities a witness pair certifies, and their maximum.
struct Gh0Bound {
  double distortion_i = 0.0;
  double codefect_i = 0.0;
  double supnorm_i = 0.0;  // ||g o i - f||
  double distortion_j = 0.0;
  double codefect_j = 0.0;
  double supnorm_j = 0.0;  // ||g - f o j||
  double value = 0.0;
};

// Throws kSpaceMismatch unless i: D(f) -> D(g) and j: D(g) -> D(f).
Gh0Bound Gh0UpperBound(const FunctionOnSpace& f, const FunctionOnSpace& g, const PointMap& i,
                       const PointMap& j);

// f_hat o i, a function on the source of i.
FunctionOnSpace TransferFunction(const FunctionOnSpace& f_hat, const PointMap& i);

}  // namespace ghapprox

#endif  // GHAPPROX_GH0_H_
