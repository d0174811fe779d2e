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

#ifndef GHAPPROX_EPSILON_NET_H_
#define GHAPPROX_EPSILON_NET_H_

#include <cstddef>
#include <vector>

#include "ghapprox/metric_space.h"
#include "ghapprox/point_map.h"

namespace ghapprox {

struct EpsilonNetResult {
  SpaceRef subspace;
  // subspace -> space; inclusion(k) is the original index of net point k.
  PointMap inclusion;
  // Achieved cover radius (<= eps).
  double cover_radius = 0.0;
};

// Farthest-point sampling from `seed_index`: repeatedly adds the point farthest
// from the current net (lowest index on ties) until every point lies within
// eps. Net points are kept in selection order, so the net for a smaller eps
// extends the net for a larger one.
EpsilonNetResult EpsilonNet(const SpaceRef& space, double eps, std::size_t seed_index);

// The full farthest-point ordering from `seed_index` together with the
// insertion radii: radii[r] is the distance of order[r] to order[0..r-1]
// (radii[0] = +inf).
struct FarthestPointOrder {
  std::vector<std::size_t> order;
  std::vector<double> radii;
};
FarthestPointOrder FarthestPointSampling(const FiniteMetricSpace& space, std::size_t seed_index);

}  // namespace ghapprox

#endif  // GHAPPROX_EPSILON_NET_H_
