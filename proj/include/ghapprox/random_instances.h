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

#ifndef GHAPPROX_RANDOM_INSTANCES_H_
#define GHAPPROX_RANDOM_INSTANCES_H_

#include <cstddef>
#include <random>

#include "ghapprox/metric_space.h"
#include "ghapprox/point_map.h"

namespace ghapprox {

// Seeded generators for the property suites. Everything draws from the
// caller's engine.

// Uniform points in [0,1]^dim.
SpaceRef RandomEuclideanSpace(std::mt19937_64& rng, std::size_t n, std::size_t dim);

// Shortest-path closure of random symmetric edge weights drawn from
// {1, ..., levels}; small `levels` produces many exact ties.
SpaceRef RandomIntegerMetric(std::mt19937_64& rng, std::size_t n, int levels);

// Either of the two above with n drawn from [1, max_points].
SpaceRef RandomSmallSpace(std::mt19937_64& rng, std::size_t max_points);

// Values uniform in [lo, hi]. With probability 1/4 values are snapped to a
// grid of step 0.5 so that ties occur.
FunctionOnSpace RandomFunction(std::mt19937_64& rng, const SpaceRef& space, double lo = -1.0,
                               double hi = 1.0);

PointMap RandomMap(std::mt19937_64& rng, const SpaceRef& source, const SpaceRef& target);

}  // namespace ghapprox

#endif  // GHAPPROX_RANDOM_INSTANCES_H_
