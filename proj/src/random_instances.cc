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

#include "ghapprox/random_instances.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ghapprox {

SpaceRef RandomEuclideanSpace(std::mt19937_64& rng, std::size_t n, std::size_t dim) {
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  Matrix points(n, std::vector<double>(dim));
  for (auto& p : points) {
    for (double& c : p) c = coord(rng);
  }
  return FromPointCloud(PointCloud(std::move(points)));
}

SpaceRef RandomIntegerMetric(std::mt19937_64& rng, std::size_t n, int levels) {
  std::uniform_int_distribution<int> weight(1, std::max(1, levels));
  Matrix d(n, std::vector<double>(n, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) d[k][l] = d[l][k] = weight(rng);
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) d[k][l] = std::min(d[k][l], d[k][m] + d[m][l]);
    }
  }
  return ValidateMetric(d);
}

SpaceRef RandomSmallSpace(std::mt19937_64& rng, std::size_t max_points) {
  std::uniform_int_distribution<std::size_t> size(1, max_points);
  const std::size_t n = size(rng);
  std::uniform_int_distribution<int> pick(0, 2);
  switch (pick(rng)) {
    case 0: return RandomIntegerMetric(rng, n, 3);
    case 1: return RandomEuclideanSpace(rng, n, 1);
    default: return RandomEuclideanSpace(rng, n, 2);
  }
}

FunctionOnSpace RandomFunction(std::mt19937_64& rng, const SpaceRef& space, double lo, double hi) {
  std::uniform_real_distribution<double> value(lo, hi);
  std::bernoulli_distribution snap(0.25);
  const bool on_grid = snap(rng);
  std::vector<double> values(space->size());
  for (double& v : values) {
    v = value(rng);
    if (on_grid) v = std::clamp(std::round(v * 2.0) / 2.0, lo, hi);
  }
  return FunctionOnSpace(space, std::move(values));
}

PointMap RandomMap(std::mt19937_64& rng, const SpaceRef& source, const SpaceRef& target) {
  std::uniform_int_distribution<std::size_t> pick(0, target->size() - 1);
  std::vector<std::size_t> image(source->size());
  for (auto& y : image) y = pick(rng);
  return PointMap(source, target, std::move(image));
}

}  // namespace ghapprox
