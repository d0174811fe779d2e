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

#include "ghapprox/epsilon_net.h"

#include <algorithm>
#include <limits>

#include "ghapprox/error.h"

namespace ghapprox {

FarthestPointOrder FarthestPointSampling(const FiniteMetricSpace& space, std::size_t seed_index) {
  const std::size_t n = space.size();
  if (seed_index >= n) throw Error(ErrorCode::kInvalidArgument, "seed index out of range", {seed_index});
  FarthestPointOrder out;
  out.order.reserve(n);
  out.radii.reserve(n);
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  std::vector<bool> chosen(n, false);
  std::size_t next = seed_index;
  double radius = std::numeric_limits<double>::infinity();
  for (std::size_t step = 0; step < n; ++step) {
    out.order.push_back(next);
    out.radii.push_back(radius);
    chosen[next] = true;
    auto row = space.Row(next);
    for (std::size_t x = 0; x < n; ++x) nearest[x] = std::min(nearest[x], row[x]);
    radius = -1.0;
    for (std::size_t x = 0; x < n; ++x) {
      if (!chosen[x] && nearest[x] > radius) {
        radius = nearest[x];
        next = x;
      }
    }
  }
  return out;
}

EpsilonNetResult EpsilonNet(const SpaceRef& space, double eps, std::size_t seed_index) {
  if (!(eps > 0.0)) throw Error(ErrorCode::kInvalidArgument, "eps must be positive");
  const FarthestPointOrder fps = FarthestPointSampling(*space, seed_index);
  // radii[r] is the cover radius of the prefix order[0..r-1]; stop at the first
  // prefix whose cover radius is within eps.
  std::size_t count = fps.order.size();
  for (std::size_t r = 1; r < fps.order.size(); ++r) {
    if (fps.radii[r] <= eps) {
      count = r;
      break;
    }
  }
  std::vector<std::size_t> members(fps.order.begin(),
                                   fps.order.begin() + static_cast<std::ptrdiff_t>(count));
  SpaceRef sub = Subspace(space, members);
  const double radius = count < fps.order.size() ? fps.radii[count] : 0.0;
  return EpsilonNetResult{sub, PointMap(sub, space, members), radius};
}

}  // namespace ghapprox
