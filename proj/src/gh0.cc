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

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "ghapprox/error.h"

namespace ghapprox {
namespace {

// cost[s][t] = |g_values[t] - f_values[s]| written with g first in both
// directions, so swapping the arguments of Gh0Distance reproduces every term
// exactly.
std::vector<std::vector<double>> MismatchCosts(const FunctionOnSpace& from,
                                               const FunctionOnSpace& to, bool from_is_f) {
  std::vector<std::vector<double>> cost(from.size(), std::vector<double>(to.size()));
  for (std::size_t s = 0; s < from.size(); ++s) {
    for (std::size_t t = 0; t < to.size(); ++t) {
      cost[s][t] = from_is_f ? std::abs(to[t] - from[s]) : std::abs(from[s] - to[t]);
    }
  }
  return cost;
}

}  // namespace

Gh0Result Gh0Distance(const FunctionOnSpace& f, const FunctionOnSpace& g, SearchMethod method) {
  const SpaceRef& x = f.space();
  const SpaceRef& y = g.space();
  if (method == SearchMethod::kExact &&
      (CandidateMapCount(x->size(), y->size()) > kExactMapLimit ||
       CandidateMapCount(y->size(), x->size()) > kExactMapLimit)) {
    throw Error(ErrorCode::kTooLarge, "exhaustive C0-Gromov-Hausdorff search is too large");
  }
  MapSearchResult forward = MinimizeMapCost(x, y, MismatchCosts(f, g, true), method);
  MapSearchResult backward = MinimizeMapCost(y, x, MismatchCosts(g, f, false), method);
  return Gh0Result{std::max(forward.value, backward.value), std::move(forward.witness),
                   std::move(backward.witness)};
}

Gh0Bound Gh0UpperBound(const FunctionOnSpace& f, const FunctionOnSpace& g, const PointMap& i,
                       const PointMap& j) {
  if (!SameSpace(i.source(), f.space()) || !SameSpace(i.target(), g.space()) ||
      !SameSpace(j.source(), g.space()) || !SameSpace(j.target(), f.space())) {
    throw Error(ErrorCode::kSpaceMismatch, "witness maps do not match the function domains");
  }
  Gh0Bound b;
  const IsometryQuality qi = Quality(i);
  const IsometryQuality qj = Quality(j);
  b.distortion_i = qi.distortion;
  b.codefect_i = qi.codefect;
  b.distortion_j = qj.distortion;
  b.codefect_j = qj.codefect;
  for (std::size_t x = 0; x < f.size(); ++x) {
    b.supnorm_i = std::max(b.supnorm_i, std::abs(g[i(x)] - f[x]));
  }
  for (std::size_t y = 0; y < g.size(); ++y) {
    b.supnorm_j = std::max(b.supnorm_j, std::abs(g[y] - f[j(y)]));
  }
  b.value = std::max({b.distortion_i, b.codefect_i, b.supnorm_i, b.distortion_j, b.codefect_j,
                      b.supnorm_j});
  return b;
}

FunctionOnSpace TransferFunction(const FunctionOnSpace& f_hat, const PointMap& i) {
  if (!SameSpace(i.target(), f_hat.space())) {
    throw Error(ErrorCode::kSpaceMismatch, "map does not land in the function's domain");
  }
  std::vector<double> values(i.size());
  for (std::size_t k = 0; k < i.size(); ++k) values[k] = f_hat[i(k)];
  return FunctionOnSpace(i.source(), std::move(values));
}

}  // namespace ghapprox
