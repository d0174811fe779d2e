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

#ifndef GHAPPROX_ISOMETRY_H_
#define GHAPPROX_ISOMETRY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ghapprox/metric_space.h"
#include "ghapprox/point_map.h"

namespace ghapprox {

// A map i: X -> Y is an eps-isometry iff eps >= quality, where
//   distortion = max_{x,x'} |d_Y(i(x), i(x')) - d_X(x, x')|
//   codefect   = max_y min_x d_Y(i(x), y)
struct IsometryQuality {
  double distortion = 0.0;
  double codefect = 0.0;
  double quality = 0.0;
};

double Distortion(const PointMap& m);
double Codefect(const PointMap& m);
IsometryQuality Quality(const PointMap& m);

// Nearest-point inverse j: Y -> X, j(y) = argmin_x d_Y(i(x), y), lowest source
// index on ties. With q = Quality(m).quality it satisfies
// max_y d(i(j(y)), y) <= q and Distortion(j) <= 3q.
PointMap ApproximateInverse(const PointMap& m);

// max_y d_Y(i(j(y)), y) for j = ApproximateInverse(i), or any j: Y -> X.
double RoundTripDefect(const PointMap& i, const PointMap& j);

enum class SearchMethod { kExact, kBranchAndBound };

std::optional<SearchMethod> ParseSearchMethod(std::string_view name);
std::string_view SearchMethodName(SearchMethod method);

// Exhaustive enumeration is refused above this many candidate maps per
// direction.
inline constexpr std::uint64_t kExactMapLimit = 10'000'000;

// Number of maps source -> target, saturated at kExactMapLimit + 1.
std::uint64_t CandidateMapCount(std::size_t source_size, std::size_t target_size);

struct MapSearchResult {
  double value = 0.0;
  PointMap witness;
  // Leaves (exact) or nodes (branch and bound) evaluated.
  std::uint64_t evaluated = 0;
};

// Minimizes max(distortion(i), codefect(i), max_x unary[x][i(x)]) over all
// maps i: source -> target. `unary` is either empty or source.size() rows of
// target.size() entries. Among minimizers the lexicographically smallest image
// is returned, so both methods agree on value and witness.
MapSearchResult MinimizeMapCost(const SpaceRef& source, const SpaceRef& target,
                                const std::vector<std::vector<double>>& unary,
                                SearchMethod method);

struct GhResult {
  double value = 0.0;
  PointMap forward;   // X -> Y
  PointMap backward;  // Y -> X
};

// Gromov-Hausdorff distance through eps-isometries in both directions:
// max(min_i quality(i), min_j quality(j)).
GhResult GhDistance(const SpaceRef& x, const SpaceRef& y,
                    SearchMethod method = SearchMethod::kBranchAndBound);

// max(quality(i), quality(j)) for i: X -> Y and j: Y -> X.
double GhUpperBound(const PointMap& i, const PointMap& j);

}  // namespace ghapprox

#endif  // GHAPPROX_ISOMETRY_H_
