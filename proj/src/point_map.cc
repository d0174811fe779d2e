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

#include "ghapprox/point_map.h"

#include <numeric>
#include <utility>

#include "ghapprox/error.h"

namespace ghapprox {

PointMap::PointMap(SpaceRef source, SpaceRef target, std::vector<std::size_t> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (!source_ || !target_) throw Error(ErrorCode::kInvalidArgument, "point map without spaces");
  if (image_.size() != source_->size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point map has " + std::to_string(image_.size()) + " entries for a " +
                    std::to_string(source_->size()) + "-point source");
  }
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (image_[x] >= target_->size()) {
      throw Error(ErrorCode::kInvalidArgument, "image index out of range", {x, image_[x]});
    }
  }
}

PointMap PointMap::Identity(const SpaceRef& space) {
  std::vector<std::size_t> image(space->size());
  std::iota(image.begin(), image.end(), std::size_t{0});
  return PointMap(space, space, std::move(image));
}

PointMap PointMap::Constant(SpaceRef source, SpaceRef target, std::size_t value) {
  const std::size_t n = source->size();
  return PointMap(std::move(source), std::move(target), std::vector<std::size_t>(n, value));
}

PointMap Compose(const PointMap& outer, const PointMap& inner) {
  if (!SameSpace(inner.target(), outer.source())) {
    throw Error(ErrorCode::kSpaceMismatch, "maps are not composable");
  }
  std::vector<std::size_t> image(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) image[x] = outer(inner(x));
  return PointMap(inner.source(), outer.target(), std::move(image));
}

}  // namespace ghapprox
