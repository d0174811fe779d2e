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

#ifndef GHAPPROX_POINT_MAP_H_
#define GHAPPROX_POINT_MAP_H_

#include <cstddef>
#include <vector>

#include "ghapprox/metric_space.h"

namespace ghapprox {

// A map between the point sets of two finite metric spaces, given by the
// target index of every source point.
class PointMap {
 public:
  PointMap(SpaceRef source, SpaceRef target, std::vector<std::size_t> image);

  static PointMap Identity(const SpaceRef& space);
  static PointMap Constant(SpaceRef source, SpaceRef target, std::size_t value);

  const SpaceRef& source() const { return source_; }
  const SpaceRef& target() const { return target_; }
  const std::vector<std::size_t>& image() const { return image_; }
  std::size_t operator()(std::size_t x) const { return image_[x]; }
  std::size_t size() const { return image_.size(); }

 private:
  SpaceRef source_;
  SpaceRef target_;
  std::vector<std::size_t> image_;
};

// Composition outer after inner. Throws kSpaceMismatch when inner's target is
// not outer's source.
PointMap Compose(const PointMap& outer, const PointMap& inner);

}  // namespace ghapprox

#endif  // GHAPPROX_POINT_MAP_H_
