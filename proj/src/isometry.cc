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

#include "ghapprox/isometry.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "ghapprox/error.h"

namespace ghapprox {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// The distortion term of the pair (a, b). Symmetric in (a, b) bit for bit,
// which the search routines rely on.
inline double PairTerm(const FiniteMetricSpace& source, const FiniteMetricSpace& target,
                       std::size_t a, std::size_t b, std::size_t ia, std::size_t ib) {
  return std::abs(target(ia, ib) - source(a, b));
}

double CodefectOfImage(const FiniteMetricSpace& target, std::span<const std::size_t> image) {
  double worst = 0.0;
  for (std::size_t y = 0; y < target.size(); ++y) {
    double nearest = kInf;
    for (std::size_t iy : image) nearest = std::min(nearest, target(iy, y));
    worst = std::max(worst, nearest);
  }
  return worst;
}

double DistortionOfImage(const FiniteMetricSpace& source, const FiniteMetricSpace& target,
                         std::span<const std::size_t> image) {
  double worst = 0.0;
  for (std::size_t a = 0; a < source.size(); ++a) {
    for (std::size_t b = a + 1; b < source.size(); ++b) {
      worst = std::max(worst, PairTerm(source, target, a, b, image[a], image[b]));
    }
  }
  return worst;
}

void CheckUnary(const std::vector<std::vector<double>>& unary, std::size_t n, std::size_t m) {
  if (unary.empty()) return;
  if (unary.size() != n) throw Error(ErrorCode::kDimensionMismatch, "unary cost rows");
  for (const auto& row : unary) {
    if (row.size() != m) throw Error(ErrorCode::kDimensionMismatch, "unary cost columns");
  }
}

MapSearchResult SearchExact(const SpaceRef& source, const SpaceRef& target,
                            const std::vector<std::vector<double>>& unary) {
  const std::size_t n = source->size();
  const std::size_t m = target->size();
  std::vector<std::size_t> image(n, 0);
  std::vector<std::size_t> best_image(n, 0);
  double best = kInf;
  std::uint64_t evaluated = 0;
  // Odometer with the last position fastest enumerates images in
  // lexicographic order; a strict improvement test keeps the first minimizer.
  while (true) {
    ++evaluated;
    double cost = DistortionOfImage(*source, *target, image);
    if (cost <= best) cost = std::max(cost, CodefectOfImage(*target, image));
    if (!unary.empty() && cost <= best) {
      for (std::size_t x = 0; x < n; ++x) cost = std::max(cost, unary[x][image[x]]);
    }
    if (cost < best) {
      best = cost;
      best_image = image;
    }
    bool done = true;
    for (std::size_t pos = n; pos-- > 0;) {
      if (++image[pos] < m) {
        done = false;
        break;
      }
      image[pos] = 0;
    }
    if (done) break;
  }
  return MapSearchResult{best, PointMap(source, target, std::move(best_image)), evaluated};
}

class BranchAndBound {
 public:
  BranchAndBound(const SpaceRef& source, const SpaceRef& target,
                 const std::vector<std::vector<double>>& unary)
      : source_(*source), target_(*target), unary_(unary),
        image_(source->size(), 0), best_image_(source->size(), 0) {
    const std::size_t n = source_.size();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::vector<double> ecc(n);
    for (std::size_t x = 0; x < n; ++x) ecc[x] = source_.Eccentricity(x);
    std::stable_sort(order_.begin(), order_.end(),
                     [&ecc](std::size_t a, std::size_t b) { return ecc[a] > ecc[b]; });
  }

  void Run() { Visit(0, 0.0); }

  double best() const { return best_; }
  std::vector<std::size_t> TakeImage() { return std::move(best_image_); }
  std::uint64_t evaluated() const { return evaluated_; }

 private:
  void Visit(std::size_t depth, double partial) {
    ++evaluated_;
    if (depth == order_.size()) {
      const double cost = std::max(partial, CodefectOfImage(target_, image_));
      if (cost < best_ || (cost == best_ && image_ < best_image_)) {
        best_ = cost;
        best_image_ = image_;
      }
      return;
    }
    const std::size_t x = order_[depth];
    for (std::size_t y = 0; y < target_.size(); ++y) {
      double cost = partial;
      if (!unary_.empty()) cost = std::max(cost, unary_[x][y]);
      for (std::size_t d = 0; d < depth && cost <= best_; ++d) {
        const std::size_t a = order_[d];
        cost = std::max(cost, PairTerm(source_, target_, x, a, y, image_[a]));
      }
      // Ties are explored so that the lexicographic tie-break matches the
      // exhaustive search.
      if (cost > best_) continue;
      image_[x] = y;
      Visit(depth + 1, cost);
    }
  }

  const FiniteMetricSpace& source_;
  const FiniteMetricSpace& target_;
  const std::vector<std::vector<double>>& unary_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<std::size_t> best_image_;
  double best_ = kInf;
  std::uint64_t evaluated_ = 0;
};

}  // namespace

double Distortion(const PointMap& m) {
  return DistortionOfImage(*m.source(), *m.target(), m.image());
}

double Codefect(const PointMap& m) { return CodefectOfImage(*m.target(), m.image()); }

IsometryQuality Quality(const PointMap& m) {
  IsometryQuality q;
  q.distortion = Distortion(m);
  q.codefect = Codefect(m);
  q.quality = std::max(q.distortion, q.codefect);
  return q;
}

PointMap ApproximateInverse(const PointMap& m) {
  const FiniteMetricSpace& target = *m.target();
  std::vector<std::size_t> inverse(target.size(), 0);
  for (std::size_t y = 0; y < target.size(); ++y) {
    double nearest = kInf;
    for (std::size_t x = 0; x < m.size(); ++x) {
      const double d = target(m(x), y);
      if (d < nearest) {
        nearest = d;
        inverse[y] = x;
      }
    }
  }
  return PointMap(m.target(), m.source(), std::move(inverse));
}

double RoundTripDefect(const PointMap& i, const PointMap& j) {
  if (!SameSpace(i.source(), j.target()) || !SameSpace(i.target(), j.source())) {
    throw Error(ErrorCode::kSpaceMismatch, "maps do not run between the same two spaces");
  }
  const FiniteMetricSpace& y_space = *i.target();
  double worst = 0.0;
  for (std::size_t y = 0; y < y_space.size(); ++y) worst = std::max(worst, y_space(i(j(y)), y));
  return worst;
}

std::optional<SearchMethod> ParseSearchMethod(std::string_view name) {
  if (name == "exact") return SearchMethod::kExact;
  if (name == "bnb") return SearchMethod::kBranchAndBound;
  return std::nullopt;
}

std::string_view SearchMethodName(SearchMethod method) {
  return method == SearchMethod::kExact ? "exact" : "bnb";
}

std::uint64_t CandidateMapCount(std::size_t source_size, std::size_t target_size) {
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < source_size; ++k) {
    count *= target_size;
    if (count > kExactMapLimit) return kExactMapLimit + 1;
  }
  return count;
}

MapSearchResult MinimizeMapCost(const SpaceRef& source, const SpaceRef& target,
                                const std::vector<std::vector<double>>& unary,
                                SearchMethod method) {
  CheckUnary(unary, source->size(), target->size());
  if (method == SearchMethod::kExact) {
    if (CandidateMapCount(source->size(), target->size()) > kExactMapLimit) {
      throw Error(ErrorCode::kTooLarge,
                  "exhaustive search over " + std::to_string(target->size()) + "^" +
                      std::to_string(source->size()) + " maps exceeds the limit");
    }
    return SearchExact(source, target, unary);
  }
  BranchAndBound search(source, target, unary);
  search.Run();
  const double value = search.best();
  const std::uint64_t evaluated = search.evaluated();
  return MapSearchResult{value, PointMap(source, target, search.TakeImage()), evaluated};
}

GhResult GhDistance(const SpaceRef& x, const SpaceRef& y, SearchMethod method) {
  if (method == SearchMethod::kExact &&
      (CandidateMapCount(x->size(), y->size()) > kExactMapLimit ||
       CandidateMapCount(y->size(), x->size()) > kExactMapLimit)) {
    throw Error(ErrorCode::kTooLarge, "exhaustive Gromov-Hausdorff search is too large");
  }
  MapSearchResult forward = MinimizeMapCost(x, y, {}, method);
  MapSearchResult backward = MinimizeMapCost(y, x, {}, method);
  return GhResult{std::max(forward.value, backward.value), std::move(forward.witness),
                  std::move(backward.witness)};
}

double GhUpperBound(const PointMap& i, const PointMap& j) {
  if (!SameSpace(i.source(), j.target()) || !SameSpace(i.target(), j.source())) {
    throw Error(ErrorCode::kSpaceMismatch, "maps do not run between the same two spaces");
  }
  return std::max(Quality(i).quality, Quality(j).quality);
}

}  // namespace ghapprox
