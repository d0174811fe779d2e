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

#include "ghapprox/metric_space.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

#include "ghapprox/error.h"

namespace ghapprox {
namespace {

// FNV-1a over the bit patterns of the matrix; gives reproducible default ids.
std::string Fingerprint(const std::vector<double>& dist, std::size_t n) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      h ^= (word >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(n);
  for (double d : dist) mix(std::bit_cast<std::uint64_t>(d));
  std::ostringstream out;
  out << "space-" << n << '-' << std::hex << h;
  return out.str();
}

std::vector<std::string> DefaultLabels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t k = 0; k < n; ++k) labels[k] = std::to_string(k);
  return labels;
}

bool TriangleHolds(double lhs, double rhs) {
  const double tol = std::max(1e-12, 1e-9 * std::max(lhs, rhs));
  return lhs <= rhs + tol;
}

}  // namespace

std::shared_ptr<const FiniteMetricSpace> MakeSpaceUnchecked(std::vector<double> dist,
                                                            std::size_t n,
                                                            std::vector<std::string> labels,
                                                            std::string id) {
  std::shared_ptr<FiniteMetricSpace> space(new FiniteMetricSpace());
  if (id.empty()) id = Fingerprint(dist, n);
  if (labels.empty()) labels = DefaultLabels(n);
  space->n_ = n;
  space->dist_ = std::move(dist);
  space->labels_ = std::move(labels);
  space->id_ = std::move(id);
  return space;
}

double FiniteMetricSpace::Eccentricity(std::size_t k) const {
  double best = 0.0;
  for (double d : Row(k)) best = std::max(best, d);
  return best;
}

double FiniteMetricSpace::Diameter() const {
  double best = 0.0;
  for (double d : dist_) best = std::max(best, d);
  return best;
}

double FiniteMetricSpace::MinPositiveDistance() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n_; ++k) {
    for (std::size_t l = k + 1; l < n_; ++l) best = std::min(best, (*this)(k, l));
  }
  return best;
}

bool FiniteMetricSpace::SameMetric(const FiniteMetricSpace& other) const {
  return n_ == other.n_ && dist_ == other.dist_;
}

Matrix FiniteMetricSpace::ToMatrix() const {
  Matrix out(n_, std::vector<double>(n_));
  for (std::size_t k = 0; k < n_; ++k) {
    for (std::size_t l = 0; l < n_; ++l) out[k][l] = (*this)(k, l);
  }
  return out;
}

bool SameSpace(const SpaceRef& a, const SpaceRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->SameMetric(*b);
}

SpaceRef ValidateMetric(const Matrix& matrix, std::optional<std::vector<std::string>> labels,
                        std::string id) {
  const std::size_t n = matrix.size();
  if (n == 0) throw Error(ErrorCode::kEmptyInput, "distance matrix is empty");
  for (std::size_t k = 0; k < n; ++k) {
    if (matrix[k].size() != n) {
      throw Error(ErrorCode::kNotSquare, "row " + std::to_string(k) + " has " +
                                             std::to_string(matrix[k].size()) +
                                             " entries, expected " + std::to_string(n),
                  {k});
    }
  }
  if (labels && !labels->empty() && labels->size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "label count does not match matrix size");
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (!std::isfinite(matrix[k][l])) {
        throw Error(ErrorCode::kNonFinite, "non-finite distance", {k, l});
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (matrix[k][l] < 0.0) throw Error(ErrorCode::kNegativeEntry, "negative distance", {k, l});
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (matrix[k][k] != 0.0) {
      throw Error(ErrorCode::kNonzeroDiagonal, "nonzero self-distance", {k});
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      if (matrix[k][l] != matrix[l][k]) {
        throw Error(ErrorCode::kAsymmetric, "asymmetric distance", {k, l});
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      if (matrix[k][l] == 0.0) {
        throw Error(ErrorCode::kDuplicatePoints, "distinct points at distance zero", {k, l});
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t m = 0; m < n; ++m) {
        if (!TriangleHolds(matrix[k][l], matrix[k][m] + matrix[m][l])) {
          throw Error(ErrorCode::kTriangleViolation, "triangle inequality fails", {k, l, m});
        }
      }
    }
  }

  std::vector<double> dist(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    std::copy(matrix[k].begin(), matrix[k].end(), dist.begin() + static_cast<std::ptrdiff_t>(k * n));
  }
  return MakeSpaceUnchecked(std::move(dist), n, labels.value_or(std::vector<std::string>{}),
                            std::move(id));
}

PointCloud::PointCloud(Matrix points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::kEmptyInput, "point cloud is empty");
  const std::size_t dim = points_.front().size();
  if (dim == 0) throw Error(ErrorCode::kEmptyInput, "points have no coordinates");
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (points_[k].size() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "point " + std::to_string(k) + " has dimension " +
                      std::to_string(points_[k].size()) + ", expected " + std::to_string(dim),
                  {k});
    }
    for (double c : points_[k]) {
      if (!std::isfinite(c)) throw Error(ErrorCode::kNonFinite, "non-finite coordinate", {k});
    }
  }
  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [this](std::size_t a, std::size_t b) { return points_[a] < points_[b]; });
  for (std::size_t r = 1; r < order.size(); ++r) {
    if (points_[order[r - 1]] == points_[order[r]]) {
      const std::size_t a = std::min(order[r - 1], order[r]);
      const std::size_t b = std::max(order[r - 1], order[r]);
      throw Error(ErrorCode::kDuplicatePoints, "coincident points", {a, b});
    }
  }
}

SpaceRef FromPointCloud(const PointCloud& cloud, std::string id) {
  const std::size_t n = cloud.size();
  Matrix matrix(n, std::vector<double>(n, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      double sum = 0.0;
      for (std::size_t c = 0; c < cloud.dimension(); ++c) {
        const double diff = cloud[k][c] - cloud[l][c];
        sum += diff * diff;
      }
      matrix[k][l] = matrix[l][k] = std::sqrt(sum);
    }
  }
  return ValidateMetric(matrix, std::nullopt, std::move(id));
}

SpaceRef Subspace(const SpaceRef& space, std::span<const std::size_t> indices) {
  const std::size_t m = indices.size();
  if (m == 0) throw Error(ErrorCode::kEmptyInput, "subspace needs at least one point");
  std::vector<bool> seen(space->size(), false);
  for (std::size_t idx : indices) {
    if (idx >= space->size()) throw Error(ErrorCode::kInvalidArgument, "index out of range", {idx});
    if (seen[idx]) throw Error(ErrorCode::kInvalidArgument, "repeated subspace index", {idx});
    seen[idx] = true;
  }
  std::vector<double> dist(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t a = 0; a < m; ++a) {
    labels[a] = space->labels()[indices[a]];
    for (std::size_t b = 0; b < m; ++b) dist[a * m + b] = (*space)(indices[a], indices[b]);
  }
  return MakeSpaceUnchecked(std::move(dist), m, std::move(labels), "");
}

FunctionOnSpace::FunctionOnSpace(SpaceRef space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw Error(ErrorCode::kInvalidArgument, "function without a domain");
  if (values_.size() != space_->size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "function has " + std::to_string(values_.size()) + " values on a " +
                    std::to_string(space_->size()) + "-point space");
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) throw Error(ErrorCode::kNonFinite, "non-finite value", {k});
  }
}

FunctionOnSpace FunctionOnSpace::Constant(SpaceRef space, double value) {
  const std::size_t n = space->size();
  return FunctionOnSpace(std::move(space), std::vector<double>(n, value));
}

double SupNormDistance(const FunctionOnSpace& f, const FunctionOnSpace& g) {
  if (!SameSpace(f.space(), g.space())) {
    throw Error(ErrorCode::kDomainMismatch, "functions live on different spaces");
  }
  double best = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) best = std::max(best, std::abs(f[k] - g[k]));
  return best;
}

double SupNorm(const FunctionOnSpace& f) {
  double best = 0.0;
  for (double v : f.values()) best = std::max(best, std::abs(v));
  return best;
}

double Oscillation(const FunctionOnSpace& f, double rho) {
  if (!(rho > 0.0)) throw Error(ErrorCode::kInvalidArgument, "rho must be positive");
  const FiniteMetricSpace& space = *f.space();
  double best = 0.0;
  for (std::size_t a = 0; a < space.size(); ++a) {
    for (std::size_t b = a + 1; b < space.size(); ++b) {
      if (space(a, b) < rho) best = std::max(best, std::abs(f[a] - f[b]));
    }
  }
  return best;
}

double CoverRadius(const FiniteMetricSpace& space, std::span<const std::size_t> centers) {
  double radius = 0.0;
  for (std::size_t x = 0; x < space.size(); ++x) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t c : centers) nearest = std::min(nearest, space(x, c));
    radius = std::max(radius, nearest);
  }
  return radius;
}

}  // namespace ghapprox
