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

#ifndef GHAPPROX_METRIC_SPACE_H_
#define GHAPPROX_METRIC_SPACE_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ghapprox {

using Matrix = std::vector<std::vector<double>>;

// A finite metric space stored as a dense, validated distance matrix. Instances
// are only produced by ValidateMetric, FromPointCloud and Subspace, so every
// live object satisfies the metric axioms.
class FiniteMetricSpace {
 public:
  std::size_t size() const { return n_; }
  const std::string& id() const { return id_; }
  const std::vector<std::string>& labels() const { return labels_; }

  double operator()(std::size_t k, std::size_t l) const { return dist_[k * n_ + l]; }
  std::span<const double> Row(std::size_t k) const {
    return std::span<const double>(dist_).subspan(k * n_, n_);
  }

  // Largest entry of row k.
  double Eccentricity(std::size_t k) const;
  double Diameter() const;
  // Smallest off-diagonal entry; +inf for a singleton.
  double MinPositiveDistance() const;

  // True when both spaces carry the identical distance matrix. Labels and ids
  // are not compared.
  bool SameMetric(const FiniteMetricSpace& other) const;

  Matrix ToMatrix() const;

 private:
  friend std::shared_ptr<const FiniteMetricSpace> MakeSpaceUnchecked(
      std::vector<double> dist, std::size_t n, std::vector<std::string> labels,
      std::string id);

  FiniteMetricSpace() = default;

  std::size_t n_ = 0;
  std::vector<double> dist_;
  std::vector<std::string> labels_;
  std::string id_;
};

using SpaceRef = std::shared_ptr<const FiniteMetricSpace>;

// Pointer identity or identical distance matrices.
bool SameSpace(const SpaceRef& a, const SpaceRef& b);

// Checks, in order: squareness, finiteness, nonnegativity, zero diagonal,
// exact symmetry, positive off-diagonal entries, then the triangle inequality
// dist[k][l] <= dist[k][m] + dist[m][l] with tolerance
// max(1e-12, 1e-9 * max(lhs, rhs)). The first violation found in row-major
// index order is thrown as an Error carrying its indices.
SpaceRef ValidateMetric(const Matrix& matrix,
                        std::optional<std::vector<std::string>> labels = std::nullopt,
                        std::string id = "");

// Coordinates of a point cloud. Construction rejects empty clouds, ragged
// dimensions, non-finite coordinates and coincident points.
class PointCloud {
 public:
  explicit PointCloud(Matrix points);

  std::size_t size() const { return points_.size(); }
  std::size_t dimension() const { return points_.front().size(); }
  const std::vector<double>& operator[](std::size_t k) const { return points_[k]; }
  const Matrix& points() const { return points_; }

 private:
  Matrix points_;
};

// Euclidean distance matrix of the cloud.
SpaceRef FromPointCloud(const PointCloud& cloud, std::string id = "");

// The subspace on the listed points (in the listed order) with inherited
// distances. Indices must be distinct and in range.
SpaceRef Subspace(const SpaceRef& space, std::span<const std::size_t> indices);

// Real values attached to the points of a space.
class FunctionOnSpace {
 public:
  FunctionOnSpace(SpaceRef space, std::vector<double> values);

  static FunctionOnSpace Constant(SpaceRef space, double value);

  const SpaceRef& space() const { return space_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }

 private:
  SpaceRef space_;
  std::vector<double> values_;
};

// max_k |f(k) - g(k)|. Throws kDomainMismatch unless the spaces agree.
double SupNormDistance(const FunctionOnSpace& f, const FunctionOnSpace& g);

double SupNorm(const FunctionOnSpace& f);

// max |f(a) - f(b)| over pairs with dist(a, b) < rho (strict); 0 when no pair
// of distinct points qualifies.
double Oscillation(const FunctionOnSpace& f, double rho);

// Cover radius of `centers` in `space`: max over points of the distance to the
// nearest center.
double CoverRadius(const FiniteMetricSpace& space, std::span<const std::size_t> centers);

}  // namespace ghapprox

#endif  // GHAPPROX_METRIC_SPACE_H_
