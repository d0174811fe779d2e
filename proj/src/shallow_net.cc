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

#include "ghapprox/shallow_net.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include <Eigen/Dense>

#include "ghapprox/error.h"

namespace ghapprox {
namespace {

Eigen::MatrixXd DesignMatrix(const Activation& sigma, const std::vector<Unit>& units,
                             std::size_t n) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(units.size()));
  for (std::size_t k = 0; k < units.size(); ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(k)) =
          sigma(units[k].f[x] + units[k].theta);
    }
  }
  return m;
}

// min_j (A[j][j] - sum_{k != j} |A[j][k]|).
double DominanceMargin(const Eigen::MatrixXd& m) {
  double margin = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    const double off = m.row(j).cwiseAbs().sum() - std::abs(m(j, j));
    margin = std::min(margin, m(j, j) - off);
  }
  return margin;
}

std::vector<Unit> MetricUnits(const SpaceRef& space, double lambda) {
  const FiniteMetricSpace& s = *space;
  const std::size_t n = s.size();
  std::vector<Unit> units;
  units.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    double r = std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < n; ++l) {
      if (l != k) r = std::min(r, s(k, l));
    }
    const double theta = n == 1 ? 1.0 : r / 2.0;
    std::vector<double> f(n);
    for (std::size_t x = 0; x < n; ++x) f[x] = -lambda * s(x, k);
    units.push_back(Unit{0.0, lambda * theta, FunctionOnSpace(space, std::move(f))});
  }
  return units;
}

}  // namespace

ShallowNetwork::ShallowNetwork(SpaceRef space, Activation activation, std::vector<Unit> units)
    : space_(std::move(space)), activation_(std::move(activation)), units_(std::move(units)) {
  if (!space_) throw Error(ErrorCode::kInvalidArgument, "network without a space");
  if (units_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "network needs at least one unit; use Zero()");
  }
  for (std::size_t k = 0; k < units_.size(); ++k) {
    if (!SameSpace(units_[k].f.space(), space_)) {
      throw Error(ErrorCode::kSpaceMismatch, "unit feature on a different space", {k});
    }
    if (!std::isfinite(units_[k].a) || !std::isfinite(units_[k].theta)) {
      throw Error(ErrorCode::kNonFinite, "non-finite unit parameter", {k});
    }
  }
}

ShallowNetwork ShallowNetwork::Zero(SpaceRef space, Activation activation) {
  FunctionOnSpace zero = FunctionOnSpace::Constant(space, 0.0);
  return ShallowNetwork(std::move(space), std::move(activation), {Unit{0.0, 0.0, std::move(zero)}});
}

FunctionOnSpace Evaluate(const ShallowNetwork& net) {
  const std::size_t n = net.space()->size();
  std::vector<double> values(n, 0.0);
  for (const Unit& u : net.units()) {
    for (std::size_t x = 0; x < n; ++x) values[x] += u.a * net.activation()(u.f[x] + u.theta);
  }
  return FunctionOnSpace(net.space(), std::move(values));
}

ShallowNetwork ProductNetwork(const ShallowNetwork& n1, const ShallowNetwork& n2) {
  if (!SameSpace(n1.space(), n2.space())) {
    throw Error(ErrorCode::kSpaceMismatch, "networks live on different spaces");
  }
  if (!(n1.activation() == n2.activation())) {
    throw Error(ErrorCode::kInvalidArgument, "networks use different activations");
  }
  const std::optional<double> A = n1.activation().multiplicative_a();
  if (!A) {
    throw Error(ErrorCode::kActivationNotMultiplicative,
                "activation has no multiplicative constant");
  }
  const std::size_t n = n1.space()->size();
  std::vector<Unit> units;
  units.reserve(n1.units().size() * n2.units().size());
  for (const Unit& u : n1.units()) {
    for (const Unit& v : n2.units()) {
      std::vector<double> f(n);
      for (std::size_t x = 0; x < n; ++x) {
        f[x] = u.f[x] * v.f[x] + v.theta * u.f[x] + u.theta * v.f[x];
      }
      units.push_back(
          Unit{u.a * v.a * *A, u.theta * v.theta, FunctionOnSpace(n1.space(), std::move(f))});
    }
  }
  return ShallowNetwork(n1.space(), n1.activation(), std::move(units));
}

InterpolationResult InterpolateExact(const FunctionOnSpace& target, const Activation& sigma,
                                     std::optional<double> lambda, double tol) {
  if (!sigma.sigmoidal()) {
    throw Error(ErrorCode::kNotSigmoidal, "interpolation needs a sigmoidal activation");
  }
  if (lambda && !(*lambda > 0.0 && std::isfinite(*lambda))) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must be positive");
  }
  const SpaceRef& space = target.space();
  const std::size_t n = space->size();
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(n));
  for (std::size_t x = 0; x < n; ++x) rhs(static_cast<Eigen::Index>(x)) = target[x];

  double best_residual = std::numeric_limits<double>::infinity();
  const int attempts = lambda ? 1 : kMaxLambdaDoublings + 1;
  double current = lambda.value_or(1.0);
  for (int step = 0; step < attempts; ++step, current *= 2.0) {
    std::vector<Unit> units = MetricUnits(space, current);
    const Eigen::MatrixXd design = DesignMatrix(sigma, units, n);
    if (!lambda && !(DominanceMargin(design) > 0.0)) continue;
    const Eigen::VectorXd weights = design.fullPivLu().solve(rhs);
    if (!weights.allFinite()) continue;
    for (std::size_t k = 0; k < n; ++k) units[k].a = weights(static_cast<Eigen::Index>(k));
    ShallowNetwork net(space, sigma, std::move(units));
    const double residual = SupNormDistance(Evaluate(net), target);
    best_residual = std::min(best_residual, residual);
    if (residual <= tol) return InterpolationResult{std::move(net), current, residual, step};
  }
  throw Error(ErrorCode::kSingularSystem,
              "interpolation failed: best residual " + std::to_string(best_residual) +
                  " above tolerance " + std::to_string(tol));
}

std::vector<Unit> DrawUnits(const FunctionFamily& family, std::size_t n, Interval lambda_range,
                            Interval theta_range, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> lambda_dist(lambda_range.lo, lambda_range.hi);
  std::uniform_real_distribution<double> theta_dist(theta_range.lo, theta_range.hi);
  std::vector<Unit> units;
  units.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const FunctionOnSpace f = family.Sample(rng);
    const double lambda = lambda_dist(rng);
    const double theta = theta_dist(rng);
    std::vector<double> scaled(f.values());
    for (double& v : scaled) v *= lambda;
    units.push_back(Unit{0.0, theta, FunctionOnSpace(family.space(), std::move(scaled))});
  }
  return units;
}

FitResult FitOuterWeights(const FunctionOnSpace& target, const Activation& sigma,
                          std::vector<Unit> units) {
  const std::size_t n = target.size();
  const Eigen::MatrixXd design = DesignMatrix(sigma, units, n);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(n));
  for (std::size_t x = 0; x < n; ++x) rhs(static_cast<Eigen::Index>(x)) = target[x];
  const Eigen::VectorXd weights = design.completeOrthogonalDecomposition().solve(rhs);
  for (std::size_t k = 0; k < units.size(); ++k) {
    const double w = weights(static_cast<Eigen::Index>(k));
    units[k].a = std::isfinite(w) ? w : 0.0;
  }
  ShallowNetwork net(target.space(), sigma, std::move(units));
  const double error = SupNormDistance(Evaluate(net), target);
  return FitResult{std::move(net), error};
}

FitResult FitLeastSquares(const FunctionOnSpace& target, const FunctionFamily& family,
                          const Activation& sigma, std::size_t n_units, Interval theta_range,
                          std::uint64_t seed, Interval lambda_range) {
  if (n_units == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one unit");
  if (!SameSpace(target.space(), family.space())) {
    throw Error(ErrorCode::kDomainMismatch, "family and target live on different spaces");
  }
  std::mt19937_64 rng(seed);
  std::vector<Unit> units = DrawUnits(family, n_units, lambda_range, theta_range, rng);
  return FitOuterWeights(target, sigma, std::move(units));
}

}  // namespace ghapprox
