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

#ifndef GHAPPROX_SHALLOW_NET_H_
#define GHAPPROX_SHALLOW_NET_H_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ghapprox/activation.h"
#include "ghapprox/measures.h"
#include "ghapprox/metric_space.h"

namespace ghapprox {

// One hidden unit a * sigma(f(x) + theta).
struct Unit {
  double a = 0.0;
  double theta = 0.0;
  FunctionOnSpace f;
};

// g(x) = sum_j a_j sigma(f_j(x) + theta_j) over a finite space. Always has at
// least one unit; the zero network is a single unit with a = 0.
class ShallowNetwork {
 public:
  ShallowNetwork(SpaceRef space, Activation activation, std::vector<Unit> units);

  static ShallowNetwork Zero(SpaceRef space, Activation activation);

  const SpaceRef& space() const { return space_; }
  const Activation& activation() const { return activation_; }
  const std::vector<Unit>& units() const { return units_; }

 private:
  SpaceRef space_;
  Activation activation_;
  std::vector<Unit> units_;
};

FunctionOnSpace Evaluate(const ShallowNetwork& net);

// Pointwise product through sigma(t) sigma(s) = A sigma(ts): the N*M units
// (a_i b_j A, theta_i theta'_j, f_i f'_j + theta'_j f_i + theta_i f'_j).
ShallowNetwork ProductNetwork(const ShallowNetwork& n1, const ShallowNetwork& n2);

struct InterpolationResult {
  ShallowNetwork network;
  double lambda = 1.0;
  double residual = 0.0;  // sup-norm, from evaluating the returned network
  int doublings = 0;
};

// Exact interpolation on a finite space with the metric features
// f_k(x) = -d(x, x_k), theta_k = r_k / 2 (r_k = distance from x_k to its nearest
// neighbour; 1 for a singleton). The design matrix
// A[j][k] = sigma(lambda (f_k(x_j) + theta_k)) is solved for the outer weights,
// and the scaled features lambda f_k, lambda theta_k are stored in the units.
// With no lambda given, lambda doubles from 1 until A is strictly diagonally
// dominant and the residual is within tol; 60 doublings at most, then
// kSingularSystem. A fixed lambda that misses tol is also kSingularSystem.
InterpolationResult InterpolateExact(const FunctionOnSpace& target, const Activation& sigma,
                                     std::optional<double> lambda = std::nullopt,
                                     double tol = 1e-9);

inline constexpr int kMaxLambdaDoublings = 60;

// Draws n units (a = 0) from (family, lambda_range, theta_range): feature
// lambda * f with f = family.Sample(rng), then theta.
std::vector<Unit> DrawUnits(const FunctionFamily& family, std::size_t n, Interval lambda_range,
                            Interval theta_range, std::mt19937_64& rng);

struct FitResult {
  ShallowNetwork network;
  double sup_error = 0.0;
};

// Least-squares outer weights for fixed hidden units (minimum-norm solution).
FitResult FitOuterWeights(const FunctionOnSpace& target, const Activation& sigma,
                          std::vector<Unit> units);

// Random-feature fit: DrawUnits with an mt19937_64 seeded by `seed`, then
// FitOuterWeights. Deterministic given the seed.
FitResult FitLeastSquares(const FunctionOnSpace& target, const FunctionFamily& family,
                          const Activation& sigma, std::size_t n_units, Interval theta_range,
                          std::uint64_t seed, Interval lambda_range = {1.0, 1.0});

}  // namespace ghapprox

#endif  // GHAPPROX_SHALLOW_NET_H_
