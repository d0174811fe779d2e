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

#ifndef GHAPPROX_DENSITY_H_
#define GHAPPROX_DENSITY_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ghapprox/activation.h"
#include "ghapprox/gh0.h"
#include "ghapprox/metric_space.h"
#include "ghapprox/point_map.h"
#include "ghapprox/shallow_net.h"

namespace ghapprox {

struct PipelineOptions {
  int max_net_shrink_steps = 20;
  double fit_tol_fraction = 1.0 / 8.0;
  std::size_t seed_index = 0;
};

// Allocation of epsilon. The first block is what the pipeline enforces; the
// second is the split of the three-step triangle chain (target gap eps/4,
// slice eps/16, fit eps/16), kept for comparison.
struct ErrorBudget {
  double transfer = 0.0;       // eps / 4
  double fit = 0.0;            // fit_tol_fraction * eps
  double chained_bound = 0.0;  // 2 (fit + transfer)
  double chain_target = 0.0;   // eps / 4
  double chain_slice = 0.0;    // eps / 16
  double chain_fit = 0.0;      // eps / 16
  double chain_total = 0.0;    // 2 (eps/4 + 2 (eps/16 + eps/16)) = eps
};

ErrorBudget MakeBudget(double epsilon, double fit_tol_fraction);

// A witness-backed upper bound on the C0-Gromov-Hausdorff distance between a
// network (on a net of the target's domain) and the target.
struct DensityCertificate {
  double epsilon = 0.0;
  double net_radius = 0.0;    // radius passed to EpsilonNet
  double cover_radius = 0.0;  // achieved
  std::size_t net_size = 0;
  int shrink_steps = 0;
  double transfer_bound = 0.0;  // Gh0UpperBound(transferred, target, i, j)
  double fit_error = 0.0;
  Gh0Bound components;  // network vs target; components.value is the bound
  double bound = 0.0;
  bool pass = false;
  ErrorBudget budget;
  PointMap inclusion;   // net -> domain
  PointMap projection;  // domain -> net
};

struct PipelineResult {
  SpaceRef net_space;
  FunctionOnSpace transferred;
  ShallowNetwork network;
  DensityCertificate certificate;
};

// Discretize, transfer, fit, certify:
//  1. eps-net of the domain (farthest point, radius eps/4), inclusion i and
//     nearest-point projection j;
//  2. transferred function target o i;
//  3. halve the radius until Gh0UpperBound(transferred, target, i, j) <= eps/4
//     (kNetExhausted after max_net_shrink_steps halvings);
//  4. InterpolateExact on the net to sup error <= fit_tol_fraction * eps
//     (kFitFailed on failure);
//  5. bound = Gh0UpperBound(network values, target, i, j); pass iff bound < eps.
PipelineResult RunPipeline(const FunctionOnSpace& target, double epsilon, const Activation& sigma,
                           const PipelineOptions& options = {});

// Recomputes the bound from the stored witnesses and network.
Gh0Bound RecomputeBound(const PipelineResult& result, const FunctionOnSpace& target);

struct StudyRow {
  double epsilon = 0.0;
  std::size_t net_size = 0;
  double fit_error = 0.0;
  double bound = 0.0;
  bool pass = false;
  std::int64_t millis = 0;
};

// One pipeline run per epsilon (positive, strictly decreasing). The seed picks
// the farthest-point start, seed mod |X|.
std::vector<StudyRow> ConvergenceStudy(const FunctionOnSpace& target,
                                       const std::vector<double>& epsilons,
                                       const Activation& sigma, std::uint64_t seed,
                                       PipelineOptions options = {});

}  // namespace ghapprox

#endif  // GHAPPROX_DENSITY_H_
