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

#include "ghapprox/density.h"

#include <chrono>
#include <cmath>
#include <optional>
#include <utility>

#include "ghapprox/epsilon_net.h"
#include "ghapprox/error.h"
#include "ghapprox/isometry.h"

namespace ghapprox {

ErrorBudget MakeBudget(double epsilon, double fit_tol_fraction) {
  ErrorBudget b;
  b.transfer = epsilon / 4.0;
  b.fit = fit_tol_fraction * epsilon;
  b.chained_bound = 2.0 * (b.fit + b.transfer);
  b.chain_target = epsilon / 4.0;
  b.chain_slice = epsilon / 16.0;
  b.chain_fit = epsilon / 16.0;
  b.chain_total = 2.0 * (b.chain_target + 2.0 * (b.chain_slice + b.chain_fit));
  return b;
}

PipelineResult RunPipeline(const FunctionOnSpace& target, double epsilon, const Activation& sigma,
                           const PipelineOptions& options) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  }
  if (!sigma.sigmoidal()) throw Error(ErrorCode::kNotSigmoidal, "activation is not sigmoidal");
  if (options.max_net_shrink_steps < 0 || !(options.fit_tol_fraction > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid pipeline options");
  }
  const SpaceRef& domain = target.space();
  const ErrorBudget budget = MakeBudget(epsilon, options.fit_tol_fraction);

  double radius = epsilon / 4.0;
  std::optional<EpsilonNetResult> net;
  std::optional<PointMap> projection;
  std::optional<FunctionOnSpace> transferred;
  double transfer_bound = 0.0;
  int step = 0;
  for (;; ++step) {
    net = EpsilonNet(domain, radius, options.seed_index);
    projection = ApproximateInverse(net->inclusion);
    transferred = TransferFunction(target, net->inclusion);
    transfer_bound = Gh0UpperBound(*transferred, target, net->inclusion, *projection).value;
    if (transfer_bound <= budget.transfer) break;
    if (step == options.max_net_shrink_steps) {
      throw Error(ErrorCode::kNetExhausted,
                  "net shrinking exhausted: transfer bound " + std::to_string(transfer_bound) +
                      " > " + std::to_string(budget.transfer));
    }
    radius /= 2.0;
  }

  std::optional<InterpolationResult> fit;
  try {
    fit = InterpolateExact(*transferred, sigma, std::nullopt, budget.fit);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSingularSystem) throw;
    throw Error(ErrorCode::kFitFailed, e.what());
  }

  const Gh0Bound components =
      Gh0UpperBound(Evaluate(fit->network), target, net->inclusion, *projection);
  DensityCertificate cert{
      .epsilon = epsilon,
      .net_radius = radius,
      .cover_radius = net->cover_radius,
      .net_size = net->subspace->size(),
      .shrink_steps = step,
      .transfer_bound = transfer_bound,
      .fit_error = fit->residual,
      .components = components,
      .bound = components.value,
      .pass = components.value < epsilon,
      .budget = budget,
      .inclusion = net->inclusion,
      .projection = *projection,
  };
  return PipelineResult{net->subspace, std::move(*transferred), std::move(fit->network),
                        std::move(cert)};
}

Gh0Bound RecomputeBound(const PipelineResult& result, const FunctionOnSpace& target) {
  return Gh0UpperBound(Evaluate(result.network), target, result.certificate.inclusion,
                       result.certificate.projection);
}

std::vector<StudyRow> ConvergenceStudy(const FunctionOnSpace& target,
                                       const std::vector<double>& epsilons,
                                       const Activation& sigma, std::uint64_t seed,
                                       PipelineOptions options) {
  for (std::size_t k = 0; k < epsilons.size(); ++k) {
    if (!(epsilons[k] > 0.0) || (k > 0 && !(epsilons[k] < epsilons[k - 1]))) {
      throw Error(ErrorCode::kInvalidArgument, "epsilons must be positive and decreasing", {k});
    }
  }
  options.seed_index = static_cast<std::size_t>(seed % target.size());
  std::vector<StudyRow> rows;
  for (double eps : epsilons) {
    const auto start = std::chrono::steady_clock::now();
    const PipelineResult run = RunPipeline(target, eps, sigma, options);
    const auto stop = std::chrono::steady_clock::now();
    StudyRow row;
    row.epsilon = eps;
    row.net_size = run.certificate.net_size;
    row.fit_error = run.certificate.fit_error;
    row.bound = run.certificate.bound;
    row.pass = run.certificate.pass;
    row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ghapprox
