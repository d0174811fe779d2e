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

#ifndef GHAPPROX_MEASURES_H_
#define GHAPPROX_MEASURES_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "ghapprox/activation.h"
#include "ghapprox/metric_space.h"

namespace ghapprox {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// A signed measure on a finite space: one real weight per point.
class SignedMeasure {
 public:
  SignedMeasure(SpaceRef space, std::vector<double> weights);

  const SpaceRef& space() const { return space_; }
  const std::vector<double>& weights() const { return weights_; }
  double operator[](std::size_t k) const { return weights_[k]; }
  std::size_t size() const { return weights_.size(); }

 private:
  SpaceRef space_;
  std::vector<double> weights_;
};

// A signed measure on the real line supported on finitely many values.
struct GroupedMeasure {
  std::vector<double> support;  // strictly increasing
  std::vector<double> weights;
  // Point indices of each group's preimage, ascending.
  std::vector<std::vector<std::size_t>> preimages;
};

// Level sets of f after sorting its values and merging neighbours that differ
// by at most tau (single linkage); tau = 0 groups by exact equality. Each
// group is represented by its smallest value.
std::vector<std::vector<std::size_t>> LevelGroups(const FunctionOnSpace& f, double tau);

// f_*(mu) with level grouping at tolerance tau.
GroupedMeasure Pushforward(const FunctionOnSpace& f, const SignedMeasure& mu, double tau);

enum class FamilyKind { kExplicitList, kLinearSpan, kAllFunctions };

std::string_view FamilyKindName(FamilyKind kind);
std::optional<FamilyKind> ParseFamilyKind(std::string_view name);

// A family F of functions on one space. kLinearSpan and kAllFunctions are
// closed under scaling; kAllFunctions is represented by the point indicators.
class FunctionFamily {
 public:
  static FunctionFamily ExplicitList(SpaceRef space, std::vector<FunctionOnSpace> members);
  // Throws kInvalidArgument unless the basis has full rank (tolerance 1e-10
  // relative to the largest singular value).
  static FunctionFamily LinearSpan(SpaceRef space, std::vector<FunctionOnSpace> basis);
  static FunctionFamily AllFunctions(SpaceRef space);

  FamilyKind kind() const { return kind_; }
  const SpaceRef& space() const { return space_; }
  // Members (explicit list), basis (span), or point indicators (all).
  const std::vector<FunctionOnSpace>& members() const { return members_; }

  // Draws one function: a uniform member, a combination of the basis with
  // coefficients in [-1, 1], or values uniform in [-1, 1] per point.
  FunctionOnSpace Sample(std::mt19937_64& rng) const;

 private:
  FunctionFamily(FamilyKind kind, SpaceRef space, std::vector<FunctionOnSpace> members);

  FamilyKind kind_;
  SpaceRef space_;
  std::vector<FunctionOnSpace> members_;
};

// Rank tolerance relative to the largest singular value.
inline constexpr double kRankTol = 1e-10;

struct SeparationResult {
  bool separates = false;
  std::size_t rank = 0;
  // Present iff !separates: a nonzero measure with f_*(mu) = 0 for every
  // member, scaled to unit max-norm with its first nonzero entry positive.
  std::optional<SignedMeasure> witness;
};

// The linear system sum_{x in group} mu(x) = 0, one row per (member, level
// group). Row order: members in order, groups by increasing value.
std::vector<std::vector<double>> SeparationSystem(const FunctionFamily& family, double tau);

// Decides whether F separates signed measures on its space: the separation
// system must have rank |X|. tau = 0 is the canonical semantics.
SeparationResult SeparatesCheck(const FunctionFamily& family, double tau = 0.0);

// Smallest singular value of the samples x |X| matrix with rows
// sigma(lambda f(x) + theta), (f, lambda, theta) drawn from the family and the
// two ranges. Numerical evidence only: it cannot certify the universally
// quantified discriminatory property. Returns 0 when samples < |X|.
double DiscriminatoryMargin(const Activation& sigma, const FunctionFamily& family,
                            std::size_t samples, Interval lambda_range, Interval theta_range,
                            std::uint64_t seed);

}  // namespace ghapprox

#endif  // GHAPPROX_MEASURES_H_
