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

#include "ghapprox/measures.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include <Eigen/Dense>

#include "ghapprox/error.h"

namespace ghapprox {
namespace {

Eigen::MatrixXd ToEigen(const std::vector<std::vector<double>>& rows, std::size_t cols) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  return m;
}

std::size_t NumericalRank(const Eigen::MatrixXd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > kRankTol * s(0)) ++rank;
  }
  return rank;
}

std::vector<double> Normalize(std::vector<double> v) {
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return v;
  double sign = 1.0;
  for (double x : v) {
    if (x != 0.0) {
      sign = x > 0.0 ? 1.0 : -1.0;
      break;
    }
  }
  for (double& x : v) {
    x = x * sign / scale;
    if (x == 0.0) x = 0.0;  // drop negative zeros
  }
  return v;
}

// Reduced row echelon form with columns visited in index order; the null
// vector comes from the first free column with that column set to 1.
std::optional<std::vector<double>> FirstNullVector(Eigen::MatrixXd m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  const double scale = rows > 0 ? std::max(1.0, m.cwiseAbs().maxCoeff()) : 1.0;
  const double tol = kRankTol * scale;
  std::vector<Eigen::Index> pivot_col_of_row;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index best = r;
    for (Eigen::Index k = r + 1; k < rows; ++k) {
      if (std::abs(m(k, c)) > std::abs(m(best, c))) best = k;
    }
    if (std::abs(m(best, c)) <= tol) continue;
    m.row(r).swap(m.row(best));
    m.row(r) /= m(r, c);
    for (Eigen::Index k = 0; k < rows; ++k) {
      if (k != r && m(k, c) != 0.0) m.row(k) -= m(k, c) * m.row(r);
    }
    pivot_col_of_row.push_back(c);
    is_pivot[static_cast<std::size_t>(c)] = true;
    ++r;
  }
  Eigen::Index free_col = -1;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) {
      free_col = c;
      break;
    }
  }
  if (free_col < 0) return std::nullopt;
  std::vector<double> v(static_cast<std::size_t>(cols), 0.0);
  v[static_cast<std::size_t>(free_col)] = 1.0;
  for (std::size_t k = 0; k < pivot_col_of_row.size(); ++k) {
    v[static_cast<std::size_t>(pivot_col_of_row[k])] = -m(static_cast<Eigen::Index>(k), free_col);
  }
  return v;
}

}  // namespace

SignedMeasure::SignedMeasure(SpaceRef space, std::vector<double> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (!space_) throw Error(ErrorCode::kInvalidArgument, "measure without a space");
  if (weights_.size() != space_->size()) {
    throw Error(ErrorCode::kDimensionMismatch, "measure length does not match the space");
  }
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    if (!std::isfinite(weights_[k])) throw Error(ErrorCode::kNonFinite, "non-finite weight", {k});
  }
}

std::vector<std::vector<std::size_t>> LevelGroups(const FunctionOnSpace& f, double tau) {
  if (!(tau >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "tau must be nonnegative");
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&f](std::size_t a, std::size_t b) { return f[a] < f[b]; });
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r == 0 || f[order[r]] - f[order[r - 1]] > tau) groups.emplace_back();
    groups.back().push_back(order[r]);
  }
  for (auto& g : groups) std::sort(g.begin(), g.end());
  return groups;
}

GroupedMeasure Pushforward(const FunctionOnSpace& f, const SignedMeasure& mu, double tau) {
  if (!SameSpace(f.space(), mu.space())) {
    throw Error(ErrorCode::kDomainMismatch, "function and measure live on different spaces");
  }
  GroupedMeasure out;
  out.preimages = LevelGroups(f, tau);
  for (const auto& group : out.preimages) {
    double lowest = f[group.front()];
    double mass = 0.0;
    for (std::size_t x : group) {
      lowest = std::min(lowest, f[x]);
      mass += mu[x];
    }
    out.support.push_back(lowest);
    out.weights.push_back(mass);
  }
  return out;
}

std::string_view FamilyKindName(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kExplicitList: return "explicit-list";
    case FamilyKind::kLinearSpan: return "linear-span";
    case FamilyKind::kAllFunctions: return "all-functions";
  }
  return "unknown";
}

std::optional<FamilyKind> ParseFamilyKind(std::string_view name) {
  for (FamilyKind kind :
       {FamilyKind::kExplicitList, FamilyKind::kLinearSpan, FamilyKind::kAllFunctions}) {
    if (FamilyKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

FunctionFamily::FunctionFamily(FamilyKind kind, SpaceRef space,
                               std::vector<FunctionOnSpace> members)
    : kind_(kind), space_(std::move(space)), members_(std::move(members)) {
  if (!space_) throw Error(ErrorCode::kInvalidArgument, "family without a space");
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (!SameSpace(members_[k].space(), space_)) {
      throw Error(ErrorCode::kDomainMismatch, "family member on a different space", {k});
    }
  }
}

FunctionFamily FunctionFamily::ExplicitList(SpaceRef space, std::vector<FunctionOnSpace> members) {
  return FunctionFamily(FamilyKind::kExplicitList, std::move(space), std::move(members));
}

FunctionFamily FunctionFamily::LinearSpan(SpaceRef space, std::vector<FunctionOnSpace> basis) {
  FunctionFamily family(FamilyKind::kLinearSpan, std::move(space), std::move(basis));
  std::vector<std::vector<double>> rows;
  for (const auto& b : family.members_) rows.push_back(b.values());
  if (NumericalRank(ToEigen(rows, family.space_->size())) != rows.size()) {
    throw Error(ErrorCode::kInvalidArgument, "span basis is linearly dependent");
  }
  return family;
}

FunctionFamily FunctionFamily::AllFunctions(SpaceRef space) {
  std::vector<FunctionOnSpace> indicators;
  const std::size_t n = space->size();
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> v(n, 0.0);
    v[k] = 1.0;
    indicators.emplace_back(space, std::move(v));
  }
  return FunctionFamily(FamilyKind::kAllFunctions, std::move(space), std::move(indicators));
}

FunctionOnSpace FunctionFamily::Sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const std::size_t n = space_->size();
  switch (kind_) {
    case FamilyKind::kExplicitList: {
      if (members_.empty()) throw Error(ErrorCode::kEmptyInput, "cannot sample an empty family");
      std::uniform_int_distribution<std::size_t> pick(0, members_.size() - 1);
      return members_[pick(rng)];
    }
    case FamilyKind::kLinearSpan: {
      std::vector<double> v(n, 0.0);
      for (const auto& b : members_) {
        const double c = unit(rng);
        for (std::size_t x = 0; x < n; ++x) v[x] += c * b[x];
      }
      return FunctionOnSpace(space_, std::move(v));
    }
    case FamilyKind::kAllFunctions: {
      std::vector<double> v(n);
      for (double& x : v) x = unit(rng);
      return FunctionOnSpace(space_, std::move(v));
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family kind");
}

std::vector<std::vector<double>> SeparationSystem(const FunctionFamily& family, double tau) {
  const std::size_t n = family.space()->size();
  std::vector<std::vector<double>> rows;
  for (const auto& f : family.members()) {
    for (const auto& group : LevelGroups(f, tau)) {
      std::vector<double> row(n, 0.0);
      for (std::size_t x : group) row[x] = 1.0;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

SeparationResult SeparatesCheck(const FunctionFamily& family, double tau) {
  const std::size_t n = family.space()->size();
  const Eigen::MatrixXd system = ToEigen(SeparationSystem(family, tau), n);
  SeparationResult result;
  result.rank = NumericalRank(system);
  result.separates = result.rank == n;
  if (result.separates) return result;

  std::optional<std::vector<double>> null = FirstNullVector(system);
  if (!null) {
    // Rank decisions of the SVD and the elimination disagree only on
    // borderline systems; fall back to the last right singular vector.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
    const Eigen::VectorXd v = svd.matrixV().col(static_cast<Eigen::Index>(n) - 1);
    null = std::vector<double>(v.data(), v.data() + v.size());
  }
  result.witness = SignedMeasure(family.space(), Normalize(std::move(*null)));
  return result;
}

double DiscriminatoryMargin(const Activation& sigma, const FunctionFamily& family,
                            std::size_t samples, Interval lambda_range, Interval theta_range,
                            std::uint64_t seed) {
  const std::size_t n = family.space()->size();
  if (samples < n) return 0.0;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lambda_dist(lambda_range.lo, lambda_range.hi);
  std::uniform_real_distribution<double> theta_dist(theta_range.lo, theta_range.hi);
  Eigen::MatrixXd rows(static_cast<Eigen::Index>(samples), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < samples; ++r) {
    const FunctionOnSpace f = family.Sample(rng);
    const double lambda = lambda_dist(rng);
    const double theta = theta_dist(rng);
    for (std::size_t x = 0; x < n; ++x) {
      rows(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(x)) = sigma(lambda * f[x] + theta);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows);
  return svd.singularValues()(static_cast<Eigen::Index>(n) - 1);
}

}  // namespace ghapprox
