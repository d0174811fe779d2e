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

#include "ghapprox/activation.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "ghapprox/error.h"

namespace ghapprox {
namespace {

constexpr int kMultiplicativeSamples = 2000;
constexpr double kMultiplicativeTol = 1e-10;

}  // namespace

std::string_view ActivationKindName(ActivationKind kind) {
  switch (kind) {
    case ActivationKind::kLogistic: return "logistic";
    case ActivationKind::kHardStep: return "hard-step";
    case ActivationKind::kPowerAbs: return "power-abs";
    case ActivationKind::kPower: return "power";
    case ActivationKind::kAbsScale: return "abs-scale";
    case ActivationKind::kCustomTable: return "custom-table";
  }
  return "unknown";
}

std::optional<ActivationKind> ParseActivationKind(std::string_view name) {
  for (ActivationKind kind :
       {ActivationKind::kLogistic, ActivationKind::kHardStep, ActivationKind::kPowerAbs,
        ActivationKind::kPower, ActivationKind::kAbsScale, ActivationKind::kCustomTable}) {
    if (ActivationKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

Activation Activation::Logistic() {
  Activation act(ActivationKind::kLogistic);
  act.Finish();
  return act;
}

Activation Activation::HardStep() {
  Activation act(ActivationKind::kHardStep);
  act.Finish();
  return act;
}

Activation Activation::PowerAbs(double a, double p) {
  if (!std::isfinite(a) || !std::isfinite(p) || p < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "power-abs needs finite a and p >= 0");
  }
  if (a == 0.0) throw Error(ErrorCode::kZeroActivation, "activation is identically zero");
  Activation act(ActivationKind::kPowerAbs);
  act.a_ = a;
  act.p_ = p;
  act.Finish();
  return act.WithMultiplicative(a);
}

Activation Activation::Power(double a, int p) {
  if (!std::isfinite(a) || p < 1) {
    throw Error(ErrorCode::kInvalidArgument, "power needs finite a and natural p");
  }
  if (a == 0.0) throw Error(ErrorCode::kZeroActivation, "activation is identically zero");
  Activation act(ActivationKind::kPower);
  act.a_ = a;
  act.p_ = p;
  act.Finish();
  return act.WithMultiplicative(a);
}

Activation Activation::AbsScale(double a) {
  if (!std::isfinite(a)) throw Error(ErrorCode::kInvalidArgument, "abs-scale needs finite a");
  if (a == 0.0) throw Error(ErrorCode::kZeroActivation, "activation is identically zero");
  Activation act(ActivationKind::kAbsScale);
  act.a_ = a;
  act.Finish();
  return act.WithMultiplicative(a);
}

Activation Activation::CustomTable(std::vector<double> t, std::vector<double> v) {
  if (t.empty() || t.size() != v.size()) {
    throw Error(ErrorCode::kInvalidArgument, "table needs matching nonempty t and v");
  }
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (!std::isfinite(t[k]) || !std::isfinite(v[k])) {
      throw Error(ErrorCode::kNonFinite, "non-finite table entry", {k});
    }
    if (k > 0 && !(t[k] > t[k - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "table abscissae must increase", {k});
    }
  }
  if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; })) {
    throw Error(ErrorCode::kZeroActivation, "activation is identically zero");
  }
  Activation act(ActivationKind::kCustomTable);
  act.table_t_ = std::move(t);
  act.table_v_ = std::move(v);
  act.Finish();
  return act;
}

double Activation::operator()(double t) const {
  switch (kind_) {
    case ActivationKind::kLogistic:
      if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
      {
        const double e = std::exp(t);
        return e / (1.0 + e);
      }
    case ActivationKind::kHardStep:
      return t >= 0.0 ? 1.0 : 0.0;
    case ActivationKind::kPowerAbs:
      return a_ * std::pow(std::abs(t), p_);
    case ActivationKind::kPower: {
      double r = 1.0;
      for (int k = 0; k < static_cast<int>(p_); ++k) r *= t;
      return a_ * r;
    }
    case ActivationKind::kAbsScale:
      return a_ * std::abs(t);
    case ActivationKind::kCustomTable: {
      if (t <= table_t_.front()) return table_v_.front();
      if (t >= table_t_.back()) return table_v_.back();
      const auto hi = std::upper_bound(table_t_.begin(), table_t_.end(), t);
      const std::size_t k = static_cast<std::size_t>(hi - table_t_.begin());
      const double w = (t - table_t_[k - 1]) / (table_t_[k] - table_t_[k - 1]);
      return table_v_[k - 1] + w * (table_v_[k] - table_v_[k - 1]);
    }
  }
  return 0.0;
}

void Activation::Finish() {
  const std::vector<double> horizon = DefaultSigmoidalHorizon();
  sigmoidal_ = CheckSigmoidal(*this, horizon, kDefaultSigmoidalTol);
}

Activation Activation::WithMultiplicative(double A) const {
  const MultiplicativeCheck check =
      CheckMultiplicative(*this, A, kMultiplicativeSamples, 0, kMultiplicativeTol);
  if (!check.holds) {
    throw Error(ErrorCode::kActivationNotMultiplicative,
                "sigma(t) sigma(s) = A sigma(ts) fails for A = " + std::to_string(A));
  }
  Activation copy = *this;
  copy.multiplicative_a_ = A;
  return copy;
}

std::vector<double> DefaultSigmoidalHorizon() { return {10.0, 20.0, 40.0, 80.0, 160.0}; }

bool CheckSigmoidal(const Activation& sigma, std::span<const double> horizon, double tol) {
  if (horizon.empty()) throw Error(ErrorCode::kInvalidArgument, "empty horizon");
  double prev_low = INFINITY;
  double prev_high = INFINITY;
  for (double T : horizon) {
    const double low = std::abs(sigma(-T));
    const double high = std::abs(sigma(T) - 1.0);
    if (!std::isfinite(low) || !std::isfinite(high)) return false;
    if (low > prev_low || high > prev_high) return false;
    prev_low = low;
    prev_high = high;
  }
  return prev_low <= tol && prev_high <= tol;
}

MultiplicativeCheck CheckMultiplicative(const Activation& sigma, double A, int samples,
                                        std::uint64_t seed, double tol) {
  if (A == 0.0) throw Error(ErrorCode::kInvalidArgument, "A must be nonzero");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  for (int k = 0; k < samples; ++k) {
    const double t = coord(rng);
    const double s = coord(rng);
    const double rhs = A * sigma(t * s);
    const double lhs = sigma(t) * sigma(s);
    if (!(std::abs(lhs - rhs) <= tol * (1.0 + std::abs(rhs)))) {
      return MultiplicativeCheck{false, std::make_pair(t, s)};
    }
  }
  return MultiplicativeCheck{true, std::nullopt};
}

}  // namespace ghapprox
