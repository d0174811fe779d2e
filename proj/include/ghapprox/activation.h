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

#ifndef GHAPPROX_ACTIVATION_H_
#define GHAPPROX_ACTIVATION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ghapprox {

enum class ActivationKind { kLogistic, kHardStep, kPowerAbs, kPower, kAbsScale, kCustomTable };

std::string_view ActivationKindName(ActivationKind kind);
std::optional<ActivationKind> ParseActivationKind(std::string_view name);

// A continuous (or, for hard-step, piecewise constant) activation sigma: R -> R.
// The zero function is rejected at construction. `sigmoidal()` records the
// outcome of CheckSigmoidal with the default horizon; `multiplicative_a()` is
// set only when sigma(t) * sigma(s) = A * sigma(t * s) passed CheckMultiplicative.
class Activation {
 public:
  static Activation Logistic();
  // 0 for t < 0, 1 for t >= 0.
  static Activation HardStep();
  // a * |t|^p, p >= 0.
  static Activation PowerAbs(double a, double p);
  // a * t^p for a natural number p.
  static Activation Power(double a, int p);
  // a * |t|.
  static Activation AbsScale(double a);
  // Piecewise-linear through (t[k], v[k]) with constant extension; t strictly
  // increasing.
  static Activation CustomTable(std::vector<double> t, std::vector<double> v);

  double operator()(double t) const;

  ActivationKind kind() const { return kind_; }
  double a() const { return a_; }
  double p() const { return p_; }
  const std::vector<double>& table_t() const { return table_t_; }
  const std::vector<double>& table_v() const { return table_v_; }

  bool sigmoidal() const { return sigmoidal_; }
  std::optional<double> multiplicative_a() const { return multiplicative_a_; }

  // Returns a copy with multiplicative_a() = A after CheckMultiplicative
  // passes; throws kActivationNotMultiplicative otherwise.
  Activation WithMultiplicative(double A) const;

  friend bool operator==(const Activation& lhs, const Activation& rhs) {
    return lhs.kind_ == rhs.kind_ && lhs.a_ == rhs.a_ && lhs.p_ == rhs.p_ &&
           lhs.table_t_ == rhs.table_t_ && lhs.table_v_ == rhs.table_v_;
  }

 private:
  explicit Activation(ActivationKind kind) : kind_(kind) {}
  void Finish();

  ActivationKind kind_;
  double a_ = 1.0;
  double p_ = 1.0;
  std::vector<double> table_t_;
  std::vector<double> table_v_;
  bool sigmoidal_ = false;
  std::optional<double> multiplicative_a_;
};

// Horizon used when classifying activations at construction.
std::vector<double> DefaultSigmoidalHorizon();
inline constexpr double kDefaultSigmoidalTol = 1e-9;

// True iff |sigma(-T)| <= tol and |sigma(T) - 1| <= tol at the largest T, and
// both deviations are non-increasing along `horizon` (increasing positive T).
bool CheckSigmoidal(const Activation& sigma, std::span<const double> horizon, double tol);

struct MultiplicativeCheck {
  bool holds = false;
  std::optional<std::pair<double, double>> counterexample;
};

// Samples (t, s) uniformly from [-10, 10]^2 and tests
// |sigma(t) sigma(s) - A sigma(t s)| <= tol * (1 + |A sigma(t s)|).
// Reports the first failing pair.
MultiplicativeCheck CheckMultiplicative(const Activation& sigma, double A, int samples,
                                        std::uint64_t seed, double tol);

}  // namespace ghapprox

#endif  // GHAPPROX_ACTIVATION_H_
