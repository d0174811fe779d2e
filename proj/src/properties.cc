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

#include "ghapprox/properties.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <utility>

#include "ghapprox/activation.h"
#include "ghapprox/epsilon_net.h"
#include "ghapprox/gh0.h"
#include "ghapprox/isometry.h"
#include "ghapprox/measures.h"
#include "ghapprox/metric_space.h"
#include "ghapprox/random_instances.h"
#include "ghapprox/shallow_net.h"

namespace ghapprox {
namespace {

constexpr double kSlack = 1e-12;

// Runs `check` on `cases` instances; a check returns an empty string on
// success and a description of the instance otherwise.
PropertyReport Suite(std::string name, std::size_t cases, std::mt19937_64& rng,
                     const std::function<std::string(std::mt19937_64&)>& check) {
  PropertyReport report{std::move(name), cases, 0, {}};
  for (std::size_t k = 0; k < cases; ++k) {
    std::string failure = check(rng);
    if (!failure.empty()) {
      if (report.violations == 0) report.first_violation = "case " + std::to_string(k) + ": " + failure;
      ++report.violations;
    }
  }
  return report;
}

std::string Describe(const char* what, double lhs, double rhs) {
  std::ostringstream out;
  out.precision(17);
  out << what << " (" << lhs << " vs " << rhs << ")";
  return out.str();
}

}  // namespace

std::vector<PropertyReport> RunPropertySuites(std::size_t cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PropertyReport> reports;
  const std::size_t heavy = std::max<std::size_t>(1, cases / 10);

  reports.push_back(Suite("point_cloud_metric", cases, rng, [](std::mt19937_64& r) {
    std::uniform_int_distribution<std::size_t> n(1, 12), dim(1, 4);
    RandomEuclideanSpace(r, n(r), dim(r));  // throws on failure
    return std::string();
  }));

  reports.push_back(Suite("epsilon_net_cover", cases, rng, [](std::mt19937_64& r) {
    SpaceRef space = RandomSmallSpace(r, 16);
    std::uniform_real_distribution<double> frac(0.01, 1.2);
    const double eps = frac(r) * std::max(space->Diameter(), 1e-3);
    std::uniform_int_distribution<std::size_t> seed(0, space->size() - 1);
    const std::size_t s = seed(r);
    const EpsilonNetResult net = EpsilonNet(space, eps, s);
    const EpsilonNetResult again = EpsilonNet(space, eps, s);
    const double cover = CoverRadius(*space, net.inclusion.image());
    if (cover > eps) return Describe("cover radius above eps", cover, eps);
    if (net.inclusion.image() != again.inclusion.image()) return std::string("non-deterministic net");
    return std::string();
  }));

  reports.push_back(Suite("sup_norm_metric", cases, rng, [](std::mt19937_64& r) {
    SpaceRef space = RandomSmallSpace(r, 10);
    const FunctionOnSpace f = RandomFunction(r, space), g = RandomFunction(r, space),
                          h = RandomFunction(r, space);
    if (SupNormDistance(f, g) != SupNormDistance(g, f)) return std::string("asymmetric");
    if (SupNormDistance(f, f) != 0.0) return std::string("d(f,f) != 0");
    if (SupNormDistance(f, h) > SupNormDistance(f, g) + SupNormDistance(g, h) + kSlack) {
      return std::string("triangle inequality");
    }
    return std::string();
  }));

  reports.push_back(Suite("gh_exact_bnb_symmetry", cases, rng, [](std::mt19937_64& r) {
    SpaceRef x = RandomSmallSpace(r, 4), y = RandomSmallSpace(r, 4);
    const GhResult exact = GhDistance(x, y, SearchMethod::kExact);
    const GhResult bnb = GhDistance(x, y, SearchMethod::kBranchAndBound);
    const GhResult swapped = GhDistance(y, x, SearchMethod::kBranchAndBound);
    if (exact.value != bnb.value) return Describe("bnb differs from exact", bnb.value, exact.value);
    if (exact.forward.image() != bnb.forward.image() ||
        exact.backward.image() != bnb.backward.image()) {
      return std::string("bnb witness differs from exact witness");
    }
    if (swapped.value != exact.value) return Describe("asymmetric", swapped.value, exact.value);
    if (GhDistance(x, x, SearchMethod::kBranchAndBound).value != 0.0) return std::string("d(X,X) != 0");
    const double ub = GhUpperBound(RandomMap(r, x, y), RandomMap(r, y, x));
    if (ub < exact.value) return Describe("witness bound below exact", ub, exact.value);
    return std::string();
  }));

  reports.push_back(Suite("two_point_law", cases, rng, [](std::mt19937_64& r) {
    std::uniform_real_distribution<double> len(0.01, 5.0);
    const double a = len(r), b = len(r);
    SpaceRef x = ValidateMetric({{0.0, a}, {a, 0.0}});
    SpaceRef y = ValidateMetric({{0.0, b}, {b, 0.0}});
    const double d = GhDistance(x, y, SearchMethod::kExact).value;
    if (d != std::abs(a - b)) return Describe("d != |a-b|", d, std::abs(a - b));
    return std::string();
  }));

  reports.push_back(Suite("approximate_inverse_law", cases, rng, [](std::mt19937_64& r) {
    SpaceRef x = RandomSmallSpace(r, 8), y = RandomSmallSpace(r, 8);
    const PointMap i = RandomMap(r, x, y);
    const PointMap j = ApproximateInverse(i);
    const double q = Quality(i).quality;
    if (RoundTripDefect(i, j) > q + kSlack) return Describe("round trip", RoundTripDefect(i, j), q);
    if (Distortion(j) > 3.0 * q + kSlack) return Describe("distortion(j) > 3q", Distortion(j), 3.0 * q);
    return std::string();
  }));

  reports.push_back(Suite("gh0_relaxed_metric", cases, rng, [](std::mt19937_64& r) {
    SpaceRef x = RandomSmallSpace(r, 4), y = RandomSmallSpace(r, 4), z = RandomSmallSpace(r, 4);
    const FunctionOnSpace f = RandomFunction(r, x), g = RandomFunction(r, y), h = RandomFunction(r, z);
    const double fg = Gh0Distance(f, g).value, gf = Gh0Distance(g, f).value;
    const double gh = Gh0Distance(g, h).value, fh = Gh0Distance(f, h).value;
    if (fg != gf) return Describe("asymmetric", fg, gf);
    if (fh > 2.0 * (fg + gh) + kSlack) return Describe("relaxed triangle", fh, 2.0 * (fg + gh));
    const FunctionOnSpace f2 = RandomFunction(r, x);
    if (Gh0Distance(f, f2).value > SupNormDistance(f, f2)) return std::string("domination");
    return std::string();
  }));

  reports.push_back(Suite("gh0_exact_bnb_witness", cases, rng, [](std::mt19937_64& r) {
    SpaceRef x = RandomSmallSpace(r, 4), y = RandomSmallSpace(r, 4);
    const FunctionOnSpace f = RandomFunction(r, x), g = RandomFunction(r, y);
    const Gh0Result exact = Gh0Distance(f, g, SearchMethod::kExact);
    const Gh0Result bnb = Gh0Distance(f, g, SearchMethod::kBranchAndBound);
    if (exact.value != bnb.value) return Describe("bnb differs from exact", bnb.value, exact.value);
    const double witnessed = Gh0UpperBound(f, g, exact.witness_i, exact.witness_j).value;
    if (witnessed != exact.value) return Describe("witness does not attain", witnessed, exact.value);
    const double ub = Gh0UpperBound(f, g, RandomMap(r, x, y), RandomMap(r, y, x)).value;
    if (ub < exact.value) return Describe("witness bound below exact", ub, exact.value);
    return std::string();
  }));

  reports.push_back(Suite("pushforward_mass", cases, rng, [](std::mt19937_64& r) {
    SpaceRef x = RandomSmallSpace(r, 8);
    const FunctionOnSpace f = RandomFunction(r, x);
    std::uniform_int_distribution<int> w(-8, 8);
    std::vector<double> weights(x->size());
    for (double& v : weights) v = w(r) / 4.0;
    const SignedMeasure mu(x, weights);
    const GroupedMeasure pushed = Pushforward(f, mu, 0.0);
    double in = 0.0, out = 0.0;
    for (double v : weights) in += v;
    for (double v : pushed.weights) out += v;
    if (in != out) return Describe("mass changed", out, in);
    for (std::size_t k = 1; k < pushed.support.size(); ++k) {
      if (!(pushed.support[k] > pushed.support[k - 1])) return std::string("support not increasing");
    }
    return std::string();
  }));

  reports.push_back(Suite("all_functions_separate", cases, rng, [](std::mt19937_64& r) {
    SpaceRef x = RandomSmallSpace(r, 8);
    if (!SeparatesCheck(FunctionFamily::AllFunctions(x)).separates) return std::string("not separating");
    if (x->size() >= 2 &&
        SeparatesCheck(FunctionFamily::ExplicitList(x, {FunctionOnSpace::Constant(x, 1.0)})).separates) {
      return std::string("constant family separates");
    }
    return std::string();
  }));

  const Activation square = Activation::Power(1.0, 2);
  const Activation logistic = Activation::Logistic();
  reports.push_back(Suite("product_network", cases, rng, [&square](std::mt19937_64& r) {
    SpaceRef x = RandomSmallSpace(r, 6);
    std::uniform_int_distribution<std::size_t> units(1, 3);
    std::uniform_real_distribution<double> param(-1.0, 1.0);
    auto random_net = [&] {
      std::vector<Unit> us;
      for (std::size_t k = units(r); k > 0; --k) us.push_back(Unit{param(r), param(r), RandomFunction(r, x)});
      return ShallowNetwork(x, square, std::move(us));
    };
    const ShallowNetwork a = random_net(), b = random_net();
    const FunctionOnSpace prod = Evaluate(ProductNetwork(a, b));
    const FunctionOnSpace ea = Evaluate(a), eb = Evaluate(b);
    for (std::size_t p = 0; p < x->size(); ++p) {
      if (std::abs(prod[p] - ea[p] * eb[p]) > 1e-9) return Describe("product mismatch", prod[p], ea[p] * eb[p]);
    }
    return std::string();
  }));

  reports.push_back(Suite("constant_features", cases, rng, [&logistic](std::mt19937_64& r) {
    SpaceRef x = RandomSmallSpace(r, 6);
    std::uniform_real_distribution<double> param(-3.0, 3.0);
    std::vector<Unit> us;
    for (int k = 0; k < 3; ++k) us.push_back(Unit{param(r), param(r), FunctionOnSpace::Constant(x, param(r))});
    const FunctionOnSpace v = Evaluate(ShallowNetwork(x, logistic, std::move(us)));
    for (std::size_t p = 1; p < v.size(); ++p) {
      if (v[p] != v[0]) return std::string("network over constant features is not constant");
    }
    return std::string();
  }));

  reports.push_back(Suite("interpolation_residual", heavy, rng, [&logistic](std::mt19937_64& r) {
    SpaceRef x = RandomSmallSpace(r, 12);
    const FunctionOnSpace target = RandomFunction(r, x);
    const InterpolationResult fit = InterpolateExact(target, logistic, std::nullopt, 1e-9);
    const double residual = SupNormDistance(Evaluate(fit.network), target);
    if (residual > 1e-9) return Describe("residual above tol", residual, 1e-9);
    return std::string();
  }));

  return reports;
}

}  // namespace ghapprox
