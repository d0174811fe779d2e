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

// Command-line front end: ingestion, distances, fitting, certified density
// runs and the property suites.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ghapprox/activation.h"
#include "ghapprox/density.h"
#include "ghapprox/error.h"
#include "ghapprox/gh0.h"
#include "ghapprox/io.h"
#include "ghapprox/isometry.h"
#include "ghapprox/measures.h"
#include "ghapprox/metric_space.h"
#include "ghapprox/properties.h"
#include "ghapprox/shallow_net.h"

namespace {

using ghapprox::Error;
using ghapprox::ErrorCode;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;

constexpr const char* kFormats = R"(
All point indices are 0-based.

Distance matrix CSV (optional label header, then n rows of n reals):
  a,b,c
  0,1,2
  1,0,1   (and so on for each row)
Point cloud (one point per line, comma or whitespace separated):
  1.0 0.0
  0.0 1.0
  -1.0 0.0
Function values CSV (index,value; every index exactly once):
  0,0.5
  1,-0.25
  2,1.0
Study CSV output:
  epsilon,net_size,fit_error,bound,pass,millis
  0.5,32,1.2e-17,0.098,true,4
  0.25,64,0,0.0,true,9

Exit status: 0 success or pass, 1 certificate or property failure,
2 malformed input.)";

ghapprox::Activation ActivationByName(const std::string& name) {
  if (name == "logistic") return ghapprox::Activation::Logistic();
  if (name == "hard-step") return ghapprox::Activation::HardStep();
  throw Error(ErrorCode::kInvalidArgument, "unsupported activation '" + name + "'");
}

ghapprox::SearchMethod MethodByName(const std::string& name) {
  const auto method = ghapprox::ParseSearchMethod(name);
  if (!method) throw Error(ErrorCode::kInvalidArgument, "unknown method '" + name + "'");
  return *method;
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, path + ": cannot write");
  out << text;
}

json ReadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

std::string ImageText(const ghapprox::PointMap& m) {
  std::ostringstream out;
  for (std::size_t x = 0; x < m.size(); ++x) out << (x ? " " : "") << m(x);
  return out.str();
}

std::vector<double> ParseList(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "--epsilons: bad number '" + item + "'");
    }
  }
  return out;
}

ghapprox::FunctionOnSpace CloudTarget(const std::string& points_path, const std::string& target_path) {
  const ghapprox::PointCloud cloud = ghapprox::ReadPointCloud(points_path);
  const ghapprox::SpaceRef space = ghapprox::FromPointCloud(cloud);
  return ghapprox::ReadFunctionValuesCsv(target_path, space);
}

int ExitCodeFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kNetExhausted:
    case ErrorCode::kFitFailed:
    case ErrorCode::kSingularSystem:
      return kExitFailure;
    default:
      return kExitBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ghapprox: Gromov-Hausdorff distances and certified shallow-network approximation "
               "on finite metric spaces"};
  app.footer(kFormats);
  app.require_subcommand(1);

  std::string matrix_path;
  auto* validate = app.add_subcommand("validate", "Check a distance matrix CSV against the metric axioms");
  validate->add_option("matrix", matrix_path, "Distance matrix CSV")->required();

  std::string x_path, y_path, fx_path, gy_path, method_name = "bnb", json_out;
  auto* gh = app.add_subcommand("gh", "Gromov-Hausdorff distance between two distance matrices");
  gh->add_option("X", x_path, "Distance matrix CSV")->required();
  gh->add_option("Y", y_path, "Distance matrix CSV")->required();
  gh->add_option("--method", method_name, "exact | bnb")->capture_default_str();
  gh->add_option("--json", json_out, "Also write the result as JSON");

  auto* gh0 = app.add_subcommand("gh0", "C0-Gromov-Hausdorff distance between two functions");
  gh0->add_option("X", x_path, "Distance matrix CSV of D(f)")->required();
  gh0->add_option("fX", fx_path, "Values of f")->required();
  gh0->add_option("Y", y_path, "Distance matrix CSV of D(g)")->required();
  gh0->add_option("gY", gy_path, "Values of g")->required();
  gh0->add_option("--method", method_name, "exact | bnb")->capture_default_str();
  gh0->add_option("--json", json_out, "Write the certificate here instead of stdout");

  std::string target_path, activation_name = "logistic", mode = "exact";
  std::size_t units = 16;
  std::uint64_t seed = 0;
  std::optional<double> lambda;
  double tol = 1e-9;
  auto* net_fit = app.add_subcommand("net-fit", "Fit a shallow network to a function on a finite space");
  net_fit->add_option("X", x_path, "Distance matrix CSV")->required();
  net_fit->add_option("target", target_path, "Function values CSV")->required();
  net_fit->add_option("--activation", activation_name, "logistic | hard-step")->capture_default_str();
  net_fit->add_option("--mode", mode, "exact (interpolation) | lsq (random features)")->capture_default_str();
  net_fit->add_option("--units", units, "Hidden units for lsq")->capture_default_str();
  net_fit->add_option("--seed", seed, "Seed for lsq feature draws")->capture_default_str();
  net_fit->add_option("--lambda", lambda, "Fixed feature scale for exact mode (default: auto)");
  net_fit->add_option("--tol", tol, "Residual tolerance for exact mode")->capture_default_str();
  net_fit->add_option("--json", json_out, "Write the network JSON here");

  std::string points_path;
  double epsilon = 0.0;
  std::string network_out;
  int max_shrink = 20;
  double fit_fraction = 1.0 / 8.0;
  auto* density = app.add_subcommand("density", "Certified approximation of a target on a point cloud");
  density->add_option("points", points_path, "Point cloud file")->required();
  density->add_option("target", target_path, "Function values CSV")->required();
  density->add_option("--epsilon", epsilon, "Target C0-Gromov-Hausdorff tolerance")->required();
  density->add_option("--activation", activation_name, "logistic | hard-step")->capture_default_str();
  density->add_option("--max-shrink", max_shrink, "Net radius halvings allowed")->capture_default_str();
  density->add_option("--fit-fraction", fit_fraction, "Fit tolerance as a fraction of epsilon")
      ->capture_default_str();
  density->add_option("--seed", seed, "Farthest-point start index (mod point count)")->capture_default_str();
  density->add_option("--json", json_out, "Write the certificate JSON here");
  density->add_option("--network", network_out, "Write the network JSON here");

  std::string cert_path, network_path;
  auto* verify = app.add_subcommand("verify-density", "Recompute a stored density certificate");
  verify->add_option("points", points_path, "Point cloud file")->required();
  verify->add_option("target", target_path, "Function values CSV")->required();
  verify->add_option("certificate", cert_path, "Certificate JSON from `density --json`")->required();
  verify->add_option("network", network_path, "Network JSON from `density --network`")->required();

  std::string epsilons_text, csv_out;
  bool omit_timing = false;
  auto* study = app.add_subcommand("study", "Run the density pipeline over a list of epsilons");
  study->add_option("points", points_path, "Point cloud file")->required();
  study->add_option("target", target_path, "Function values CSV")->required();
  study->add_option("--epsilons", epsilons_text, "Comma-separated, decreasing")->required();
  study->add_option("--csv", csv_out, "Write the table here");
  study->add_option("--activation", activation_name, "logistic | hard-step")->capture_default_str();
  study->add_option("--seed", seed, "Farthest-point start index (mod point count)")->capture_default_str();
  study->add_flag("--omit-timing", omit_timing, "Write millis as 0 for byte-reproducible tables");

  std::size_t cases = 200;
  auto* properties = app.add_subcommand("properties", "Run the invariant suites");
  properties->add_option("--cases", cases, "Random instances per suite")->capture_default_str();
  properties->add_option("--seed", seed, "Generator seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  std::cout.precision(17);
  try {
    if (*validate) {
      const ghapprox::SpaceRef space = ghapprox::ReadDistanceMatrixCsv(matrix_path);
      std::cout << "valid " << space->size() << "-point metric space, diameter "
                << ghapprox::FormatDouble(space->Diameter()) << '\n';
      return kExitOk;
    }

    if (*gh) {
      const auto x = ghapprox::ReadDistanceMatrixCsv(x_path);
      const auto y = ghapprox::ReadDistanceMatrixCsv(y_path);
      const ghapprox::GhResult result = ghapprox::GhDistance(x, y, MethodByName(method_name));
      std::cout << ghapprox::FormatDouble(result.value) << '\n'
                << "forward: " << ImageText(result.forward) << '\n'
                << "backward: " << ImageText(result.backward) << '\n';
      if (!json_out.empty()) {
        const json out{{"value", result.value},
                       {"forward", ghapprox::PointMapToJson(result.forward)},
                       {"backward", ghapprox::PointMapToJson(result.backward)}};
        WriteText(json_out, out.dump(2) + "\n");
      }
      return kExitOk;
    }

    if (*gh0) {
      const auto x = ghapprox::ReadDistanceMatrixCsv(x_path);
      const auto y = ghapprox::ReadDistanceMatrixCsv(y_path);
      const auto f = ghapprox::ReadFunctionValuesCsv(fx_path, x);
      const auto g = ghapprox::ReadFunctionValuesCsv(gy_path, y);
      const ghapprox::Gh0Result result = ghapprox::Gh0Distance(f, g, MethodByName(method_name));
      const ghapprox::Gh0Bound parts =
          ghapprox::Gh0UpperBound(f, g, result.witness_i, result.witness_j);
      const std::string text =
          ghapprox::Gh0CertificateToJson(parts, result.value, result.witness_i, result.witness_j)
              .dump(2) + "\n";
      if (json_out.empty()) {
        std::cout << text;
      } else {
        WriteText(json_out, text);
        std::cout << ghapprox::FormatDouble(result.value) << '\n';
      }
      return kExitOk;
    }

    if (*net_fit) {
      const auto x = ghapprox::ReadDistanceMatrixCsv(x_path);
      const auto target = ghapprox::ReadFunctionValuesCsv(target_path, x);
      const ghapprox::Activation sigma = ActivationByName(activation_name);
      std::optional<ghapprox::ShallowNetwork> net;
      double error = 0.0;
      if (mode == "exact") {
        ghapprox::InterpolationResult fit = ghapprox::InterpolateExact(target, sigma, lambda, tol);
        error = fit.residual;
        std::cout << "lambda: " << ghapprox::FormatDouble(fit.lambda) << '\n';
        net = std::move(fit.network);
      } else if (mode == "lsq") {
        ghapprox::FitResult fit = ghapprox::FitLeastSquares(
            target, ghapprox::FunctionFamily::AllFunctions(x), sigma, units, {-2.0, 2.0}, seed,
            {1.0, 10.0});
        error = fit.sup_error;
        net = std::move(fit.network);
      } else {
        throw Error(ErrorCode::kInvalidArgument, "unknown mode '" + mode + "'");
      }
      std::cout << "units: " << net->units().size() << '\n'
                << "sup_error: " << ghapprox::FormatDouble(error) << '\n';
      if (!json_out.empty()) WriteText(json_out, ghapprox::NetworkToJson(*net).dump(2) + "\n");
      return kExitOk;
    }

    if (*density) {
      const auto target = CloudTarget(points_path, target_path);
      ghapprox::PipelineOptions options;
      options.max_net_shrink_steps = max_shrink;
      options.fit_tol_fraction = fit_fraction;
      options.seed_index = static_cast<std::size_t>(seed % target.size());
      const ghapprox::PipelineResult run =
          ghapprox::RunPipeline(target, epsilon, ActivationByName(activation_name), options);
      const ghapprox::DensityCertificate& cert = run.certificate;
      std::cout << "net_size: " << cert.net_size << '\n'
                << "fit_error: " << ghapprox::FormatDouble(cert.fit_error) << '\n'
                << "bound: " << ghapprox::FormatDouble(cert.bound) << '\n'
                << "pass: " << (cert.pass ? "true" : "false") << '\n';
      if (!json_out.empty()) {
        WriteText(json_out, ghapprox::DensityCertificateToJson(cert).dump(2) + "\n");
      }
      if (!network_out.empty()) {
        WriteText(network_out, ghapprox::NetworkToJson(run.network).dump(2) + "\n");
      }
      return cert.pass ? kExitOk : kExitFailure;
    }

    if (*verify) {
      const auto target = CloudTarget(points_path, target_path);
      const json cert = ReadJson(cert_path);
      const json& inclusion_json = cert.at("inclusion");
      const auto& inclusion_image = inclusion_json.at("image");
      std::vector<std::size_t> members = inclusion_image.get<std::vector<std::size_t>>();
      const ghapprox::SpaceRef net_space = ghapprox::Subspace(target.space(), members);
      const ghapprox::PointMap i = ghapprox::PointMapFromJson(inclusion_json, net_space, target.space());
      const ghapprox::PointMap j = ghapprox::PointMapFromJson(cert.at("projection"), target.space(), net_space);
      const ghapprox::ShallowNetwork net = ghapprox::NetworkFromJson(ReadJson(network_path), net_space);
      const ghapprox::Gh0Bound bound = ghapprox::Gh0UpperBound(ghapprox::Evaluate(net), target, i, j);
      const double stored = cert.at("bound").get<double>();
      const double eps = cert.at("epsilon").get<double>();
      const bool same = bound.value == stored;
      std::cout << "recomputed: " << ghapprox::FormatDouble(bound.value) << '\n'
                << "stored: " << ghapprox::FormatDouble(stored) << '\n'
                << "match: " << (same ? "true" : "false") << '\n'
                << "pass: " << (bound.value < eps ? "true" : "false") << '\n';
      return same && bound.value < eps ? kExitOk : kExitFailure;
    }

    if (*study) {
      const auto target = CloudTarget(points_path, target_path);
      std::vector<ghapprox::StudyRow> rows = ghapprox::ConvergenceStudy(
          target, ParseList(epsilons_text), ActivationByName(activation_name), seed);
      bool all_pass = true;
      for (auto& row : rows) {
        if (omit_timing) row.millis = 0;
        all_pass = all_pass && row.pass;
      }
      const std::string table = ghapprox::WriteStudyCsv(rows);
      if (!csv_out.empty()) WriteText(csv_out, table);
      std::cout << table;
      return all_pass ? kExitOk : kExitFailure;
    }

    if (*properties) {
      std::size_t total = 0;
      for (const auto& report : ghapprox::RunPropertySuites(cases, seed)) {
        std::cout << (report.violations == 0 ? "ok   " : "FAIL ") << report.name
                  << " cases=" << report.cases << " violations=" << report.violations;
        if (!report.first_violation.empty()) std::cout << " first: " << report.first_violation;
        std::cout << '\n';
        total += report.violations;
      }
      return total == 0 ? kExitOk : kExitFailure;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.Tag() << ": " << e.what() << '\n';
    return ExitCodeFor(e);
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
