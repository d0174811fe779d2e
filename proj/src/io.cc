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

#include "ghapprox/io.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>
#include <utility>

#include "ghapprox/error.h"

namespace ghapprox {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& name, std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, name + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> Tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string current;
  bool pending_comma = false;
  auto flush = [&] {
    if (!current.empty()) out.push_back(std::move(current));
    current.clear();
  };
  for (char c : line) {
    if (c == ',') {
      if (current.empty() && pending_comma) out.emplace_back();
      flush();
      pending_comma = true;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      flush();
    } else {
      current.push_back(c);
      pending_comma = false;
    }
  }
  flush();
  return out;
}

std::optional<double> ToDouble(const std::string& token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

std::optional<std::size_t> ToIndex(const std::string& token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> ReadLines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    lines.push_back(Line{number, Tokenize(raw)});
  }
  return lines;
}

bool AllNumeric(const Line& line) {
  for (const auto& t : line.tokens) {
    if (!ToDouble(t)) return false;
  }
  return true;
}

std::ifstream Open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, path + ": cannot open file");
  return in;
}

// "index,value" files: returns the value per index, every index exactly once.
std::vector<double> ParseIndexedValues(std::istream& in, const std::string& name, std::size_t n) {
  std::vector<Line> lines = ReadLines(in);
  std::size_t start = 0;
  if (!lines.empty() && !AllNumeric(lines.front())) start = 1;
  std::vector<double> values(n, 0.0);
  std::vector<bool> seen(n, false);
  for (std::size_t k = start; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens.size() != 2) Fail(name, line.number, "expected two columns: index,value");
    const std::optional<std::size_t> idx = ToIndex(line.tokens[0]);
    if (!idx) Fail(name, line.number, "bad point index '" + line.tokens[0] + "'");
    if (*idx >= n) {
      Fail(name, line.number,
           "index " + std::to_string(*idx) + " out of range for " + std::to_string(n) + " points");
    }
    if (seen[*idx]) Fail(name, line.number, "index " + std::to_string(*idx) + " repeated");
    const std::optional<double> value = ToDouble(line.tokens[1]);
    if (!value) Fail(name, line.number, "bad value '" + line.tokens[1] + "'");
    values[*idx] = *value;
    seen[*idx] = true;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!seen[x]) {
      Fail(name, lines.empty() ? 0 : lines.back().number,
           "missing value for index " + std::to_string(x));
    }
  }
  return values;
}

std::vector<double> DoublesFromJson(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw Error(ErrorCode::kParse, std::string(what) + " must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

const json& Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kParse, std::string("missing JSON field '") + key + "'");
  }
  return j.at(key);
}

double NumberField(const json& j, const char* key) {
  const json& v = Field(j, key);
  if (!v.is_number()) throw Error(ErrorCode::kParse, std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

}  // namespace

std::string FormatDouble(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

SpaceRef ParseDistanceMatrixCsv(std::istream& in, const std::string& name) {
  std::vector<Line> lines = ReadLines(in);
  if (lines.empty()) Fail(name, 0, "no rows");
  std::optional<std::vector<std::string>> labels;
  std::size_t start = 0;
  if (!AllNumeric(lines.front())) {
    labels = lines.front().tokens;
    start = 1;
  }
  Matrix matrix;
  for (std::size_t k = start; k < lines.size(); ++k) {
    std::vector<double> row;
    for (const auto& t : lines[k].tokens) {
      const std::optional<double> v = ToDouble(t);
      if (!v) Fail(name, lines[k].number, "bad number '" + t + "'");
      row.push_back(*v);
    }
    matrix.push_back(std::move(row));
  }
  try {
    return ValidateMetric(matrix, labels);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotSquare && !e.indices().empty()) {
      throw Error(ErrorCode::kNotSquare,
                  name + ":" + std::to_string(lines[start + e.indices()[0]].number) + ": " +
                      e.what(),
                  e.indices());
    }
    throw Error(e.code(), name + ": " + e.what(), e.indices());
  }
}

SpaceRef ReadDistanceMatrixCsv(const std::string& path) {
  std::ifstream in = Open(path);
  return ParseDistanceMatrixCsv(in, path);
}

std::string WriteDistanceMatrixCsv(const FiniteMetricSpace& space) {
  std::ostringstream out;
  // A header made only of numbers would read back as a matrix row.
  const bool header = std::any_of(space.labels().begin(), space.labels().end(),
                                  [](const std::string& l) { return !ToDouble(l); });
  if (header) {
    for (std::size_t k = 0; k < space.size(); ++k) out << (k ? "," : "") << space.labels()[k];
    out << '\n';
  }
  for (std::size_t k = 0; k < space.size(); ++k) {
    for (std::size_t l = 0; l < space.size(); ++l) out << (l ? "," : "") << FormatDouble(space(k, l));
    out << '\n';
  }
  return out.str();
}

PointCloud ParsePointCloud(std::istream& in, const std::string& name) {
  std::vector<Line> lines = ReadLines(in);
  Matrix points;
  for (const Line& line : lines) {
    std::vector<double> p;
    for (const auto& t : line.tokens) {
      const std::optional<double> v = ToDouble(t);
      if (!v) Fail(name, line.number, "bad coordinate '" + t + "'");
      p.push_back(*v);
    }
    if (!points.empty() && p.size() != points.front().size()) {
      Fail(name, line.number,
           "expected " + std::to_string(points.front().size()) + " coordinates, got " +
               std::to_string(p.size()));
    }
    points.push_back(std::move(p));
  }
  if (points.empty()) Fail(name, 0, "no points");
  try {
    return PointCloud(std::move(points));
  } catch (const Error& e) {
    std::string where = name;
    if (!e.indices().empty()) where += ":" + std::to_string(lines[e.indices().back()].number);
    throw Error(e.code(), where + ": " + e.what(), e.indices());
  }
}

PointCloud ReadPointCloud(const std::string& path) {
  std::ifstream in = Open(path);
  return ParsePointCloud(in, path);
}

FunctionOnSpace ParseFunctionValuesCsv(std::istream& in, const std::string& name,
                                       const SpaceRef& space) {
  std::vector<double> values = ParseIndexedValues(in, name, space->size());
  try {
    return FunctionOnSpace(space, std::move(values));
  } catch (const Error& e) {
    throw Error(e.code(), name + ": " + e.what(), e.indices());
  }
}

FunctionOnSpace ReadFunctionValuesCsv(const std::string& path, const SpaceRef& space) {
  std::ifstream in = Open(path);
  return ParseFunctionValuesCsv(in, path, space);
}

std::string WriteFunctionValuesCsv(const FunctionOnSpace& f) {
  std::ostringstream out;
  for (std::size_t x = 0; x < f.size(); ++x) out << x << ',' << FormatDouble(f[x]) << '\n';
  return out.str();
}

SignedMeasure ParseMeasureCsv(std::istream& in, const std::string& name, const SpaceRef& space) {
  std::vector<double> weights = ParseIndexedValues(in, name, space->size());
  try {
    return SignedMeasure(space, std::move(weights));
  } catch (const Error& e) {
    throw Error(e.code(), name + ": " + e.what(), e.indices());
  }
}

PointMap ParsePointMapCsv(std::istream& in, const std::string& name, const SpaceRef& source,
                          const SpaceRef& target) {
  std::vector<Line> lines = ReadLines(in);
  std::size_t start = 0;
  if (!lines.empty() && !AllNumeric(lines.front())) start = 1;
  const std::size_t n = source->size();
  std::vector<std::size_t> image(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t k = start; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens.size() != 2) Fail(name, line.number, "expected source_index,target_index");
    const std::optional<std::size_t> s = ToIndex(line.tokens[0]);
    const std::optional<std::size_t> t = ToIndex(line.tokens[1]);
    if (!s || !t) Fail(name, line.number, "bad index");
    if (*s >= n || seen[*s]) Fail(name, line.number, "source index out of range or repeated");
    if (*t >= target->size()) Fail(name, line.number, "target index out of range");
    image[*s] = *t;
    seen[*s] = true;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!seen[x]) Fail(name, 0, "no image for source index " + std::to_string(x));
  }
  return PointMap(source, target, std::move(image));
}

std::string WritePointMapCsv(const PointMap& map) {
  std::ostringstream out;
  for (std::size_t x = 0; x < map.size(); ++x) out << x << ',' << map(x) << '\n';
  return out.str();
}

json PointMapToJson(const PointMap& map) {
  return json{{"source_id", map.source()->id()},
              {"target_id", map.target()->id()},
              {"image", map.image()}};
}

PointMap PointMapFromJson(const json& j, const SpaceRef& source, const SpaceRef& target) {
  const json& image = Field(j, "image");
  if (!image.is_array()) throw Error(ErrorCode::kParse, "image must be an array");
  std::vector<std::size_t> values;
  for (const auto& v : image) {
    if (!v.is_number_unsigned()) throw Error(ErrorCode::kParse, "image entries must be indices");
    values.push_back(v.get<std::size_t>());
  }
  return PointMap(source, target, std::move(values));
}

json ActivationToJson(const Activation& sigma) {
  json params = json::object();
  switch (sigma.kind()) {
    case ActivationKind::kLogistic:
    case ActivationKind::kHardStep:
      break;
    case ActivationKind::kPowerAbs:
    case ActivationKind::kPower:
      params["a"] = sigma.a();
      params["p"] = sigma.p();
      break;
    case ActivationKind::kAbsScale:
      params["a"] = sigma.a();
      break;
    case ActivationKind::kCustomTable:
      params["t"] = sigma.table_t();
      params["v"] = sigma.table_v();
      break;
  }
  return json{{"kind", std::string(ActivationKindName(sigma.kind()))}, {"params", params}};
}

Activation ActivationFromJson(const json& j) {
  const json& kind_field = Field(j, "kind");
  if (!kind_field.is_string()) throw Error(ErrorCode::kParse, "activation kind must be a string");
  const std::optional<ActivationKind> kind = ParseActivationKind(kind_field.get<std::string>());
  if (!kind) throw Error(ErrorCode::kParse, "unknown activation kind");
  const json params = j.contains("params") ? j.at("params") : json::object();
  switch (*kind) {
    case ActivationKind::kLogistic: return Activation::Logistic();
    case ActivationKind::kHardStep: return Activation::HardStep();
    case ActivationKind::kPowerAbs:
      return Activation::PowerAbs(NumberField(params, "a"), NumberField(params, "p"));
    case ActivationKind::kPower: {
      const double p = NumberField(params, "p");
      if (p != static_cast<int>(p)) throw Error(ErrorCode::kParse, "power exponent must be integral");
      return Activation::Power(NumberField(params, "a"), static_cast<int>(p));
    }
    case ActivationKind::kAbsScale: return Activation::AbsScale(NumberField(params, "a"));
    case ActivationKind::kCustomTable:
      return Activation::CustomTable(DoublesFromJson(Field(params, "t"), "t"),
                                     DoublesFromJson(Field(params, "v"), "v"));
  }
  throw Error(ErrorCode::kParse, "unknown activation kind");
}

json FamilyToJson(const FunctionFamily& family) {
  json out{{"kind", std::string(FamilyKindName(family.kind()))}};
  if (family.kind() != FamilyKind::kAllFunctions) {
    json values = json::array();
    for (const auto& f : family.members()) values.push_back(f.values());
    out["values"] = values;
  }
  return out;
}

FunctionFamily FamilyFromJson(const json& j, const SpaceRef& space) {
  const json& kind_field = Field(j, "kind");
  if (!kind_field.is_string()) throw Error(ErrorCode::kParse, "family kind must be a string");
  const std::optional<FamilyKind> kind = ParseFamilyKind(kind_field.get<std::string>());
  if (!kind) throw Error(ErrorCode::kParse, "unknown family kind");
  if (*kind == FamilyKind::kAllFunctions) return FunctionFamily::AllFunctions(space);
  std::vector<FunctionOnSpace> members;
  const json& values = Field(j, "values");
  if (!values.is_array()) throw Error(ErrorCode::kParse, "family values must be an array");
  for (const auto& v : values) members.emplace_back(space, DoublesFromJson(v, "family values"));
  if (*kind == FamilyKind::kLinearSpan) return FunctionFamily::LinearSpan(space, std::move(members));
  return FunctionFamily::ExplicitList(space, std::move(members));
}

json NetworkToJson(const ShallowNetwork& net) {
  json units = json::array();
  for (const Unit& u : net.units()) {
    units.push_back(json{{"a", u.a}, {"theta", u.theta}, {"f", u.f.values()}});
  }
  return json{{"space_id", net.space()->id()},
              {"activation", ActivationToJson(net.activation())},
              {"units", units}};
}

ShallowNetwork NetworkFromJson(const json& j, const SpaceRef& space) {
  const json& id = Field(j, "space_id");
  if (!id.is_string() || id.get<std::string>() != space->id()) {
    throw Error(ErrorCode::kSpaceMismatch, "network was built on a different space");
  }
  Activation sigma = ActivationFromJson(Field(j, "activation"));
  std::vector<Unit> units;
  const json& list = Field(j, "units");
  if (!list.is_array()) throw Error(ErrorCode::kParse, "units must be an array");
  for (const auto& u : list) {
    units.push_back(Unit{NumberField(u, "a"), NumberField(u, "theta"),
                         FunctionOnSpace(space, DoublesFromJson(Field(u, "f"), "f"))});
  }
  return ShallowNetwork(space, std::move(sigma), std::move(units));
}

json Gh0CertificateToJson(const Gh0Bound& bound, double value, const PointMap& witness_i,
                          const PointMap& witness_j) {
  return json{{"value", value},
              {"distortion_i", bound.distortion_i},
              {"codefect_i", bound.codefect_i},
              {"supnorm_i", bound.supnorm_i},
              {"distortion_j", bound.distortion_j},
              {"codefect_j", bound.codefect_j},
              {"supnorm_j", bound.supnorm_j},
              {"witness_i", witness_i.image()},
              {"witness_j", witness_j.image()}};
}

json DensityCertificateToJson(const DensityCertificate& cert) {
  const ErrorBudget& b = cert.budget;
  return json{
      {"epsilon", cert.epsilon},
      {"net_radius", cert.net_radius},
      {"cover_radius", cert.cover_radius},
      {"net_size", cert.net_size},
      {"shrink_steps", cert.shrink_steps},
      {"transfer_bound", cert.transfer_bound},
      {"fit_error", cert.fit_error},
      {"distortion_i", cert.components.distortion_i},
      {"codefect_i", cert.components.codefect_i},
      {"supnorm_i", cert.components.supnorm_i},
      {"distortion_j", cert.components.distortion_j},
      {"codefect_j", cert.components.codefect_j},
      {"supnorm_j", cert.components.supnorm_j},
      {"bound", cert.bound},
      {"pass", cert.pass},
      {"budget",
       {{"transfer", b.transfer},
        {"fit", b.fit},
        {"chained_bound", b.chained_bound},
        {"chain_target", b.chain_target},
        {"chain_slice", b.chain_slice},
        {"chain_fit", b.chain_fit},
        {"chain_total", b.chain_total}}},
      {"inclusion", PointMapToJson(cert.inclusion)},
      {"projection", PointMapToJson(cert.projection)},
  };
}

std::string WriteStudyCsv(const std::vector<StudyRow>& rows) {
  std::ostringstream out;
  out << "epsilon,net_size,fit_error,bound,pass,millis\n";
  for (const StudyRow& r : rows) {
    out << FormatDouble(r.epsilon) << ',' << r.net_size << ',' << FormatDouble(r.fit_error) << ','
        << FormatDouble(r.bound) << ',' << (r.pass ? "true" : "false") << ',' << r.millis << '\n';
  }
  return out.str();
}

std::vector<StudyRow> ParseStudyCsv(std::istream& in, const std::string& name) {
  std::vector<Line> lines = ReadLines(in);
  if (lines.empty()) Fail(name, 0, "empty study table");
  const std::vector<std::string> header{"epsilon", "net_size", "fit_error", "bound", "pass", "millis"};
  if (lines.front().tokens != header) Fail(name, lines.front().number, "unexpected header");
  std::vector<StudyRow> rows;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens.size() != 6) Fail(name, line.number, "expected 6 columns");
    StudyRow row;
    const auto eps = ToDouble(line.tokens[0]);
    const auto size = ToIndex(line.tokens[1]);
    const auto fit = ToDouble(line.tokens[2]);
    const auto bound = ToDouble(line.tokens[3]);
    const auto millis = ToIndex(line.tokens[5]);
    if (!eps || !size || !fit || !bound || !millis ||
        (line.tokens[4] != "true" && line.tokens[4] != "false")) {
      Fail(name, line.number, "malformed row");
    }
    row.epsilon = *eps;
    row.net_size = *size;
    row.fit_error = *fit;
    row.bound = *bound;
    row.pass = line.tokens[4] == "true";
    row.millis = static_cast<std::int64_t>(*millis);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ghapprox
