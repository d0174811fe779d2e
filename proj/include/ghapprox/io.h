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

#ifndef GHAPPROX_IO_H_
#define GHAPPROX_IO_H_

#include <istream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ghapprox/activation.h"
#include "ghapprox/density.h"
#include "ghapprox/gh0.h"
#include "ghapprox/measures.h"
#include "ghapprox/metric_space.h"
#include "ghapprox/point_map.h"
#include "ghapprox/shallow_net.h"

namespace ghapprox {

// Text formats. All point indices are 0-based. Parsers throw Error(kParse)
// with "<name>:<line>: ..." messages; semantic failures (e.g. a matrix that
// is not a metric) surface as the corresponding ErrorCode.
//
// Distance matrix CSV: optional header row of labels, then n rows of n reals.
//   The first row is a header iff one of its cells is not a number; the
//   writer omits the header when every label is numeric.
// Point cloud: one point per line, coordinates separated by commas and/or
//   whitespace. Blank lines and lines starting with '#' are skipped.
// Function values CSV: "index,value" per line covering every index once; an
//   optional non-numeric header line is skipped.
// Measure CSV: "index,weight", same rules.
// Point map CSV: "source_index,target_index" per source point.

// %.17g, so every double re-parses to the same bits.
std::string FormatDouble(double value);

SpaceRef ParseDistanceMatrixCsv(std::istream& in, const std::string& name);
SpaceRef ReadDistanceMatrixCsv(const std::string& path);
std::string WriteDistanceMatrixCsv(const FiniteMetricSpace& space);

PointCloud ParsePointCloud(std::istream& in, const std::string& name);
PointCloud ReadPointCloud(const std::string& path);

FunctionOnSpace ParseFunctionValuesCsv(std::istream& in, const std::string& name,
                                       const SpaceRef& space);
FunctionOnSpace ReadFunctionValuesCsv(const std::string& path, const SpaceRef& space);
std::string WriteFunctionValuesCsv(const FunctionOnSpace& f);

SignedMeasure ParseMeasureCsv(std::istream& in, const std::string& name, const SpaceRef& space);

PointMap ParsePointMapCsv(std::istream& in, const std::string& name, const SpaceRef& source,
                          const SpaceRef& target);
std::string WritePointMapCsv(const PointMap& map);

// {source_id, target_id, image}
nlohmann::json PointMapToJson(const PointMap& map);
PointMap PointMapFromJson(const nlohmann::json& j, const SpaceRef& source, const SpaceRef& target);

// {kind, params}
nlohmann::json ActivationToJson(const Activation& sigma);
Activation ActivationFromJson(const nlohmann::json& j);

// {kind, values: [[...], ...]}; values omitted for all-functions.
nlohmann::json FamilyToJson(const FunctionFamily& family);
FunctionFamily FamilyFromJson(const nlohmann::json& j, const SpaceRef& space);

// {space_id, activation: {kind, params}, units: [{a, theta, f: [...]}]}
nlohmann::json NetworkToJson(const ShallowNetwork& net);
ShallowNetwork NetworkFromJson(const nlohmann::json& j, const SpaceRef& space);

// {value, distortion_i, codefect_i, supnorm_i, distortion_j, codefect_j,
//  supnorm_j, witness_i, witness_j}
nlohmann::json Gh0CertificateToJson(const Gh0Bound& bound, double value, const PointMap& witness_i,
                                    const PointMap& witness_j);

nlohmann::json DensityCertificateToJson(const DensityCertificate& cert);

// Header epsilon,net_size,fit_error,bound,pass,millis.
std::string WriteStudyCsv(const std::vector<StudyRow>& rows);
std::vector<StudyRow> ParseStudyCsv(std::istream& in, const std::string& name);

}  // namespace ghapprox

#endif  // GHAPPROX_IO_H_
