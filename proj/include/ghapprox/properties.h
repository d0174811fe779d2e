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

#ifndef GHAPPROX_PROPERTIES_H_
#define GHAPPROX_PROPERTIES_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ghapprox {

struct PropertyReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string first_violation;  // empty when none
};

// Runs every invariant suite with `cases` seeded random instances each (the
// costlier suites scale it down) and reports violations per suite.
std::vector<PropertyReport> RunPropertySuites(std::size_t cases, std::uint64_t seed);

}  // namespace ghapprox

#endif  // GHAPPROX_PROPERTIES_H_
