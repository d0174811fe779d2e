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

#include "gtest/gtest.h"

namespace ghapprox {
namespace {

TEST(PropertySuitesTest, NoViolations) {
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const std::vector<PropertyReport> reports = RunPropertySuites(100, seed);
    EXPECT_EQ(reports.size(), 13u);
    for (const PropertyReport& r : reports) {
      EXPECT_GE(r.cases, 10u) << r.name;
      EXPECT_EQ(r.violations, 0u) << r.name << ": " << r.first_violation;
    }
  }
}

TEST(PropertySuitesTest, Deterministic) {
  const std::vector<PropertyReport> a = RunPropertySuites(20, 9), b = RunPropertySuites(20, 9);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].name, b[k].name);
}

}  // namespace
}  // namespace ghapprox
