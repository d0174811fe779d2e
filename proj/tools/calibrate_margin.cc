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

// Prints the discriminatory margin of the separating and the constant family
// from tests/margin_setup.h over a range of seeds, with the minimum and maximum.
//
//   calibrate_margin [seeds]

#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include "ghapprox/activation.h"
#include "ghapprox/measures.h"
#include "margin_setup.h"

int main(int argc, char** argv) {
  using namespace ghapprox;
  const int seeds = argc > 1 ? std::atoi(argv[1]) : 1000;
  const SpaceRef s = margin::Space();
  const FunctionFamily sep = margin::SeparatingFamily(s);
  const FunctionFamily con = margin::ConstantFamily(s);
  const Activation sigma = Activation::Logistic();
  double sep_min = 1e300, sep_max = 0.0, con_max = 0.0;
  for (int seed = 0; seed < seeds; ++seed) {
    const auto u = static_cast<std::uint64_t>(seed);
    const double m = DiscriminatoryMargin(sigma, sep, margin::kSamples, margin::kLambdaRange,
                                          margin::kThetaRange, u);
    sep_min = std::min(sep_min, m);
    sep_max = std::max(sep_max, m);
    con_max = std::max(con_max, DiscriminatoryMargin(sigma, con, margin::kSamples,
                                                     margin::kLambdaRange, margin::kThetaRange, u));
  }
  std::printf("seeds %d\nseparating min %.6g max %.6g\nconstant max %.3g\n", seeds, sep_min,
              sep_max, con_max);
  return 0;
}
