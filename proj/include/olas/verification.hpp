// Copyright 2026 The OLAS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OLAS_VERIFICATION_HPP_
#define OLAS_VERIFICATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace olas {

// Outcome of one randomized self-check.
struct VerificationReport {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> messages;  // first few failures
  double seconds = 0.0;

  bool ok() const { return failures == 0; }
};

// Closed-form min-max assignment against exhaustive search on `instances`
// random instances (up to 7 points, 3 labelers, capacities 1..3), under
// both analytic noise models.  Values must agree to 1e-12.
VerificationReport verify_assignment_oracle(int instances, std::uint64_t seed);

// OLAS selection against exhaustive search over the integer program on
// random instances (up to 8 points, 3 labelers, beta on a 0.05 grid),
// each under both analytic noise models.
// Objectives must agree to 1e-12 and the OLAS plan must be feasible.
VerificationReport verify_olas_oracle(int instances, std::uint64_t seed);

// Monotonicity and range sweep of both analytic noise models.
VerificationReport verify_noise_functions();

}  // namespace olas

#endif  // OLAS_VERIFICATION_HPP_
