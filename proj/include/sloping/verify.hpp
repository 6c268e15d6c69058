// Copyright 2026 The sloping authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Cross-validation suites: every quantity the library computes by more
// than one method is swept for agreement, and the structural properties
// (bijectivity, permutation prefixes, boundedness) are checked over
// finite windows sized by a caller-supplied limit.
namespace sloping::verify {

struct CheckResult {
  std::string name;
  std::uint64_t checked = 0;  // cases examined before stopping
  bool passed = true;
  std::string detail;  // first counterexample, or empty
};

struct Report {
  std::string suite;
  std::uint64_t limit = 0;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

// Runs one suite; "all" concatenates every other suite with prefixed
// check names. Unknown names raise std::invalid_argument.
Report run_suite(const std::string& suite, std::uint64_t limit);

}  // namespace sloping::verify
