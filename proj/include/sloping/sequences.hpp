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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sloping/numeric.hpp"

// The exportable sequence registry: every sequence the library computes,
// keyed by short name and OEIS A-number, with its conventional offset.
namespace sloping::oeis {

using TermSink = std::function<void(long long index, const Int& value)>;
using TermEmitter =
    std::function<void(long long start, std::uint64_t count,
                       const TermSink& sink)>;

struct SequenceInfo {
  std::string key;       // generator id, e.g. "s"
  std::string a_number;  // OEIS cross-reference, e.g. "A102370"
  long long offset;      // index of the first term
  std::string summary;   // one-line description
  // Emits terms at indices start, start+1, ..., start+count-1. The caller
  // guarantees start >= offset. BudgetError when a term is out of reach.
  TermEmitter emit;
};

// All registered sequences, in presentation order.
const std::vector<SequenceInfo>& all_sequences();

// Lookup by key ("s") or A-number ("A102370"); nullptr when unknown.
const SequenceInfo* find_sequence(std::string_view id);

}  // namespace sloping::oeis
