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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sloping/numeric.hpp"
#include "sloping/sequences.hpp"

// OEIS b-file reading, writing, and comparison against the registry.
namespace sloping::oeis {

struct BFileEntry {
  long long index;
  Int value;
};

class BFileParseError : public std::runtime_error {
 public:
  BFileParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Parses a b-file: '#' comment lines and blank lines are skipped; every
// other line is "<index> <value>" with exactly one separating space and
// decimal integers. LF and CRLF both accepted. Indices must increase by
// exactly 1 from one data line to the next.
std::vector<BFileEntry> parse_bfile(std::istream& in);

// Writes entries as "<index> <value>\n" lines.
void write_bfile(std::ostream& out, const std::vector<BFileEntry>& entries);

struct BFileDiff {
  bool match = true;
  std::optional<long long> mismatch_index;  // set when two values differ
  Int expected;                             // regenerated value at the index
  Int found;                                // value read from the file
  std::string note;                         // human-readable detail
};

// Regenerates seq over the file's index range and reports the first
// difference. An empty file or a starting index below the sequence offset
// is reported as a non-match via note.
BFileDiff diff_bfile(const SequenceInfo& seq,
                     const std::vector<BFileEntry>& entries);

}  // namespace sloping::oeis
