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

#include "sloping/bfile.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <string>

namespace sloping::oeis {

namespace {

bool is_decimal(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

std::vector<BFileEntry> parse_bfile(std::istream& in) {
  std::vector<BFileEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') continue;

    std::size_t space = line.find(' ');
    if (space == std::string::npos)
      throw BFileParseError(line_no, "expected \"<index> <value>\"");
    std::string index_text = line.substr(0, space);
    std::string value_text = line.substr(space + 1);
    if (!is_decimal(index_text))
      throw BFileParseError(line_no, "index is not a decimal integer");
    if (!is_decimal(value_text))
      throw BFileParseError(line_no,
                            "value is not a decimal integer (check for "
                            "extra spaces)");

    BFileEntry entry;
    try {
      entry.index = std::stoll(index_text);
    } catch (const std::exception&) {
      throw BFileParseError(line_no, "index out of range");
    }
    entry.value = Int(value_text, 10);

    if (!entries.empty() && entry.index != entries.back().index + 1)
      throw BFileParseError(line_no, "index " + index_text +
                                         " does not follow " +
                                         std::to_string(entries.back().index));
    entries.push_back(std::move(entry));
  }
  return entries;
}

void write_bfile(std::ostream& out, const std::vector<BFileEntry>& entries) {
  for (const BFileEntry& entry : entries) {
    out << entry.index << ' ' << entry.value.get_str(10) << '\n';
  }
}

BFileDiff diff_bfile(const SequenceInfo& seq,
                     const std::vector<BFileEntry>& entries) {
  BFileDiff diff;
  if (entries.empty()) {
    diff.match = false;
    diff.note = "file contains no terms";
    return diff;
  }
  if (entries.front().index < seq.offset) {
    diff.match = false;
    diff.mismatch_index = entries.front().index;
    diff.note = "first index " + std::to_string(entries.front().index) +
                " is below the sequence offset " +
                std::to_string(seq.offset);
    return diff;
  }

  // parse_bfile guarantees consecutive indices, so file positions line up
  // one-to-one with emitted terms. A sentinel throw stops regeneration at
  // the first difference.
  struct StopEmission {};
  std::size_t cursor = 0;
  try {
    seq.emit(entries.front().index, entries.size(),
             [&](long long index, const Int& value) {
               const BFileEntry& entry = entries[cursor++];
               if (entry.index == index && entry.value == value) return;
               diff.match = false;
               diff.mismatch_index = index;
               diff.expected = value;
               diff.found = entry.value;
               diff.note = "values differ at index " + std::to_string(index);
               throw StopEmission{};
             });
  } catch (const StopEmission&) {
  }
  return diff;
}

}  // namespace sloping::oeis
