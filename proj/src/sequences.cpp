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

#include "sloping/sequences.hpp"

#include <cstdint>

#include "sloping/analysis.hpp"
#include "sloping/binary_grid.hpp"
#include "sloping/closed_forms.hpp"

namespace sloping::oeis {

namespace {

// Wraps a per-index term function into the streaming emitter shape.
TermEmitter pointwise(Int (*term)(long long)) {
  return [term](long long start, std::uint64_t count, const TermSink& sink) {
    for (std::uint64_t c = 0; c < count; ++c) {
      long long i = start + static_cast<long long>(c);
      sink(i, term(i));
    }
  };
}

void emit_delta(long long start, std::uint64_t count, const TermSink& sink) {
  forms::DeltaStream stream;
  for (long long i = 0; i < start; ++i) stream.next();
  for (std::uint64_t c = 0; c < count; ++c) {
    long long i = start + static_cast<long long>(c);
    sink(i, Int(stream.next()));
  }
}

void emit_fixed(long long start, std::uint64_t count, const TermSink& sink) {
  // Ranks fixed points from 1; only multiples of 4 are candidates.
  long long rank = 0;
  std::uint64_t emitted = 0;
  for (std::uint64_t n = 0; emitted < count; n += 4) {
    if (n > analysis::kEnumerationBudget)
      throw BudgetError("fixed: enumeration budget exceeded");
    if (analysis::is_fixed_u64(n)) {
      ++rank;
      if (rank >= start) {
        sink(rank, Int(Nat(n)));
        ++emitted;
      }
    }
  }
}

std::vector<SequenceInfo> build_registry() {
  std::vector<SequenceInfo> all;

  all.push_back({"s", "A102370", 0,
                 "sloping binary numbers: upward diagonals of the binary "
                 "array of nonnegative integers",
                 pointwise(+[](long long i) {
                   return Int(forms::s_eval(Nat(static_cast<unsigned long>(i))));
                 })});

  all.push_back({"t", "A102371", 1,
                 "numbers missing from the sloping binary sequence",
                 pointwise(+[](long long i) {
                   return Int(forms::t_eval(static_cast<std::uint64_t>(i)));
                 })});

  all.push_back({"d", "A105033", 0,
                 "downward diagonals of the binary array, least significant "
                 "bit on the diagonal",
                 pointwise(+[](long long i) {
                   return Int(forms::d_eval(Nat(static_cast<unsigned long>(i))));
                 })});

  all.push_back({"sinv", "A103122", 0,
                 "inverse of the extended sloping binary map",
                 pointwise(+[](long long i) {
                   return forms::s_inverse(Nat(static_cast<unsigned long>(i)));
                 })});

  all.push_back({"sigma", "A105027", 0,
                 "sloping binary numbers rewritten as a permutation of the "
                 "nonnegative integers",
                 pointwise(+[](long long i) {
                   return Int(forms::sigma(Nat(static_cast<unsigned long>(i))));
                 })});

  all.push_back({"delta", "A105025", 0,
                 "downward-diagonal values rewritten as a permutation of "
                 "the nonnegative integers",
                 TermEmitter(emit_delta)});

  all.push_back({"leftdown", "A105029", 0,
                 "downward diagonals of the left-adjusted binary array",
                 pointwise(+[](long long i) {
                   return Int(grid::diagonal_left_down(
                       Nat(static_cast<unsigned long>(i))));
                 })});

  all.push_back({"f", "A103318", 1,
                 "number of k in [1, n] with k = n mod 2^k: terms in the "
                 "congruence sum for the missing numbers",
                 pointwise(+[](long long i) {
                   return Int(static_cast<unsigned long>(
                       forms::f_eval(Nat(static_cast<unsigned long>(i)))));
                 })});

  all.push_back({"fprime", "A104234", 0,
                 "number of terms in the congruence sum for the sloping "
                 "binary value at n",
                 pointwise(+[](long long i) {
                   return Int(static_cast<unsigned long>(
                       forms::f_prime_eval(Nat(static_cast<unsigned long>(i)))));
                 })});

  all.push_back({"R", "A103529", 1,
                 "record values of the sloping binary sequence",
                 pointwise(+[](long long i) {
                   return Int(forms::record_R(static_cast<unsigned long>(i)));
                 })});

  all.push_back({"gap", "A103530", 1,
                 "gap between the k-th record value and 2^(k+1)",
                 pointwise(+[](long long i) {
                   return Int(forms::gap(static_cast<unsigned long>(i)));
                 })});

  all.push_back({"fixed", "A104235", 1,
                 "fixed points of the sloping binary map",
                 TermEmitter(emit_fixed)});

  all.push_back({"g", "A034797", 1,
                 "smallest n with congruence count m: g(m+1) = 2^g(m) + g(m)",
                 pointwise(+[](long long i) {
                   return Int(forms::g_min(static_cast<unsigned>(i)));
                 })});

  all.push_back({"t1hat", "A103127", 1,
                 "model for the trajectory of 1 under the sloping binary map",
                 pointwise(+[](long long i) {
                   return Int(analysis::model_t1(
                       static_cast<std::uint64_t>(i - 1)));
                 })});

  return all;
}

}  // namespace

const std::vector<SequenceInfo>& all_sequences() {
  static const std::vector<SequenceInfo> registry = build_registry();
  return registry;
}

const SequenceInfo* find_sequence(std::string_view id) {
  for (const SequenceInfo& seq : all_sequences()) {
    if (seq.key == id || seq.a_number == id) return &seq;
  }
  return nullptr;
}

}  // namespace sloping::oeis
