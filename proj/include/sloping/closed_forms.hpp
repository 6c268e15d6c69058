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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sloping/numeric.hpp"

// Closed forms, recurrences, and derived maps for the sloping-sum family:
// s (upward diagonal values), d (downward), t (the numbers missing from
// s's range), their inverses, records, and term-count statistics. Each
// value is computable by several independent routes; route agreement is
// the library's core correctness property.
namespace sloping::forms {

// Evaluation route selector. Each function documents the subset it
// accepts; anything else raises invalid_argument.
enum class EvalMethod {
  signed_sum,       // alternating-sign floor-quotient sum
  congruence_sum,   // base value plus 2^k over a congruence family
  recurrence,       // block recurrence on the leading bit
  oracle,           // diagonal reading of the binary array
  from_d,           // t(n) = 2^n - 1 - d(n-1)
  from_s,           // t(n) = s(2^n - n) - 2^n
  extension,        // t(n) = upward diagonal through row -n
};

// p(k) = 2^k - k, k >= 1: the position where s first reaches k+1 bits.
Nat p(unsigned long k);

// s(n), n >= 0. Methods: signed_sum, congruence_sum (default), recurrence,
// oracle. All agree; signed_sum fixes the least legal truncation depth
// m = bitlen(n) + 1 and is insensitive to any larger choice.
Nat s_eval(const Nat& n, EvalMethod method = EvalMethod::congruence_sum);

// signed_sum with an explicit truncation depth m > log2(n), for the
// depth-insensitivity property test.
Nat s_signed_sum_depth(const Nat& n, unsigned long m);

// s extended to all integers: s_ext(n) = s(n) for n >= 0, t(-n) for n < 0.
// Always equals grid::diagonal_up(n).
Nat s_ext(const Int& n);

// d(n), n >= 0: the downward-diagonal value. Same four methods as s_eval.
Nat d_eval(const Nat& n, EvalMethod method = EvalMethod::congruence_sum);

// t(n), n >= 1: the n-th number missing from s's range. Methods:
// signed_sum, congruence_sum, recurrence, from_d (default), from_s,
// extension. Rejects n = 0 (t is 1-indexed). The value is just below
// 2^n, i.e. n bits wide, so n is capped by a representability budget.
Nat t_eval(const Nat& n, EvalMethod method = EvalMethod::from_d);

inline constexpr unsigned long kTEvalMaxIndex = 1ul << 24;

// Word kernels for hot sweeps; domains as in grid (values must fit).
std::uint64_t s_eval_u64(std::uint64_t n);   // n < 2^60, congruence route
std::uint64_t d_eval_u64(std::uint64_t n);   // n < 2^60, congruence route
std::uint64_t t_eval_u64(unsigned n);        // 1 <= n <= 63, from_d route

// The unique n with s_ext(n) = m, via bitwise suffix determination: bit k
// of n is fixed by matching s mod 2^(k+1), then the two candidates in
// [-(bitlen(m)+2), m] are disambiguated by full evaluation.
Int s_inverse(const Nat& m);

// Bounded linear scan over the same window; cross-check oracle for
// s_inverse. Cost is O(m) evaluations, so keep m small.
Int s_inverse_search(const Nat& m);

// The suffix permutation: s(n) mod 2^k depends only on n mod 2^k, and the
// induced map on residues is a bijection. table maps an s-suffix to the
// n-suffix it forces.
class PermutationTable {
 public:
  PermutationTable(unsigned k, std::vector<std::uint32_t> s_to_n);

  unsigned suffix_bits() const { return k_; }
  std::size_t size() const { return s_to_n_.size(); }
  // The n-residue forced by s-residue u.
  std::uint32_t operator()(std::uint32_t u) const { return s_to_n_.at(u); }

 private:
  unsigned k_;
  std::vector<std::uint32_t> s_to_n_;
};

inline constexpr unsigned kSuffixPermDefaultBound = 20;

// Builds the k-bit suffix permutation by evaluating s on one full period
// of residues, then re-checks every residue of a second period; a
// violation there would falsify the periodicity invariant and raises
// logic_error. k is capped by `bound` (memory: the table has 2^k entries).
PermutationTable suffix_perm(unsigned k,
                             unsigned bound = kSuffixPermDefaultBound);

// R(k) = s(p(k)), k >= 1: the record value where s first exceeds 2^k.
Nat record_R(unsigned long k);

// 2^(k+1) - R(k), k >= 1. Asserts the identity gap(k) = 2^k - t(k) and
// raises logic_error if it ever failed (it is a theorem).
Nat gap(unsigned long k);

// Value permutation read along successive upward diagonals: block m
// (indices 2^m..2^(m+1)-1) lists s(p(m))..s(p(m+1)-1) then t(m+1).
// Agrees with grid::diagonal_sigma.
Nat sigma(const Nat& n);

// First-occurrence filter of the stream d(0), d(1), ...: next() yields
// each value the first time it appears. Memory grows with the largest
// value seen (documented O(limit) contract); the budget caps the
// underlying d-index scan.
class DeltaStream {
 public:
  explicit DeltaStream(std::uint64_t scan_budget = kDeltaScanBudget);
  Nat next();

  static constexpr std::uint64_t kDeltaScanBudget = std::uint64_t{1} << 28;

 private:
  std::uint64_t cursor_ = 0;
  std::uint64_t budget_;
  std::vector<bool> seen_;
};

// delta(n): the n-th first-occurrence value. Agrees with
// grid::diagonal_delta. O(n) time and memory per call; use DeltaStream
// for ranges.
Nat delta(const Nat& n);

// Term-count selector for f and f'.
enum class CountMethod { brute, recurrence };

// f(n) = #{1 <= k <= n : k = n mod 2^k}, n >= 1: the number of terms in
// t(n)'s congruence sum. Bounded by 4 until astronomically large n.
unsigned f_eval(const Nat& n, CountMethod method = CountMethod::brute);

// Least n with f(n) = m, via the tower recurrence g(m+1) = 2^g(m) + g(m).
// Exact values exist only for m <= 5 (g(6) has ~2^2059 bits); larger m
// raises BudgetError directing callers to g_tower.
Nat g_min(unsigned m);

// Nested-exponential expression: either an exact literal or
// 2^(exponent) + addend. Shared subtrees make g_tower(m) linear size.
class TowerExpr {
 public:
  static TowerExpr literal(Nat value);
  static TowerExpr power_plus(TowerExpr exponent, TowerExpr addend);

  bool is_literal() const { return static_cast<bool>(value_); }
  const Nat& literal_value() const;
  const TowerExpr& exponent() const;
  const TowerExpr& addend() const;

  // Exact value; BudgetError if it would exceed max_bits bits.
  Nat evaluate(std::size_t max_bits = kTowerEvalBitBudget) const;
  std::string to_string() const;

  static constexpr std::size_t kTowerEvalBitBudget = std::size_t{1} << 22;

 private:
  TowerExpr() = default;
  std::optional<Nat> value_;
  std::shared_ptr<const TowerExpr> exponent_;
  std::shared_ptr<const TowerExpr> addend_;
};

// Symbolic g(m), m >= 1. Nodes whose value fits in literal_bits collapse
// to literals, so g_tower(5).is_literal() but g_tower(6) is a real tower.
TowerExpr g_tower(unsigned m, std::size_t literal_bits = 4096);

// f'(n) = #{k >= 1 : n + k = 0 mod 2^k}, n >= 0: the number of terms in
// s(n)'s congruence sum (so s(n) = n iff f'(n) = 0). Both routes take
// arbitrary-precision n.
unsigned f_prime_eval(const Nat& n, CountMethod method = CountMethod::brute);

// Least n <= limit with f'(n) = target, or nullopt. Linear scan.
std::optional<Nat> g_prime_search(unsigned target, const Nat& limit);

// Reflection identities relating s and d across a 2^j - 1 complement.
// Preconditions: s-form needs 0 <= n < 2^j - j; d-form needs j <= n < 2^j.
Nat s_via_reflection(const Nat& n, unsigned long j);
Nat d_via_reflection(const Nat& n, unsigned long j);

}  // namespace sloping::forms
