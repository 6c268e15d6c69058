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

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sloping/numeric.hpp"

// Dynamics of the map n -> s(n) and global structure of s: trajectories
// and their model sequences, the fixed-point characterization, witnesses
// that s(n) - n is unbounded on any arithmetic progression, and the
// average-order statistic.
namespace sloping::analysis {

struct Trajectory {
  Nat start;
  std::vector<Nat> terms;  // terms[0] = start, terms[i+1] = s(terms[i])
};

inline constexpr std::size_t kTrajectoryTermBudget = std::size_t{1} << 24;
inline constexpr std::size_t kTrajectoryBitBudget = std::size_t{1} << 20;

// First `count` iterates of start under n -> s(n). BudgetError if count
// or any term's width exceeds its budget.
Trajectory trajectory(const Nat& start, std::size_t count,
                      std::size_t max_bits = kTrajectoryBitBudget);

// The model for T1: ascending numbers congruent to 1, 3, 5 or 15 mod 16.
Nat model_t1(std::uint64_t n);

// The model for T2: 8n + epsilon[n mod 16].
Nat model_t2(std::uint64_t n);

// The sixteen T2 correction constants.
const std::array<int, 16>& epsilon_table();

struct DivergenceReport {
  std::uint64_t agree_count = 0;
  std::optional<std::uint64_t> first_divergence_index;
  Nat value_a;  // values at the divergence index; empty if none
  Nat value_b;
};

using IndexedSequence = std::function<Nat(std::uint64_t)>;

// Least index below limit where the sequences differ. Both callables must
// be total on [0, limit).
DivergenceReport first_divergence(const IndexedSequence& a,
                                  const IndexedSequence& b,
                                  std::uint64_t limit);

// Adapts a trajectory to an IndexedSequence with O(1) sequential access;
// random access back-tracks by recomputing from the start.
IndexedSequence trajectory_fn(const Nat& start);

enum class FixedPointMethod { direct, theorem };

// s(n) = n, decided either by evaluating s or by the congruence
// characterization: n = 0 (mod 4) and n avoids every progression
// Q_r = {2^(4r) j - 4r : j >= 1}. Only r with 4r <= bitlen(n) + 1 can
// have members <= n, and r with d(4r-1) != 4r-1 are subsumed by smaller
// progressions, so both filters are applied.
bool is_fixed(const Nat& n,
              FixedPointMethod method = FixedPointMethod::theorem);
bool is_fixed_u64(std::uint64_t n,
                  FixedPointMethod method = FixedPointMethod::theorem);

inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 32;

// All fixed points n <= limit, ascending.
std::vector<Nat> fixed_points(const Nat& limit);

// All m <= limit such that 4m is not fixed, ascending.
std::vector<Nat> excluded_fixed_quarters(const Nat& limit);

struct WitnessResult {
  Nat n;            // a j + b, the progression member
  Nat j;            // least j >= 1 solving the lifting congruence
  unsigned long k;  // the guarantee exponent: s(n) >= n + 2^k
};

inline constexpr unsigned long kWitnessBitBudget = 1ul << 22;

// Constructive witness that s grows by at least 2^k = 2^(2^m - b)
// somewhere on the progression {a j + b : j >= 1}: writes a = c 2^d with
// c odd and solves c j = -2^(m-d) mod 2^(2^m - b - d) by Hensel lifting.
// Preconditions: a >= 1, m >= d, 2^m > b + d. The returned n satisfies
// n + k = 0 (mod 2^k).
WitnessResult unbounded_witness(const Nat& a, const Int& b, unsigned long m);

inline constexpr std::uint64_t kMeanExcessBudget = std::uint64_t{1} << 26;

// (1/N) sum of s(n) - n over n < N, exact.
mpq_class mean_excess(std::uint64_t N);

// A bound by which the T2 model must have failed: 8 (2^119 - 1). The
// exact divergence index is far beyond enumeration range.
Nat t2_model_breakdown_bound();

}  // namespace sloping::analysis
