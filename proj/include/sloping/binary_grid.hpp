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

#include "sloping/numeric.hpp"

// Diagonal readings of the infinite array whose row n is the binary
// expansion of n. Rows extend infinitely to the left; for negative n the
// cells follow the two's-complement convention (all-ones tail). These
// readers are the definitional oracles that every closed form in the rest
// of the library is validated against.
namespace sloping::grid {

// Upward diagonal through row n, right-adjusted array: bit k of the result
// is cell (n + k, column k). The walk terminates at the first k with
// n + k >= 0 and 2^k > n + k; beyond it every cell is zero. Total over all
// integers n (negative rows give the "missing number" values).
Nat diagonal_up(const Int& n);

// Downward diagonal through row n >= 0: bit k is cell (n - k, column k),
// for 0 <= k < bitlen(n).
Nat diagonal_down(const Nat& n);

// Upward diagonal *ending* at row r's leading bit: bit k is cell
// (r - c + k, column k) where c = bitlen(r) - 1. Reads the array by
// successive upward diagonals, one per row.
Nat diagonal_sigma(const Nat& r);

// Downward diagonal *starting* at row r's leading-bit column: bit k is
// cell (r + c - k, column k) where c = bitlen(r) - 1.
Nat diagonal_delta(const Nat& r);

// Downward diagonal in the left-adjusted array, starting at row i, read
// most-significant-first: step j takes column j of row i + j, valid while
// j < bitlen(i + j) (row 0 contributes the single cell j = 0). Validity
// is monotone, so the walk stops at the first violation.
Nat diagonal_left_down(const Nat& i);

// Word-size kernels. Domains: diagonal_up_i64 accepts -62 <= n < 2^60;
// the others accept n < 2^60 (results then fit in 64 bits). The dispatch
// in the Nat readers above selects these automatically; they are exposed
// for hot sweeps and for fast-path/general-path equality tests.
std::uint64_t diagonal_up_i64(std::int64_t n);
std::uint64_t diagonal_down_u64(std::uint64_t n);
std::uint64_t diagonal_sigma_u64(std::uint64_t r);
std::uint64_t diagonal_delta_u64(std::uint64_t r);
std::uint64_t diagonal_left_down_u64(std::uint64_t i);

inline constexpr std::int64_t kWordRowMin = -62;
inline constexpr std::int64_t kWordRowMax = (std::int64_t{1} << 60) - 1;

namespace detail {
// Bignum paths without the word-size dispatch, for overlap testing.
Nat diagonal_up_mpz(const Int& n);
Nat diagonal_down_mpz(const Nat& n);
Nat diagonal_sigma_mpz(const Nat& r);
Nat diagonal_delta_mpz(const Nat& r);
Nat diagonal_left_down_mpz(const Nat& i);
}  // namespace detail

enum class Adjustment { right, left };

// A rectangular excerpt of the array, for display and tests only.
// cells[i] holds row first_row + i, most significant bit first: width
// `columns` when right-adjusted, bitlen(row) when left-adjusted (row 0
// renders as the single cell "0").
struct GridWindow {
  Int first_row;
  Int last_row;
  std::size_t columns = 0;
  Adjustment adjustment = Adjustment::right;
  std::vector<std::vector<std::uint8_t>> cells;

  std::string row_string(std::size_t i) const;
};

inline constexpr std::size_t kWindowRowBudget = std::size_t{1} << 20;

// Renders rows first..last inclusive. Right adjustment shows the low
// `columns` bits of each row (two's-complement for negatives); left
// adjustment requires first >= 0 and ignores `columns`. Throws
// invalid_argument on malformed ranges and BudgetError when the row count
// exceeds max_rows.
GridWindow render_window(const Int& first, const Int& last,
                         std::size_t columns, Adjustment adjustment,
                         std::size_t max_rows = kWindowRowBudget);

}  // namespace sloping::grid
