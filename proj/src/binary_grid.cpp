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

#include "sloping/binary_grid.hpp"

#include <cassert>

namespace sloping::grid {

namespace detail {

Nat diagonal_up_mpz(const Int& n) {
  Nat acc = 0;
  Int row = n;
  unsigned long k = 0;
  // Stop at the first cell that is above the top of column k; every later
  // cell on the diagonal is a leading zero.
  while (!(sgn(row) >= 0 && bitlen(Nat(row)) <= k)) {
    if (bit_of(row, k)) mpz_setbit(acc.get_mpz_t(), k);
    ++k;
    ++row;
  }
  return acc;
}

Nat diagonal_down_mpz(const Nat& n) {
  assert(sgn(n) >= 0);
  Nat acc = 0;
  std::size_t len = bitlen(n);
  Int row = n;
  for (std::size_t k = 0; k < len; ++k) {
    if (bit_of(row, k)) mpz_setbit(acc.get_mpz_t(), k);
    --row;
  }
  return acc;
}

Nat diagonal_sigma_mpz(const Nat& r) {
  if (r == 0) return 0;
  std::size_t c = bitlen(r) - 1;
  Nat acc = 0;
  Int row = r - static_cast<unsigned long>(c);
  for (std::size_t k = 0; k <= c; ++k) {
    if (bit_of(row, k)) mpz_setbit(acc.get_mpz_t(), k);
    ++row;
  }
  return acc;
}

Nat diagonal_delta_mpz(const Nat& r) {
  if (r == 0) return 0;
  std::size_t c = bitlen(r) - 1;
  Nat acc = 0;
  Int row = r + static_cast<unsigned long>(c);
  for (std::size_t k = 0; k <= c; ++k) {
    if (bit_of(row, k)) mpz_setbit(acc.get_mpz_t(), k);
    --row;
  }
  return acc;
}

Nat diagonal_left_down_mpz(const Nat& i) {
  assert(sgn(i) >= 0);
  Nat acc = 0;
  Nat row = i;
  for (unsigned long j = 0;; ++j, ++row) {
    std::size_t len = bitlen(row);
    if (row == 0) len = 1;  // row 0 renders as a single "0" cell
    if (j >= len) break;
    acc <<= 1;
    if (bit_of(row, static_cast<unsigned long>(len - 1 - j))) acc |= 1;
  }
  return acc;
}

}  // namespace detail

std::uint64_t diagonal_up_i64(std::int64_t n) {
  assert(n >= kWordRowMin && n <= kWordRowMax);
  std::uint64_t acc = 0;
  std::int64_t row = n;
  unsigned k = 0;
  while (!(row >= 0 && (static_cast<std::uint64_t>(row) >> k) == 0)) {
    acc |= static_cast<std::uint64_t>(bit_of_i64(row, k)) << k;
    ++k;
    ++row;
  }
  return acc;
}

std::uint64_t diagonal_down_u64(std::uint64_t n) {
  assert(n <= static_cast<std::uint64_t>(kWordRowMax));
  std::uint64_t acc = 0;
  unsigned len = bitlen_u64(n);
  std::uint64_t row = n;
  for (unsigned k = 0; k < len; ++k, --row) {
    acc |= ((row >> k) & 1) << k;
  }
  return acc;
}

std::uint64_t diagonal_sigma_u64(std::uint64_t r) {
  assert(r <= static_cast<std::uint64_t>(kWordRowMax));
  if (r == 0) return 0;
  unsigned c = bitlen_u64(r) - 1;
  std::uint64_t acc = 0;
  std::uint64_t row = r - c;
  for (unsigned k = 0; k <= c; ++k, ++row) {
    acc |= ((row >> k) & 1) << k;
  }
  return acc;
}

std::uint64_t diagonal_delta_u64(std::uint64_t r) {
  assert(r <= static_cast<std::uint64_t>(kWordRowMax));
  if (r == 0) return 0;
  unsigned c = bitlen_u64(r) - 1;
  std::uint64_t acc = 0;
  std::uint64_t row = r + c;
  for (unsigned k = 0; k <= c; ++k, --row) {
    acc |= ((row >> k) & 1) << k;
  }
  return acc;
}

std::uint64_t diagonal_left_down_u64(std::uint64_t i) {
  assert(i <= static_cast<std::uint64_t>(kWordRowMax));
  std::uint64_t acc = 0;
  std::uint64_t row = i;
  for (unsigned j = 0;; ++j, ++row) {
    unsigned len = row == 0 ? 1 : bitlen_u64(row);
    if (j >= len) break;
    acc = (acc << 1) | ((row >> (len - 1 - j)) & 1);
  }
  return acc;
}

Nat diagonal_up(const Int& n) {
  if (fits_i64(n)) {
    std::int64_t v = to_i64(n);
    if (v >= kWordRowMin && v <= kWordRowMax) {
      return Nat(diagonal_up_i64(v));
    }
  }
  return detail::diagonal_up_mpz(n);
}

namespace {

template <typename WordFn, typename MpzFn>
Nat dispatch_row(const Nat& n, WordFn word, MpzFn mpz) {
  if (fits_u64(n) && to_u64(n) <= static_cast<std::uint64_t>(kWordRowMax)) {
    return Nat(word(to_u64(n)));
  }
  return mpz(n);
}

}  // namespace

Nat diagonal_down(const Nat& n) {
  return dispatch_row(n, diagonal_down_u64, detail::diagonal_down_mpz);
}

Nat diagonal_sigma(const Nat& r) {
  return dispatch_row(r, diagonal_sigma_u64, detail::diagonal_sigma_mpz);
}

Nat diagonal_delta(const Nat& r) {
  return dispatch_row(r, diagonal_delta_u64, detail::diagonal_delta_mpz);
}

Nat diagonal_left_down(const Nat& i) {
  return dispatch_row(i, diagonal_left_down_u64,
                      detail::diagonal_left_down_mpz);
}

std::string GridWindow::row_string(std::size_t i) const {
  std::string out;
  out.reserve(cells[i].size());
  for (std::uint8_t b : cells[i]) out.push_back(b ? '1' : '0');
  return out;
}

GridWindow render_window(const Int& first, const Int& last,
                         std::size_t columns, Adjustment adjustment,
                         std::size_t max_rows) {
  if (last < first) {
    throw std::invalid_argument("render_window: last < first");
  }
  if (adjustment == Adjustment::right && columns == 0) {
    throw std::invalid_argument("render_window: zero columns");
  }
  if (adjustment == Adjustment::left && sgn(first) < 0) {
    throw std::invalid_argument(
        "render_window: left adjustment needs nonnegative rows");
  }
  Int row_count = last - first + 1;
  if (row_count > static_cast<unsigned long>(max_rows)) {
    throw BudgetError("render_window: row count exceeds budget");
  }

  GridWindow w;
  w.first_row = first;
  w.last_row = last;
  w.columns = adjustment == Adjustment::right ? columns : 0;
  w.adjustment = adjustment;
  w.cells.reserve(static_cast<std::size_t>(row_count.get_ui()));
  for (Int row = first; row <= last; ++row) {
    std::vector<std::uint8_t> bits;
    if (adjustment == Adjustment::right) {
      bits.resize(columns);
      for (std::size_t j = 0; j < columns; ++j) {
        bits[j] = static_cast<std::uint8_t>(
            bit_of(row, static_cast<unsigned long>(columns - 1 - j)));
      }
    } else {
      std::size_t len = row == 0 ? 1 : bitlen(Nat(row));
      bits.resize(len);
      for (std::size_t j = 0; j < len; ++j) {
        bits[j] = static_cast<std::uint8_t>(
            row == 0 ? 0 : bit_of(row, static_cast<unsigned long>(len - 1 - j)));
      }
    }
    w.cells.push_back(std::move(bits));
  }
  return w;
}

}  // namespace sloping::grid
