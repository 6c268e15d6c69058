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

#include <cstdint>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "sloping/binary_grid.hpp"
#include "sloping/numeric.hpp"

using namespace sloping;
using namespace sloping::grid;

namespace {
constexpr std::uint64_t kUpGolden[] = {0,  3,  6,  5,  4,  15, 10, 9,
                                       8,  11, 14, 13, 28, 23, 18, 17};
constexpr std::uint64_t kDownGolden[] = {0, 1, 0,  3,  2,  1, 4, 7,
                                         6, 5, 0, 11, 10, 9, 12, 15};
constexpr std::uint64_t kSigmaGolden[] = {0,  1,  3, 2, 6,  5,  4,  7,
                                          15, 10, 9, 8, 11, 14, 13, 12};
constexpr std::uint64_t kDeltaGolden[] = {0,  1,  3, 2,  4,  7,  6,  5,
                                          11, 10, 9, 12, 15, 14, 13, 8};
constexpr std::uint64_t kLeftGolden[] = {0,  2,  6, 5,  4,  14, 13,
                                         8,  11, 10, 9, 12, 30};
}  // namespace

TEST_CASE("upward diagonals read the sloping values") {
  for (std::size_t n = 0; n < std::size(kUpGolden); ++n) {
    CHECK(diagonal_up(Int(static_cast<long>(n))) == kUpGolden[n]);
    CHECK(diagonal_up_i64(static_cast<std::int64_t>(n)) == kUpGolden[n]);
  }
}

TEST_CASE("upward diagonals through negative rows give the missing numbers") {
  constexpr std::uint64_t kMissing[] = {1, 2, 7, 12, 29, 62, 123, 248, 505};
  for (std::size_t i = 0; i < std::size(kMissing); ++i) {
    long n = -static_cast<long>(i + 1);
    CHECK(diagonal_up(Int(n)) == kMissing[i]);
    CHECK(diagonal_up_i64(n) == kMissing[i]);
  }
}

TEST_CASE("downward, sigma, delta and left readings match goldens") {
  for (std::size_t n = 0; n < 16; ++n) {
    CHECK(diagonal_down(Nat(static_cast<unsigned long>(n))) ==
          kDownGolden[n]);
    CHECK(diagonal_sigma(Nat(static_cast<unsigned long>(n))) ==
          kSigmaGolden[n]);
    CHECK(diagonal_delta(Nat(static_cast<unsigned long>(n))) ==
          kDeltaGolden[n]);
  }
  for (std::size_t n = 0; n < std::size(kLeftGolden); ++n) {
    CHECK(diagonal_left_down(Nat(static_cast<unsigned long>(n))) ==
          kLeftGolden[n]);
  }
}

TEST_CASE("word kernels are bit-identical to the wide readers") {
  auto check_all = [](std::uint64_t n) {
    Nat wide(static_cast<unsigned long>(n));
    CHECK(diagonal_up_i64(static_cast<std::int64_t>(n)) ==
          to_u64(detail::diagonal_up_mpz(Int(wide))));
    CHECK(diagonal_down_u64(n) == to_u64(detail::diagonal_down_mpz(wide)));
    CHECK(diagonal_sigma_u64(n) == to_u64(detail::diagonal_sigma_mpz(wide)));
    CHECK(diagonal_delta_u64(n) == to_u64(detail::diagonal_delta_mpz(wide)));
    CHECK(diagonal_left_down_u64(n) ==
          to_u64(detail::diagonal_left_down_mpz(wide)));
  };
  for (std::uint64_t n = 0; n < 2000; ++n) check_all(n);
  std::mt19937_64 rng(42);
  for (int round = 0; round < 300; ++round) {
    check_all(rng() % (std::uint64_t{1} << 59));
  }
  // Boundary windows where the dispatch changes representation.
  for (std::uint64_t n = (std::uint64_t{1} << 59) - 40;
       n < (std::uint64_t{1} << 59) + 40; ++n)
    check_all(n);
  for (std::uint64_t n = static_cast<std::uint64_t>(kWordRowMax) - 40;
       n <= static_cast<std::uint64_t>(kWordRowMax); ++n)
    check_all(n);
  // Negative rows on the upward diagonal.
  for (std::int64_t n = kWordRowMin; n < 0; ++n) {
    CHECK(diagonal_up_i64(n) == to_u64(detail::diagonal_up_mpz(Int(static_cast<long>(n)))));
  }
}

TEST_CASE("wide dispatch handles rows outside the word domain") {
  Int big = Int(pow2(80)) + 5;
  CHECK(diagonal_up(big) == detail::diagonal_up_mpz(big));
  CHECK(diagonal_down(Nat(big)) == detail::diagonal_down_mpz(Nat(big)));
  CHECK(diagonal_up(Int(-70)) == detail::diagonal_up_mpz(Int(-70)));
}

TEST_CASE("right-adjusted windows show the low columns") {
  GridWindow w = render_window(Int(0), Int(3), 2, Adjustment::right);
  REQUIRE(w.cells.size() == 4);
  CHECK(w.row_string(0) == "00");
  CHECK(w.row_string(1) == "01");
  CHECK(w.row_string(2) == "10");
  CHECK(w.row_string(3) == "11");
}

TEST_CASE("right-adjusted windows extend to negative rows") {
  GridWindow w = render_window(Int(-2), Int(1), 5, Adjustment::right);
  REQUIRE(w.cells.size() == 4);
  CHECK(w.row_string(0) == "11110");
  CHECK(w.row_string(1) == "11111");
  CHECK(w.row_string(2) == "00000");
  CHECK(w.row_string(3) == "00001");
}

TEST_CASE("left-adjusted windows use natural widths") {
  GridWindow w = render_window(Int(0), Int(5), 0, Adjustment::left);
  REQUIRE(w.cells.size() == 6);
  CHECK(w.row_string(0) == "0");
  CHECK(w.row_string(1) == "1");
  CHECK(w.row_string(2) == "10");
  CHECK(w.row_string(3) == "11");
  CHECK(w.row_string(4) == "100");
  CHECK(w.row_string(5) == "101");
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(render_window(Int(3), Int(1), 2, Adjustment::right),
                  std::invalid_argument);
  CHECK_THROWS_AS(render_window(Int(0), Int(1), 0, Adjustment::right),
                  std::invalid_argument);
  CHECK_THROWS_AS(render_window(Int(-1), Int(1), 0, Adjustment::left),
                  std::invalid_argument);
  CHECK_THROWS_AS(render_window(Int(0), Int(100), 4, Adjustment::right, 50),
                  BudgetError);
}
