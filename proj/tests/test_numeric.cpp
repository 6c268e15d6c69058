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
#include "sloping/numeric.hpp"

using namespace sloping;

TEST_CASE("bit_of reads the 2's-complement expansion") {
  CHECK(bit_of(Int(0), 0) == 0);
  CHECK(bit_of(Int(5), 0) == 1);
  CHECK(bit_of(Int(5), 1) == 0);
  CHECK(bit_of(Int(5), 2) == 1);
  CHECK(bit_of(Int(5), 63) == 0);
  // -1 is all ones; -2 is ...11110.
  for (unsigned long k = 0; k < 70; ++k) CHECK(bit_of(Int(-1), k) == 1);
  CHECK(bit_of(Int(-2), 0) == 0);
  CHECK(bit_of(Int(-2), 1) == 1);
  CHECK(bit_of(Int(-2), 300) == 1);
}

TEST_CASE("bit_of_i64 matches bit_of on word-sized inputs") {
  std::mt19937_64 rng(20260816);
  for (int round = 0; round < 2000; ++round) {
    auto n = static_cast<std::int64_t>(rng());
    unsigned k = static_cast<unsigned>(rng() % 70);
    CHECK(bit_of_i64(n, k) == bit_of(Int(static_cast<long>(n)), k));
  }
  CHECK(bit_of_i64(INT64_MIN, 63) == 1);
  CHECK(bit_of_i64(INT64_MIN, 64) == 1);
  CHECK(bit_of_i64(INT64_MIN, 0) == 0);
}

TEST_CASE("bitlen counts significant bits") {
  CHECK(bitlen(Nat(0)) == 0);
  CHECK(bitlen(Nat(1)) == 1);
  CHECK(bitlen(Nat(2)) == 2);
  CHECK(bitlen(Nat(255)) == 8);
  CHECK(bitlen(Nat(256)) == 9);
  CHECK(bitlen(pow2(100)) == 101);
  CHECK(bitlen_u64(0) == 0);
  CHECK(bitlen_u64(1) == 1);
  CHECK(bitlen_u64(UINT64_MAX) == 64);
  for (unsigned k = 0; k < 64; ++k)
    CHECK(bitlen_u64(std::uint64_t{1} << k) == k + 1);
}

TEST_CASE("ceil_log2") {
  CHECK(ceil_log2(Nat(1)) == 0);
  CHECK(ceil_log2(Nat(2)) == 1);
  CHECK(ceil_log2(Nat(3)) == 2);
  CHECK(ceil_log2(Nat(4)) == 2);
  CHECK(ceil_log2(Nat(5)) == 3);
  CHECK(ceil_log2(pow2(40)) == 40);
  CHECK(ceil_log2(pow2(40) + 1) == 41);
}

TEST_CASE("pow2 and divisibility") {
  CHECK(pow2(0) == 1);
  CHECK(pow2(10) == 1024);
  CHECK(divisible_pow2(Int(8), 3));
  CHECK(!divisible_pow2(Int(12), 3));
  CHECK(divisible_pow2(Int(0), 17));
  CHECK(divisible_pow2(Int(-8), 3));
  CHECK(divisible_pow2_u64(64, 6));
  CHECK(!divisible_pow2_u64(65, 6));
}

TEST_CASE("mod_pow2 is the nonnegative residue") {
  CHECK(mod_pow2(Int(13), 3) == 5);
  CHECK(mod_pow2(Int(-1), 3) == 7);
  CHECK(mod_pow2(Int(-8), 3) == 0);
  CHECK(mod_pow2(Int(5), 0) == 0);
}

TEST_CASE("trailing_zeros") {
  CHECK(trailing_zeros(Nat(1)) == 0);
  CHECK(trailing_zeros(Nat(12)) == 2);
  CHECK(trailing_zeros(pow2(57)) == 57);
}

TEST_CASE("inverse_mod_pow2 lifts inverses of odd numbers") {
  CHECK(inverse_mod_pow2(Nat(3), 4) == 11);  // 3 * 11 = 33 = 1 (mod 16)
  CHECK(inverse_mod_pow2(Nat(1), 1) == 1);
  std::mt19937_64 rng(7);
  for (int round = 0; round < 500; ++round) {
    unsigned long e = 1 + rng() % 40;
    Nat c = mod_pow2(Int(static_cast<unsigned long>(rng() | 1)), e);
    Nat inv = inverse_mod_pow2(c, e);
    CHECK(mod_pow2(Int(c * inv), e) == 1);
  }
  CHECK_THROWS_AS(inverse_mod_pow2(Nat(4), 5), std::invalid_argument);
}

TEST_CASE("word conversions round-trip") {
  CHECK(fits_u64(Nat(0)));
  CHECK(fits_u64(pow2(64) - 1));
  CHECK(!fits_u64(pow2(64)));
  CHECK(to_u64(pow2(64) - 1) == UINT64_MAX);
  CHECK(fits_i64(Int(-1) * Int(pow2(63))));
  CHECK(!fits_i64(Int(-1) * Int(pow2(63) + 1)));
  CHECK(to_i64(Int(-1) * Int(pow2(63))) == INT64_MIN);
  CHECK(fits_i64(Int(pow2(63) - 1)));
  CHECK(!fits_i64(Int(pow2(63))));
  CHECK(to_i64(Int(pow2(63) - 1)) == INT64_MAX);
  CHECK(to_i64(Int(-7)) == -7);
}
