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

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sloping {

// Arbitrary-precision integers. Nat is used where values are nonnegative by
// contract; the distinction is documentation, not a checked type.
using Int = mpz_class;
using Nat = mpz_class;

// Raised when a request is exact but too large for the configured memory or
// time budget (as opposed to invalid_argument, which means the request is
// malformed). CLI maps BudgetError to exit code 1.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Bit k of n in two's-complement, total over all integers: for n < 0 the
// bit string is the complement of n's magnitude minus one, infinitely
// sign-extended. bit_of(-3, 1) = 0, bit_of(-6, 1) = 1, bit_of(-1, k) = 1.
int bit_of(const Int& n, unsigned long k);
int bit_of_i64(std::int64_t n, unsigned k);

// Number of bits in n >= 0; bitlen(0) = 0, otherwise floor(log2 n) + 1.
std::size_t bitlen(const Nat& n);
unsigned bitlen_u64(std::uint64_t n);

// ceil(log2 n) for n >= 1.
std::size_t ceil_log2(const Nat& n);

Nat pow2(unsigned long k);

// True iff 2^k divides v (always true for v = 0; sign of v ignored).
bool divisible_pow2(const Int& v, unsigned long k);
bool divisible_pow2_u64(std::uint64_t v, unsigned k);

// n mod 2^k, result in [0, 2^k); well-defined for negative n.
Nat mod_pow2(const Int& n, unsigned long k);

// 2-adic valuation of n != 0 (index of lowest set bit).
unsigned long trailing_zeros(const Nat& n);

// Inverse of odd c modulo 2^e, e >= 1, computed by Newton/Hensel lifting
// x <- x(2 - cx): the number of correct low bits doubles each step.
Nat inverse_mod_pow2(const Nat& c, unsigned long e);

bool fits_u64(const Nat& n);
std::uint64_t to_u64(const Nat& n);
bool fits_i64(const Int& n);
std::int64_t to_i64(const Int& n);

}  // namespace sloping
