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

#include "sloping/numeric.hpp"

#include <bit>
#include <cassert>

namespace sloping {

int bit_of(const Int& n, unsigned long k) {
  // mpz_tstbit already implements the infinite two's-complement view.
  return mpz_tstbit(n.get_mpz_t(), k);
}

int bit_of_i64(std::int64_t n, unsigned k) {
  if (k >= 63) return n < 0 ? 1 : 0;
  return static_cast<int>((n >> k) & 1);  // arithmetic shift sign-extends
}

std::size_t bitlen(const Nat& n) {
  assert(sgn(n) >= 0);
  if (n == 0) return 0;  // mpz_sizeinbase(0, 2) is 1, not 0
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

unsigned bitlen_u64(std::uint64_t n) {
  return static_cast<unsigned>(64 - std::countl_zero(n));
}

std::size_t ceil_log2(const Nat& n) {
  assert(n >= 1);
  if (n == 1) return 0;
  return bitlen(Nat(n - 1));
}

Nat pow2(unsigned long k) {
  Nat r;
  mpz_setbit(r.get_mpz_t(), k);
  return r;
}

bool divisible_pow2(const Int& v, unsigned long k) {
  return mpz_divisible_2exp_p(v.get_mpz_t(), k) != 0;
}

bool divisible_pow2_u64(std::uint64_t v, unsigned k) {
  if (k >= 64) return v == 0;
  return (v & ((std::uint64_t{1} << k) - 1)) == 0;
}

Nat mod_pow2(const Int& n, unsigned long k) {
  Nat r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

unsigned long trailing_zeros(const Nat& n) {
  assert(n != 0);
  return mpz_scan1(n.get_mpz_t(), 0);
}

Nat inverse_mod_pow2(const Nat& c, unsigned long e) {
  assert(e >= 1);
  if (mpz_odd_p(c.get_mpz_t()) == 0) {
    throw std::invalid_argument("inverse_mod_pow2: c must be odd");
  }
  Nat x = 1;  // inverse mod 2^1
  for (unsigned long good = 1; good < e; good *= 2) {
    x = mod_pow2(Nat(x * (2 - c * x)), std::min(2 * good, e));
  }
  return mod_pow2(x, e);
}

bool fits_u64(const Nat& n) {
  return sgn(n) >= 0 && (n == 0 || bitlen(n) <= 64);
}

std::uint64_t to_u64(const Nat& n) {
  assert(fits_u64(n));
  std::uint64_t lo = mpz_get_ui(n.get_mpz_t());
  if (mp_bits_per_limb >= 64) return lo;
  Nat hi = n >> 32;
  return (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
         (lo & 0xffffffffu);
}

bool fits_i64(const Int& n) {
  static const Int lo = -(Int(1) << 63);
  static const Int hi = (Int(1) << 63) - 1;
  return n >= lo && n <= hi;
}

std::int64_t to_i64(const Int& n) {
  assert(fits_i64(n));
  if (sgn(n) >= 0) return static_cast<std::int64_t>(to_u64(n));
  // Negate in unsigned space so INT64_MIN converts without overflow.
  std::uint64_t mag = to_u64(Nat(-n));
  return static_cast<std::int64_t>(~mag + 1);
}

}  // namespace sloping
