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
#include <vector>

#include "doctest.h"
#include "sloping/analysis.hpp"
#include "sloping/closed_forms.hpp"
#include "sloping/numeric.hpp"

using namespace sloping;
using namespace sloping::analysis;

TEST_CASE("trajectories iterate the sloping map") {
  Trajectory t = trajectory(Nat(1), 9);
  const std::vector<std::uint64_t> want = {1, 3, 5, 15, 17, 19, 21, 31, 33};
  REQUIRE(t.terms.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(t.terms[i] == want[i]);

  Trajectory zero = trajectory(Nat(0), 50);
  for (const Nat& v : zero.terms) CHECK(v == 0);

  CHECK_THROWS_AS(trajectory(Nat(1), 0), std::invalid_argument);
  CHECK_THROWS_AS(trajectory(Nat(-3), 4), std::invalid_argument);
  CHECK_THROWS_AS(trajectory(Nat(1), (std::size_t{1} << 24) + 1),
                  BudgetError);
  CHECK_THROWS_AS(trajectory(pow2(64), 5, 32), BudgetError);
}

TEST_CASE("trajectory_fn allows random access with rewind") {
  IndexedSequence fn = trajectory_fn(Nat(1));
  CHECK(fn(3) == 15);
  CHECK(fn(0) == 1);  // rewinding works
  CHECK(fn(7) == 31);
  CHECK(fn(7) == 31);  // repeated access is stable
  Trajectory t = trajectory(Nat(1), 20);
  for (std::size_t i = 0; i < 20; ++i) CHECK(fn(i) == t.terms[i]);
}

TEST_CASE("the first trajectory model") {
  const std::vector<std::uint64_t> want = {1, 3, 5, 15, 17, 19, 21, 31};
  for (std::size_t n = 0; n < want.size(); ++n)
    CHECK(model_t1(n) == want[n]);
  CHECK(model_t1(511) == 2047);
  CHECK(model_t1(512) == 2049);
}

TEST_CASE("the second trajectory model") {
  const std::vector<std::uint64_t> want = {2,  6,  10, 14, 18, 22, 26, 30,
                                           34, 38, 42, 46, 50, 54, 58, 126};
  for (std::size_t n = 0; n < want.size(); ++n)
    CHECK(model_t2(n) == want[n]);
  CHECK(model_t2(16) == 130);
  CHECK(epsilon_table()[0] == 2);
  CHECK(epsilon_table()[15] == 6);
  CHECK(t2_model_breakdown_bound() == pow2(122) - 8);
}

TEST_CASE("first_divergence locates the earliest disagreement") {
  IndexedSequence a = [](std::uint64_t i) { return Nat(static_cast<unsigned long>(i)); };
  IndexedSequence b = [](std::uint64_t i) {
    return Nat(static_cast<unsigned long>(i == 37 ? 99 : i));
  };
  DivergenceReport same = first_divergence(a, a, 100);
  CHECK(!same.first_divergence_index);
  CHECK(same.agree_count == 100);

  DivergenceReport diff = first_divergence(a, b, 100);
  REQUIRE(diff.first_divergence_index);
  CHECK(*diff.first_divergence_index == 37);
  CHECK(diff.agree_count == 37);
  CHECK(diff.value_a == 37);
  CHECK(diff.value_b == 99);
}

TEST_CASE("trajectory of 1 tracks its model until index 511") {
  DivergenceReport fd =
      first_divergence(trajectory_fn(Nat(1)), model_t1, 600);
  REQUIRE(fd.first_divergence_index);
  CHECK(*fd.first_divergence_index == 511);
  CHECK(fd.value_a == 4095);
  CHECK(fd.value_b == 2047);
}

TEST_CASE("fixed point predicates agree and match the prefix") {
  for (std::uint64_t n = 0; n < 100000; ++n) {
    CHECK(is_fixed_u64(n) == (forms::s_eval_u64(n) == n));
  }
  for (std::uint64_t n : {0ull, 4ull, 8ull, 16ull, 20ull, 24ull}) {
    CHECK(is_fixed(Nat(static_cast<unsigned long>(n)),
                   FixedPointMethod::direct));
    CHECK(is_fixed(Nat(static_cast<unsigned long>(n)),
                   FixedPointMethod::theorem));
  }
  for (std::uint64_t n : {1ull, 2ull, 3ull, 12ull, 28ull, 44ull, 60ull}) {
    CHECK(!is_fixed(Nat(static_cast<unsigned long>(n)),
                    FixedPointMethod::direct));
    CHECK(!is_fixed(Nat(static_cast<unsigned long>(n)),
                    FixedPointMethod::theorem));
  }

  std::vector<Nat> got = fixed_points(Nat(52));
  std::vector<Nat> want;
  for (unsigned long v : {0ul, 4ul, 8ul, 16ul, 20ul, 24ul, 32ul, 36ul, 40ul,
                          48ul, 52ul})
    want.emplace_back(v);
  CHECK(got == want);
}

TEST_CASE("excluded quarters begin with the residue family") {
  std::vector<Nat> got = excluded_fixed_quarters(Nat(35));
  std::vector<Nat> want;
  for (unsigned long v : {3ul, 7ul, 11ul, 15ul, 19ul, 23ul, 27ul, 31ul, 35ul})
    want.emplace_back(v);
  CHECK(got == want);

  // 62 = 64 - 2 is the first member outside 3 mod 4.
  std::vector<Nat> wider = excluded_fixed_quarters(Nat(64));
  bool has62 = false;
  for (const Nat& v : wider) has62 = has62 || v == 62;
  CHECK(has62);
}

TEST_CASE("witness construction solves the lifting congruence") {
  WitnessResult w = unbounded_witness(Nat(1), Int(0), 2);
  CHECK(w.n == 12);
  CHECK(w.j == 12);
  CHECK(w.k == 4);
  CHECK(forms::s_eval(w.n) - w.n >= pow2(w.k));

  WitnessResult w2 = unbounded_witness(Nat(2), Int(0), 3);
  CHECK(w2.k == 8);
  CHECK(divisible_pow2(Int(w2.n) + 8, 8));
  CHECK(forms::s_eval(w2.n) - w2.n >= pow2(8));

  WitnessResult w3 = unbounded_witness(Nat(128), Int(2), 7);
  CHECK(w3.j == pow2(119) - 1);
  CHECK(w3.k == 126);
  CHECK(w3.n == pow2(126) - 126);
  CHECK(divisible_pow2(Int(w3.n) + 126, 126));

  std::mt19937_64 rng(1234);
  for (int round = 0; round < 40; ++round) {
    Nat a(static_cast<unsigned long>(1 + rng() % 4096));
    unsigned long d = trailing_zeros(a);
    unsigned long m = d + 1 + rng() % 8;
    Int b(static_cast<long>(rng() % 128) - 64);
    if (!(pow2(m) > b + static_cast<long>(d))) continue;
    WitnessResult w4 = unbounded_witness(a, b, m);
    CHECK(w4.j >= 1);
    CHECK(Int(w4.n) == Int(a * w4.j) + b);
    CHECK(divisible_pow2(Int(w4.n) + static_cast<unsigned long>(w4.k), w4.k));
  }

  CHECK_THROWS_AS(unbounded_witness(Nat(0), Int(0), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(unbounded_witness(Nat(8), Int(0), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(unbounded_witness(Nat(1), Int(5), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(unbounded_witness(Nat(1), Int(-(1l << 22)), 1),
                  BudgetError);
}

TEST_CASE("mean excess stays within the logarithmic bound") {
  mpq_class r1 = mean_excess(1);
  CHECK(r1 == 0);
  mpq_class r1024 = mean_excess(1024);
  CHECK(r1024 > 0);
  CHECK(r1024 <= 20);  // 2 log2(1024)
  CHECK_THROWS_AS(mean_excess(0), std::invalid_argument);
  CHECK_THROWS_AS(mean_excess((std::uint64_t{1} << 26) + 1), BudgetError);
}
