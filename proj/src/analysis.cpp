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

#include "sloping/analysis.hpp"

#include <cassert>
#include <memory>

#include "sloping/closed_forms.hpp"

namespace sloping::analysis {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// The Q_r progressions with d(4r-1) != 4r-1 are contained in smaller ones
// and may be skipped when testing fixed points.
bool qr_is_primitive(unsigned long r) {
  unsigned long idx = 4 * r - 1;
  return forms::d_eval_u64(idx) == idx;
}

bool is_fixed_theorem_mpz(const Nat& n) {
  if (!divisible_pow2(n, 2)) return n == 0;
  std::size_t len = bitlen(n);
  for (unsigned long r = 1; 4 * r <= len + 1; ++r) {
    if (!qr_is_primitive(r)) continue;
    // Membership in Q_r: n + 4r is a positive multiple of 2^(4r).
    if (divisible_pow2(Int(n + 4 * r), 4 * r)) return false;
  }
  return true;
}

bool is_fixed_theorem_u64(std::uint64_t n) {
  if ((n & 3) != 0) return n == 0;
  unsigned len = bitlen_u64(n);
  for (unsigned r = 1; 4 * r <= len + 1; ++r) {
    if (!qr_is_primitive(r)) continue;
    if (divisible_pow2_u64(n + 4 * r, 4 * r)) return false;
  }
  return true;
}

}  // namespace

Trajectory trajectory(const Nat& start, std::size_t count,
                      std::size_t max_bits) {
  require(sgn(start) >= 0, "trajectory: start must be >= 0");
  require(count >= 1, "trajectory: count must be >= 1");
  if (count > kTrajectoryTermBudget) {
    throw BudgetError("trajectory: term count exceeds budget");
  }
  Trajectory t;
  t.start = start;
  t.terms.reserve(count);
  t.terms.push_back(start);
  for (std::size_t i = 1; i < count; ++i) {
    const Nat& prev = t.terms.back();
    if (bitlen(prev) > max_bits) {
      throw BudgetError("trajectory: term exceeds bit budget");
    }
    t.terms.push_back(forms::s_eval(prev));
  }
  return t;
}

Nat model_t1(std::uint64_t n) {
  static constexpr int kResidues[4] = {1, 3, 5, 15};
  return Nat(16 * Nat(n / 4) + kResidues[n % 4]);
}

Nat model_t2(std::uint64_t n) {
  return Nat(8 * Nat(n) + epsilon_table()[n % 16]);
}

const std::array<int, 16>& epsilon_table() {
  static const std::array<int, 16> kEpsilon = {
      2,   -2,  -6,  -10, -14, -18, -22, -26,
      -30, -34, -38, -42, -46, -50, -54, 6};
  return kEpsilon;
}

DivergenceReport first_divergence(const IndexedSequence& a,
                                  const IndexedSequence& b,
                                  std::uint64_t limit) {
  DivergenceReport report;
  for (std::uint64_t i = 0; i < limit; ++i) {
    Nat va = a(i);
    Nat vb = b(i);
    if (va != vb) {
      report.agree_count = i;
      report.first_divergence_index = i;
      report.value_a = std::move(va);
      report.value_b = std::move(vb);
      return report;
    }
  }
  report.agree_count = limit;
  return report;
}

IndexedSequence trajectory_fn(const Nat& start) {
  struct Cursor {
    Nat start;
    std::uint64_t index = 0;
    Nat value;
  };
  auto cursor = std::make_shared<Cursor>();
  cursor->start = start;
  cursor->value = start;
  return [cursor](std::uint64_t i) -> Nat {
    if (i < cursor->index) {  // rewind: recompute from the start
      cursor->index = 0;
      cursor->value = cursor->start;
    }
    while (cursor->index < i) {
      cursor->value = forms::s_eval(cursor->value);
      ++cursor->index;
    }
    return cursor->value;
  };
}

bool is_fixed(const Nat& n, FixedPointMethod method) {
  require(sgn(n) >= 0, "is_fixed: n must be >= 0");
  if (method == FixedPointMethod::direct) return forms::s_eval(n) == n;
  return is_fixed_theorem_mpz(n);
}

bool is_fixed_u64(std::uint64_t n, FixedPointMethod method) {
  assert(n <= static_cast<std::uint64_t>(1) << 60);
  if (method == FixedPointMethod::direct) return forms::s_eval_u64(n) == n;
  return is_fixed_theorem_u64(n);
}

std::vector<Nat> fixed_points(const Nat& limit) {
  require(sgn(limit) >= 0, "fixed_points: limit must be >= 0");
  if (limit > kEnumerationBudget) {
    throw BudgetError("fixed_points: limit exceeds budget");
  }
  std::uint64_t cap = to_u64(limit);
  std::vector<Nat> out;
  // Only multiples of 4 can be fixed, so the scan steps by 4.
  for (std::uint64_t n = 0; n <= cap; n += 4) {
    if (is_fixed_u64(n)) out.emplace_back(n);
  }
  return out;
}

std::vector<Nat> excluded_fixed_quarters(const Nat& limit) {
  require(sgn(limit) >= 0, "excluded_fixed_quarters: limit must be >= 0");
  if (limit > kEnumerationBudget) {
    throw BudgetError("excluded_fixed_quarters: limit exceeds budget");
  }
  std::uint64_t cap = to_u64(limit);
  std::vector<Nat> out;
  for (std::uint64_t m = 0; m <= cap; ++m) {
    if (!is_fixed_u64(4 * m)) out.emplace_back(m);
  }
  return out;
}

WitnessResult unbounded_witness(const Nat& a, const Int& b, unsigned long m) {
  require(sgn(a) > 0, "unbounded_witness: a must be >= 1");
  unsigned long d = trailing_zeros(a);
  Nat c = a >> d;
  require(m >= d, "unbounded_witness: need m >= d (a = c 2^d)");
  require(pow2(m) > b + static_cast<long>(d),
          "unbounded_witness: need 2^m > b + d");
  Int k_int = pow2(m) - b;  // guarantee exponent; >= d + 1 > 0
  if (k_int > static_cast<unsigned long>(kWitnessBitBudget)) {
    throw BudgetError("unbounded_witness: 2^m - b exceeds bit budget");
  }
  auto k = static_cast<unsigned long>(k_int.get_ui());
  unsigned long e = k - d;  // modulus exponent 2^m - b - d, >= 1

  // Solve c j = -2^(m-d) (mod 2^e) for the least j >= 1.
  Nat rhs = mod_pow2(-pow2(m - d), e);
  Nat j = mod_pow2(Nat(rhs * inverse_mod_pow2(mod_pow2(c, e), e)), e);
  if (j == 0) j = pow2(e);

  WitnessResult w;
  w.j = j;
  w.n = Nat(a * j + b);
  w.k = k;
  // The construction forces n + k = 0 (mod 2^k); check it outright.
  if (!divisible_pow2(Int(w.n + k), k)) {
    throw std::logic_error("unbounded_witness: congruence check failed");
  }
  return w;
}

mpq_class mean_excess(std::uint64_t N) {
  require(N >= 1, "mean_excess: N must be >= 1");
  if (N > kMeanExcessBudget) {
    throw BudgetError("mean_excess: N exceeds budget");
  }
  // Each excess is below 2^(bitlen(N) + 2), so the u64 sum cannot wrap.
  std::uint64_t sum = 0;
  for (std::uint64_t n = 0; n < N; ++n) {
    sum += forms::s_eval_u64(n) - n;
  }
  mpq_class ratio{Nat(sum), Nat(N)};
  ratio.canonicalize();
  return ratio;
}

Nat t2_model_breakdown_bound() { return Nat(8 * (pow2(119) - 1)); }

}  // namespace sloping::analysis
