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

#include "sloping/closed_forms.hpp"

#include <algorithm>
#include <cassert>

#include "sloping/binary_grid.hpp"

namespace sloping::forms {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Truncation depth for the congruence sums of s and f': k ranges over
// [1, max(2, ceil(log2 n))].
unsigned long congruence_bound(const Nat& n) {
  if (n < 3) return 2;
  return static_cast<unsigned long>(ceil_log2(n));
}

unsigned congruence_bound_u64(std::uint64_t n) {
  if (n < 3) return 2;
  return bitlen_u64(n - 1);
}

Nat s_congruence(const Nat& n) {
  Nat acc = n;
  unsigned long bound = congruence_bound(n);
  Int row = n;
  for (unsigned long k = 1; k <= bound; ++k) {
    ++row;
    if (divisible_pow2(row, k)) acc += pow2(k);
  }
  return acc;
}

Nat s_recurrence(const Nat& n) {
  Nat acc = 0;
  Nat cur = n;
  while (cur > 0) {
    std::size_t i = bitlen(cur) - 1;
    Nat top = pow2(i);
    Nat j = cur - top;
    // Leading-bit block: the one index j = 2^i - i - 1 whose diagonal
    // gains both the 2^i and 2^(i+1) bits.
    if (j == top - i - 1) {
      acc += 3 * top;
    } else {
      acc += top;
    }
    cur = std::move(j);
  }
  return acc;
}

Nat d_signed_sum(const Nat& n) {
  if (n == 0) return 0;
  std::size_t m = bitlen(n) - 1;  // the depth is fixed at floor(log2 n)
  Int acc = 0;
  for (std::size_t k = 0; k <= m; ++k) {
    Int q;
    Int row = n - static_cast<unsigned long>(k);
    mpz_fdiv_q_2exp(q.get_mpz_t(), row.get_mpz_t(), k);
    if (mpz_odd_p(q.get_mpz_t())) {
      acc -= pow2(k);
    } else {
      acc += pow2(k);
    }
  }
  Nat num = pow2(m + 1) - 1 - acc;
  assert(divisible_pow2(num, 1));
  return num >> 1;
}

Nat d_congruence(const Nat& n) {
  Nat acc = n;
  if (n <= 1) return acc;
  std::size_t bound = bitlen(n) - 1;  // floor(log2 n)
  for (std::size_t k = 1; k <= bound; ++k) {
    // n = k - 1 (mod 2^k)
    if (divisible_pow2(Int(n - static_cast<unsigned long>(k) + 1), k)) {
      acc -= pow2(k);
    }
  }
  return acc;
}

Nat d_recurrence(const Nat& n) {
  Nat acc = 0;
  Nat cur = n;
  // Blocks span indices [2^i + i - 1, 2^(i+1) + i - 1]; the first entry
  // (j = -1) reaches back to d(i-1), the rest add 2^i and recurse inside
  // the previous block.
  while (cur > 1) {
    std::size_t i0 = bitlen(cur) - 1;
    std::size_t i = i0;
    if (cur < pow2(i0) + (i0 - 1)) i = i0 - 1;
    Nat top = pow2(i);
    if (cur == top + (i - 1)) {
      cur = static_cast<unsigned long>(i - 1);
    } else {
      acc += top;
      cur -= top;
    }
  }
  return acc + cur;
}

unsigned long checked_t_index(const Nat& n) {
  require(sgn(n) >= 0 && n != 0, "t_eval: index must be >= 1");
  if (n > kTEvalMaxIndex) {
    throw BudgetError("t_eval: value would exceed the bit budget");
  }
  return to_u64(n);
}

Nat t_signed_sum(unsigned long n) {
  // The sum is naturally indexed from the row above; shift so N = n - 1.
  unsigned long N = n - 1;
  Int acc = 0;
  for (unsigned long k = 0; k <= N; ++k) {
    Int q;
    Int row = Nat(N - k);
    mpz_fdiv_q_2exp(q.get_mpz_t(), row.get_mpz_t(), k);
    if (mpz_odd_p(q.get_mpz_t())) {
      acc -= pow2(k);
    } else {
      acc += pow2(k);
    }
  }
  Nat num = pow2(N + 1) - 1 + acc;
  assert(divisible_pow2(num, 1));
  return num >> 1;
}

Nat t_congruence(unsigned long n) {
  // Dominant term k = n, plus small terms k <= floor(log2 n).
  Nat acc = pow2(n) - n;
  unsigned long bound = n == 0 ? 0 : bitlen_u64(n) - 1;
  for (unsigned long k = 1; k <= bound; ++k) {
    if (divisible_pow2_u64(n - k, static_cast<unsigned>(k))) acc += pow2(k);
  }
  return acc;
}

Nat t_recurrence(unsigned long n) {
  if (n == 1) return 1;
  if (n == 2) return 2;
  unsigned long i = bitlen_u64(n) - 1;
  // Block i spans indices [2^i + i, 2^(i+1) + i].
  if (n < (1ul << i) + i) --i;
  unsigned long j = n - (1ul << i);
  assert(j >= i && j <= (1ul << i) + i);
  if (j == i) {
    return pow2(n) - pow2(i) + t_recurrence(i);
  }
  return pow2(n) - pow2(i) - pow2(j) + t_recurrence(j);
}

unsigned f_prime_brute_u64(std::uint64_t n) {
  unsigned bound = congruence_bound_u64(n);
  unsigned count = 0;
  for (unsigned k = 1; k <= bound; ++k) {
    if (divisible_pow2_u64(n + k, k)) ++count;
  }
  return count;
}

}  // namespace

Nat p(unsigned long k) {
  require(k >= 1, "p: k must be >= 1");
  return pow2(k) - k;
}

Nat s_eval(const Nat& n, EvalMethod method) {
  require(sgn(n) >= 0, "s_eval: n must be >= 0");
  switch (method) {
    case EvalMethod::signed_sum:
      return s_signed_sum_depth(n, static_cast<unsigned long>(bitlen(n)) + 1);
    case EvalMethod::congruence_sum:
      if (fits_u64(n) && to_u64(n) <= static_cast<std::uint64_t>(
                             grid::kWordRowMax)) {
        return Nat(s_eval_u64(to_u64(n)));
      }
      return s_congruence(n);
    case EvalMethod::recurrence:
      return s_recurrence(n);
    case EvalMethod::oracle:
      return grid::diagonal_up(Int(n));
    default:
      throw std::invalid_argument("s_eval: unsupported method");
  }
}

Nat s_signed_sum_depth(const Nat& n, unsigned long m) {
  require(sgn(n) >= 0, "s_signed_sum_depth: n must be >= 0");
  require(m >= bitlen(n), "s_signed_sum_depth: depth must exceed log2(n)");
  Int acc = 0;
  Int row = n;  // n + k
  for (unsigned long k = 0; k <= m; ++k) {
    Int q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), row.get_mpz_t(), k);
    if (mpz_odd_p(q.get_mpz_t())) {
      acc -= pow2(k);
    } else {
      acc += pow2(k);
    }
    ++row;
  }
  Nat num = pow2(m + 1) - 1 - acc;
  assert(divisible_pow2(num, 1));
  return num >> 1;
}

Nat s_ext(const Int& n) {
  if (sgn(n) >= 0) return s_eval(Nat(n));
  return t_eval(Nat(-n));
}

Nat d_eval(const Nat& n, EvalMethod method) {
  require(sgn(n) >= 0, "d_eval: n must be >= 0");
  switch (method) {
    case EvalMethod::signed_sum:
      return d_signed_sum(n);
    case EvalMethod::congruence_sum:
      if (fits_u64(n) && to_u64(n) <= static_cast<std::uint64_t>(
                             grid::kWordRowMax)) {
        return Nat(d_eval_u64(to_u64(n)));
      }
      return d_congruence(n);
    case EvalMethod::recurrence:
      return d_recurrence(n);
    case EvalMethod::oracle:
      return grid::diagonal_down(n);
    default:
      throw std::invalid_argument("d_eval: unsupported method");
  }
}

Nat t_eval(const Nat& n, EvalMethod method) {
  unsigned long idx = checked_t_index(n);
  switch (method) {
    case EvalMethod::signed_sum:
      return t_signed_sum(idx);
    case EvalMethod::congruence_sum:
      return t_congruence(idx);
    case EvalMethod::recurrence:
      return t_recurrence(idx);
    case EvalMethod::from_d:
      return pow2(idx) - 1 - d_eval(Nat(idx - 1));
    case EvalMethod::from_s:
      return s_eval(Nat(pow2(idx) - idx)) - pow2(idx);
    case EvalMethod::extension:
      return grid::diagonal_up(-Int(idx));
    default:
      throw std::invalid_argument("t_eval: unsupported method");
  }
}

std::uint64_t s_eval_u64(std::uint64_t n) {
  assert(n <= static_cast<std::uint64_t>(grid::kWordRowMax));
  std::uint64_t acc = n;
  unsigned bound = congruence_bound_u64(n);
  for (unsigned k = 1; k <= bound; ++k) {
    if (divisible_pow2_u64(n + k, k)) acc += std::uint64_t{1} << k;
  }
  return acc;
}

std::uint64_t d_eval_u64(std::uint64_t n) {
  assert(n <= static_cast<std::uint64_t>(grid::kWordRowMax));
  std::uint64_t acc = n;
  unsigned bound = n == 0 ? 0 : bitlen_u64(n) - 1;
  for (unsigned k = 1; k <= bound; ++k) {
    if (divisible_pow2_u64(n - k + 1, k)) acc -= std::uint64_t{1} << k;
  }
  return acc;
}

std::uint64_t t_eval_u64(unsigned n) {
  assert(n >= 1 && n <= 63);
  return ((std::uint64_t{1} << n) - 1) - d_eval_u64(n - 1);
}

Int s_inverse(const Nat& m) {
  require(sgn(m) >= 0, "s_inverse: m must be >= 0");
  if (m == 0) return 0;
  // s mod 2^(k+1) depends only on the argument mod 2^(k+1), so each bit of
  // the preimage is forced in turn. kmax bits suffice to separate the two
  // candidates n = r and n = r - 2^kmax.
  unsigned long kmax = static_cast<unsigned long>(bitlen(m)) + 3;
  Nat r = 0;
  for (unsigned long k = 0; k < kmax; ++k) {
    Nat cand = r;
    mpz_setbit(cand.get_mpz_t(), k);
    if (mod_pow2(s_eval(cand), k + 1) == mod_pow2(m, k + 1)) {
      r = std::move(cand);
    }
  }
  if (s_eval(r) == m) return Int(r);
  Nat j = pow2(kmax) - r;
  if (j <= kmax && t_eval(j) == m) return -Int(j);
  throw std::logic_error("s_inverse: suffix determination failed");
}

Int s_inverse_search(const Nat& m) {
  require(sgn(m) >= 0, "s_inverse_search: m must be >= 0");
  Int lo = -Int(static_cast<unsigned long>(bitlen(m)) + 2);
  for (Int n = lo; n <= m; ++n) {
    if (s_ext(n) == m) return n;
  }
  throw std::logic_error("s_inverse_search: no preimage in window");
}

PermutationTable::PermutationTable(unsigned k,
                                   std::vector<std::uint32_t> s_to_n)
    : k_(k), s_to_n_(std::move(s_to_n)) {
  if (s_to_n_.size() != (std::size_t{1} << k_)) {
    throw std::invalid_argument("PermutationTable: wrong size");
  }
  std::vector<std::uint32_t> sorted = s_to_n_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) {
      throw std::invalid_argument("PermutationTable: not a bijection");
    }
  }
}

PermutationTable suffix_perm(unsigned k, unsigned bound) {
  require(k >= 1 && k <= bound, "suffix_perm: k out of range");
  if (k > 24) throw BudgetError("suffix_perm: table would exceed budget");
  std::uint32_t size = std::uint32_t{1} << k;
  std::vector<std::uint32_t> s_to_n(size, UINT32_MAX);
  for (std::uint32_t r = 0; r < size; ++r) {
    auto u = static_cast<std::uint32_t>(s_eval_u64(r) & (size - 1));
    if (s_to_n[u] != UINT32_MAX) {
      throw std::logic_error("suffix_perm: residue collision");
    }
    s_to_n[u] = r;
  }
  // One extra period: every residue must reproduce the same suffix map.
  for (std::uint32_t r = 0; r < size; ++r) {
    auto u = static_cast<std::uint32_t>(s_eval_u64(r + size) & (size - 1));
    if (s_to_n[u] != r) {
      throw std::logic_error("suffix_perm: periodicity violated");
    }
  }
  return PermutationTable(k, std::move(s_to_n));
}

Nat record_R(unsigned long k) {
  require(k >= 1, "record_R: k must be >= 1");
  return s_eval(p(k));
}

Nat gap(unsigned long k) {
  require(k >= 1, "gap: k must be >= 1");
  Nat g = pow2(k + 1) - record_R(k);
  if (g != pow2(k) - t_eval(Nat(k))) {
    throw std::logic_error("gap: record/missing identity violated");
  }
  return g;
}

Nat sigma(const Nat& n) {
  require(sgn(n) >= 0, "sigma: n must be >= 0");
  if (n == 0) return 0;
  std::size_t m = bitlen(n) - 1;
  Nat j = n - pow2(m);
  if (j == pow2(m) - 1) {
    return t_eval(Nat(static_cast<unsigned long>(m) + 1));
  }
  return s_eval(Nat(p(m) + j));
}

DeltaStream::DeltaStream(std::uint64_t scan_budget) : budget_(scan_budget) {}

Nat DeltaStream::next() {
  for (;;) {
    if (cursor_ > budget_) {
      throw BudgetError("delta: scan budget exhausted");
    }
    std::uint64_t v = d_eval_u64(cursor_);
    ++cursor_;
    if (v >= seen_.size()) {
      seen_.resize(std::max<std::size_t>(v + 1, seen_.size() * 2));
    }
    if (!seen_[v]) {
      seen_[v] = true;
      return Nat(v);
    }
  }
}

Nat delta(const Nat& n) {
  require(sgn(n) >= 0, "delta: n must be >= 0");
  if (n > (1ul << 26)) throw BudgetError("delta: index exceeds budget");
  std::uint64_t target = to_u64(n);
  DeltaStream stream;
  Nat v;
  for (std::uint64_t i = 0; i <= target; ++i) v = stream.next();
  return v;
}

unsigned f_eval(const Nat& n, CountMethod method) {
  require(sgn(n) > 0, "f_eval: n must be >= 1 (f is 1-indexed)");
  if (method == CountMethod::brute) {
    // k = n always solves k = n (mod 2^k); other solutions need
    // 2^k <= n - k, i.e. k <= floor(log2 n).
    unsigned count = 1;
    std::size_t bound = bitlen(n) - 1;
    for (std::size_t k = 1; k <= bound; ++k) {
      if (divisible_pow2(Int(n - static_cast<unsigned long>(k)), k)) ++count;
    }
    return count;
  }
  unsigned count = 0;
  Nat cur = n;
  while (cur > 2) {
    std::size_t i = bitlen(Nat(cur - 1)) - 1;  // 2^i < cur <= 2^(i+1)
    Nat j = cur - pow2(i);
    if (j <= i) ++count;
    cur = std::move(j);
  }
  return count + 1;  // f(1) = f(2) = 1
}

Nat g_min(unsigned m) {
  require(m >= 1, "g_min: m must be >= 1");
  if (m >= 6) {
    throw BudgetError(
        "g_min: g(6) and beyond have ~2^2059 bits; use g_tower");
  }
  Nat g = 1;
  for (unsigned step = 2; step <= m; ++step) {
    g = pow2(to_u64(g)) + g;
  }
  return g;
}

TowerExpr TowerExpr::literal(Nat value) {
  TowerExpr e;
  e.value_ = std::move(value);
  return e;
}

TowerExpr TowerExpr::power_plus(TowerExpr exponent, TowerExpr addend) {
  TowerExpr e;
  e.exponent_ = std::make_shared<const TowerExpr>(std::move(exponent));
  e.addend_ = std::make_shared<const TowerExpr>(std::move(addend));
  return e;
}

const Nat& TowerExpr::literal_value() const {
  if (!is_literal()) throw std::logic_error("TowerExpr: not a literal");
  return *value_;
}

const TowerExpr& TowerExpr::exponent() const {
  if (is_literal()) throw std::logic_error("TowerExpr: literal has no parts");
  return *exponent_;
}

const TowerExpr& TowerExpr::addend() const {
  if (is_literal()) throw std::logic_error("TowerExpr: literal has no parts");
  return *addend_;
}

Nat TowerExpr::evaluate(std::size_t max_bits) const {
  if (is_literal()) {
    if (bitlen(*value_) > max_bits) {
      throw BudgetError("TowerExpr: literal exceeds bit budget");
    }
    return *value_;
  }
  Nat e = exponent_->evaluate(max_bits);
  if (e >= static_cast<unsigned long>(max_bits)) {
    throw BudgetError("TowerExpr: value exceeds bit budget");
  }
  return pow2(to_u64(e)) + addend_->evaluate(max_bits);
}

std::string TowerExpr::to_string() const {
  if (is_literal()) return value_->get_str(10);
  std::string exp = exponent_->is_literal()
                        ? exponent_->to_string()
                        : "(" + exponent_->to_string() + ")";
  return "2^" + exp + " + " + addend_->to_string();
}

TowerExpr g_tower(unsigned m, std::size_t literal_bits) {
  require(m >= 1, "g_tower: m must be >= 1");
  TowerExpr cur = TowerExpr::literal(1);
  for (unsigned step = 2; step <= m; ++step) {
    if (cur.is_literal()) {
      const Nat& v = cur.literal_value();
      // 2^v + v has v + 1 bits; collapse while that stays in budget.
      if (bitlen(v) < 64 && to_u64(v) + 1 <= literal_bits) {
        cur = TowerExpr::literal(pow2(to_u64(v)) + v);
        continue;
      }
    }
    cur = TowerExpr::power_plus(cur, cur);
  }
  return cur;
}

unsigned f_prime_eval(const Nat& n, CountMethod method) {
  require(sgn(n) >= 0, "f_prime_eval: n must be >= 0");
  if (method == CountMethod::brute) {
    unsigned count = 0;
    unsigned long bound = congruence_bound(n);
    Int row = n;
    for (unsigned long k = 1; k <= bound; ++k) {
      ++row;
      if (divisible_pow2(row, k)) ++count;
    }
    return count;
  }
  unsigned count = 0;
  Nat cur = n;
  while (cur > 1) {
    std::size_t i = bitlen(cur) - 1;
    Nat top = pow2(i);
    Nat j = cur - top;
    if (j == top - i - 1) ++count;
    cur = std::move(j);
  }
  return count + (cur == 1 ? 1 : 0);
}

std::optional<Nat> g_prime_search(unsigned target, const Nat& limit) {
  require(sgn(limit) >= 0, "g_prime_search: limit must be >= 0");
  if (limit > (1ul << 26)) {
    throw BudgetError("g_prime_search: limit exceeds budget");
  }
  std::uint64_t cap = to_u64(limit);
  for (std::uint64_t n = 0; n <= cap; ++n) {
    if (f_prime_brute_u64(n) == target) return Nat(n);
  }
  return std::nullopt;
}

Nat s_via_reflection(const Nat& n, unsigned long j) {
  require(sgn(n) >= 0 && n + j < pow2(j), "s_via_reflection: need n < 2^j - j");
  Nat mirror = pow2(j) - 1 - n;
  return pow2(j) - 1 - d_eval(mirror);
}

Nat d_via_reflection(const Nat& n, unsigned long j) {
  require(n >= j && n < pow2(j), "d_via_reflection: need j <= n < 2^j");
  Nat mirror = pow2(j) - 1 - n;
  return pow2(j) - 1 - s_eval(mirror);
}

}  // namespace sloping::forms
