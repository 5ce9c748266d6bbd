// Copyright 2026 The coreabacus Authors
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

/** @file formulas.hpp
 *  @brief Closed forms and recurrences for counts and weights of cores.
 *
 *  All arithmetic is exact. Overflow or a division that does not come out
 *  even raises InvariantError; neither can happen on valid input.
 */

#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "coreabacus/errors.hpp"

namespace coreabacus {

namespace detail {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantError("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw InvariantError("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantError("integer overflow in multiplication");
  return r;
}

inline std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what) {
  if (num % den != 0) {
    throw InvariantError(std::string(what) + ": " + std::to_string(num) +
                         " is not divisible by " + std::to_string(den));
  }
  return num / den;
}

// a(1) = first, a(2) = second, a(n) = a(n-1) + m a(n-2).
inline std::int64_t two_term(std::int64_t n, std::int64_t first, std::int64_t second,
                             std::int64_t m) {
  if (n < 1) throw PreconditionError("recurrence index must be at least 1");
  if (n == 1) return first;
  std::int64_t prev = first;
  std::int64_t cur = second;
  for (std::int64_t k = 3; k <= n; ++k) {
    const std::int64_t next = add(cur, mul(m, prev));
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace detail

/// F_{s+1} with F_2 = 1, F_3 = 2: the number of (s, s+1)-cores with
/// distinct parts.
inline std::int64_t fib_count(std::int64_t s) { return detail::two_term(s, 1, 2, 1); }

/// Number of (s, ms-1)-cores with distinct parts.
inline std::int64_t straub_minus(std::int64_t m, std::int64_t s) {
  if (m < 1) throw PreconditionError("m must be at least 1");
  return detail::two_term(s, 1, m, m);
}

/// Number of (s, ms+1)-cores with distinct parts.
inline std::int64_t straub_plus(std::int64_t m, std::int64_t s) {
  if (m < 1) throw PreconditionError("m must be at least 1");
  return detail::two_term(s, 1, m + 1, m);
}

/// E-_m(s) == E+_m(s-1) + (m-1) E+_m(s-2), for s >= 3.
inline bool middle_identity_check(std::int64_t m, std::int64_t s) {
  if (s < 3) throw PreconditionError("the middle identity needs s >= 3");
  const std::int64_t rhs =
      detail::add(straub_plus(m, s - 1), detail::mul(m - 1, straub_plus(m, s - 2)));
  return straub_minus(m, s) == rhs;
}

/// Weight of the unique maximal (s,t)-core: (s^2-1)(t^2-1)/24.
inline std::int64_t max_weight_formula(std::int64_t s, std::int64_t t) {
  if (s < 1 || t < 1) throw PreconditionError("moduli must be positive");
  if (std::gcd(s, t) != 1) throw PreconditionError("moduli must be coprime");
  using detail::mul;
  using detail::sub;
  return detail::exact_div(mul(sub(mul(s, s), 1), sub(mul(t, t), 1)), 24,
                           "maximal core weight");
}

/// Weight of the longest (s, ms-1, ms+1)-core. Odd s = 2t-1 and even
/// s = 2t-2 take different closed forms.
inline std::int64_t longest_weight_formula(std::int64_t s, std::int64_t m) {
  if (s < 1 || m < 1) throw PreconditionError("s and m must be at least 1");
  using detail::add;
  using detail::mul;
  using detail::sub;
  const std::int64_t mm = mul(m, m);
  if (s % 2 == 1) {
    const std::int64_t t = (s + 1) / 2;
    // m^2 t (t-1) (t^2 - t + 1) / 6
    const std::int64_t num = mul(mul(mul(mm, t), t - 1), add(sub(mul(t, t), t), 1));
    return detail::exact_div(num, 6, "longest core weight (odd s)");
  }
  const std::int64_t t = (s + 2) / 2;
  const std::int64_t sq = mul(t - 1, t - 1);
  // m^2 (t-1)^2 (t^2 - 2t + 3) / 6 - m (t-1)^2 / 2, over a common denominator.
  const std::int64_t num =
      sub(mul(mul(mm, sq), add(sub(mul(t, t), mul(2, t)), 3)), mul(mul(3, m), sq));
  return detail::exact_div(num, 6, "longest core weight (even s)");
}

enum class SelfConjugateKind { kPlain, kMinus, kPlus };

/// Self-conjugate distinct-part cores: F_*(s) for (s, s+1), E-_{m,*}(s) for
/// (s, ms-1) and E+_{m,*}(s) for (s, ms+1). `m` is ignored for kPlain.
inline std::int64_t self_conjugate_counts(SelfConjugateKind kind, std::int64_t m,
                                          std::int64_t s) {
  if (s < 1 || m < 1) throw PreconditionError("s and m must be at least 1");
  if (s == 1) return 1;
  const std::int64_t alpha = s / 2;
  const bool even = s % 2 == 0;
  switch (kind) {
    case SelfConjugateKind::kPlain:
      return alpha + 1;
    case SelfConjugateKind::kMinus:
      return even ? detail::mul(m, alpha) : alpha + 1;
    case SelfConjugateKind::kPlus:
      return even ? detail::mul(m, alpha) + 1 : alpha + 1;
  }
  throw InvariantError("unknown self-conjugate kind");
}

}  // namespace coreabacus
