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

/** @file constructions.hpp
 *  @brief Named abaci of maximal and longest (s, ms+-1)-cores.
 *
 *  A(s)      staircase abacus of the maximal (s, s+1)-core
 *  B_k(s)    k = 0: (s, 2s-1)-core block; k = 1: maximal (s-1, s)-core
 *  C_k(s)    A(s) ∩ B_k(s), a pyramid
 *  E-_m(s)   (∧_{m-1} B_0(s)) ∧ B_1(s), maximal (s, ms-1)-core
 *  E+_m(s)   ∧_m A(s), maximal (s, ms+1)-core
 *  L_m(s)    (∧_{m-1} C_0(s)) ∧ C_1(s), longest (s, ms-1, ms+1)-core
 *
 *  The E-/E+ builders go through the wedge. The coordinates namespace holds
 *  direct position formulas used as an independent second route in tests.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coreabacus/abacus.hpp"
#include "coreabacus/errors.hpp"

namespace coreabacus {

namespace detail {

inline void require_runners(std::int64_t s) {
  if (s < 1) throw PreconditionError("s must be at least 1");
}

inline void require_blocks(std::int64_t m) {
  if (m < 1) throw PreconditionError("m must be at least 1");
}

template <typename Pred>
Abacus grid_abacus(std::int64_t s, std::int64_t max_row, Pred keep) {
  std::vector<AbacusPosition> pos;
  for (std::int64_t i = 0; i < s; ++i) {
    for (std::int64_t j = 0; j <= max_row; ++j) {
      if (keep(i, j)) pos.push_back({i, j});
    }
  }
  return Abacus::from_positions(s, pos);
}

}  // namespace detail

/// Beads at (i, j) with 0 < i <= s-1 and 0 <= j <= i-1.
inline Abacus build_A(std::int64_t s) {
  detail::require_runners(s);
  return detail::grid_abacus(s, s, [](std::int64_t i, std::int64_t j) {
    return i > 0 && j <= i - 1;
  });
}

/// Beads at (i, j) with 0 < i <= s-1-k and 0 <= j <= s-i-1-k. For k = 1
/// this drops the top bead of every runner of B_0(s).
inline Abacus build_B(std::int64_t s, std::int64_t k) {
  detail::require_runners(s);
  if (k != 0 && k != 1) throw UnsupportedError("B_k(s) is only built for k in {0,1}");
  return detail::grid_abacus(s, s, [s, k](std::int64_t i, std::int64_t j) {
    return i > 0 && i <= s - 1 - k && j <= s - i - 1 - k;
  });
}

/// Appends `right` to `left`: runners of `right` are shifted by left.runners().
inline Abacus wedge(const Abacus& left, const Abacus& right) {
  const std::int64_t width = left.runners() + right.runners();
  std::vector<AbacusPosition> pos = left.positions();
  for (auto [i, j] : right.positions()) pos.push_back({i + left.runners(), j});
  return Abacus::from_positions(width, pos);
}

/// `a` appended to itself `copies` times.
inline Abacus wedge_power(const Abacus& a, std::int64_t copies) {
  if (copies < 1) throw PreconditionError("wedge power needs at least one copy");
  Abacus out = a;
  for (std::int64_t c = 1; c < copies; ++c) out = wedge(out, a);
  return out;
}

inline Abacus intersect(const Abacus& a, const Abacus& b) {
  if (a.runners() != b.runners()) {
    throw PreconditionError("intersection needs equal runner counts");
  }
  std::vector<std::int64_t> common;
  const auto x = a.beads().beads();
  const auto y = b.beads().beads();
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
  return Abacus(a.runners(), BeadSet(std::move(common)));
}

inline Abacus build_C(std::int64_t s, std::int64_t k) { return intersect(build_A(s), build_B(s, k)); }

inline Abacus build_E_minus(std::int64_t s, std::int64_t m) {
  detail::require_runners(s);
  detail::require_blocks(m);
  if (m == 1) return build_B(s, 1);
  return wedge(wedge_power(build_B(s, 0), m - 1), build_B(s, 1));
}

inline Abacus build_E_plus(std::int64_t s, std::int64_t m) {
  detail::require_runners(s);
  detail::require_blocks(m);
  return wedge_power(build_A(s), m);
}

inline Abacus build_L(std::int64_t s, std::int64_t m) {
  detail::require_runners(s);
  detail::require_blocks(m);
  if (m == 1) return build_C(s, 1);
  return wedge(wedge_power(build_C(s, 0), m - 1), build_C(s, 1));
}

namespace coordinates {

// Block l < m-1 holds (i + ls, j), 1 <= i <= s-1, 0 <= j <= s-i-1; the last
// block holds (i + (m-1)s, j), 1 <= i <= s-2, 0 <= j <= s-i-2.
inline Abacus E_minus(std::int64_t s, std::int64_t m) {
  detail::require_runners(s);
  detail::require_blocks(m);
  std::vector<AbacusPosition> pos;
  for (std::int64_t l = 0; l < m; ++l) {
    const bool last = l == m - 1;
    for (std::int64_t i = 1; i <= (last ? s - 2 : s - 1); ++i) {
      for (std::int64_t j = 0; j <= (last ? s - i - 2 : s - i - 1); ++j) {
        pos.push_back({i + l * s, j});
      }
    }
  }
  return Abacus::from_positions(m * s, pos);
}

inline Abacus E_plus(std::int64_t s, std::int64_t m) {
  detail::require_runners(s);
  detail::require_blocks(m);
  std::vector<AbacusPosition> pos;
  for (std::int64_t l = 0; l < m; ++l) {
    for (std::int64_t i = 1; i <= s - 1; ++i) {
      for (std::int64_t j = 0; j <= i - 1; ++j) pos.push_back({i + l * s, j});
    }
  }
  return Abacus::from_positions(m * s, pos);
}

}  // namespace coordinates

/// Row j occupies runners lo+j .. hi-j, until that range is empty.
struct Pyramid {
  std::int64_t base_lo = 0;
  std::int64_t base_hi = 0;

  friend bool operator==(const Pyramid&, const Pyramid&) = default;
};

/// Infers the base from row 0 and checks every higher row against it.
/// The empty abacus is not reported as a pyramid.
inline std::optional<Pyramid> is_pyramid(const Abacus& a) {
  if (a.empty()) return std::nullopt;
  std::int64_t lo = -1;
  std::int64_t hi = -1;
  for (std::int64_t i = 0; i < a.runners(); ++i) {
    if (!a.contains(i, 0)) continue;
    if (lo < 0) lo = i;
    if (hi >= 0 && hi != i - 1) return std::nullopt;  // row 0 not contiguous
    hi = i;
  }
  if (lo < 0) return std::nullopt;
  std::size_t expected = 0;
  for (std::int64_t j = 0; lo + j <= hi - j; ++j) {
    for (std::int64_t i = lo + j; i <= hi - j; ++i) {
      if (!a.contains(i, j)) return std::nullopt;
      ++expected;
    }
  }
  if (expected != a.size()) return std::nullopt;
  return Pyramid{lo, hi};
}

/// Block `ell` of width s, re-indexed to runners 0..s-1.
inline Abacus project_block(const Abacus& a, std::int64_t s, std::int64_t ell) {
  detail::require_runners(s);
  if (a.runners() % s != 0) {
    throw PreconditionError("runner count is not a multiple of the block width");
  }
  if (ell < 0 || ell >= a.runners() / s) {
    throw PreconditionError("block index " + std::to_string(ell) + " out of range");
  }
  std::vector<AbacusPosition> pos;
  for (auto [i, j] : a.positions()) {
    if (i >= ell * s && i < (ell + 1) * s) pos.push_back({i - ell * s, j});
  }
  return Abacus::from_positions(s, pos);
}

/// Lookup by CLI name: A, B0, B1, C0, C1, E-, E+, L. `m` is ignored by the
/// single-block constructions.
inline Abacus build_named(std::string_view name, std::int64_t s, std::int64_t m) {
  if (name == "A") return build_A(s);
  if (name == "B0") return build_B(s, 0);
  if (name == "B1") return build_B(s, 1);
  if (name == "C0") return build_C(s, 0);
  if (name == "C1") return build_C(s, 1);
  if (name == "E-") return build_E_minus(s, m);
  if (name == "E+") return build_E_plus(s, m);
  if (name == "L") return build_L(s, m);
  throw PreconditionError("unknown construction '" + std::string(name) +
                          "' (expected one of A, B0, B1, C0, C1, E-, E+, L)");
}

inline const std::vector<std::string_view>& construction_names() {
  static const std::vector<std::string_view> names{"A", "B0", "B1", "C0", "C1", "E-", "E+", "L"};
  return names;
}

}  // namespace coreabacus
