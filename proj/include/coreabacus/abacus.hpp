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

/** @file abacus.hpp
 *  @brief Bead sets, s-abaci and core predicates.
 *
 *  A BeadSet is the single source of truth: a sorted set of non-negative
 *  integers. An Abacus is a view of a bead set on s runners, where the bead
 *  with value x sits at runner x mod s, row x / s. Everything here is a pure
 *  function over immutable values.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coreabacus/errors.hpp"
#include "coreabacus/partition.hpp"

namespace coreabacus {

class BeadSet {
 public:
  BeadSet() = default;

  /// Sorts and de-duplicates; throws PreconditionError on negative beads.
  explicit BeadSet(std::vector<std::int64_t> beads) : beads_(std::move(beads)) {
    std::sort(beads_.begin(), beads_.end());
    beads_.erase(std::unique(beads_.begin(), beads_.end()), beads_.end());
    if (!beads_.empty() && beads_.front() < 0) {
      throw PreconditionError("bead positions must be non-negative");
    }
  }

  BeadSet(std::initializer_list<std::int64_t> beads)
      : BeadSet(std::vector<std::int64_t>(beads)) {}

  std::span<const std::int64_t> beads() const { return beads_; }
  std::size_t size() const { return beads_.size(); }
  bool empty() const { return beads_.empty(); }
  std::int64_t max() const { return beads_.empty() ? -1 : beads_.back(); }

  bool contains(std::int64_t x) const {
    return std::binary_search(beads_.begin(), beads_.end(), x);
  }

  /// Minimal form: 0 is a spacer.
  bool is_minimal() const { return beads_.empty() || beads_.front() != 0; }

  friend bool operator==(const BeadSet&, const BeadSet&) = default;

 private:
  std::vector<std::int64_t> beads_;
};

struct AbacusPosition {
  std::int64_t runner = 0;
  std::int64_t row = 0;

  friend bool operator==(const AbacusPosition&, const AbacusPosition&) = default;
  friend auto operator<=>(const AbacusPosition&, const AbacusPosition&) = default;
};

class Abacus {
 public:
  Abacus(std::int64_t runners, BeadSet beads)
      : runners_(runners), beads_(std::move(beads)) {
    if (runners_ < 1) throw PreconditionError("an abacus needs at least one runner");
  }

  /// Throws PreconditionError if any position lies off the grid.
  static Abacus from_positions(std::int64_t runners,
                               std::span<const AbacusPosition> positions) {
    if (runners < 1) throw PreconditionError("an abacus needs at least one runner");
    std::vector<std::int64_t> values;
    values.reserve(positions.size());
    for (const auto& [i, j] : positions) {
      if (i < 0 || i >= runners || j < 0) {
        throw PreconditionError("abacus position (" + std::to_string(i) + "," +
                                std::to_string(j) + ") is off a " +
                                std::to_string(runners) + "-runner grid");
      }
      values.push_back(i + j * runners);
    }
    return Abacus(runners, BeadSet(std::move(values)));
  }

  static Abacus from_positions(std::int64_t runners,
                               std::initializer_list<AbacusPosition> positions) {
    return from_positions(runners, std::span<const AbacusPosition>(
                                       positions.begin(), positions.size()));
  }

  std::int64_t runners() const { return runners_; }
  const BeadSet& beads() const { return beads_; }
  std::size_t size() const { return beads_.size(); }
  bool empty() const { return beads_.empty(); }

  bool contains(std::int64_t runner, std::int64_t row) const {
    if (runner < 0 || runner >= runners_ || row < 0) return false;
    return beads_.contains(runner + row * runners_);
  }

  /// Sorted by (runner, row).
  std::vector<AbacusPosition> positions() const {
    std::vector<AbacusPosition> out;
    out.reserve(beads_.size());
    for (std::int64_t x : beads_.beads()) out.push_back({x % runners_, x / runners_});
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Number of rows up to and including the highest bead.
  std::int64_t height() const { return beads_.empty() ? 0 : beads_.max() / runners_ + 1; }

  friend bool operator==(const Abacus&, const Abacus&) = default;

 private:
  std::int64_t runners_;
  BeadSet beads_;
};

/// Twice a half-integer, so the stored value is always odd.
class AxisTheta {
 public:
  explicit AxisTheta(std::int64_t twice) : twice_(twice) {
    if (twice % 2 == 0) throw PreconditionError("axis must be a half-integer");
  }
  std::int64_t twice() const { return twice_; }
  double value() const { return static_cast<double>(twice_) / 2.0; }

  friend bool operator==(const AxisTheta&, const AxisTheta&) = default;

 private:
  std::int64_t twice_;
};

inline BeadSet partition_to_minimal_beadset(const Partition& p) {
  return BeadSet(first_column_hooks(p));
}

/// The part for bead x is the number of spacers below x; zero parts vanish.
inline Partition beadset_to_partition(const BeadSet& x) {
  std::vector<std::int64_t> parts;
  parts.reserve(x.size());
  const auto beads = x.beads();
  for (std::size_t k = beads.size(); k-- > 0;) {
    const std::int64_t spacers_below = beads[k] - static_cast<std::int64_t>(k);
    if (spacers_below > 0) parts.push_back(spacers_below);
  }
  return Partition(std::move(parts));
}

/// Weight of the partition a bead set encodes, without materializing it.
inline std::int64_t beadset_weight(const BeadSet& x) {
  std::int64_t w = 0;
  const auto beads = x.beads();
  for (std::size_t k = 0; k < beads.size(); ++k) w += beads[k] - static_cast<std::int64_t>(k);
  return w;
}

/// Strips the longest prefix {0, ..., k-1} and shifts the rest down by k.
inline BeadSet normalize(const BeadSet& x) {
  const auto beads = x.beads();
  std::int64_t k = 0;
  while (static_cast<std::size_t>(k) < beads.size() && beads[static_cast<std::size_t>(k)] == k) ++k;
  std::vector<std::int64_t> rest;
  rest.reserve(beads.size() - static_cast<std::size_t>(k));
  for (std::size_t n = static_cast<std::size_t>(k); n < beads.size(); ++n) rest.push_back(beads[n] - k);
  return BeadSet(std::move(rest));
}

inline Abacus to_abacus(const BeadSet& x, std::int64_t s) { return Abacus(s, x); }

inline BeadSet from_abacus(const Abacus& a) { return a.beads(); }

inline bool is_sub_abacus(const Abacus& inner, const Abacus& outer) {
  if (inner.runners() != outer.runners()) {
    throw PreconditionError("sub-abacus test needs equal runner counts");
  }
  const auto in = inner.beads().beads();
  const auto out = outer.beads().beads();
  return std::includes(out.begin(), out.end(), in.begin(), in.end());
}

/// No spacer sits below a bead on any runner.
inline bool is_core_abacus(const Abacus& a) {
  const std::int64_t s = a.runners();
  for (std::int64_t x : a.beads().beads()) {
    if (x >= s && !a.beads().contains(x - s)) return false;
  }
  return true;
}

inline bool is_t_core(const Partition& p, std::int64_t t) {
  if (t < 1) throw PreconditionError("core modulus must be positive");
  return is_core_abacus(to_abacus(partition_to_minimal_beadset(p), t));
}

inline bool is_simultaneous_core(const Partition& p, std::span<const std::int64_t> ts) {
  if (ts.empty()) throw PreconditionError("need at least one core modulus");
  const BeadSet x = partition_to_minimal_beadset(p);
  return std::all_of(ts.begin(), ts.end(), [&](std::int64_t t) {
    if (t < 1) throw PreconditionError("core modulus must be positive");
    return is_core_abacus(to_abacus(x, t));
  });
}

inline bool is_simultaneous_core(const Partition& p, std::initializer_list<std::int64_t> ts) {
  return is_simultaneous_core(p, std::span<const std::int64_t>(ts.begin(), ts.size()));
}

/// Distinct parts iff no two beads of the minimal set are adjacent integers.
inline bool beadset_has_distinct_parts(const BeadSet& x) {
  const auto b = x.beads();
  for (std::size_t k = 1; k < b.size(); ++k) {
    if (b[k] == b[k - 1] + 1) return false;
  }
  return true;
}

/// Half-integer axis theta such that, with every negative position counted
/// as a bead, p is a bead exactly when 2*theta - p is a spacer. Such an axis
/// exists iff the encoded partition is self-conjugate.
///
/// Positions above 2*theta must all be spacers, and their mirrors below
/// 2*theta - max are all beads, so 2*theta = max + (length of the leading run
/// of beads 0, 1, ...). Only that candidate is checked.
inline std::optional<AxisTheta> self_conjugate_axis_check(const BeadSet& x) {
  const auto beads = x.beads();
  std::int64_t prefix = 0;
  while (static_cast<std::size_t>(prefix) < beads.size() &&
         beads[static_cast<std::size_t>(prefix)] == prefix) {
    ++prefix;
  }
  const std::int64_t twice = x.max() + prefix;
  if (twice % 2 == 0) return std::nullopt;
  for (std::int64_t p = 0; p <= twice; ++p) {
    if (x.contains(p) == x.contains(twice - p)) return std::nullopt;
  }
  return AxisTheta(twice);
}

/// ASCII grid, highest row first. Beads render as "[n]", spacers as " n ",
/// each right-aligned in a cell two wider than the largest value shown.
/// Cells are separated by one space and trailing blanks are trimmed.
inline std::string render_abacus(const Abacus& a, std::int64_t min_rows = 0) {
  const std::int64_t s = a.runners();
  const std::int64_t rows = std::max(min_rows, a.height());
  if (rows == 0) return "(empty " + std::to_string(s) + "-abacus)\n";
  const std::size_t width = std::to_string(rows * s - 1).size() + 2;
  std::string out;
  for (std::int64_t j = rows - 1; j >= 0; --j) {
    std::string line;
    for (std::int64_t i = 0; i < s; ++i) {
      const std::int64_t value = i + j * s;
      const std::string cell = a.contains(i, j) ? "[" + std::to_string(value) + "]"
                                                : " " + std::to_string(value) + " ";
      if (i > 0) line += ' ';
      line += std::string(width - cell.size(), ' ') + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

}  // namespace coreabacus
