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

/** @file partition.hpp
 *  @brief Integer partitions, Young-diagram hooks and structural predicates.
 *
 *  A partition is an immutable, weakly decreasing sequence of positive
 *  parts. The empty partition is a regular value of weight 0. Hooks are
 *  computed directly from the Young diagram so that this header can serve
 *  as the slow, independent side of every abacus-based check.
 */

#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "coreabacus/errors.hpp"

namespace coreabacus {

class Partition {
 public:
  Partition() = default;

  /// Throws PreconditionError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] < 1) {
        throw PreconditionError("partition parts must be positive");
      }
      if (k > 0 && parts_[k] > parts_[k - 1]) {
        throw PreconditionError("partition parts must be weakly decreasing");
      }
      weight_ += parts_[k];
      assert(weight_ >= parts_[k] && "weight overflow");
    }
  }

  Partition(std::initializer_list<std::int64_t> parts)
      : Partition(std::vector<std::int64_t>(parts)) {}

  /// Sorts the input into decreasing order and drops zeros first.
  static Partition from_unsorted(std::vector<std::int64_t> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  std::span<const std::int64_t> parts() const { return parts_; }
  std::int64_t weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// 1-based row access, matching matrix notation for hooks.
  std::int64_t part(std::size_t row) const { return parts_.at(row - 1); }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  // Lexicographic on the part sequence; the empty partition sorts first.
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<std::int64_t> parts_;
  std::int64_t weight_ = 0;
};

/// "(4,3,2)"; the empty partition renders as "()".
inline std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.length(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(p.parts()[k]);
  }
  return out + ")";
}

struct HookLength {
  std::int64_t row = 0;  // 1-based
  std::int64_t col = 0;  // 1-based
  std::int64_t length = 0;

  friend bool operator==(const HookLength&, const HookLength&) = default;
};

/// Column lengths of the Young diagram, i.e. the parts of the transpose.
inline Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<std::int64_t> cols(static_cast<std::size_t>(p.part(1)), 0);
  for (std::int64_t part : p.parts()) {
    for (std::int64_t j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

/// One entry per box, in row-major order.
inline std::vector<HookLength> hook_lengths(const Partition& p) {
  std::vector<HookLength> hooks;
  hooks.reserve(static_cast<std::size_t>(p.weight()));
  const Partition columns = conjugate(p);
  for (std::size_t i = 1; i <= p.length(); ++i) {
    for (std::int64_t j = 1; j <= p.part(i); ++j) {
      const std::int64_t arm = p.part(i) - j;
      const std::int64_t leg = columns.part(static_cast<std::size_t>(j)) -
                               static_cast<std::int64_t>(i);
      hooks.push_back({static_cast<std::int64_t>(i), j, arm + leg + 1});
    }
  }
  return hooks;
}

/// Hook lengths of the left-most column, ascending. This is the minimal bead
/// set of the partition.
inline std::vector<std::int64_t> first_column_hooks(const Partition& p) {
  std::vector<std::int64_t> out;
  out.reserve(p.length());
  const auto rows = static_cast<std::int64_t>(p.length());
  for (std::int64_t i = rows; i >= 1; --i) {
    out.push_back(p.part(static_cast<std::size_t>(i)) + rows - i);
  }
  return out;
}

inline bool has_distinct_parts(const Partition& p) {
  return std::adjacent_find(p.parts().begin(), p.parts().end()) == p.parts().end();
}

inline bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

/// True iff p is a staircase (k, k-1, ..., 1), k >= 0.
inline bool is_two_core(const Partition& p) {
  const auto k = static_cast<std::int64_t>(p.length());
  for (std::size_t i = 1; i <= p.length(); ++i) {
    if (p.part(i) != k - static_cast<std::int64_t>(i) + 1) return false;
  }
  return true;
}

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (std::int64_t v : p.parts()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace coreabacus

template <>
struct std::hash<coreabacus::Partition> : coreabacus::PartitionHash {};
