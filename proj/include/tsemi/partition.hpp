// Copyright 2026 The tsemi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TSEMI_PARTITION_HPP_
#define TSEMI_PARTITION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "types.hpp"

namespace tsemi {

class Transformation;

/// A partition of Q = {1, ..., n} into disjoint non-empty blocks.
///
/// Stored as a canonical block label per state: blocks are numbered
/// 0, 1, 2, ... in order of their minimum element, so two partitions are
/// equal exactly when their label vectors are.
class Partition {
 public:
  /// Throws InvalidArgument unless `blocks` are non-empty, disjoint and
  /// cover {1, ..., n}.
  static Partition from_blocks(std::size_t n, std::vector<StateSet> const& blocks);

  /// `labels[k-1]` names the block of state k; any labelling is accepted
  /// and canonicalised. Throws InvalidArgument if `labels` is empty.
  static Partition from_labels(std::span<std::uint32_t const> labels);

  /// n singleton blocks.
  static Partition finest(std::size_t n);
  /// The single block Q.
  static Partition coarsest(std::size_t n);

  std::size_t degree() const noexcept {
    return labels_.size();
  }

  std::size_t block_count() const noexcept {
    return block_count_;
  }

  /// 0-based canonical block index of state k (1-based).
  std::uint32_t block_of(State k) const noexcept {
    return labels_[k - 1];
  }

  std::span<std::uint32_t const> labels() const noexcept {
    return labels_;
  }

  /// Blocks in canonical order, each sorted ascending.
  std::vector<StateSet> blocks() const;

  std::vector<std::size_t> block_sizes() const;

  friend bool operator==(Partition const&, Partition const&) = default;
  friend std::strong_ordering operator<=>(Partition const& a,
                                          Partition const& b) noexcept;

 private:
  Partition(std::vector<std::uint32_t> labels, std::size_t block_count) noexcept
      : labels_(std::move(labels)), block_count_(block_count) {}

  std::vector<std::uint32_t> labels_;
  std::size_t                block_count_;
};

/// Every block of `finer` lies inside some block of `coarser`.
bool refines(Partition const& finer, Partition const& coarser);

/// Largest partition refining both.
Partition meet(Partition const& a, Partition const& b);

/// Smallest partition refined by both.
Partition join(Partition const& a, Partition const& b);

/// {max(X) : X a block}.
StateSet max_set(Partition const& p);

/// For n in Z: the single block Q when Z = {n}; otherwise a singleton for
/// each element of Z other than n, plus one block holding everything else.
/// Throws InvalidArgument unless n in Z and Z is a subset of {1, ..., n}.
Partition pi_z(std::size_t n, StateSet const& z);

/// The non-decreasing transformations whose orbit partition is `p`,
/// in lexicographic order. Throws ResourceLimit if there are more than
/// `cap` of them.
std::vector<Transformation> enumerate_e(Partition const& p,
                                        std::size_t cap = 10'000'000);

/// Product of (|X| - 1)! over the blocks X of `p`.
BigInt count_e(Partition const& p);

inline constexpr std::size_t kDefaultPartitionCap = 8;

/// All partitions of {1, ..., n} in lexicographic order of their canonical
/// labels (restricted growth strings). Throws ResourceLimit if n > cap.
std::vector<Partition> all_partitions(std::size_t n,
                                      std::size_t cap = kDefaultPartitionCap);

/// "{{1,2},{3},{4,5,6}}"
std::string to_string(Partition const& p);

}  // namespace tsemi

#endif  // TSEMI_PARTITION_HPP_
