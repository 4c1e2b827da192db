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

#ifndef TSEMI_SEMIGROUP_HPP_
#define TSEMI_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "transformation.hpp"

namespace tsemi {

inline constexpr std::size_t kDefaultClosureCap = 10'000'000;

/// A finite set of transformations of one degree, closed under composition,
/// together with the generators it was built from. Elements are kept in
/// lexicographic order.
class TransformationSemigroup {
 public:
  /// Wraps an already closed element set. Throws InvariantViolation if
  /// `elements` is not closed under composition or misses a generator.
  static TransformationSemigroup from_closed_set(
      std::vector<Transformation> generators,
      std::vector<Transformation> elements);

  std::size_t degree() const noexcept {
    return degree_;
  }

  std::size_t size() const noexcept {
    return elements_.size();
  }

  std::span<Transformation const> elements() const noexcept {
    return elements_;
  }

  std::span<Transformation const> generators() const noexcept {
    return generators_;
  }

  Transformation const& operator[](std::size_t i) const noexcept {
    return elements_[i];
  }

  bool contains(Transformation const& t) const {
    return index_.contains(t);
  }

  std::optional<std::size_t> index_of(Transformation const& t) const;

  bool contains_identity() const;

  /// Checks closure exhaustively: O(size^2) products.
  bool is_closed() const;

 private:
  friend TransformationSemigroup close(std::vector<Transformation> const&,
                                       std::size_t);

  TransformationSemigroup(std::vector<Transformation> generators,
                          std::vector<Transformation> elements);

  std::size_t                                     degree_;
  std::vector<Transformation>                     generators_;
  std::vector<Transformation>                     elements_;
  std::unordered_map<Transformation, std::size_t> index_;
};

/// The semigroup generated by `generators`: known elements are multiplied
/// on the right by each generator until nothing new appears. Throws
/// InvalidArgument for an empty list or mixed degrees and ResourceLimit
/// once more than `cap` elements have been found.
TransformationSemigroup close(std::vector<Transformation> const& generators,
                              std::size_t cap = kDefaultClosureCap);

/// S with the identity adjoined (as element and generator) when missing.
TransformationSemigroup monoid_completion(TransformationSemigroup const& s);

struct PrincipalIdeals {
  std::vector<Transformation> right;      // sM
  std::vector<Transformation> left;       // Ms
  std::vector<Transformation> two_sided;  // MsM
};

/// Ideals of `s` in M = monoid_completion(semigroup), each sorted. Throws
/// InvalidArgument if s is not in M. Quadratic in |M|.
PrincipalIdeals principal_ideals(TransformationSemigroup const& semigroup,
                                 Transformation const&          s);

enum class Green { R, L, J, H };

/// Class label of every element of monoid_completion(semigroup), in that
/// monoid's element order. Two elements share a label iff they are related.
std::vector<std::uint32_t> green_classes(TransformationSemigroup const& semigroup,
                                         Green                          relation);

bool is_r_trivial(TransformationSemigroup const& s);
bool is_l_trivial(TransformationSemigroup const& s);
bool is_j_trivial(TransformationSemigroup const& s);
bool is_h_trivial(TransformationSemigroup const& s);

/// Every element is non-decreasing and orbits(ts) = orbits(t) v orbits(s)
/// for all ordered pairs.
bool saito_holds(TransformationSemigroup const& s);

/// The monoid generated by the generators of `s`, the identity and t_max.
/// Requires `s` to consist of non-decreasing maps and be J-trivial
/// (InvalidArgument otherwise); throws InvariantViolation if the result
/// is not J-trivial.
TransformationSemigroup adjoin_t_max(TransformationSemigroup const& s);

}  // namespace tsemi

#endif  // TSEMI_SEMIGROUP_HPP_
