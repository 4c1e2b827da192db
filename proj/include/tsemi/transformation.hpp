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

#ifndef TSEMI_TRANSFORMATION_HPP_
#define TSEMI_TRANSFORMATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "partition.hpp"
#include "types.hpp"

namespace tsemi {

/// A total map Q -> Q with Q = {1, ..., n}, written [1t, 2t, ..., nt].
///
/// Images are kept as 0-based bytes so the SIMD kernels can work on them
/// directly; every public accessor speaks 1-based states. Values are
/// immutable; equality, hashing and ordering are by (degree, images), the
/// ordering being lexicographic on the image sequence.
class Transformation {
 public:
  static constexpr std::size_t max_degree = 255;

  /// `images[k-1]` is the image of state k. Throws InvalidArgument if the
  /// sequence is empty, longer than max_degree, or has an entry outside
  /// 1..n.
  explicit Transformation(std::vector<State> const& images);

  /// Unchecked: `images` are 0-based and already in range.
  static Transformation from_raw(std::vector<std::uint8_t> images) noexcept {
    return Transformation(std::move(images), Raw{});
  }

  std::size_t degree() const noexcept {
    return images_.size();
  }

  /// Image of state k, both 1-based. No range check.
  State operator[](State k) const noexcept {
    return static_cast<State>(images_[k - 1]) + 1;
  }

  /// Image of state k with a range check.
  State at(State k) const;

  std::vector<State> images() const;

  std::span<std::uint8_t const> raw() const noexcept {
    return images_;
  }

  friend bool operator==(Transformation const&, Transformation const&)
      = default;
  friend std::strong_ordering operator<=>(Transformation const& a,
                                          Transformation const& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  struct Raw {};
  Transformation(std::vector<std::uint8_t> images, Raw) noexcept
      : images_(std::move(images)) {}

  std::vector<std::uint8_t> images_;
};

struct TransformationProfile {
  StateSet    range;
  std::size_t rank;
  StateSet    fixed;
  bool        idempotent;
  bool        non_decreasing;
};

Transformation identity(std::size_t n);
/// i -> j, every other state fixed.
Transformation singular(std::size_t n, State i, State j);
Transformation constant(std::size_t n, State j);
/// [2, 3, ..., n, n].
Transformation t_max(std::size_t n);

/// Left-to-right product: k(a * b) = (ka)b. Throws InvalidArgument on a
/// degree mismatch.
Transformation compose(Transformation const& a, Transformation const& b);

inline Transformation operator*(Transformation const& a,
                                Transformation const& b) {
  return compose(a, b);
}

/// Writes a * b into `out`, reusing its storage. No degree check.
void compose_into(Transformation const& a,
                  Transformation const& b,
                  std::vector<std::uint8_t>& out) noexcept;

StateSet    range(Transformation const& t);
std::size_t rank(Transformation const& t);
StateSet    fixed_points(Transformation const& t);
bool        is_idempotent(Transformation const& t);
bool        is_non_decreasing(Transformation const& t) noexcept;

TransformationProfile profile(Transformation const& t);

/// The partition of Q into orbits of t: connected components of the
/// undirected graph with edges {k, kt}.
Partition orbits(Transformation const& t);

/// "[i1,i2,...,in]"
std::string to_string(Transformation const& t);

}  // namespace tsemi

template <>
struct std::hash<tsemi::Transformation> {
  std::size_t operator()(tsemi::Transformation const& t) const noexcept {
    return t.hash();
  }
};

#endif  // TSEMI_TRANSFORMATION_HPP_
