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

#ifndef TSEMI_SRC_UNION_FIND_HPP_
#define TSEMI_SRC_UNION_FIND_HPP_

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace tsemi::detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t x) noexcept {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x          = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) noexcept {
    a = find(a);
    b = find(b);
    if (a != b) {
      // Smaller root wins, so roots are block minima.
      if (b < a) {
        std::swap(a, b);
      }
      parent_[b] = a;
    }
  }

  /// Root of each element, i.e. a (non-canonical) labelling.
  std::vector<std::uint32_t> roots() {
    std::vector<std::uint32_t> out(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      out[i] = find(static_cast<std::uint32_t>(i));
    }
    return out;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace tsemi::detail

#endif  // TSEMI_SRC_UNION_FIND_HPP_
