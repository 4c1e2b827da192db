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

#include "tsemi/kernels.hpp"

namespace tsemi::kernels::detail {

namespace {

  void compose_scalar(std::uint8_t const* left,
                      std::uint8_t const* right,
                      std::uint8_t*       out,
                      std::size_t         n) noexcept {
    for (std::size_t k = 0; k < n; ++k) {
      out[k] = right[left[k]];
    }
  }

  bool is_non_decreasing_scalar(std::uint8_t const* images,
                                std::size_t         n) noexcept {
    for (std::size_t k = 0; k < n; ++k) {
      if (images[k] < k) {
        return false;
      }
    }
    return true;
  }

  std::size_t count_fixed_scalar(std::uint8_t const* images,
                                 std::size_t         n) noexcept {
    std::size_t count = 0;
    for (std::size_t k = 0; k < n; ++k) {
      count += images[k] == k;
    }
    return count;
  }

}  // namespace

Table const& scalar_table() noexcept {
  static constexpr Table table{
      compose_scalar, is_non_decreasing_scalar, count_fixed_scalar};
  return table;
}

}  // namespace tsemi::kernels::detail
