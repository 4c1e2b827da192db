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

#ifndef TSEMI_KERNELS_HPP_
#define TSEMI_KERNELS_HPP_

// Byte-level inner loops over image sequences. Images are 0-based bytes,
// so a transformation of degree n is an array of n values in [0, n).
//
// Each kernel has a scalar reference and optional SIMD variants; the
// active backend is chosen once from CPU features and can be overridden
// (tests pin every available backend and compare against scalar).

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace tsemi::kernels {

enum class Backend { scalar, avx2, neon };

std::string_view name(Backend b) noexcept;

/// Backends compiled in and supported by the running CPU; scalar first.
std::vector<Backend> available_backends();

Backend active_backend() noexcept;

/// Throws InvalidArgument if `b` is not available.
void set_backend(Backend b);

/// out[k] = right[left[k]] for k < n. `out` may alias `left` but not `right`.
void compose(std::uint8_t const* left,
             std::uint8_t const* right,
             std::uint8_t*       out,
             std::size_t         n) noexcept;

/// True iff images[k] >= k for every k < n.
bool is_non_decreasing(std::uint8_t const* images, std::size_t n) noexcept;

/// Number of k < n with images[k] == k.
std::size_t count_fixed(std::uint8_t const* images, std::size_t n) noexcept;

namespace detail {

  struct Table {
    void (*compose)(std::uint8_t const*,
                    std::uint8_t const*,
                    std::uint8_t*,
                    std::size_t) noexcept;
    bool (*is_non_decreasing)(std::uint8_t const*, std::size_t) noexcept;
    std::size_t (*count_fixed)(std::uint8_t const*, std::size_t) noexcept;
  };

  Table const& scalar_table() noexcept;
  // Defined only when the matching translation unit is built.
  Table const& avx2_table() noexcept;
  Table const& neon_table() noexcept;
  /// Table for `b`; backends not compiled into this build fall back to scalar.
  Table const& backend_table(Backend b) noexcept;

}  // namespace detail

}  // namespace tsemi::kernels

#endif  // TSEMI_KERNELS_HPP_
