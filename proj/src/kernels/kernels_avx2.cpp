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

// Compiled with -mavx2. Nothing here may run unless the dispatcher has
// confirmed AVX2 support at runtime.

#include <immintrin.h>

#include <cstring>

#include "tsemi/kernels.hpp"

namespace tsemi::kernels::detail {

namespace {

  constexpr std::size_t kLanes = 32;

  // Degrees above 32 do not fit one vpshufb table; they take the scalar path.
  void compose_avx2(std::uint8_t const* left,
                    std::uint8_t const* right,
                    std::uint8_t*       out,
                    std::size_t         n) noexcept {
    if (n > kLanes) {
      scalar_table().compose(left, right, out, n);
      return;
    }
    alignas(32) std::uint8_t idx_buf[kLanes] = {};
    alignas(32) std::uint8_t tbl_buf[kLanes] = {};
    alignas(32) std::uint8_t out_buf[kLanes];
    std::memcpy(idx_buf, left, n);
    std::memcpy(tbl_buf, right, n);

    __m256i const idx = _mm256_load_si256(reinterpret_cast<__m256i const*>(idx_buf));
    __m256i const tbl = _mm256_load_si256(reinterpret_cast<__m256i const*>(tbl_buf));
    // vpshufb only looks up within a 128-bit lane, so broadcast each half of
    // the table to both lanes and pick per byte on bit 4 of the index.
    __m256i const lo  = _mm256_permute2x128_si256(tbl, tbl, 0x00);
    __m256i const hi  = _mm256_permute2x128_si256(tbl, tbl, 0x11);
    __m256i const from_lo = _mm256_shuffle_epi8(lo, idx);
    __m256i const from_hi = _mm256_shuffle_epi8(hi, idx);
    __m256i const use_hi
        = _mm256_cmpgt_epi8(idx, _mm256_set1_epi8(static_cast<char>(15)));
    __m256i const result = _mm256_blendv_epi8(from_lo, from_hi, use_hi);
    _mm256_store_si256(reinterpret_cast<__m256i*>(out_buf), result);
    std::memcpy(out, out_buf, n);
  }

  __m256i iota(std::size_t offset) noexcept {
    alignas(32) std::uint8_t buf[kLanes];
    for (std::size_t k = 0; k < kLanes; ++k) {
      buf[k] = static_cast<std::uint8_t>(offset + k);
    }
    return _mm256_load_si256(reinterpret_cast<__m256i const*>(buf));
  }

  // Loads up to 32 bytes; missing tail lanes are filled with `pad`.
  __m256i load_partial(std::uint8_t const* src,
                       std::size_t         count,
                       std::uint8_t        pad) noexcept {
    if (count == kLanes) {
      return _mm256_loadu_si256(reinterpret_cast<__m256i const*>(src));
    }
    alignas(32) std::uint8_t buf[kLanes];
    std::memset(buf, pad, kLanes);
    std::memcpy(buf, src, count);
    return _mm256_load_si256(reinterpret_cast<__m256i const*>(buf));
  }

  // Images never exceed 255, so offset + lane fits a byte for n <= 256.
  bool is_non_decreasing_avx2(std::uint8_t const* images,
                              std::size_t         n) noexcept {
    for (std::size_t base = 0; base < n; base += kLanes) {
      std::size_t const count = n - base < kLanes ? n - base : kLanes;
      __m256i const v = load_partial(images + base, count, 0xFF);
      __m256i const ids = iota(base);
      __m256i const ge = _mm256_cmpeq_epi8(_mm256_max_epu8(v, ids), v);
      if (static_cast<std::uint32_t>(_mm256_movemask_epi8(ge)) != 0xFFFFFFFFu) {
        return false;
      }
    }
    return true;
  }

  std::size_t count_fixed_avx2(std::uint8_t const* images,
                               std::size_t         n) noexcept {
    std::size_t total = 0;
    for (std::size_t base = 0; base < n; base += kLanes) {
      std::size_t const count = n - base < kLanes ? n - base : kLanes;
      __m256i const v = load_partial(images + base, count, 0x00);
      __m256i const eq = _mm256_cmpeq_epi8(v, iota(base));
      std::uint32_t mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(eq));
      if (count < kLanes) {
        mask &= (1u << count) - 1u;
      }
      total += static_cast<std::size_t>(__builtin_popcount(mask));
    }
    return total;
  }

}  // namespace

Table const& avx2_table() noexcept {
  static constexpr Table table{
      compose_avx2, is_non_decreasing_avx2, count_fixed_avx2};
  return table;
}

}  // namespace tsemi::kernels::detail
