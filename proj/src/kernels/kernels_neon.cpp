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

// AArch64 only. NEON is architecturally guaranteed there, so no runtime
// probe is needed.

#include <arm_neon.h>

#include <cstring>

#include "tsemi/kernels.hpp"

namespace tsemi::kernels::detail {

namespace {

  constexpr std::size_t kLanes = 16;

  void compose_neon(std::uint8_t const* left,
                    std::uint8_t const* right,
                    std::uint8_t*       out,
                    std::size_t         n) noexcept {
    if (n > 64) {
      scalar_table().compose(left, right, out, n);
      return;
    }
    std::uint8_t tbl_buf[64] = {};
    std::memcpy(tbl_buf, right, n);
    uint8x16x4_t const tbl = vld1q_u8_x4(tbl_buf);
    for (std::size_t base = 0; base < n; base += kLanes) {
      std::size_t const count = n - base < kLanes ? n - base : kLanes;
      std::uint8_t idx_buf[kLanes] = {};
      std::memcpy(idx_buf, left + base, count);
      uint8x16_t const r = vqtbl4q_u8(tbl, vld1q_u8(idx_buf));
      std::uint8_t out_buf[kLanes];
      vst1q_u8(out_buf, r);
      std::memcpy(out + base, out_buf, count);
    }
  }

  uint8x16_t iota(std::size_t offset) noexcept {
    std::uint8_t buf[kLanes];
    for (std::size_t k = 0; k < kLanes; ++k) {
      buf[k] = static_cast<std::uint8_t>(offset + k);
    }
    return vld1q_u8(buf);
  }

  uint8x16_t load_partial(std::uint8_t const* src,
                          std::size_t         count,
                          std::uint8_t        pad) noexcept {
    std::uint8_t buf[kLanes];
    std::memset(buf, pad, kLanes);
    std::memcpy(buf, src, count);
    return vld1q_u8(buf);
  }

  bool is_non_decreasing_neon(std::uint8_t const* images,
                              std::size_t         n) noexcept {
    for (std::size_t base = 0; base < n; base += kLanes) {
      std::size_t const count = n - base < kLanes ? n - base : kLanes;
      uint8x16_t const ge = vcgeq_u8(load_partial(images + base, count, 0xFF),
                                     iota(base));
      if (vminvq_u8(ge) != 0xFF) {
        return false;
      }
    }
    return true;
  }

  std::size_t count_fixed_neon(std::uint8_t const* images,
                               std::size_t         n) noexcept {
    std::size_t total = 0;
    for (std::size_t base = 0; base < n; base += kLanes) {
      std::size_t const count = n - base < kLanes ? n - base : kLanes;
      // Padding lanes have index >= 1, so a zero pad never matches.
      uint8x16_t const v = load_partial(images + base, count, 0x00);
      uint8x16_t const eq = vceqq_u8(v, iota(base));
      total += vaddvq_u8(vshrq_n_u8(eq, 7));
    }
    return total;
  }

}  // namespace

Table const& neon_table() noexcept {
  static constexpr Table table{
      compose_neon, is_non_decreasing_neon, count_fixed_neon};
  return table;
}

}  // namespace tsemi::kernels::detail
