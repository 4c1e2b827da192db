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

#include <atomic>

#include "tsemi/error.hpp"
#include "tsemi/kernels.hpp"

namespace tsemi::kernels {

namespace {

  bool cpu_has(Backend b) noexcept {
    switch (b) {
      case Backend::scalar:
        return true;
      case Backend::avx2:
#if defined(TSEMI_HAVE_AVX2)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
      case Backend::neon:
#if defined(TSEMI_HAVE_NEON)
        return true;
#else
        return false;
#endif
    }
    return false;
  }

  Backend best_backend() noexcept {
    if (cpu_has(Backend::avx2)) {
      return Backend::avx2;
    }
    if (cpu_has(Backend::neon)) {
      return Backend::neon;
    }
    return Backend::scalar;
  }

  struct State {
    std::atomic<Backend>               backend{best_backend()};
    std::atomic<detail::Table const*>  table{&detail::backend_table(best_backend())};
  };

  State& state() noexcept {
    static State s;
    return s;
  }

  detail::Table const& current() noexcept {
    return *state().table.load(std::memory_order_relaxed);
  }

}  // namespace

namespace detail {

  Table const& backend_table(Backend b) noexcept {
    switch (b) {
#if defined(TSEMI_HAVE_AVX2)
      case Backend::avx2:
        return avx2_table();
#endif
#if defined(TSEMI_HAVE_NEON)
      case Backend::neon:
        return neon_table();
#endif
      default:
        return scalar_table();
    }
  }

}  // namespace detail

std::string_view name(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Backend> available_backends() {
  std::vector<Backend> result;
  for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
    if (cpu_has(b)) {
      result.push_back(b);
    }
  }
  return result;
}

Backend active_backend() noexcept {
  return state().backend.load(std::memory_order_relaxed);
}

void set_backend(Backend b) {
  if (!cpu_has(b)) {
    throw InvalidArgument("kernel backend '" + std::string(name(b))
                          + "' is not available on this build or CPU");
  }
  state().table.store(&detail::backend_table(b), std::memory_order_relaxed);
  state().backend.store(b, std::memory_order_relaxed);
}

void compose(std::uint8_t const* left,
             std::uint8_t const* right,
             std::uint8_t*       out,
             std::size_t         n) noexcept {
  current().compose(left, right, out, n);
}

bool is_non_decreasing(std::uint8_t const* images, std::size_t n) noexcept {
  return current().is_non_decreasing(images, n);
}

std::size_t count_fixed(std::uint8_t const* images, std::size_t n) noexcept {
  return current().count_fixed(images, n);
}

}  // namespace tsemi::kernels
