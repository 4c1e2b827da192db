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

#include "tsemi/transformation.hpp"

#include <algorithm>
#include <string_view>

#include "tsemi/error.hpp"
#include "tsemi/kernels.hpp"
#include "union_find.hpp"

namespace tsemi {

namespace {

  void check_degree(std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("transformation degree must be at least 1");
    }
    if (n > Transformation::max_degree) {
      throw InvalidArgument("transformation degree "
                            + std::to_string(n) + " exceeds the maximum "
                            + std::to_string(Transformation::max_degree));
    }
  }

  void check_state(std::size_t n, State s) {
    if (s < 1 || s > n) {
      throw InvalidArgument("state " + std::to_string(s)
                            + " is outside 1.." + std::to_string(n));
    }
  }

}  // namespace

Transformation::Transformation(std::vector<State> const& images) {
  check_degree(images.size());
  images_.reserve(images.size());
  for (State s : images) {
    check_state(images.size(), s);
    images_.push_back(static_cast<std::uint8_t>(s - 1));
  }
}

State Transformation::at(State k) const {
  check_state(degree(), k);
  return (*this)[k];
}

std::vector<State> Transformation::images() const {
  std::vector<State> out(images_.size());
  std::transform(images_.begin(), images_.end(), out.begin(), [](auto b) {
    return static_cast<State>(b) + 1;
  });
  return out;
}

std::strong_ordering operator<=>(Transformation const& a,
                                 Transformation const& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(a.images_.begin(),
                                                a.images_.end(),
                                                b.images_.begin(),
                                                b.images_.end());
}

std::size_t Transformation::hash() const noexcept {
  std::string_view bytes(reinterpret_cast<char const*>(images_.data()),
                         images_.size());
  return std::hash<std::string_view>{}(bytes);
}

Transformation identity(std::size_t n) {
  check_degree(n);
  std::vector<std::uint8_t> images(n);
  for (std::size_t k = 0; k < n; ++k) {
    images[k] = static_cast<std::uint8_t>(k);
  }
  return Transformation::from_raw(std::move(images));
}

Transformation singular(std::size_t n, State i, State j) {
  check_degree(n);
  check_state(n, i);
  check_state(n, j);
  auto images = identity(n).images();
  images[i - 1] = j;
  return Transformation(images);
}

Transformation constant(std::size_t n, State j) {
  check_degree(n);
  check_state(n, j);
  return Transformation(std::vector<State>(n, j));
}

Transformation t_max(std::size_t n) {
  check_degree(n);
  std::vector<State> images(n);
  for (State k = 1; k <= n; ++k) {
    images[k - 1] = std::min<State>(k + 1, static_cast<State>(n));
  }
  return Transformation(images);
}

Transformation compose(Transformation const& a, Transformation const& b) {
  if (a.degree() != b.degree()) {
    throw InvalidArgument("cannot compose transformations of degree "
                          + std::to_string(a.degree()) + " and "
                          + std::to_string(b.degree()));
  }
  std::vector<std::uint8_t> out;
  compose_into(a, b, out);
  return Transformation::from_raw(std::move(out));
}

void compose_into(Transformation const&      a,
                  Transformation const&      b,
                  std::vector<std::uint8_t>& out) noexcept {
  out.resize(a.degree());
  kernels::compose(a.raw().data(), b.raw().data(), out.data(), a.degree());
}

StateSet range(Transformation const& t) {
  return make_state_set(t.images());
}

std::size_t rank(Transformation const& t) {
  return range(t).size();
}

StateSet fixed_points(Transformation const& t) {
  StateSet out;
  for (State k = 1; k <= t.degree(); ++k) {
    if (t[k] == k) {
      out.push_back(k);
    }
  }
  return out;
}

bool is_idempotent(Transformation const& t) {
  return compose(t, t) == t;
}

bool is_non_decreasing(Transformation const& t) noexcept {
  return kernels::is_non_decreasing(t.raw().data(), t.degree());
}

TransformationProfile profile(Transformation const& t) {
  TransformationProfile p;
  p.range          = range(t);
  p.rank           = p.range.size();
  p.fixed          = fixed_points(t);
  p.idempotent     = is_idempotent(t);
  p.non_decreasing = is_non_decreasing(t);
  return p;
}

Partition orbits(Transformation const& t) {
  detail::UnionFind uf(t.degree());
  auto const        raw = t.raw();
  for (std::uint32_t k = 0; k < raw.size(); ++k) {
    uf.unite(k, raw[k]);
  }
  auto labels = uf.roots();
  return Partition::from_labels(labels);
}

std::string to_string(Transformation const& t) {
  std::string out = "[";
  for (State k = 1; k <= t.degree(); ++k) {
    if (k != 1) {
      out += ',';
    }
    out += std::to_string(t[k]);
  }
  out += ']';
  return out;
}

}  // namespace tsemi
