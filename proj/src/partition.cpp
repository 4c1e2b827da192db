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

#include "tsemi/partition.hpp"

#include <algorithm>
#include <limits>

#include "tsemi/error.hpp"
#include "tsemi/transformation.hpp"
#include "union_find.hpp"

namespace tsemi {

namespace {

  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();

  void check_same_degree(Partition const& a, Partition const& b) {
    if (a.degree() != b.degree()) {
      throw InvalidArgument("partitions of {1.." + std::to_string(a.degree())
                            + "} and {1.." + std::to_string(b.degree())
                            + "} cannot be combined");
    }
  }

}  // namespace

Partition Partition::from_labels(std::span<std::uint32_t const> labels) {
  if (labels.empty()) {
    throw InvalidArgument("a partition needs at least one state");
  }
  // Relabel in order of first appearance, which is order of block minimum.
  std::vector<std::uint32_t> canon(labels.size());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
  std::uint32_t next = 0;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](auto const& p) {
      return p.first == labels[k];
    });
    if (it == seen.end()) {
      seen.emplace_back(labels[k], next);
      canon[k] = next++;
    } else {
      canon[k] = it->second;
    }
  }
  return Partition(std::move(canon), next);
}

Partition Partition::from_blocks(std::size_t n,
                                 std::vector<StateSet> const& blocks) {
  if (n == 0) {
    throw InvalidArgument("a partition needs at least one state");
  }
  std::vector<std::uint32_t> labels(n, kUnset);
  for (std::uint32_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw InvalidArgument("partition blocks must be non-empty");
    }
    for (State s : blocks[b]) {
      if (s < 1 || s > n) {
        throw InvalidArgument("state " + std::to_string(s)
                              + " is outside 1.." + std::to_string(n));
      }
      if (labels[s - 1] != kUnset) {
        throw InvalidArgument("state " + std::to_string(s)
                              + " appears in more than one block");
      }
      labels[s - 1] = b;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (labels[k] == kUnset) {
      throw InvalidArgument("state " + std::to_string(k + 1)
                            + " is not covered by any block");
    }
  }
  return from_labels(labels);
}

Partition Partition::finest(std::size_t n) {
  std::vector<std::uint32_t> labels(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    labels[k] = k;
  }
  return from_labels(labels);
}

Partition Partition::coarsest(std::size_t n) {
  std::vector<std::uint32_t> labels(n, 0);
  return from_labels(labels);
}

std::vector<StateSet> Partition::blocks() const {
  std::vector<StateSet> out(block_count_);
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    out[labels_[k]].push_back(static_cast<State>(k + 1));
  }
  return out;
}

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> out(block_count_, 0);
  for (auto label : labels_) {
    ++out[label];
  }
  return out;
}

std::strong_ordering operator<=>(Partition const& a,
                                 Partition const& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(a.labels_.begin(),
                                                a.labels_.end(),
                                                b.labels_.begin(),
                                                b.labels_.end());
}

bool refines(Partition const& finer, Partition const& coarser) {
  check_same_degree(finer, coarser);
  // The label map finer -> coarser must be a function.
  std::vector<std::uint32_t> image(finer.block_count(), kUnset);
  for (State k = 1; k <= finer.degree(); ++k) {
    auto& slot = image[finer.block_of(k)];
    if (slot == kUnset) {
      slot = coarser.block_of(k);
    } else if (slot != coarser.block_of(k)) {
      return false;
    }
  }
  return true;
}

Partition meet(Partition const& a, Partition const& b) {
  check_same_degree(a, b);
  std::vector<std::uint32_t> labels(a.degree());
  auto const                 width = static_cast<std::uint32_t>(b.block_count());
  for (State k = 1; k <= a.degree(); ++k) {
    labels[k - 1] = a.block_of(k) * width + b.block_of(k);
  }
  return Partition::from_labels(labels);
}

Partition join(Partition const& a, Partition const& b) {
  check_same_degree(a, b);
  auto const        n = static_cast<std::uint32_t>(a.degree());
  detail::UnionFind uf(n);
  // Link every state to the first state of its block in each partition.
  std::vector<std::uint32_t> first_a(a.block_count(), kUnset);
  std::vector<std::uint32_t> first_b(b.block_count(), kUnset);
  for (std::uint32_t k = 0; k < n; ++k) {
    auto& fa = first_a[a.block_of(k + 1)];
    auto& fb = first_b[b.block_of(k + 1)];
    fa = fa == kUnset ? k : fa;
    fb = fb == kUnset ? k : fb;
    uf.unite(k, fa);
    uf.unite(k, fb);
  }
  auto labels = uf.roots();
  return Partition::from_labels(labels);
}

StateSet max_set(Partition const& p) {
  StateSet out;
  for (auto const& block : p.blocks()) {
    out.push_back(block.back());
  }
  return make_state_set(std::move(out));
}

Partition pi_z(std::size_t n, StateSet const& z) {
  if (n == 0) {
    throw InvalidArgument("pi_Z needs n >= 1");
  }
  auto const set = make_state_set(z);
  for (State s : set) {
    if (s < 1 || s > n) {
      throw InvalidArgument("state " + std::to_string(s) + " is outside 1.."
                            + std::to_string(n));
    }
  }
  if (set.empty() || set.back() != n) {
    throw InvalidArgument("Z must contain n = " + std::to_string(n));
  }
  // Residual block gets label n; singletons keep their own state as label.
  std::vector<std::uint32_t> labels(n, static_cast<std::uint32_t>(n));
  for (std::size_t i = 0; i + 1 < set.size(); ++i) {
    labels[set[i] - 1] = set[i] - 1;
  }
  return Partition::from_labels(labels);
}

BigInt count_e(Partition const& p) {
  BigInt result = 1;
  for (auto size : p.block_sizes()) {
    result *= factorial(static_cast<unsigned>(size - 1));
  }
  return result;
}

std::vector<Transformation> enumerate_e(Partition const& p, std::size_t cap) {
  if (count_e(p) > cap) {
    throw ResourceLimit("E(" + to_string(p) + ") has " + count_e(p).str()
                        + " elements, more than the cap of "
                        + std::to_string(cap));
  }
  // Each non-maximal state j of a block picks an image among the larger
  // states of its block; block maxima are fixed.
  struct Slot {
    std::uint8_t              state;
    std::vector<std::uint8_t> choices;
  };
  std::vector<Slot>         slots;
  std::vector<std::uint8_t> base(p.degree());
  for (auto const& block : p.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      auto const j = static_cast<std::uint8_t>(block[i] - 1);
      base[j]      = static_cast<std::uint8_t>(block.back() - 1);
      if (i + 1 < block.size()) {
        Slot slot{j, {}};
        for (std::size_t h = i + 1; h < block.size(); ++h) {
          slot.choices.push_back(static_cast<std::uint8_t>(block[h] - 1));
        }
        slots.push_back(std::move(slot));
      }
    }
  }

  std::vector<Transformation> out;
  std::vector<std::size_t>    odometer(slots.size(), 0);
  while (true) {
    auto images = base;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      images[slots[s].state] = slots[s].choices[odometer[s]];
    }
    out.push_back(Transformation::from_raw(std::move(images)));
    std::size_t s = 0;
    for (; s < slots.size(); ++s) {
      if (++odometer[s] < slots[s].choices.size()) {
        break;
      }
      odometer[s] = 0;
    }
    if (s == slots.size()) {
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> all_partitions(std::size_t n, std::size_t cap) {
  if (n == 0) {
    throw InvalidArgument("all_partitions needs n >= 1");
  }
  if (n > cap) {
    throw ResourceLimit("enumerating partitions of {1.." + std::to_string(n)
                        + "} exceeds the cap n <= " + std::to_string(cap));
  }
  // Restricted growth strings in lexicographic order.
  std::vector<Partition>     out;
  std::vector<std::uint32_t> rgs(n, 0);
  std::vector<std::uint32_t> prefix_max(n, 0);
  while (true) {
    out.push_back(Partition::from_labels(rgs));
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) {
      --i;
    }
    if (i == 0) {
      break;
    }
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t k = i + 1; k < n; ++k) {
      rgs[k]        = 0;
      prefix_max[k] = prefix_max[i];
    }
  }
  return out;
}

std::string to_string(Partition const& p) {
  std::string out = "{";
  auto const  blocks = p.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b != 0) {
      out += ',';
    }
    out += to_string(blocks[b]);
  }
  out += '}';
  return out;
}

}  // namespace tsemi
