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

#ifndef TSEMI_SRC_SCC_HPP_
#define TSEMI_SRC_SCC_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tsemi::detail {

// Directed graph in compressed adjacency form.
struct Digraph {
  explicit Digraph(std::size_t nodes) : offsets(nodes + 1, 0) {}

  std::size_t node_count() const noexcept {
    return offsets.size() - 1;
  }

  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> targets;
};

// Builds a Digraph from a fixed out-degree successor table:
// successors[v * degree + i] is the i-th successor of v.
Digraph uniform_digraph(std::size_t                       nodes,
                        std::size_t                       degree,
                        std::vector<std::uint32_t> const& successors);

// Strongly connected component id of every node (Tarjan, iterative).
// Returns the ids and sets `count` to the number of components.
std::vector<std::uint32_t> strongly_connected_components(Digraph const& g,
                                                         std::size_t&   count);

}  // namespace tsemi::detail

#endif  // TSEMI_SRC_SCC_HPP_
