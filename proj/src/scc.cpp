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

#include "scc.hpp"

#include <algorithm>
#include <limits>

namespace tsemi::detail {

Digraph uniform_digraph(std::size_t                       nodes,
                        std::size_t                       degree,
                        std::vector<std::uint32_t> const& successors) {
  Digraph g(nodes);
  for (std::size_t v = 0; v <= nodes; ++v) {
    g.offsets[v] = static_cast<std::uint32_t>(v * degree);
  }
  g.targets = successors;
  return g;
}

std::vector<std::uint32_t> strongly_connected_components(Digraph const& g,
                                                         std::size_t&   count) {
  constexpr auto kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::size_t const n = g.node_count();

  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> lowlink(n, 0);
  std::vector<std::uint32_t> component(n, kUnvisited);
  std::vector<bool>          on_stack(n, false);
  std::vector<std::uint32_t> stack;
  // (node, next edge offset)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> call;
  std::uint32_t next_index = 0;
  count                    = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) {
      continue;
    }
    call.emplace_back(root, g.offsets[root]);
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge < g.offsets[v + 1]) {
        std::uint32_t const w = g.targets[edge++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, g.offsets[w]);
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      std::uint32_t const done = v;
      if (lowlink[done] == index[done]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w]  = false;
          component[w] = static_cast<std::uint32_t>(count);
        } while (w != done);
        ++count;
      }
      call.pop_back();
      if (!call.empty()) {
        auto const parent = call.back().first;
        lowlink[parent]   = std::min(lowlink[parent], lowlink[done]);
      }
    }
  }
  return component;
}

}  // namespace tsemi::detail
