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

#include "tsemi/semigroup.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "scc.hpp"
#include "tsemi/error.hpp"

namespace tsemi {

TransformationSemigroup::TransformationSemigroup(
    std::vector<Transformation> generators,
    std::vector<Transformation> elements)
    : degree_(elements.front().degree()),
      generators_(std::move(generators)),
      elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i], i);
  }
}

TransformationSemigroup TransformationSemigroup::from_closed_set(
    std::vector<Transformation> generators,
    std::vector<Transformation> elements) {
  if (elements.empty()) {
    throw InvalidArgument("a semigroup needs at least one element");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (auto const& t : elements) {
    if (t.degree() != elements.front().degree()) {
      throw InvalidArgument("semigroup elements must share one degree");
    }
  }
  TransformationSemigroup result(std::move(generators), std::move(elements));
  for (auto const& g : result.generators_) {
    if (!result.contains(g)) {
      throw InvariantViolation("generator " + to_string(g)
                               + " is not an element of the semigroup");
    }
  }
  if (!result.is_closed()) {
    throw InvariantViolation("element set is not closed under composition");
  }
  return result;
}

std::optional<std::size_t> TransformationSemigroup::index_of(
    Transformation const& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

bool TransformationSemigroup::contains_identity() const {
  return contains(identity(degree_));
}

bool TransformationSemigroup::is_closed() const {
  std::vector<std::uint8_t> buf;
  for (auto const& a : elements_) {
    for (auto const& b : elements_) {
      compose_into(a, b, buf);
      if (!index_.contains(Transformation::from_raw(buf))) {
        return false;
      }
    }
  }
  return true;
}

TransformationSemigroup close(std::vector<Transformation> const& generators,
                              std::size_t                        cap) {
  if (generators.empty()) {
    throw InvalidArgument("cannot close an empty generator list");
  }
  std::size_t const n = generators.front().degree();
  for (auto const& g : generators) {
    if (g.degree() != n) {
      throw InvalidArgument("generators have mixed degrees "
                            + std::to_string(n) + " and "
                            + std::to_string(g.degree()));
    }
  }

  std::vector<Transformation>        found;
  std::unordered_set<Transformation> seen;
  auto add = [&](Transformation t) {
    if (seen.insert(t).second) {
      if (seen.size() > cap) {
        throw ResourceLimit("closure exceeded the cap of "
                            + std::to_string(cap) + " elements");
      }
      found.push_back(std::move(t));
    }
  };
  for (auto const& g : generators) {
    add(g);
  }
  std::vector<std::uint8_t> buf;
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto const& g : generators) {
      compose_into(found[i], g, buf);
      add(Transformation::from_raw(buf));
    }
  }
  return TransformationSemigroup(generators, std::move(found));
}

TransformationSemigroup monoid_completion(TransformationSemigroup const& s) {
  if (s.contains_identity()) {
    return s;
  }
  auto one        = identity(s.degree());
  auto generators = std::vector<Transformation>(s.generators().begin(),
                                                s.generators().end());
  auto elements = std::vector<Transformation>(s.elements().begin(),
                                              s.elements().end());
  generators.push_back(one);
  elements.push_back(one);
  return TransformationSemigroup::from_closed_set(std::move(generators),
                                                  std::move(elements));
}

PrincipalIdeals principal_ideals(TransformationSemigroup const& semigroup,
                                 Transformation const&          s) {
  auto const m = monoid_completion(semigroup);
  if (!m.contains(s)) {
    throw InvalidArgument(to_string(s) + " is not an element of the monoid");
  }
  auto sorted_unique = [](std::vector<Transformation> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  PrincipalIdeals out;
  for (auto const& x : m.elements()) {
    out.right.push_back(s * x);
    out.left.push_back(x * s);
  }
  out.right = sorted_unique(std::move(out.right));
  out.left  = sorted_unique(std::move(out.left));
  for (auto const& x : m.elements()) {
    for (auto const& r : out.right) {
      out.two_sided.push_back(x * r);
    }
  }
  out.two_sided = sorted_unique(std::move(out.two_sided));
  return out;
}

namespace {

  // Right and left Cayley graphs of a monoid with respect to its
  // generators. x is reachable from s in the right graph iff x is in sM,
  // so strongly connected components are exactly the R-classes (dually L).
  struct CayleyGraphs {
    std::vector<std::uint32_t> right;
    std::vector<std::uint32_t> left;
    std::size_t                degree;
  };

  CayleyGraphs cayley_graphs(TransformationSemigroup const& m) {
    auto const   gens = m.generators();
    CayleyGraphs out;
    out.degree = gens.size();
    out.right.resize(m.size() * gens.size());
    out.left.resize(m.size() * gens.size());
    std::vector<std::uint8_t> buf;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        compose_into(m[i], gens[g], buf);
        out.right[i * gens.size() + g]
            = static_cast<std::uint32_t>(*m.index_of(Transformation::from_raw(buf)));
        compose_into(gens[g], m[i], buf);
        out.left[i * gens.size() + g]
            = static_cast<std::uint32_t>(*m.index_of(Transformation::from_raw(buf)));
      }
    }
    return out;
  }

  std::vector<std::uint32_t> components(std::size_t                       nodes,
                                        std::size_t                       degree,
                                        std::vector<std::uint32_t> const& succ) {
    std::size_t count = 0;
    return detail::strongly_connected_components(
        detail::uniform_digraph(nodes, degree, succ), count);
  }

  bool all_distinct(std::vector<std::uint32_t> labels) {
    std::sort(labels.begin(), labels.end());
    return std::adjacent_find(labels.begin(), labels.end()) == labels.end();
  }

}  // namespace

std::vector<std::uint32_t> green_classes(TransformationSemigroup const& semigroup,
                                         Green                          relation) {
  auto const m     = monoid_completion(semigroup);
  auto const graph = cayley_graphs(m);
  switch (relation) {
    case Green::R:
      return components(m.size(), graph.degree, graph.right);
    case Green::L:
      return components(m.size(), graph.degree, graph.left);
    case Green::J: {
      // Reachability in the two-sided graph is membership in MsM.
      std::vector<std::uint32_t> both;
      both.reserve(graph.right.size() * 2);
      for (std::size_t i = 0; i < m.size(); ++i) {
        auto const row = graph.right.begin() + i * graph.degree;
        both.insert(both.end(), row, row + graph.degree);
        auto const col = graph.left.begin() + i * graph.degree;
        both.insert(both.end(), col, col + graph.degree);
      }
      return components(m.size(), graph.degree * 2, both);
    }
    case Green::H: {
      auto const r = components(m.size(), graph.degree, graph.right);
      auto const l = components(m.size(), graph.degree, graph.left);
      std::vector<std::uint32_t>                     pair_label(m.size());
      std::unordered_map<std::uint64_t, std::uint32_t> ids;
      for (std::size_t i = 0; i < m.size(); ++i) {
        auto const key = (std::uint64_t{r[i]} << 32) | l[i];
        pair_label[i]  = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size()))
                            .first->second;
      }
      return pair_label;
    }
  }
  return {};
}

bool is_r_trivial(TransformationSemigroup const& s) {
  return all_distinct(green_classes(s, Green::R));
}

bool is_l_trivial(TransformationSemigroup const& s) {
  return all_distinct(green_classes(s, Green::L));
}

bool is_j_trivial(TransformationSemigroup const& s) {
  return all_distinct(green_classes(s, Green::J));
}

bool is_h_trivial(TransformationSemigroup const& s) {
  return all_distinct(green_classes(s, Green::H));
}

bool saito_holds(TransformationSemigroup const& s) {
  for (auto const& t : s.elements()) {
    if (!is_non_decreasing(t)) {
      return false;
    }
  }
  std::vector<Partition> orbit_of;
  orbit_of.reserve(s.size());
  for (auto const& t : s.elements()) {
    orbit_of.push_back(orbits(t));
  }
  std::vector<std::uint8_t> buf;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      compose_into(s[i], s[j], buf);
      auto const k = s.index_of(Transformation::from_raw(buf));
      if (!k) {
        throw InvariantViolation("semigroup is not closed under composition");
      }
      if (orbit_of[*k] != join(orbit_of[i], orbit_of[j])) {
        return false;
      }
    }
  }
  return true;
}

TransformationSemigroup adjoin_t_max(TransformationSemigroup const& s) {
  for (auto const& t : s.elements()) {
    if (!is_non_decreasing(t)) {
      throw InvalidArgument("adjoin_t_max needs non-decreasing elements; "
                            + to_string(t) + " is not");
    }
  }
  if (!is_j_trivial(s)) {
    throw InvalidArgument("adjoin_t_max needs a J-trivial monoid");
  }
  auto generators = std::vector<Transformation>(s.generators().begin(),
                                                s.generators().end());
  generators.push_back(t_max(s.degree()));
  generators.push_back(identity(s.degree()));
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  auto result = close(generators);
  if (!is_j_trivial(result)) {
    throw InvariantViolation("adjoining t_max produced a monoid that is not "
                             "J-trivial");
  }
  return result;
}

}  // namespace tsemi
