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

#include "tsemi/witnesses.hpp"

#include <algorithm>

#include "tsemi/error.hpp"
#include "tsemi/text_format.hpp"

namespace tsemi {

namespace {

  void check_at_least(std::size_t n, std::size_t low, char const* what) {
    if (n < low) {
      throw InvalidArgument(std::string(what) + " needs n >= " + std::to_string(low)
                            + ", got " + std::to_string(n));
    }
  }

  void check_cap(std::size_t n, std::size_t cap, char const* what) {
    if (n > cap) {
      throw ResourceLimit(std::string(what) + " for n = " + std::to_string(n)
                          + " exceeds the cap n <= " + std::to_string(cap));
    }
  }

  std::string gf_name(std::size_t n, State i, State j) {
    if (n >= 10) {
      return "g" + std::to_string(i) + "_" + std::to_string(j);
    }
    return "g" + std::to_string(i) + std::to_string(j);
  }

  // The (i, j) of a rank n-1 idempotent singular map, or (0, 0) for the
  // identity.
  std::pair<State, State> moved_pair(Transformation const& t) {
    for (State k = 1; k <= t.degree(); ++k) {
      if (t[k] != k) {
        return {k, t[k]};
      }
    }
    return {0, 0};
  }

  std::uint64_t subset_mask(StateSet const& z) {
    std::uint64_t mask = 0;
    for (State s : z) {
      mask |= std::uint64_t{1} << (s - 1);
    }
    return mask;
  }

}  // namespace

std::vector<Transformation> gf_q(std::size_t n) {
  check_at_least(n, 1, "gf_q");
  std::vector<Transformation> out{identity(n)};
  for (State i = 1; i <= n; ++i) {
    for (State j = i + 1; j <= n; ++j) {
      out.push_back(singular(n, i, j));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> gf_q_names(std::size_t n) {
  std::vector<std::string> names;
  for (auto const& t : gf_q(n)) {
    auto const [i, j] = moved_pair(t);
    names.push_back(i == 0 ? "g0" : gf_name(n, i, j));
  }
  return names;
}

Dfa witness_a(std::size_t n, std::size_t cap) {
  check_at_least(n, 2, "witness_a");
  check_cap(n, cap, "witness_a");
  return dfa_from_transformations(gf_q(n), 1, StateSet{static_cast<State>(n)},
                                  gf_q_names(n));
}

std::vector<StateSet> p_n_q(std::size_t n) {
  check_at_least(n, 1, "p_n_q");
  if (n > 63) {
    throw ResourceLimit("p_n_q supports n <= 63");
  }
  std::vector<StateSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    StateSet z;
    for (State s = 1; s < n; ++s) {
      if (mask & (std::uint64_t{1} << (s - 1))) {
        z.push_back(s);
      }
    }
    z.push_back(static_cast<State>(n));
    out.push_back(std::move(z));
  }
  std::sort(out.begin(), out.end(), [](StateSet const& a, StateSet const& b) {
    if (a.size() != b.size()) {
      return a.size() > b.size();
    }
    return a < b;
  });
  return out;
}

Transformation t_z(std::size_t n, StateSet const& z) {
  check_at_least(n, 1, "t_z");
  auto const set = make_state_set(z);
  if (set.empty() || set.back() != n || set.front() < 1) {
    throw InvalidArgument("Z must be a subset of 1.." + std::to_string(n)
                          + " containing " + std::to_string(n));
  }
  if (set.size() == n) {
    return identity(n);
  }
  std::vector<bool> in_z(n + 1, false);
  for (State s : set) {
    in_z[s] = true;
  }
  State h = static_cast<State>(n);
  while (in_z[h]) {
    --h;
  }
  std::vector<State> images(n);
  for (State i = 1; i <= n; ++i) {
    images[i - 1] = in_z[i] ? i : (i == h ? static_cast<State>(n) : h);
  }
  return Transformation(images);
}

std::vector<StateSet> gs_n_subsets(std::size_t n, std::size_t cap) {
  check_at_least(n, 1, "gs_n");
  check_cap(n, cap, "gs_n");
  auto subsets = p_n_q(n);
  std::vector<std::pair<Transformation, StateSet>> pairs;
  for (auto& z : subsets) {
    pairs.emplace_back(t_z(n, z), std::move(z));
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<StateSet> out;
  for (auto& p : pairs) {
    out.push_back(std::move(p.second));
  }
  return out;
}

std::vector<Transformation> gs_n(std::size_t n, std::size_t cap) {
  std::vector<Transformation> out;
  for (auto const& z : gs_n_subsets(n, cap)) {
    out.push_back(t_z(n, z));
  }
  return out;
}

std::vector<SnBlock> s_n_blocks(std::size_t n, std::size_t cap) {
  check_at_least(n, 1, "s_n");
  check_cap(n, cap, "s_n");
  std::vector<SnBlock> out;
  for (auto const& z : p_n_q(n)) {
    auto pi    = pi_z(n, z);
    auto count = static_cast<std::size_t>(count_e(pi));
    out.push_back({z, std::move(pi), count});
  }
  return out;
}

TransformationSemigroup s_n_direct(std::size_t n, std::size_t cap) {
  std::vector<Transformation> elements;
  for (auto const& block : s_n_blocks(n, cap)) {
    auto part = enumerate_e(block.pi);
    elements.insert(elements.end(), part.begin(), part.end());
  }
  auto generators = elements;
  return TransformationSemigroup::from_closed_set(std::move(generators),
                                                  std::move(elements));
}

Dfa witness_b(std::size_t n) {
  check_at_least(n, 2, "witness_b");
  std::vector<Transformation> letters;
  for (State i = 1; i < n; ++i) {
    std::vector<State> images(n);
    for (State j = 1; j <= n; ++j) {
      images[j - 1] = j < i ? j + 1 : (j == i ? static_cast<State>(n) : j);
    }
    letters.emplace_back(images);
  }
  return dfa_from_transformations(letters, 1, StateSet{static_cast<State>(n)});
}

WitnessBundle make_witness(WitnessKind kind, std::size_t n, std::size_t cap) {
  switch (kind) {
    case WitnessKind::r_trivial_dfa:
      return {kind, n, witness_a(n, cap)};
    case WitnessKind::j_trivial_dfa:
      return {kind, n, witness_b(n)};
    case WitnessKind::j_trivial_generators:
      check_cap(n, cap, "gs_n");
      return {kind, n, gs_n(n)};
    case WitnessKind::j_trivial_monoid:
      return {kind, n, s_n_direct(n, cap)};
  }
  throw InvalidArgument("unknown witness kind");
}

std::string emit_witness(WitnessBundle const& bundle) {
  auto const n = std::to_string(bundle.n);
  switch (bundle.kind) {
    case WitnessKind::r_trivial_dfa:
      return format_dfa(std::get<Dfa>(bundle.payload),
                        "R-trivial witness A_" + n + ": letters are the identity and "
                        "the rank n-1 non-decreasing idempotents");
    case WitnessKind::j_trivial_dfa:
      return format_dfa(std::get<Dfa>(bundle.payload),
                        "J-trivial witness B_" + n + " with n-1 letters");
    case WitnessKind::j_trivial_generators: {
      auto const&              items = std::get<std::vector<Transformation>>(bundle.payload);
      std::vector<std::string> labels;
      for (auto const& z : gs_n_subsets(bundle.n)) {
        labels.push_back("tZ mask=" + std::to_string(subset_mask(z)) + " Z="
                         + to_string(z));
      }
      return format_transformation_list(items, labels, "generators GS_" + n);
    }
    case WitnessKind::j_trivial_monoid: {
      auto const& monoid = std::get<TransformationSemigroup>(bundle.payload);
      return format_transformation_list(
          monoid.elements(), {},
          "J-trivial monoid S_" + n + " (" + std::to_string(monoid.size())
              + " elements)");
    }
  }
  throw InvalidArgument("unknown witness kind");
}

GeneratorSearch smallest_s_n_generating_set(std::size_t n) {
  check_at_least(n, 1, "smallest_s_n_generating_set");
  check_cap(n, 4, "smallest_s_n_generating_set");
  auto const target = s_n_direct(n);
  auto const one    = identity(n);
  std::vector<Transformation> pool;
  for (auto const& t : target.elements()) {
    if (t != one) {
      pool.push_back(t);
    }
  }
  if (pool.empty()) {
    return {0, {}};
  }
  for (std::size_t k = 1; k <= pool.size(); ++k) {
    // Lexicographic k-combinations of pool indices.
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) {
      pick[i] = i;
    }
    while (true) {
      std::vector<Transformation> gens{one};
      for (auto i : pick) {
        gens.push_back(pool[i]);
      }
      if (close(gens).size() == target.size()) {
        gens.erase(gens.begin());
        return {k, std::move(gens)};
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == pool.size() - k + i - 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        pick[j] = pick[j - 1] + 1;
      }
    }
  }
  throw InvariantViolation("S_n is not generated by its own elements");
}

}  // namespace tsemi
