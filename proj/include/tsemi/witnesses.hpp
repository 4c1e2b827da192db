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

#ifndef TSEMI_WITNESSES_HPP_
#define TSEMI_WITNESSES_HPP_

// Extremal automata and monoids for the R-trivial, J-trivial and reversal
// bounds.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "automata.hpp"
#include "partition.hpp"
#include "semigroup.hpp"
#include "transformation.hpp"

namespace tsemi {

/// Identity plus every idempotent of rank n - 1 among the non-decreasing
/// maps, i.e. singular(n, i, j) for i < j. Lexicographic order.
std::vector<Transformation> gf_q(std::size_t n);

/// Symbol names matching gf_q(n): "g0" for the identity, "g<i><j>" for
/// i -> j ("g<i>_<j>" once n >= 10).
std::vector<std::string> gf_q_names(std::size_t n);

inline constexpr std::size_t kDefaultWitnessCap = 8;

/// DFA over gf_q(n) with initial state 1 and final state n; its syntactic
/// semigroup is the whole monoid of non-decreasing maps. Needs 2 <= n <= cap.
Dfa witness_a(std::size_t n, std::size_t cap = kDefaultWitnessCap);

/// All subsets of {1, ..., n} containing n, by decreasing size and then
/// lexicographically.
std::vector<StateSet> p_n_q(std::size_t n);

/// With h = max(Q \ Z): i -> i for i in Z, h -> n, everything else -> h.
/// The identity when Z = Q. Throws InvalidArgument unless n in Z.
Transformation t_z(std::size_t n, StateSet const& z);

inline constexpr std::size_t kDefaultGeneratorCap = 20;

/// {t_z(n, Z) : Z in p_n_q(n)} in lexicographic order; 2^(n-1) maps.
std::vector<Transformation> gs_n(std::size_t n, std::size_t cap = kDefaultGeneratorCap);

/// The subset Z behind each entry of gs_n(n), in the same order.
std::vector<StateSet> gs_n_subsets(std::size_t n, std::size_t cap = kDefaultGeneratorCap);

struct SnBlock {
  StateSet    z;
  Partition   pi;
  std::size_t count;
};

/// |E(pi_Z)| for each Z in p_n_q(n) order.
std::vector<SnBlock> s_n_blocks(std::size_t n, std::size_t cap = kDefaultWitnessCap);

/// The union of E(pi_Z) over Z in p_n_q(n), verified closed. Throws
/// ResourceLimit if n > cap.
TransformationSemigroup s_n_direct(std::size_t n, std::size_t cap = kDefaultWitnessCap);

/// DFA over a1..a_{n-1}, initial 1, final {n}, where a_i sends j to j + 1
/// for j < i, i to n, and fixes j > i. Needs n >= 2.
Dfa witness_b(std::size_t n);

enum class WitnessKind { r_trivial_dfa, j_trivial_dfa, j_trivial_generators, j_trivial_monoid };

struct WitnessBundle {
  WitnessKind                                                      kind;
  std::size_t                                                      n;
  std::variant<Dfa, std::vector<Transformation>, TransformationSemigroup> payload;
};

WitnessBundle make_witness(WitnessKind kind, std::size_t n, std::size_t cap = kDefaultWitnessCap);

/// DFA kinds in the automaton text format, the others as transformation
/// lists. Output is byte-stable.
std::string emit_witness(WitnessBundle const& bundle);

struct GeneratorSearch {
  std::size_t                 size;
  std::vector<Transformation> generators;
};

/// Smallest set of non-identity elements of S_n generating S_n as a monoid,
/// by exhaustive search in increasing size (first hit in lexicographic
/// order). Only n <= 4 is supported (ResourceLimit otherwise).
GeneratorSearch smallest_s_n_generating_set(std::size_t n);

}  // namespace tsemi

#endif  // TSEMI_WITNESSES_HPP_
