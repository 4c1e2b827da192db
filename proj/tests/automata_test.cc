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

#include "tsemi/automata.hpp"

#include <gtest/gtest.h>

#include <random>

#include "tsemi/error.hpp"
#include "tsemi/partition.hpp"
#include "tsemi/witnesses.hpp"
#include "test_support.hpp"

using namespace tsemi;
using tsemi::testing::T;

namespace {

Dfa one_state_dfa(std::size_t letters, bool final_state) {
  return Dfa(1, tsemi::testing::letter_names(letters), std::vector<State>(letters, 1), 1,
             final_state ? StateSet{1} : StateSet{});
}

bool same_language_on_samples(Dfa const& a, Dfa const& b, std::mt19937_64& rng, std::size_t max_len) {
  for (int i = 0; i < 200; ++i) {
    auto const w = tsemi::testing::random_word(rng, a.alphabet_size(), rng() % (max_len + 1));
    if (a.accepts(w) != b.accepts(w)) {
      return false;
    }
  }
  return true;
}

bool nfa_accepts_reversed(Nfa const& m, Dfa const& d, std::vector<Symbol> w) {
  bool const forward = d.accepts(w);
  std::reverse(w.begin(), w.end());
  return m.accepts(w) == forward;
}

}  // namespace

TEST(automata, construction_validates) {
  EXPECT_THROW(Dfa(2, {"a"}, {1}, 1, {}), InvalidArgument);
  EXPECT_THROW(Dfa(2, {"a"}, {1, 3}, 1, {}), InvalidArgument);
  EXPECT_THROW(Dfa(2, {"a"}, {1, 2}, 3, {}), InvalidArgument);
  EXPECT_THROW(Dfa(2, {"a"}, {1, 2}, 1, {5}), InvalidArgument);
  EXPECT_THROW(Dfa(2, {"a", "a"}, {1, 2, 1, 2}, 1, {}), InvalidArgument);
  EXPECT_THROW(dfa_from_transformations({identity(2), identity(3)}, 1, {1}), InvalidArgument);
}

TEST(automata, trim_reachable) {
  Dfa const d(3, {"a"}, {2, 1, 1}, 1, {2});
  auto const t = trim_reachable(d);
  EXPECT_EQ(t.state_count(), 2u);
  auto const b5 = witness_b(5);
  EXPECT_EQ(trim_reachable(b5), b5);
}

TEST(automata, minimize_examples) {
  EXPECT_EQ(minimize(witness_a(4)).state_count(), 4u);
  Dfa const all_final(3, {"a", "b"}, {2, 3, 3, 1, 1, 2}, 1, {1, 2, 3});
  EXPECT_EQ(minimize(all_final).state_count(), 1u);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    auto const d = tsemi::testing::random_dfa(rng, 1 + rng() % 8, 1 + rng() % 3);
    auto const m = minimize(d);
    ASSERT_EQ(minimize(m), m);
    ASSERT_TRUE(same_language_on_samples(d, m, rng, 2 * d.state_count()));
    for (State p = 1; p <= m.state_count(); ++p) {
      for (State q = p + 1; q <= m.state_count(); ++q) {
        auto const w = distinguishing_word(m, p, q);
        ASSERT_TRUE(w.has_value());
        ASSERT_NE(m.is_final(m.run(p, *w)), m.is_final(m.run(q, *w)));
      }
    }
  }
}

TEST(automata, quotient_complexity_examples) {
  EXPECT_EQ(quotient_complexity(witness_a(4)), 4u);
  EXPECT_EQ(quotient_complexity(witness_b(5)), 5u);
  EXPECT_EQ(quotient_complexity(one_state_dfa(2, false)), 1u);
  for (std::size_t n = 2; n <= 8; ++n) {
    EXPECT_EQ(quotient_complexity(witness_b(n)), n);
  }
}

TEST(automata, semigroup_examples) {
  EXPECT_EQ(transition_semigroup(witness_a(4)).size(), 24u);
  auto const id = dfa_from_transformations({identity(3)}, 1, {1});
  EXPECT_EQ(transition_semigroup(id).size(), 1u);
  auto const s5 = s_n_direct(5);
  auto const b5 = transition_semigroup(witness_b(5));
  for (auto const& t : b5.elements()) {
    EXPECT_TRUE(s5.contains(t));
  }
  EXPECT_EQ(syntactic_semigroup(witness_a(4)).size(), 24u);
  EXPECT_EQ(syntactic_semigroup(one_state_dfa(3, true)).size(), 1u);
  EXPECT_LE(syntactic_semigroup(witness_b(4)).size(), 16u);
}

TEST(automata, partially_ordered) {
  EXPECT_TRUE(is_partially_ordered(witness_a(4)));
  EXPECT_FALSE(is_partially_ordered(Dfa(2, {"a"}, {2, 1}, 1, {1})));
  EXPECT_TRUE(is_partially_ordered(one_state_dfa(1, true)));
  EXPECT_FALSE(non_decreasing_renumbering(Dfa(2, {"a"}, {2, 1}, 1, {1})).has_value());
}

TEST(automata, r_trivial_iff_partially_ordered) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    std::size_t const n = 1 + rng() % 6;
    std::size_t const k = 1 + rng() % 3;
    auto const d = i % 2 == 0 ? tsemi::testing::random_partially_ordered_dfa(rng, n, k)
                              : tsemi::testing::random_dfa(rng, n, k);
    auto const m = minimize(d);
    auto const s = transition_semigroup(m);
    ASSERT_EQ(is_r_trivial(s), is_partially_ordered(m));
    auto const renumbered = non_decreasing_renumbering(m);
    ASSERT_EQ(renumbered.has_value(), is_partially_ordered(m));
    if (renumbered) {
      ASSERT_TRUE(same_language_on_samples(m, *renumbered, rng, 2 * n));
      auto const monotone = transition_semigroup(*renumbered);
      for (auto const& t : monotone.elements()) {
        ASSERT_TRUE(is_non_decreasing(t));
      }
    }
  }
}

TEST(automata, gamma_components) {
  auto const branching = tsemi::testing::branching_dfa();
  EXPECT_EQ(gamma_components(branching, {0, 1}), Partition::coarsest(4));
  EXPECT_EQ(to_string(gamma_components(branching, {0})), "{{1,2},{3,4}}");
  auto const id = dfa_from_transformations({identity(3)}, 1, {1});
  EXPECT_EQ(gamma_components(id, {0}), Partition::finest(3));
  EXPECT_THROW(gamma_components(branching, {}), InvalidArgument);
  EXPECT_THROW(gamma_components(branching, {2}), InvalidArgument);
}

TEST(automata, simon_check_examples) {
  auto const branching = simon_check(tsemi::testing::branching_dfa());
  EXPECT_EQ(branching.status, SimonResult::Status::fails);
  EXPECT_EQ(branching.gamma, (std::vector<Symbol>{0, 1}));
  EXPECT_EQ(branching.maximal_states, (StateSet{2, 4}));
  EXPECT_TRUE(simon_check(witness_b(5)).holds());
  EXPECT_TRUE(simon_check(one_state_dfa(2, true)).holds());
  EXPECT_EQ(simon_check(witness_a(4), 3).status, SimonResult::Status::skipped);
  EXPECT_EQ(simon_check(Dfa(2, {"a"}, {2, 1}, 1, {1})).status, SimonResult::Status::fails);
}

TEST(automata, simon_check_equals_j_trivial) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 400; ++i) {
    std::size_t const k = 1 + rng() % 4;
    // Unordered DFAs are kept small: their monoids approach n^n elements.
    auto const d = i % 3 == 0 ? tsemi::testing::random_dfa(rng, 1 + rng() % 4, k)
                              : tsemi::testing::random_partially_ordered_dfa(rng, 1 + rng() % 6, k);
    auto const m = minimize(d);
    ASSERT_EQ(simon_check(m).holds(), is_j_trivial(syntactic_semigroup(d)));
  }
}

TEST(automata, reverse_examples) {
  auto const n5 = reverse(witness_b(5));
  EXPECT_EQ(n5.initials(), (StateSet{5}));
  EXPECT_EQ(n5.finals(), (StateSet{1}));
  EXPECT_EQ(n5.transition_count(), 5u * 4u);
  auto const loop = one_state_dfa(2, true);
  auto const r = reverse(loop);
  EXPECT_TRUE(r.is_deterministic());
  EXPECT_EQ(determinize(r), loop);
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    auto const d = tsemi::testing::random_dfa(rng, 1 + rng() % 6, 1 + rng() % 3);
    auto const rev = reverse(d);
    EXPECT_EQ(rev.transition_count(), d.state_count() * d.alphabet_size());
    for (int w = 0; w < 50; ++w) {
      ASSERT_TRUE(nfa_accepts_reversed(
          rev, d, tsemi::testing::random_word(rng, d.alphabet_size(), rng() % 10)));
    }
    auto const back = determinize(reverse(minimize(determinize(rev))), 64);
    ASSERT_TRUE(same_language_on_samples(d, back, rng, 2 * d.state_count()));
  }
}

TEST(automata, determinize_examples) {
  auto const det = determinize_with_subsets(reverse(witness_b(5)));
  EXPECT_EQ(det.dfa.state_count(), 16u);
  for (auto const& subset : det.subsets) {
    EXPECT_TRUE(std::binary_search(subset.begin(), subset.end(), State{5}));
  }
  auto const d = witness_a(3);
  Nfa const as_nfa = [&] {
    std::vector<StateSet> delta;
    for (State q : d.delta()) {
      delta.push_back({q});
    }
    return Nfa(d.state_count(), d.alphabet(), delta, {d.initial()}, d.finals());
  }();
  EXPECT_EQ(determinize(as_nfa), d);
  EXPECT_THROW(determinize(reverse(witness_b(30)), 24), ResourceLimit);
  EXPECT_THROW(determinize(as_nfa, 65), InvalidArgument);
}

TEST(automata, determinize_dead_state) {
  // Reversal of a letter with no preimage of the final state reaches the empty set.
  Dfa const d(2, {"a", "b"}, {1, 2, 1, 2}, 1, {2});
  auto const det = determinize_with_subsets(reverse(d));
  EXPECT_NE(std::find(det.subsets.begin(), det.subsets.end(), StateSet{}), det.subsets.end());
}

TEST(automata, reversal_complexity_examples) {
  EXPECT_EQ(reversal_complexity(witness_b(5)), 16u);
  EXPECT_EQ(reversal_complexity(witness_b(4)), 8u);
  EXPECT_EQ(reversal_complexity(one_state_dfa(2, true)), 1u);
}

TEST(automata, reversal_bound_for_r_trivial) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 150; ++i) {
    std::size_t const n = 1 + rng() % 10;
    auto const d = tsemi::testing::random_partially_ordered_dfa(rng, n, 1 + rng() % 3);
    auto const kappa = quotient_complexity(d);
    ASSERT_LE(reversal_complexity(d), std::size_t{1} << (kappa - 1));
  }
}

TEST(automata, dfa_from_transformations) {
  auto const a4 = dfa_from_transformations(gf_q(4), 1, {4}, gf_q_names(4));
  EXPECT_EQ(a4, witness_a(4));
  auto const id = dfa_from_transformations({identity(2)}, 1, {1});
  EXPECT_TRUE(id.accepts(std::vector<Symbol>{0, 0, 0}));
  EXPECT_EQ(id.alphabet(), std::vector<std::string>{"a1"});

  std::vector<Transformation> gens = gs_n(4);
  gens.push_back(t_max(4));
  auto const d = dfa_from_transformations(gens, 1, {4});
  EXPECT_EQ(quotient_complexity(d), 4u);
}

TEST(automata, analyze_reports) {
  auto const r = analyze(witness_a(4));
  EXPECT_EQ(r.quotient_complexity, 4u);
  EXPECT_EQ(r.syntactic_complexity, 24u);
  EXPECT_TRUE(r.r_trivial);
  EXPECT_FALSE(r.j_trivial);
  auto const b = analyze(witness_b(5));
  EXPECT_TRUE(b.j_trivial);
  EXPECT_TRUE(b.simon.holds());
  EXPECT_TRUE(b.partially_ordered);
  EXPECT_THROW(analyze(witness_a(6), {.closure_cap = 100}), ResourceLimit);
}
