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

#ifndef TSEMI_AUTOMATA_HPP_
#define TSEMI_AUTOMATA_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semigroup.hpp"
#include "transformation.hpp"
#include "types.hpp"

namespace tsemi {

/// Index into an automaton's alphabet.
using Symbol = std::size_t;
using Word   = std::vector<Symbol>;

/// Complete deterministic automaton on states {1, ..., n}.
class Dfa {
 public:
  /// `delta[(p - 1) * alphabet.size() + a]` is the successor of p on a.
  /// Throws InvalidArgument on an empty state set or alphabet, a duplicate
  /// symbol name, a wrongly sized table, or a state outside 1..n.
  Dfa(std::size_t              states,
      std::vector<std::string> alphabet,
      std::vector<State>       delta,
      State                    initial,
      StateSet                 finals);

  std::size_t state_count() const noexcept {
    return states_;
  }

  std::vector<std::string> const& alphabet() const noexcept {
    return alphabet_;
  }

  std::size_t alphabet_size() const noexcept {
    return alphabet_.size();
  }

  State next(State p, Symbol a) const noexcept {
    return delta_[(p - 1) * alphabet_.size() + a];
  }

  State run(State p, std::span<Symbol const> word) const noexcept;

  State initial() const noexcept {
    return initial_;
  }

  StateSet const& finals() const noexcept {
    return finals_;
  }

  bool is_final(State p) const noexcept {
    return is_final_[p - 1];
  }

  bool accepts(std::span<Symbol const> word) const noexcept {
    return is_final(run(initial_, word));
  }

  /// The transformation t_a with k t_a = next(k, a). Throws ResourceLimit
  /// when the automaton has more states than a Transformation can hold.
  Transformation letter(Symbol a) const;

  std::vector<State> const& delta() const noexcept {
    return delta_;
  }

  friend bool operator==(Dfa const& a, Dfa const& b) {
    return a.states_ == b.states_ && a.alphabet_ == b.alphabet_
           && a.delta_ == b.delta_ && a.initial_ == b.initial_
           && a.finals_ == b.finals_;
  }

 private:
  std::size_t              states_;
  std::vector<std::string> alphabet_;
  std::vector<State>       delta_;
  State                    initial_;
  StateSet                 finals_;
  std::vector<bool>        is_final_;
};

/// Nondeterministic automaton on {1, ..., n} with a set of initial states
/// and no epsilon moves.
class Nfa {
 public:
  /// `delta[(p - 1) * alphabet.size() + a]` is the successor set of p on a.
  Nfa(std::size_t              states,
      std::vector<std::string> alphabet,
      std::vector<StateSet>    delta,
      StateSet                 initials,
      StateSet                 finals);

  std::size_t state_count() const noexcept {
    return states_;
  }

  std::vector<std::string> const& alphabet() const noexcept {
    return alphabet_;
  }

  std::size_t alphabet_size() const noexcept {
    return alphabet_.size();
  }

  StateSet const& next(State p, Symbol a) const noexcept {
    return delta_[(p - 1) * alphabet_.size() + a];
  }

  StateSet const& initials() const noexcept {
    return initials_;
  }

  StateSet const& finals() const noexcept {
    return finals_;
  }

  bool accepts(std::span<Symbol const> word) const;

  std::size_t transition_count() const noexcept;

  /// True iff there is one initial state and every successor set is a
  /// singleton.
  bool is_deterministic() const noexcept;

  friend bool operator==(Nfa const&, Nfa const&) = default;

 private:
  std::size_t              states_;
  std::vector<std::string> alphabet_;
  std::vector<StateSet>    delta_;
  StateSet                 initials_;
  StateSet                 finals_;
};

/// Drops states unreachable from the initial state; survivors keep their
/// relative order and are renumbered 1..m.
Dfa trim_reachable(Dfa const& d);

/// Moore partition refinement on the reachable part. States of the result
/// are numbered in breadth-first order from the initial state, visiting
/// symbols in alphabet order.
Dfa minimize(Dfa const& d);

std::size_t quotient_complexity(Dfa const& d);

/// Semigroup generated by the letter transformations (non-empty words).
TransformationSemigroup transition_semigroup(Dfa const&  d,
                                             std::size_t cap = kDefaultClosureCap);

/// transition_semigroup(minimize(d)); its size is the syntactic complexity.
TransformationSemigroup syntactic_semigroup(Dfa const&  d,
                                            std::size_t cap = kDefaultClosureCap);

/// Reachability is a partial order: no cycles other than self-loops.
bool is_partially_ordered(Dfa const& d);

/// A renumbering of `d` (same language) under which every letter is a
/// non-decreasing transformation, when one exists, i.e. when `d` is
/// partially ordered. States are ordered topologically, ties broken by the
/// original number.
std::optional<Dfa> non_decreasing_renumbering(Dfa const& d);

/// Connected components of the undirected graph with edges {p, pa} for
/// a in gamma. Throws InvalidArgument if gamma is empty or names an
/// unknown symbol.
Partition gamma_components(Dfa const& d, std::vector<Symbol> const& gamma);

inline constexpr std::size_t kDefaultSimonCap = 16;

struct SimonResult {
  enum class Status { holds, fails, skipped };

  Status status = Status::holds;
  /// On failure with a partially ordered automaton: the lexicographically
  /// least failing subset, the first offending component, and its maximal
  /// states.
  std::vector<Symbol> gamma;
  StateSet            component;
  StateSet            maximal_states;
  std::string         reason;

  bool holds() const noexcept {
    return status == Status::holds;
  }
};

/// Partially ordered, and for every non-empty subset gamma of the alphabet
/// each component of the gamma-restriction has exactly one state fixed by
/// every letter of gamma. `d` should be minimal. Skipped when the alphabet
/// is larger than `cap`.
SimonResult simon_check(Dfa const& d, std::size_t cap = kDefaultSimonCap);

/// Reverses every transition and swaps initial and final states.
Nfa reverse(Dfa const& d);

inline constexpr std::size_t kDefaultSubsetCap = 24;

struct Determinized {
  Dfa                   dfa;
  /// subsets[q - 1] is the set of NFA states behind DFA state q.
  std::vector<StateSet> subsets;
};

/// Subset construction over the reachable subsets only, numbered in
/// breadth-first discovery order from the initial set. A reached empty
/// subset is a non-final dead state. Throws ResourceLimit when the NFA has
/// more than `cap` states (cap itself may not exceed 64).
Determinized determinize_with_subsets(Nfa const&  m,
                                      std::size_t cap = kDefaultSubsetCap);

inline Dfa determinize(Nfa const& m, std::size_t cap = kDefaultSubsetCap) {
  return determinize_with_subsets(m, cap).dfa;
}

/// Quotient complexity of the reverse language.
std::size_t reversal_complexity(Dfa const& d, std::size_t cap = kDefaultSubsetCap);

/// One symbol per generator, delta(k, a) = k t_a. `names` defaults to
/// "a1", "a2", ... when empty.
Dfa dfa_from_transformations(std::vector<Transformation> const& generators,
                             State                              initial,
                             StateSet const&                    finals,
                             std::vector<std::string>           names = {});

/// A shortest word accepted from exactly one of p and q, if any.
std::optional<Word> distinguishing_word(Dfa const& d, State p, State q);

struct AnalyzeOptions {
  std::size_t closure_cap = kDefaultClosureCap;
  std::size_t simon_cap   = kDefaultSimonCap;
};

struct AnalysisReport {
  std::size_t reachable_states    = 0;
  std::size_t quotient_complexity = 0;
  std::size_t syntactic_complexity = 0;
  std::size_t monoid_size          = 0;
  bool        partially_ordered    = false;
  bool        r_trivial            = false;
  bool        l_trivial            = false;
  bool        j_trivial            = false;
  bool        h_trivial            = false;
  SimonResult simon;
};

/// Minimises `d`, builds its syntactic semigroup and evaluates the Green
/// predicates on the syntactic monoid. Throws InvariantViolation if the
/// results are inconsistent (J-trivial but not R- and L-trivial, or not
/// partially ordered).
AnalysisReport analyze(Dfa const& d, AnalyzeOptions const& options = {});

}  // namespace tsemi

#endif  // TSEMI_AUTOMATA_HPP_
