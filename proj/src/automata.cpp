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

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "scc.hpp"
#include "tsemi/error.hpp"
#include "union_find.hpp"

namespace tsemi {

namespace {

  void check_alphabet(std::vector<std::string> const& alphabet) {
    if (alphabet.empty()) {
      throw InvalidArgument("the alphabet must be non-empty");
    }
    std::set<std::string> names(alphabet.begin(), alphabet.end());
    if (names.size() != alphabet.size()) {
      throw InvalidArgument("the alphabet contains a duplicate symbol");
    }
  }

  void check_state(std::size_t n, State s, char const* what) {
    if (s < 1 || s > n) {
      throw InvalidArgument(std::string(what) + " state " + std::to_string(s)
                            + " is outside 1.." + std::to_string(n));
    }
  }

  StateSet checked_set(std::size_t n, StateSet set, char const* what) {
    set = make_state_set(std::move(set));
    for (State s : set) {
      check_state(n, s, what);
    }
    return set;
  }

  // Keeps the states in `order` (1-based, old numbering), renumbered by
  // their position in it.
  Dfa renumber(Dfa const& d, std::vector<State> const& order) {
    std::vector<State> new_id(d.state_count() + 1, 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      new_id[order[i]] = static_cast<State>(i + 1);
    }
    std::size_t const  k = d.alphabet_size();
    std::vector<State> delta(order.size() * k);
    StateSet           finals;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Symbol a = 0; a < k; ++a) {
        delta[i * k + a] = new_id[d.next(order[i], a)];
      }
      if (d.is_final(order[i])) {
        finals.push_back(static_cast<State>(i + 1));
      }
    }
    return Dfa(order.size(), d.alphabet(), std::move(delta),
               new_id[d.initial()], std::move(finals));
  }

  // States reachable from the initial state in breadth-first order.
  std::vector<State> bfs_order(Dfa const& d) {
    std::vector<bool>  seen(d.state_count() + 1, false);
    std::vector<State> order{d.initial()};
    seen[d.initial()] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Symbol a = 0; a < d.alphabet_size(); ++a) {
        State const q = d.next(order[i], a);
        if (!seen[q]) {
          seen[q] = true;
          order.push_back(q);
        }
      }
    }
    return order;
  }

  detail::Digraph transition_graph(Dfa const& d) {
    std::vector<std::uint32_t> succ(d.delta().size());
    std::transform(d.delta().begin(), d.delta().end(), succ.begin(),
                   [](State s) { return s - 1; });
    return detail::uniform_digraph(d.state_count(), d.alphabet_size(), succ);
  }

}  // namespace

////////////////////////////////////////////////////////////////////////////////
// Dfa
////////////////////////////////////////////////////////////////////////////////

Dfa::Dfa(std::size_t              states,
         std::vector<std::string> alphabet,
         std::vector<State>       delta,
         State                    initial,
         StateSet                 finals)
    : states_(states),
      alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      initial_(initial) {
  if (states_ == 0) {
    throw InvalidArgument("a DFA needs at least one state");
  }
  check_alphabet(alphabet_);
  if (delta_.size() != states_ * alphabet_.size()) {
    throw InvalidArgument("transition table has " + std::to_string(delta_.size())
                          + " entries, expected "
                          + std::to_string(states_ * alphabet_.size()));
  }
  for (State q : delta_) {
    check_state(states_, q, "target");
  }
  check_state(states_, initial_, "initial");
  finals_ = checked_set(states_, std::move(finals), "final");
  is_final_.assign(states_, false);
  for (State f : finals_) {
    is_final_[f - 1] = true;
  }
}

State Dfa::run(State p, std::span<Symbol const> word) const noexcept {
  for (Symbol a : word) {
    p = next(p, a);
  }
  return p;
}

Transformation Dfa::letter(Symbol a) const {
  if (states_ > Transformation::max_degree) {
    throw ResourceLimit("a DFA with " + std::to_string(states_)
                        + " states exceeds the transformation degree limit of "
                        + std::to_string(Transformation::max_degree));
  }
  if (a >= alphabet_.size()) {
    throw InvalidArgument("symbol index " + std::to_string(a) + " is out of range");
  }
  std::vector<std::uint8_t> images(states_);
  for (State p = 1; p <= states_; ++p) {
    images[p - 1] = static_cast<std::uint8_t>(next(p, a) - 1);
  }
  return Transformation::from_raw(std::move(images));
}

////////////////////////////////////////////////////////////////////////////////
// Nfa
////////////////////////////////////////////////////////////////////////////////

Nfa::Nfa(std::size_t              states,
         std::vector<std::string> alphabet,
         std::vector<StateSet>    delta,
         StateSet                 initials,
         StateSet                 finals)
    : states_(states), alphabet_(std::move(alphabet)), delta_(std::move(delta)) {
  if (states_ == 0) {
    throw InvalidArgument("an NFA needs at least one state");
  }
  check_alphabet(alphabet_);
  if (delta_.size() != states_ * alphabet_.size()) {
    throw InvalidArgument("transition table has " + std::to_string(delta_.size())
                          + " entries, expected "
                          + std::to_string(states_ * alphabet_.size()));
  }
  for (auto& targets : delta_) {
    targets = checked_set(states_, std::move(targets), "target");
  }
  initials_ = checked_set(states_, std::move(initials), "initial");
  finals_   = checked_set(states_, std::move(finals), "final");
}

bool Nfa::accepts(std::span<Symbol const> word) const {
  std::vector<bool> current(states_ + 1, false);
  for (State s : initials_) {
    current[s] = true;
  }
  for (Symbol a : word) {
    std::vector<bool> next_set(states_ + 1, false);
    for (State p = 1; p <= states_; ++p) {
      if (current[p]) {
        for (State q : next(p, a)) {
          next_set[q] = true;
        }
      }
    }
    current = std::move(next_set);
  }
  return std::any_of(finals_.begin(), finals_.end(), [&](State f) {
    return current[f];
  });
}

std::size_t Nfa::transition_count() const noexcept {
  std::size_t total = 0;
  for (auto const& targets : delta_) {
    total += targets.size();
  }
  return total;
}

bool Nfa::is_deterministic() const noexcept {
  return initials_.size() == 1
         && std::all_of(delta_.begin(), delta_.end(), [](auto const& t) {
              return t.size() == 1;
            });
}

////////////////////////////////////////////////////////////////////////////////
// Operations
////////////////////////////////////////////////////////////////////////////////

Dfa trim_reachable(Dfa const& d) {
  auto order = bfs_order(d);
  std::sort(order.begin(), order.end());
  return renumber(d, order);
}

Dfa minimize(Dfa const& input) {
  Dfa const         d = trim_reachable(input);
  std::size_t const n = d.state_count();
  std::size_t const k = d.alphabet_size();

  // Moore refinement: split by acceptance, then by successor classes,
  // until the number of classes is stable.
  std::vector<std::uint32_t> cls(n);
  std::size_t                count = 0;
  {
    bool has_final = false, has_other = false;
    for (State p = 1; p <= n; ++p) {
      (d.is_final(p) ? has_final : has_other) = true;
    }
    for (State p = 1; p <= n; ++p) {
      cls[p - 1] = (has_final && has_other && d.is_final(p)) ? 1 : 0;
    }
    count = (has_final && has_other) ? 2 : 1;
  }
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::uint32_t>                          next_cls(n);
    std::vector<std::uint32_t>                          signature(k + 1);
    for (State p = 1; p <= n; ++p) {
      signature[0] = cls[p - 1];
      for (Symbol a = 0; a < k; ++a) {
        signature[a + 1] = cls[d.next(p, a) - 1];
      }
      next_cls[p - 1] = ids.try_emplace(signature,
                                        static_cast<std::uint32_t>(ids.size()))
                            .first->second;
    }
    cls = std::move(next_cls);
    if (ids.size() == count) {
      break;
    }
    count = ids.size();
  }

  // Quotient, then canonical breadth-first numbering.
  std::vector<State> rep(count, 0);
  for (State p = n; p >= 1; --p) {
    rep[cls[p - 1]] = p;
  }
  std::vector<State> delta(count * k);
  StateSet           finals;
  for (std::uint32_t c = 0; c < count; ++c) {
    for (Symbol a = 0; a < k; ++a) {
      delta[c * k + a] = cls[d.next(rep[c], a) - 1] + 1;
    }
    if (d.is_final(rep[c])) {
      finals.push_back(c + 1);
    }
  }
  Dfa const quotient(count, d.alphabet(), std::move(delta),
                     cls[d.initial() - 1] + 1, std::move(finals));
  return renumber(quotient, bfs_order(quotient));
}

std::size_t quotient_complexity(Dfa const& d) {
  return minimize(d).state_count();
}

TransformationSemigroup transition_semigroup(Dfa const& d, std::size_t cap) {
  std::vector<Transformation> letters;
  letters.reserve(d.alphabet_size());
  for (Symbol a = 0; a < d.alphabet_size(); ++a) {
    letters.push_back(d.letter(a));
  }
  return close(letters, cap);
}

TransformationSemigroup syntactic_semigroup(Dfa const& d, std::size_t cap) {
  return transition_semigroup(minimize(d), cap);
}

bool is_partially_ordered(Dfa const& d) {
  std::size_t count = 0;
  detail::strongly_connected_components(transition_graph(d), count);
  return count == d.state_count();
}

std::optional<Dfa> non_decreasing_renumbering(Dfa const& d) {
  if (!is_partially_ordered(d)) {
    return std::nullopt;
  }
  // Kahn's algorithm, smallest available state first; self-loops ignored.
  std::size_t const        n = d.state_count();
  std::vector<std::size_t> indegree(n + 1, 0);
  std::vector<StateSet>    succ(n + 1);
  for (State p = 1; p <= n; ++p) {
    StateSet targets;
    for (Symbol a = 0; a < d.alphabet_size(); ++a) {
      if (d.next(p, a) != p) {
        targets.push_back(d.next(p, a));
      }
    }
    succ[p] = make_state_set(std::move(targets));
    for (State q : succ[p]) {
      ++indegree[q];
    }
  }
  std::set<State> ready;
  for (State p = 1; p <= n; ++p) {
    if (indegree[p] == 0) {
      ready.insert(p);
    }
  }
  std::vector<State> order;
  while (!ready.empty()) {
    State const p = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(p);
    for (State q : succ[p]) {
      if (--indegree[q] == 0) {
        ready.insert(q);
      }
    }
  }
  return renumber(d, order);
}

Partition gamma_components(Dfa const& d, std::vector<Symbol> const& gamma) {
  if (gamma.empty()) {
    throw InvalidArgument("gamma must be a non-empty set of symbols");
  }
  detail::UnionFind uf(d.state_count());
  for (Symbol a : gamma) {
    if (a >= d.alphabet_size()) {
      throw InvalidArgument("symbol index " + std::to_string(a) + " is out of range");
    }
    for (State p = 1; p <= d.state_count(); ++p) {
      uf.unite(p - 1, d.next(p, a) - 1);
    }
  }
  auto labels = uf.roots();
  return Partition::from_labels(labels);
}

namespace {

  // Fills `result` and returns false if gamma has a component whose number
  // of gamma-fixed states is not exactly one.
  bool gamma_ok(Dfa const& d, std::vector<Symbol> const& gamma, SimonResult& result) {
    auto const components = gamma_components(d, gamma);
    for (auto const& component : components.blocks()) {
      StateSet maximal;
      for (State q : component) {
        bool fixed = std::all_of(gamma.begin(), gamma.end(), [&](Symbol a) {
          return d.next(q, a) == q;
        });
        if (fixed) {
          maximal.push_back(q);
        }
      }
      if (maximal.size() != 1) {
        result.status         = SimonResult::Status::fails;
        result.gamma          = gamma;
        result.component      = component;
        result.maximal_states = std::move(maximal);
        result.reason         = "a component has "
                        + std::to_string(result.maximal_states.size())
                        + " maximal states";
        return false;
      }
    }
    return true;
  }

  // Depth-first over subsets extending `gamma` with larger symbols; visits
  // subsets in lexicographic order of their sorted symbol lists.
  bool all_subsets_ok(Dfa const&           d,
                      std::vector<Symbol>& gamma,
                      SimonResult&         result) {
    Symbol const start = gamma.empty() ? 0 : gamma.back() + 1;
    for (Symbol a = start; a < d.alphabet_size(); ++a) {
      gamma.push_back(a);
      if (!gamma_ok(d, gamma, result) || !all_subsets_ok(d, gamma, result)) {
        return false;
      }
      gamma.pop_back();
    }
    return true;
  }

}  // namespace

SimonResult simon_check(Dfa const& d, std::size_t cap) {
  SimonResult result;
  if (d.alphabet_size() > cap) {
    result.status = SimonResult::Status::skipped;
    result.reason = "alphabet has " + std::to_string(d.alphabet_size())
                    + " symbols, more than the cap of " + std::to_string(cap);
    return result;
  }
  if (!is_partially_ordered(d)) {
    result.status = SimonResult::Status::fails;
    result.reason = "automaton is not partially ordered";
    return result;
  }
  std::vector<Symbol> gamma;
  all_subsets_ok(d, gamma, result);
  return result;
}

Nfa reverse(Dfa const& d) {
  std::size_t const     k = d.alphabet_size();
  std::vector<StateSet> delta(d.state_count() * k);
  for (State p = 1; p <= d.state_count(); ++p) {
    for (Symbol a = 0; a < k; ++a) {
      delta[(d.next(p, a) - 1) * k + a].push_back(p);
    }
  }
  return Nfa(d.state_count(), d.alphabet(), std::move(delta), d.finals(),
             StateSet{d.initial()});
}

Determinized determinize_with_subsets(Nfa const& m, std::size_t cap) {
  if (cap > 64) {
    throw InvalidArgument("the subset-construction cap cannot exceed 64 states");
  }
  if (m.state_count() > cap) {
    throw ResourceLimit("subset construction on " + std::to_string(m.state_count())
                        + " NFA states exceeds the cap of " + std::to_string(cap));
  }
  std::size_t const k = m.alphabet_size();
  // Successor masks per (state, symbol).
  std::vector<std::uint64_t> step(m.state_count() * k, 0);
  for (State p = 1; p <= m.state_count(); ++p) {
    for (Symbol a = 0; a < k; ++a) {
      for (State q : m.next(p, a)) {
        step[(p - 1) * k + a] |= std::uint64_t{1} << (q - 1);
      }
    }
  }
  std::uint64_t final_mask = 0;
  for (State f : m.finals()) {
    final_mask |= std::uint64_t{1} << (f - 1);
  }
  std::uint64_t initial_mask = 0;
  for (State s : m.initials()) {
    initial_mask |= std::uint64_t{1} << (s - 1);
  }

  std::vector<std::uint64_t>                       subsets{initial_mask};
  std::unordered_map<std::uint64_t, std::uint32_t> id{{initial_mask, 1}};
  std::vector<State>                               delta;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Symbol a = 0; a < k; ++a) {
      std::uint64_t target = 0;
      for (std::uint64_t rest = subsets[i]; rest != 0; rest &= rest - 1) {
        target |= step[static_cast<std::size_t>(__builtin_ctzll(rest)) * k + a];
      }
      auto [it, inserted]
          = id.try_emplace(target, static_cast<std::uint32_t>(subsets.size() + 1));
      if (inserted) {
        subsets.push_back(target);
      }
      delta.push_back(it->second);
    }
  }

  StateSet              finals;
  std::vector<StateSet> sets;
  sets.reserve(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (subsets[i] & final_mask) {
      finals.push_back(static_cast<State>(i + 1));
    }
    StateSet set;
    for (std::uint64_t rest = subsets[i]; rest != 0; rest &= rest - 1) {
      set.push_back(static_cast<State>(__builtin_ctzll(rest)) + 1);
    }
    sets.push_back(std::move(set));
  }
  return {Dfa(subsets.size(), m.alphabet(), std::move(delta), 1, std::move(finals)),
          std::move(sets)};
}

std::size_t reversal_complexity(Dfa const& d, std::size_t cap) {
  Dfa const   minimal   = minimize(d);
  Dfa const   subset    = determinize(reverse(minimal), cap);
  std::size_t const kappa = quotient_complexity(subset);
  // Reversing an accessible DFA and determinising gives a minimal DFA.
  if (kappa != subset.state_count()) {
    throw InvariantViolation("subset construction of a reversed minimal DFA "
                             "was not minimal");
  }
  return kappa;
}

Dfa dfa_from_transformations(std::vector<Transformation> const& generators,
                             State                              initial,
                             StateSet const&                    finals,
                             std::vector<std::string>           names) {
  if (generators.empty()) {
    throw InvalidArgument("at least one generator is required");
  }
  std::size_t const n = generators.front().degree();
  for (auto const& g : generators) {
    if (g.degree() != n) {
      throw InvalidArgument("generators have mixed degrees "
                            + std::to_string(n) + " and "
                            + std::to_string(g.degree()));
    }
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
      names.push_back("a" + std::to_string(i + 1));
    }
  }
  if (names.size() != generators.size()) {
    throw InvalidArgument("expected one symbol name per generator");
  }
  std::size_t const  k = generators.size();
  std::vector<State> delta(n * k);
  for (State p = 1; p <= n; ++p) {
    for (Symbol a = 0; a < k; ++a) {
      delta[(p - 1) * k + a] = generators[a][p];
    }
  }
  return Dfa(n, std::move(names), std::move(delta), initial, finals);
}

std::optional<Word> distinguishing_word(Dfa const& d, State p, State q) {
  // Breadth-first search over state pairs.
  std::size_t const n = d.state_count();
  auto key = [n](State a, State b) { return (a - 1) * n + (b - 1); };
  std::vector<std::pair<std::size_t, Symbol>> parent(n * n, {SIZE_MAX, 0});
  std::vector<bool>                           seen(n * n, false);
  std::deque<std::pair<State, State>>         queue{{p, q}};
  seen[key(p, q)] = true;
  while (!queue.empty()) {
    auto const [a, b] = queue.front();
    queue.pop_front();
    if (d.is_final(a) != d.is_final(b)) {
      Word        word;
      std::size_t at = key(a, b);
      while (parent[at].first != SIZE_MAX) {
        word.push_back(parent[at].second);
        at = parent[at].first;
      }
      std::reverse(word.begin(), word.end());
      return word;
    }
    for (Symbol s = 0; s < d.alphabet_size(); ++s) {
      State const na = d.next(a, s), nb = d.next(b, s);
      if (!seen[key(na, nb)]) {
        seen[key(na, nb)]   = true;
        parent[key(na, nb)] = {key(a, b), s};
        queue.emplace_back(na, nb);
      }
    }
  }
  return std::nullopt;
}

AnalysisReport analyze(Dfa const& d, AnalyzeOptions const& options) {
  AnalysisReport report;
  report.reachable_states    = trim_reachable(d).state_count();
  Dfa const minimal          = minimize(d);
  report.quotient_complexity = minimal.state_count();

  auto const semigroup        = transition_semigroup(minimal, options.closure_cap);
  report.syntactic_complexity = semigroup.size();
  report.monoid_size          = semigroup.size() + (semigroup.contains_identity() ? 0 : 1);
  report.partially_ordered    = is_partially_ordered(minimal);
  report.r_trivial            = is_r_trivial(semigroup);
  report.l_trivial            = is_l_trivial(semigroup);
  report.j_trivial            = is_j_trivial(semigroup);
  report.h_trivial            = is_h_trivial(semigroup);
  report.simon                = simon_check(minimal, options.simon_cap);

  if (report.j_trivial && !(report.r_trivial && report.l_trivial)) {
    throw InvariantViolation("monoid is J-trivial but not both R- and L-trivial");
  }
  if (report.j_trivial && !report.partially_ordered) {
    throw InvariantViolation("monoid is J-trivial but the minimal DFA is not "
                             "partially ordered");
  }
  if (report.simon.status != SimonResult::Status::skipped
      && report.simon.holds() != report.j_trivial) {
    throw InvariantViolation("component check and J-triviality disagree");
  }
  return report;
}

}  // namespace tsemi
