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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tsemi/automata.hpp"
#include "tsemi/cli.hpp"
#include "tsemi/partition.hpp"
#include "tsemi/semigroup.hpp"
#include "tsemi/text_format.hpp"
#include "tsemi/verification.hpp"
#include "tsemi/witnesses.hpp"
#include "../test_support.hpp"

using namespace tsemi;
using tsemi::testing::T;
using Clock = std::chrono::steady_clock;

namespace {

// Collects the first failure message; later checks are still evaluated.
class Check {
 public:
  void expect(bool ok, std::string const& what) {
    if (!ok && detail_.empty()) {
      detail_ = what;
    }
  }
  bool ok() const {
    return detail_.empty();
  }
  std::string const& detail() const {
    return detail_;
  }

 private:
  std::string detail_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
double timed(F&& f) {
  auto const start = Clock::now();
  f();
  return seconds_since(start);
}

std::vector<Transformation> as_vector(std::span<Transformation const> s) {
  return {s.begin(), s.end()};
}

std::string cli_output(std::vector<std::string> const& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

// Every submonoid of F_n, found by closing each subset of non-identity
// maps together with the identity. Only used for n <= 3.
std::vector<TransformationSemigroup> all_submonoids(std::size_t n) {
  auto const f = enumerate_f_q(n);
  std::vector<Transformation> rest;
  for (auto const& t : f) {
    if (t != identity(n)) {
      rest.push_back(t);
    }
  }
  std::set<std::vector<Transformation>>  seen;
  std::vector<TransformationSemigroup>   out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
    std::vector<Transformation> gens{identity(n)};
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (mask >> i & 1) {
        gens.push_back(rest[i]);
      }
    }
    auto s = close(gens);
    if (seen.insert(as_vector(s.elements())).second) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

bool fixed_points_determine_orbits(std::span<Transformation const> elements) {
  std::map<StateSet, Partition> seen;
  for (auto const& t : elements) {
    auto const [it, fresh] = seen.emplace(fixed_points(t), orbits(t));
    if (!fresh && it->second != orbits(t)) {
      return false;
    }
  }
  return true;
}

// Saito's condition on the syntactic monoid, applied after renumbering the
// minimal DFA so its letters are non-decreasing. Without such a numbering
// the premise fails and the condition is reported false.
bool saito_on_syntactic(Dfa const& d) {
  auto const renumbered = non_decreasing_renumbering(minimize(d));
  if (!renumbered) {
    return false;
  }
  return saito_holds(monoid_completion(transition_semigroup(*renumbered)));
}

// ---------------------------------------------------------------------------

void criterion_1(Check& c) {
  std::string const path = "acceptance_a4.txt";
  int               code = 0;
  auto const start = Clock::now();
  cli_output({"witness", "rtrivial", "-n", "4", "-o", path}, code);
  c.expect(code == 0, "witness rtrivial -n 4 failed");
  auto const report = cli_output({"analyze", path}, code);
  std::remove(path.c_str());
  c.expect(code == 0, "analyze failed");
  c.expect(report.find("quotient_complexity: 4\n") != std::string::npos, "kappa != 4");
  c.expect(report.find("syntactic_complexity: 24\n") != std::string::npos, "sigma != 24");
  c.expect(report.find("r_trivial: true\n") != std::string::npos, "A_4 not R-trivial");
  std::size_t const expected[] = {2, 6, 24, 120};
  for (std::size_t n = 2; n <= 5; ++n) {
    auto const sigma = syntactic_semigroup(witness_a(n)).size();
    c.expect(sigma == expected[n - 2],
             "sigma(A_" + std::to_string(n) + ") = " + std::to_string(sigma));
  }
  double const elapsed = seconds_since(start);
  c.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
}

void criterion_2(Check& c) {
  for (std::size_t n = 2; n <= 8; ++n) {
    c.expect(gf_q(n).size() == 1 + n * (n - 1) / 2, "|gf_q(" + std::to_string(n) + ")|");
  }
  std::vector<Transformation> const example{T({1, 2, 3, 4}), T({1, 2, 4, 4}), T({1, 3, 3, 4}),
                                            T({1, 4, 3, 4}), T({2, 2, 3, 4}), T({3, 2, 3, 4}),
                                            T({4, 2, 3, 4})};
  c.expect(gf_q(4) == example, "gf_q(4) differs from the seven listed maps");
}

void criterion_3(Check& c) {
  for (std::size_t n = 3; n <= 4; ++n) {
    auto const gens = gf_q(n);
    auto const full = static_cast<std::size_t>(factorial(static_cast<unsigned>(n)));
    for (std::size_t drop = 0; drop < gens.size(); ++drop) {
      auto fewer = gens;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
      std::size_t size = 0;
      double const t = timed([&] { size = close(fewer).size(); });
      c.expect(size < full, "dropping " + to_string(gens[drop]) + " keeps size "
                                + std::to_string(size));
      c.expect(t < 1.0, "closure run took " + std::to_string(t) + " s");
    }
  }
}

void criterion_4(Check& c) {
  auto const start = Clock::now();
  auto const s4    = s_n_direct(4);
  c.expect(s4.size() == 16, "|S_4| = " + std::to_string(s4.size()));
  std::vector<std::size_t> counts;
  for (auto const& block : s_n_blocks(4)) {
    counts.push_back(block.count);
  }
  c.expect(counts == std::vector<std::size_t>{1, 1, 1, 1, 2, 2, 2, 6}, "per-Z counts differ");
  for (std::size_t n = 2; n <= 5; ++n) {
    c.expect(as_vector(close(gs_n(n)).elements()) == as_vector(s_n_direct(n).elements()),
             "close(gs_n(" + std::to_string(n) + ")) != S_n");
  }
  c.expect(close(gs_n(5)).size() == 65, "|close(gs_n(5))| != 65");
  std::vector<Transformation> const listed{
      T({1, 2, 3, 4, 5}), T({1, 2, 3, 5, 5}), T({1, 2, 4, 5, 5}), T({1, 2, 5, 4, 5}),
      T({1, 3, 5, 4, 5}), T({1, 4, 3, 5, 5}), T({1, 4, 4, 5, 5}), T({1, 5, 3, 4, 5}),
      T({2, 5, 3, 4, 5}), T({3, 2, 5, 4, 5}), T({3, 3, 5, 4, 5}), T({4, 2, 3, 5, 5}),
      T({4, 2, 4, 5, 5}), T({4, 4, 3, 5, 5}), T({4, 4, 4, 5, 5}), T({5, 2, 3, 4, 5})};
  c.expect(gs_n(5) == listed, "gs_n(5) differs from the sixteen listed maps");
  double const elapsed = seconds_since(start);
  c.expect(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s");
}

void criterion_5(Check& c) {
  for (std::size_t n = 2; n <= 20; ++n) {
    c.expect(g_of_n(n) == floor_e_factorial(n), "mismatch at n = " + std::to_string(n));
  }
}

void criterion_6(Check& c) {
  for (std::size_t n = 3; n <= 4; ++n) {
    std::optional<BruteForceResult> result;
    double const t = timed([&] { result.emplace(brute_max_j_trivial(n)); });
    std::size_t const want = n == 3 ? 5 : 16;
    c.expect(result->size == want, "brute_max_j_trivial(" + std::to_string(n) + ") = "
                                       + std::to_string(result->size));
    c.expect(result->size == g_of_n(n), "size differs from g(n)");
    c.expect(is_j_trivial(result->witness), "witness not J-trivial");
    c.expect(saito_holds(result->witness), "witness fails Saito");
    c.expect(t < 60.0, "runtime " + std::to_string(t) + " s");
  }
}

void criterion_7(Check& c) {
  auto const start = Clock::now();
  for (std::size_t n = 2; n <= 10; ++n) {
    auto const want = std::size_t{1} << (n - 1);
    auto const rc   = reversal_complexity(witness_b(n));
    c.expect(rc == want, "reversal_complexity(B_" + std::to_string(n) + ") = " + std::to_string(rc));
    auto const det = determinize_with_subsets(reverse(witness_b(n)));
    std::set<StateSet> subsets(det.subsets.begin(), det.subsets.end());
    bool all_contain_n = true;
    for (auto const& s : subsets) {
      all_contain_n = all_contain_n && !s.empty() && s.back() == n;
    }
    c.expect(subsets.size() == want && all_contain_n,
             "reachable subsets for n = " + std::to_string(n) + " are not those containing n");
  }
  double const elapsed = seconds_since(start);
  c.expect(elapsed < 2.0, "runtime " + std::to_string(elapsed) + " s");
}

void criterion_8(Check& c) {
  auto agree = [&](Dfa const& d, std::string const& label) {
    auto const simon = simon_check(minimize(d));
    c.expect(simon.status != SimonResult::Status::skipped, label + ": simon check skipped");
    bool const j     = is_j_trivial(syntactic_semigroup(d));
    bool const saito = saito_on_syntactic(d);
    c.expect(simon.holds() == j && j == saito,
             label + ": simon=" + std::to_string(simon.holds()) + " j=" + std::to_string(j)
                 + " saito=" + std::to_string(saito));
  };
  for (std::size_t n = 2; n <= 5; ++n) {
    agree(witness_a(n), "A_" + std::to_string(n));
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    agree(witness_b(n), "B_" + std::to_string(n));
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    auto gens = gs_n(n);
    gens.push_back(t_max(n));
    agree(dfa_from_transformations(gens, 1, {static_cast<State>(n)}), "GS_" + std::to_string(n));
  }
  auto const branching = tsemi::testing::branching_dfa();
  agree(branching, "branching");

  std::mt19937_64 rng(2026);
  for (int i = 0; i < 500; ++i) {
    std::size_t const n = 1 + rng() % 6;
    std::size_t const k = 1 + rng() % 4;
    agree(tsemi::testing::random_partially_ordered_dfa(rng, n, k), "random #" + std::to_string(i));
  }

  auto const result = simon_check(branching);
  c.expect(result.status == SimonResult::Status::fails, "branching passes the component check");
  c.expect(result.gamma == std::vector<Symbol>{0, 1}, "branching witness gamma is not {a,b}");
  c.expect(result.maximal_states == StateSet{2, 4}, "branching maximal states are not {2,4}");
}

void criterion_9(Check& c) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const f = enumerate_f_q(n);
    std::vector<Partition> orbit;
    std::vector<StateSet>  fixed;
    for (auto const& t : f) {
      orbit.push_back(orbits(t));
      fixed.push_back(fixed_points(t));
      c.expect(fixed.back() == max_set(orbit.back()), "Fix != Max(Orbit) for " + to_string(t));
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (refines(orbit[i], orbit[j])) {
          c.expect(std::includes(fixed[i].begin(), fixed[i].end(), fixed[j].begin(), fixed[j].end()),
                   "refinement without fixed-point containment: " + to_string(f[i]) + ", "
                       + to_string(f[j]));
        }
      }
    }
  }
  c.expect(fixed_points_determine_orbits(s_n_direct(4).elements()), "S_4 violates injectivity");
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const r = brute_max_j_trivial(n);
    c.expect(fixed_points_determine_orbits(r.witness.elements()),
             "brute-force witness for n = " + std::to_string(n) + " violates injectivity");
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& s : all_submonoids(n)) {
      if (is_j_trivial(s)) {
        c.expect(fixed_points_determine_orbits(s.elements()), "a J-trivial submonoid of F_"
                                                                  + std::to_string(n)
                                                                  + " violates injectivity");
      }
    }
  }
}

void criterion_10(Check& c) {
  auto from_sizes = [](std::vector<std::size_t> const& sizes) {
    std::vector<std::uint32_t> labels;
    for (std::size_t b = 0; b < sizes.size(); ++b) {
      labels.insert(labels.end(), sizes[b], static_cast<std::uint32_t>(b));
    }
    return Partition::from_labels(labels);
  };
  c.expect(count_e(from_sizes({3, 2, 5})) == 48, "count_E(3,2,5) != 48");
  c.expect(count_e(from_sizes({1, 1, 8})) == 5040, "count_E(1,1,8) != 5040");
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& p : all_partitions(n)) {
      c.expect(count_e(p) == enumerate_e(p).size(), "count_E != |E| for " + to_string(p));
    }
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    for (auto const& p : all_partitions(n)) {
      std::size_t nontrivial = 0;
      for (auto s : p.block_sizes()) {
        nontrivial += s > 1;
      }
      auto const bound = factorial(static_cast<unsigned>(n - p.block_count()));
      c.expect(count_e(p) <= bound, "count_E exceeds (n-r)! for " + to_string(p));
      c.expect((count_e(p) == bound) == (nontrivial <= 1), "equality case wrong for " + to_string(p));
    }
  }
}

struct Criterion {
  int                          id;
  char const*                  name;
  std::function<void(Check&)>  run;
};

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "R-trivial tightness", criterion_1},
      {2, "generator cardinality", criterion_2},
      {3, "generator minimality", criterion_3},
      {4, "J-trivial monoid", criterion_4},
      {5, "bound identity", criterion_5},
      {6, "extremality oracle", criterion_6},
      {7, "reversal", criterion_7},
      {8, "component check and orbit condition agree", criterion_8},
      {9, "structure of fixed points and orbits", criterion_9},
      {10, "counting", criterion_10},
  };
  int failures = 0;
  for (auto const& criterion : criteria) {
    Check        check;
    double       elapsed = 0;
    std::string  crash;
    try {
      elapsed = timed([&] { criterion.run(check); });
    } catch (std::exception const& e) {
      crash = e.what();
    }
    bool const pass = check.ok() && crash.empty();
    failures += pass ? 0 : 1;
    std::printf("%s  %2d  %-45s %8.3f s", pass ? "PASS" : "FAIL", criterion.id, criterion.name,
                elapsed);
    if (!crash.empty()) {
      std::printf("  exception: %s", crash.c_str());
    } else if (!check.ok()) {
      std::printf("  %s", check.detail().c_str());
    }
    std::printf("\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
