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

#include "tsemi/verification.hpp"

#include <gtest/gtest.h>

#include <map>

#include "tsemi/error.hpp"
#include "tsemi/partition.hpp"
#include "tsemi/witnesses.hpp"

using namespace tsemi;

TEST(verification, g_of_n) {
  EXPECT_EQ(g_of_n(1), 1);
  EXPECT_EQ(g_of_n(2), 2);
  EXPECT_EQ(g_of_n(4), 16);
  EXPECT_EQ(g_of_n(5), 65);
  EXPECT_THROW(g_of_n(0), InvalidArgument);
  for (std::size_t n = 1; n <= 25; ++n) {
    EXPECT_LE(g_of_n(n), factorial(static_cast<unsigned>(n)));
  }
}

TEST(verification, floor_e_factorial) {
  EXPECT_EQ(floor_e_factorial(3), 5);
  EXPECT_EQ(floor_e_factorial(4), 16);
  EXPECT_EQ(floor_e_factorial(6), 326);
  EXPECT_THROW(floor_e_factorial(1), InvalidArgument);
  for (std::size_t n = 2; n <= 40; ++n) {
    EXPECT_EQ(g_of_n(n), floor_e_factorial(n)) << n;
  }
  EXPECT_EQ(floor_e_factorial(22).str(), g_of_n(22).str());
}

TEST(verification, enumerate_f_q) {
  EXPECT_EQ(enumerate_f_q(4).size(), 24u);
  EXPECT_EQ(enumerate_f_q(1).size(), 1u);
  EXPECT_EQ(enumerate_f_q(3).size(), 6u);
  EXPECT_EQ(enumerate_f_q(8).size(), 40320u);
  EXPECT_THROW(enumerate_f_q(9), ResourceLimit);
  auto const f5 = enumerate_f_q(5);
  EXPECT_TRUE(std::is_sorted(f5.begin(), f5.end()));
  for (auto const& t : f5) {
    EXPECT_TRUE(is_non_decreasing(t));
  }
}

TEST(verification, brute_max_j_trivial) {
  EXPECT_EQ(brute_max_j_trivial(1).size, 1u);
  EXPECT_EQ(brute_max_j_trivial(2).size, 2u);
  for (std::size_t n = 3; n <= 4; ++n) {
    auto const r = brute_max_j_trivial(n);
    EXPECT_EQ(r.size, g_of_n(n));
    EXPECT_EQ(r.witness.size(), r.size);
    EXPECT_TRUE(r.witness.contains_identity());
    EXPECT_TRUE(is_j_trivial(r.witness));
    EXPECT_TRUE(saito_holds(r.witness));
    std::map<StateSet, Partition> seen;
    for (auto const& t : r.witness.elements()) {
      auto const [it, fresh] = seen.emplace(fixed_points(t), orbits(t));
      EXPECT_TRUE(fresh || it->second == orbits(t));
    }
  }
  EXPECT_THROW(brute_max_j_trivial(5), ResourceLimit);
  EXPECT_THROW(brute_max_j_trivial(5, 10), ResourceLimit);
  EXPECT_THROW(brute_max_j_trivial(4, 3), ResourceLimit);
}

TEST(verification, brute_force_is_deterministic) {
  auto const a = brute_max_j_trivial(4);
  auto const b = brute_max_j_trivial(4);
  EXPECT_TRUE(std::equal(a.witness.elements().begin(), a.witness.elements().end(),
                         b.witness.elements().begin(), b.witness.elements().end()));
  EXPECT_EQ(a.visited, b.visited);
}

TEST(verification, bounds_rows) {
  auto const rows = bounds_report({.max_n = 5});
  ASSERT_EQ(rows.size(), 4u);
  auto const& two = rows[0];
  EXPECT_EQ(two.n, 2u);
  EXPECT_EQ(two.r_trivial_bound, 2);
  EXPECT_EQ(two.j_trivial_bound, 2);
  EXPECT_EQ(two.reversal_bound, 2);
  auto const& four = rows[2];
  EXPECT_EQ(four.r_trivial_bound, 24);
  EXPECT_EQ(four.j_trivial_bound, 16);
  EXPECT_EQ(four.floor_e_form, 16);
  EXPECT_EQ(four.reversal_bound, 8);
  EXPECT_EQ(four.witnessed_sigma_r, 24u);
  EXPECT_EQ(four.witnessed_sigma_j, 16u);
  EXPECT_EQ(four.witnessed_rev, 8u);
  EXPECT_EQ(four.brute_max_j, 16u);
  EXPECT_EQ(rows[3].witnessed_sigma_j, 65u);
  EXPECT_FALSE(rows[3].brute_max_j.has_value());
  for (auto const& row : rows) {
    EXPECT_EQ(row.witnessed_sigma_r, row.r_trivial_bound);
    EXPECT_EQ(row.witnessed_sigma_j, row.j_trivial_bound);
    EXPECT_EQ(row.witnessed_rev, row.reversal_bound);
  }
}

TEST(verification, bounds_caps_become_notes) {
  auto const rows = bounds_report({.max_n = 9, .brute_max_n = 5});
  auto const& nine = rows.back();
  EXPECT_EQ(nine.n, 9u);
  EXPECT_FALSE(nine.witnessed_sigma_r.has_value());
  EXPECT_FALSE(nine.witnessed_sigma_j.has_value());
  EXPECT_EQ(nine.witnessed_rev, 256u);
  EXPECT_FALSE(rows[3].brute_max_j.has_value());
  EXPECT_FALSE(rows[3].notes.empty());
  auto const text = format_bounds(rows, ReportFormat::text);
  EXPECT_NE(text.find("# n=9"), std::string::npos);
}

TEST(verification, format_bounds) {
  auto const rows = bounds_report({.max_n = 2});
  EXPECT_EQ(format_bounds(rows, ReportFormat::tsv),
            "n\tr_trivial_bound\tj_trivial_bound\tfloor_e_form\treversal_bound\t"
            "witnessed_sigma_r\twitnessed_sigma_j\twitnessed_rev\tbrute_max_j\n"
            "2\t2\t2\t2\t2\t2\t2\t2\t2\n");
}

TEST(verification, brute_force_matches_exhaustive_subsets) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const f = enumerate_f_q(n);
    std::vector<Transformation> rest;
    for (auto const& t : f) {
      if (t != identity(n)) {
        rest.push_back(t);
      }
    }
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
      std::vector<Transformation> gens{identity(n)};
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (mask >> i & 1) {
          gens.push_back(rest[i]);
        }
      }
      auto const s = tsemi::close(gens);
      EXPECT_EQ(saito_holds(s), is_j_trivial(s));
      if (is_j_trivial(s)) {
        best = std::max(best, s.size());
      }
    }
    EXPECT_EQ(brute_max_j_trivial(n).size, best) << n;
  }
}
