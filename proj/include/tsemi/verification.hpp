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

#ifndef TSEMI_VERIFICATION_HPP_
#define TSEMI_VERIFICATION_HPP_

// Closed-form syntactic-complexity bounds, exhaustive extremality search,
// and the report that puts them next to the witnessed values.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "semigroup.hpp"
#include "transformation.hpp"

namespace tsemi {

/// sum_{r=1}^{n} C(n-1, r-1) (n-r)!, the size of S_n. Needs n >= 1.
BigInt g_of_n(std::size_t n);

/// floor(e (n-1)!) as the exact sum of (n-1)!/k! for k = 0..n-1. Needs
/// n >= 2 (at n = 1 the floor is 2 while g(1) = 1).
BigInt floor_e_factorial(std::size_t n);

/// Every non-decreasing map of degree n, lexicographic; n! of them.
/// Throws ResourceLimit if n > cap.
std::vector<Transformation> enumerate_f_q(std::size_t n, std::size_t cap = 8);

struct BruteForceResult {
  std::size_t             size;
  TransformationSemigroup witness;
  /// Closed candidate submonoids examined.
  std::size_t             visited;
};

/// Largest J-trivial submonoid of the non-decreasing maps (identity
/// included) by pruned depth-first search. Throws ResourceLimit if n > cap.
BruteForceResult brute_max_j_trivial(std::size_t n, std::size_t cap = 4);

struct BoundsOptions {
  std::size_t max_n         = 6;
  /// brute_max_j is filled for n <= brute_max_n.
  std::size_t brute_max_n   = 4;
  std::size_t brute_cap     = 4;
  std::size_t sigma_r_cap   = 8;
  std::size_t sigma_j_cap   = 8;
  std::size_t reversal_cap  = 12;
};

struct BoundsRow {
  std::size_t                n;
  BigInt                     r_trivial_bound;
  BigInt                     j_trivial_bound;
  BigInt                     floor_e_form;
  BigInt                     reversal_bound;
  std::optional<std::size_t> witnessed_sigma_r;
  std::optional<std::size_t> witnessed_sigma_j;
  std::optional<std::size_t> witnessed_rev;
  std::optional<std::size_t> brute_max_j;
  /// Why a witnessed column is empty, one entry per skipped column.
  std::vector<std::string>   notes;
};

/// One row per n = 2..max_n. Columns past their caps are left empty with a
/// note instead of failing the report.
std::vector<BoundsRow> bounds_report(BoundsOptions const& options);

enum class ReportFormat { text, tsv };

/// Column order: n, r_trivial_bound, j_trivial_bound, floor_e_form,
/// reversal_bound, witnessed_sigma_r, witnessed_sigma_j, witnessed_rev,
/// brute_max_j. Empty cells print as "-".
std::string format_bounds(std::vector<BoundsRow> const& rows, ReportFormat format);

}  // namespace tsemi

#endif  // TSEMI_VERIFICATION_HPP_
