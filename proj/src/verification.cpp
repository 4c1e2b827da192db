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

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "tsemi/automata.hpp"
#include "tsemi/error.hpp"
#include "tsemi/partition.hpp"
#include "tsemi/witnesses.hpp"

namespace tsemi {

BigInt g_of_n(std::size_t n) {
  if (n == 0) {
    throw InvalidArgument("g(n) needs n >= 1");
  }
  BigInt sum = 0;
  for (std::size_t r = 1; r <= n; ++r) {
    sum += binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(r - 1))
           * factorial(static_cast<unsigned>(n - r));
  }
  return sum;
}

BigInt floor_e_factorial(std::size_t n) {
  if (n < 2) {
    throw InvalidArgument("floor(e (n-1)!) equals g(n) only for n >= 2");
  }
  // (n-1)!/k! = (k+1)(k+2)...(n-1), accumulated from k = n-1 downwards.
  BigInt sum  = 0;
  BigInt term = 1;
  for (std::size_t k = n; k-- > 0;) {
    sum += term;
    term *= k;
  }
  return sum;
}

std::vector<Transformation> enumerate_f_q(std::size_t n, std::size_t cap) {
  if (n == 0) {
    throw InvalidArgument("enumerate_f_q needs n >= 1");
  }
  if (n > cap) {
    throw ResourceLimit("enumerating " + std::to_string(n)
                        + "! non-decreasing maps exceeds the cap n <= "
                        + std::to_string(cap));
  }
  // State k (0-based) picks an image in k..n-1; odometer in lexicographic
  // order with the last state varying fastest.
  std::vector<Transformation> out;
  std::vector<std::uint8_t>   images(n);
  for (std::size_t k = 0; k < n; ++k) {
    images[k] = static_cast<std::uint8_t>(k);
  }
  while (true) {
    out.push_back(Transformation::from_raw(images));
    std::size_t k = n;
    while (k > 0 && images[k - 1] == n - 1) {
      --k;
    }
    if (k == 0) {
      break;
    }
    ++images[k - 1];
    for (std::size_t j = k; j < n; ++j) {
      images[j] = static_cast<std::uint8_t>(j);
    }
  }
  return out;
}

namespace {

  // Submonoid search over F_n with elements as bits of a 64-bit mask.
  class SubmonoidSearch {
   public:
    explicit SubmonoidSearch(std::size_t n) : elements_(enumerate_f_q(n, 4)) {
      m_ = elements_.size();
      index_of_identity_ = static_cast<std::size_t>(
          std::find(elements_.begin(), elements_.end(), identity(n)) - elements_.begin());
      mul_.resize(m_ * m_);
      for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t j = 0; j < m_; ++j) {
          auto const p = elements_[i] * elements_[j];
          mul_[i * m_ + j] = static_cast<std::uint8_t>(
              std::lower_bound(elements_.begin(), elements_.end(), p) - elements_.begin());
        }
      }
      auto const partitions = all_partitions(n);
      std::map<Partition, std::size_t> pid;
      for (std::size_t i = 0; i < partitions.size(); ++i) {
        pid.emplace(partitions[i], i);
      }
      p_ = partitions.size();
      join_.resize(p_ * p_);
      for (std::size_t a = 0; a < p_; ++a) {
        for (std::size_t b = 0; b < p_; ++b) {
          join_[a * p_ + b] = pid.at(join(partitions[a], partitions[b]));
        }
      }
      for (auto const& t : elements_) {
        orbit_.push_back(pid.at(orbits(t)));
        std::uint64_t fixed = 0;
        for (State s : fixed_points(t)) {
          fixed |= std::uint64_t{1} << (s - 1);
        }
        fixed_.push_back(fixed);
      }
    }

    BruteForceResult run() {
      std::uint64_t const start = bit(index_of_identity_);
      best_mask_                = start;
      best_size_                = 1;
      dfs(start, 0);
      std::vector<Transformation> members;
      for (std::size_t i = 0; i < m_; ++i) {
        if (best_mask_ & bit(i)) {
          members.push_back(elements_[i]);
        }
      }
      auto gens = members;
      return {best_size_,
              TransformationSemigroup::from_closed_set(std::move(gens), std::move(members)),
              visited_};
    }

   private:
    static std::uint64_t bit(std::size_t i) {
      return std::uint64_t{1} << i;
    }

    std::uint64_t below(std::size_t i) const {
      return i >= 64 ? ~std::uint64_t{0} : bit(i) - 1;
    }

    std::uint64_t all() const {
      return below(m_);
    }

    std::uint64_t close_with(std::uint64_t set, std::size_t extra) const {
      set |= bit(extra);
      while (true) {
        std::uint64_t grown = set;
        for (std::uint64_t a = set; a != 0; a &= a - 1) {
          auto const i = static_cast<std::size_t>(std::countr_zero(a));
          for (std::uint64_t b = set; b != 0; b &= b - 1) {
            auto const j = static_cast<std::size_t>(std::countr_zero(b));
            grown |= bit(mul_[i * m_ + j]);
          }
        }
        if (grown == set) {
          return set;
        }
        set = grown;
      }
    }

    // Saito's condition, which on non-decreasing maps is J-triviality, after
    // a cheap necessary test: equal fixed-point sets force equal orbits.
    bool j_trivial(std::uint64_t set) const {
      std::map<std::uint64_t, std::size_t> orbit_of_fixed;
      for (std::uint64_t a = set; a != 0; a &= a - 1) {
        auto const i = static_cast<std::size_t>(std::countr_zero(a));
        auto const [it, fresh] = orbit_of_fixed.emplace(fixed_[i], orbit_[i]);
        if (!fresh && it->second != orbit_[i]) {
          return false;
        }
      }
      for (std::uint64_t a = set; a != 0; a &= a - 1) {
        auto const i = static_cast<std::size_t>(std::countr_zero(a));
        for (std::uint64_t b = set; b != 0; b &= b - 1) {
          auto const j = static_cast<std::size_t>(std::countr_zero(b));
          if (orbit_[mul_[i * m_ + j]] != join_[orbit_[i] * p_ + orbit_[j]]) {
            return false;
          }
        }
      }
      return true;
    }

    // `set` is a closed J-trivial submonoid; every element below `next` that
    // is not in it has been excluded on this branch.
    void dfs(std::uint64_t set, std::size_t next) {
      ++visited_;
      auto const size = static_cast<std::size_t>(std::popcount(set));
      if (size > best_size_) {
        best_size_ = size;
        best_mask_ = set;
      }
      std::uint64_t const open = all() & ~below(next) & ~set;
      if (size + static_cast<std::size_t>(std::popcount(open)) <= best_size_) {
        return;
      }
      if (open == 0) {
        return;
      }
      auto const c = static_cast<std::size_t>(std::countr_zero(open));
      std::uint64_t const grown    = close_with(set, c);
      std::uint64_t const excluded = below(c) & ~set;
      if ((grown & excluded) == 0 && j_trivial(grown)) {
        dfs(grown, c + 1);
      }
      dfs(set, c + 1);
    }

    std::vector<Transformation> elements_;
    std::size_t                 m_ = 0;
    std::size_t                 p_ = 0;
    std::size_t                 index_of_identity_ = 0;
    std::vector<std::uint8_t>   mul_;
    std::vector<std::size_t>    join_;
    std::vector<std::size_t>    orbit_;
    std::vector<std::uint64_t>  fixed_;
    std::uint64_t               best_mask_ = 0;
    std::size_t                 best_size_ = 0;
    std::size_t                 visited_   = 0;
  };

}  // namespace

BruteForceResult brute_max_j_trivial(std::size_t n, std::size_t cap) {
  if (n == 0) {
    throw InvalidArgument("brute_max_j_trivial needs n >= 1");
  }
  // The search encodes F_n in a 64-bit mask, so n = 4 (24 maps) is the
  // hard ceiling regardless of `cap`.
  if (n > cap || n > 4) {
    throw ResourceLimit("exhaustive J-trivial search for n = " + std::to_string(n)
                        + " exceeds the cap n <= " + std::to_string(std::min<std::size_t>(cap, 4)));
  }
  return SubmonoidSearch(n).run();
}

std::vector<BoundsRow> bounds_report(BoundsOptions const& options) {
  std::vector<BoundsRow> rows;
  for (std::size_t n = 2; n <= options.max_n; ++n) {
    BoundsRow row;
    row.n               = n;
    row.r_trivial_bound = factorial(static_cast<unsigned>(n));
    row.j_trivial_bound = g_of_n(n);
    row.floor_e_form    = floor_e_factorial(n);
    row.reversal_bound  = BigInt(1) << (n - 1);

    auto attempt = [&](std::optional<std::size_t>& cell, std::size_t cap,
                       char const* column, auto compute) {
      if (n > cap) {
        row.notes.push_back(std::string(column) + ": n > cap " + std::to_string(cap));
        return;
      }
      try {
        cell = compute();
      } catch (ResourceLimit const& e) {
        row.notes.push_back(std::string(column) + ": " + e.what());
      }
    };
    attempt(row.witnessed_sigma_r, options.sigma_r_cap, "witnessed_sigma_r",
            [&] { return close(gf_q(n)).size(); });
    attempt(row.witnessed_sigma_j, options.sigma_j_cap, "witnessed_sigma_j",
            [&] { return close(gs_n(n)).size(); });
    attempt(row.witnessed_rev, options.reversal_cap, "witnessed_rev",
            [&] { return reversal_complexity(witness_b(n), std::max<std::size_t>(n, kDefaultSubsetCap)); });
    if (n <= options.brute_max_n) {
      attempt(row.brute_max_j, options.brute_cap, "brute_max_j",
              [&] { return brute_max_j_trivial(n, options.brute_cap).size; });
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_bounds(std::vector<BoundsRow> const& rows, ReportFormat format) {
  std::vector<std::string> const header{"n",
                                        "r_trivial_bound",
                                        "j_trivial_bound",
                                        "floor_e_form",
                                        "reversal_bound",
                                        "witnessed_sigma_r",
                                        "witnessed_sigma_j",
                                        "witnessed_rev",
                                        "brute_max_j"};
  auto cell = [](std::optional<std::size_t> const& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  std::vector<std::vector<std::string>> table{header};
  for (auto const& row : rows) {
    table.push_back({std::to_string(row.n),
                     row.r_trivial_bound.str(),
                     row.j_trivial_bound.str(),
                     row.floor_e_form.str(),
                     row.reversal_bound.str(),
                     cell(row.witnessed_sigma_r),
                     cell(row.witnessed_sigma_j),
                     cell(row.witnessed_rev),
                     cell(row.brute_max_j)});
  }

  std::ostringstream out;
  if (format == ReportFormat::tsv) {
    for (auto const& line : table) {
      for (std::size_t c = 0; c < line.size(); ++c) {
        out << (c == 0 ? "" : "\t") << line[c];
      }
      out << '\n';
    }
    return out.str();
  }

  std::vector<std::size_t> width(header.size(), 0);
  for (auto const& line : table) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      width[c] = std::max(width[c], line[c].size());
    }
  }
  for (auto const& line : table) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c != 0) {
        out << "  ";
      }
      out << std::string(width[c] - line[c].size(), ' ') << line[c];
    }
    out << '\n';
  }
  for (auto const& row : rows) {
    for (auto const& note : row.notes) {
      out << "# n=" << row.n << ' ' << note << '\n';
    }
  }
  return out.str();
}

}  // namespace tsemi
