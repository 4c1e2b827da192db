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

#ifndef TSEMI_TEXT_FORMAT_HPP_
#define TSEMI_TEXT_FORMAT_HPP_

// Line-oriented text formats. Everything after '#' on a line is a comment.
//
// Transformation lists:
//
//   n 5                # optional; inferred from the first entry otherwise
//   [1,5,3,4,5]
//   [ 3, 3, 5, 4, 5 ]
//
// Automata:
//
//   states 5
//   alphabet a1 a2 a3 a4
//   initial 1          # an NFA may list several
//   final 5            # zero or more states
//   trans 1 a1 5       # state symbol target
//
// A DFA needs exactly one trans line per (state, symbol) pair. An NFA may
// repeat a pair, once per target, or omit it for an empty successor set.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "automata.hpp"
#include "transformation.hpp"

namespace tsemi {

/// Parses "[i1,i2,...,in]", whitespace allowed anywhere. Throws ParseError.
Transformation parse_transformation(std::string_view text);

struct TransformationList {
  std::size_t                 degree = 0;
  std::vector<Transformation> items;
};

/// Throws ParseError on malformed lines, a degree mismatch, or an empty list.
TransformationList parse_transformation_list(std::string_view text);

/// Emits "n <degree>" then one transformation per line. When `labels` is
/// non-empty it must have one entry per item; each is written as a
/// "# <label>" line before its item.
std::string format_transformation_list(std::span<Transformation const> items,
                                       std::vector<std::string> const& labels = {},
                                       std::string_view                header = {});

Dfa parse_dfa(std::string_view text);
Nfa parse_nfa(std::string_view text);

/// `header` lines, if any, are emitted as leading comments.
std::string format_dfa(Dfa const& d, std::string_view header = {});
std::string format_nfa(Nfa const& m, std::string_view header = {});

}  // namespace tsemi

#endif  // TSEMI_TEXT_FORMAT_HPP_
