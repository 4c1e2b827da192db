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

#include "tsemi/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "tsemi/error.hpp"

namespace tsemi {

namespace {

  struct Line {
    std::size_t              number;
    std::vector<std::string> tokens;
  };

  std::string_view strip_comment(std::string_view line) {
    auto const hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
  }

  bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v'
           || c == '\f';
  }

  std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) {
      s.remove_prefix(1);
    }
    while (!s.empty() && is_space(s.back())) {
      s.remove_suffix(1);
    }
    return s;
  }

  // Non-blank lines with comments removed, split on whitespace.
  std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t       number = 0;
    while (!text.empty() || number == 0) {
      ++number;
      auto const eol  = text.find('\n');
      auto       line = strip_comment(text.substr(0, eol));
      text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
      Line parsed{number, {}};
      std::string_view rest = line;
      while (true) {
        rest = trim(rest);
        if (rest.empty()) {
          break;
        }
        auto end = std::find_if(rest.begin(), rest.end(), is_space);
        auto len = static_cast<std::size_t>(end - rest.begin());
        parsed.tokens.emplace_back(rest.substr(0, len));
        rest.remove_prefix(len);
      }
      if (!parsed.tokens.empty()) {
        out.push_back(std::move(parsed));
      }
      if (text.empty()) {
        break;
      }
    }
    return out;
  }

  std::size_t parse_count(std::string_view token, std::size_t line, char const* what) {
    std::size_t value = 0;
    auto const [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError(std::string("expected ") + what + ", found '"
                           + std::string(token) + "'",
                       line);
    }
    return value;
  }

  State parse_state(std::string_view token, std::size_t n, std::size_t line) {
    auto const value = parse_count(token, line, "a state number");
    if (value < 1 || value > n) {
      throw ParseError("state " + std::string(token) + " is outside 1.."
                           + std::to_string(n),
                       line);
    }
    return static_cast<State>(value);
  }

  Transformation parse_transformation_at(std::string_view text, std::size_t line) {
    auto body = trim(text);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
      throw ParseError("a transformation must be written as [i1,...,in]", line);
    }
    body = body.substr(1, body.size() - 2);
    std::vector<State> images;
    while (true) {
      auto const comma = body.find(',');
      auto const item  = trim(body.substr(0, comma));
      if (item.empty()) {
        throw ParseError("empty entry in transformation", line);
      }
      auto const value = parse_count(item, line, "an image");
      if (value < 1 || value > Transformation::max_degree) {
        throw ParseError("image " + std::string(item) + " is out of range", line);
      }
      images.push_back(static_cast<State>(value));
      if (comma == std::string_view::npos) {
        break;
      }
      body.remove_prefix(comma + 1);
    }
    for (State s : images) {
      if (s > images.size()) {
        throw ParseError("image " + std::to_string(s) + " exceeds the degree "
                             + std::to_string(images.size()),
                         line);
      }
    }
    if (images.size() > Transformation::max_degree) {
      throw ParseError("transformation degree exceeds "
                           + std::to_string(Transformation::max_degree),
                       line);
    }
    return Transformation(images);
  }

  void write_header(std::ostringstream& out, std::string_view header) {
    while (!header.empty()) {
      auto const eol = header.find('\n');
      out << "# " << header.substr(0, eol) << '\n';
      header = eol == std::string_view::npos ? std::string_view{}
                                             : header.substr(eol + 1);
    }
  }

  // Shared parse of the automaton format.
  struct RawAutomaton {
    std::size_t                                                states = 0;
    std::vector<std::string>                                   alphabet;
    std::vector<State>                                         initials;
    std::size_t                                                initial_line = 0;
    StateSet                                                   finals;
    std::vector<std::tuple<State, Symbol, State, std::size_t>> trans;
  };

  RawAutomaton parse_automaton(std::string_view text, bool deterministic) {
    RawAutomaton raw;
    bool         seen_states = false, seen_alphabet = false, seen_initial = false,
         seen_final = false;
    std::map<std::string, Symbol> symbol_of;

    auto need = [](bool ok, char const* what, std::size_t line) {
      if (!ok) {
        throw ParseError(std::string("'") + what + "' must come first", line);
      }
    };

    for (auto const& [line, tokens] : tokenize(text)) {
      auto const& key = tokens.front();
      if (key == "states") {
        if (seen_states) {
          throw ParseError("duplicate 'states' line", line);
        }
        if (tokens.size() != 2) {
          throw ParseError("expected 'states <count>'", line);
        }
        raw.states = parse_count(tokens[1], line, "a state count");
        if (raw.states == 0) {
          throw ParseError("an automaton needs at least one state", line);
        }
        seen_states = true;
      } else if (key == "alphabet") {
        if (seen_alphabet) {
          throw ParseError("duplicate 'alphabet' line", line);
        }
        if (tokens.size() < 2) {
          throw ParseError("the alphabet must be non-empty", line);
        }
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          if (!symbol_of.try_emplace(tokens[i], i - 1).second) {
            throw ParseError("duplicate symbol '" + tokens[i] + "'", line);
          }
          raw.alphabet.push_back(tokens[i]);
        }
        seen_alphabet = true;
      } else if (key == "initial") {
        need(seen_states, "states", line);
        if (seen_initial) {
          throw ParseError("duplicate 'initial' line", line);
        }
        if (deterministic && tokens.size() != 2) {
          throw ParseError("expected 'initial <state>'", line);
        }
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          raw.initials.push_back(parse_state(tokens[i], raw.states, line));
        }
        raw.initial_line = line;
        seen_initial     = true;
      } else if (key == "final") {
        need(seen_states, "states", line);
        if (seen_final) {
          throw ParseError("duplicate 'final' line", line);
        }
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          raw.finals.push_back(parse_state(tokens[i], raw.states, line));
        }
        seen_final = true;
      } else if (key == "trans") {
        need(seen_states, "states", line);
        need(seen_alphabet, "alphabet", line);
        if (tokens.size() != 4) {
          throw ParseError("expected 'trans <state> <symbol> <state>'", line);
        }
        auto const it = symbol_of.find(tokens[2]);
        if (it == symbol_of.end()) {
          throw ParseError("unknown symbol '" + tokens[2] + "'", line);
        }
        raw.trans.emplace_back(parse_state(tokens[1], raw.states, line),
                               it->second,
                               parse_state(tokens[3], raw.states, line),
                               line);
      } else {
        throw ParseError("unknown keyword '" + key + "'", line);
      }
    }
    if (!seen_states) {
      throw ParseError("missing 'states' line", 0);
    }
    if (!seen_alphabet) {
      throw ParseError("missing 'alphabet' line", 0);
    }
    if (!seen_initial) {
      throw ParseError("missing 'initial' line", 0);
    }
    raw.finals = make_state_set(std::move(raw.finals));
    return raw;
  }

}  // namespace

Transformation parse_transformation(std::string_view text) {
  return parse_transformation_at(text, 0);
}

TransformationList parse_transformation_list(std::string_view text) {
  TransformationList list;
  bool               first = true;
  for (auto const& [line, tokens] : tokenize(text)) {
    if (first && tokens.front() == "n") {
      if (tokens.size() != 2) {
        throw ParseError("expected 'n <degree>'", line);
      }
      list.degree = parse_count(tokens[1], line, "a degree");
      if (list.degree == 0 || list.degree > Transformation::max_degree) {
        throw ParseError("degree must be in 1.."
                             + std::to_string(Transformation::max_degree),
                         line);
      }
      first = false;
      continue;
    }
    first = false;
    std::string joined;
    for (auto const& t : tokens) {
      joined += t;
    }
    auto t = parse_transformation_at(joined, line);
    if (list.degree == 0) {
      list.degree = t.degree();
    } else if (t.degree() != list.degree) {
      throw ParseError("transformation of degree " + std::to_string(t.degree())
                           + " in a list of degree " + std::to_string(list.degree),
                       line);
    }
    list.items.push_back(std::move(t));
  }
  if (list.items.empty()) {
    throw ParseError("the list contains no transformations", 0);
  }
  return list;
}

std::string format_transformation_list(std::span<Transformation const> items,
                                       std::vector<std::string> const& labels,
                                       std::string_view                header) {
  if (!labels.empty() && labels.size() != items.size()) {
    throw InvalidArgument("expected one label per transformation");
  }
  std::ostringstream out;
  write_header(out, header);
  if (!items.empty()) {
    out << "n " << items.front().degree() << '\n';
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!labels.empty()) {
      out << "# " << labels[i] << '\n';
    }
    out << to_string(items[i]) << '\n';
  }
  return out.str();
}

Dfa parse_dfa(std::string_view text) {
  auto raw = parse_automaton(text, true);
  std::size_t const  k = raw.alphabet.size();
  std::vector<State> delta(raw.states * k, 0);
  for (auto const& [p, a, q, line] : raw.trans) {
    auto& slot = delta[(p - 1) * k + a];
    if (slot != 0) {
      throw ParseError("duplicate transition for (state " + std::to_string(p)
                           + ", symbol " + raw.alphabet[a] + ")",
                       line);
    }
    slot = q;
  }
  for (State p = 1; p <= raw.states; ++p) {
    for (Symbol a = 0; a < k; ++a) {
      if (delta[(p - 1) * k + a] == 0) {
        throw ParseError("missing transition for (state " + std::to_string(p)
                             + ", symbol " + raw.alphabet[a] + ")",
                         0);
      }
    }
  }
  return Dfa(raw.states, std::move(raw.alphabet), std::move(delta),
             raw.initials.front(), std::move(raw.finals));
}

Nfa parse_nfa(std::string_view text) {
  auto raw = parse_automaton(text, false);
  std::size_t const     k = raw.alphabet.size();
  std::vector<StateSet> delta(raw.states * k);
  for (auto const& [p, a, q, line] : raw.trans) {
    delta[(p - 1) * k + a].push_back(q);
  }
  return Nfa(raw.states, std::move(raw.alphabet), std::move(delta),
             make_state_set(std::move(raw.initials)), std::move(raw.finals));
}

namespace {

  template <typename Automaton>
  void write_preamble(std::ostringstream& out,
                      Automaton const&    m,
                      StateSet const&     initials,
                      std::string_view    header) {
    write_header(out, header);
    out << "states " << m.state_count() << '\n';
    out << "alphabet";
    for (auto const& name : m.alphabet()) {
      out << ' ' << name;
    }
    out << "\ninitial";
    for (State s : initials) {
      out << ' ' << s;
    }
    out << "\nfinal";
    for (State s : m.finals()) {
      out << ' ' << s;
    }
    out << '\n';
  }

}  // namespace

std::string format_dfa(Dfa const& d, std::string_view header) {
  std::ostringstream out;
  write_preamble(out, d, StateSet{d.initial()}, header);
  for (State p = 1; p <= d.state_count(); ++p) {
    for (Symbol a = 0; a < d.alphabet_size(); ++a) {
      out << "trans " << p << ' ' << d.alphabet()[a] << ' ' << d.next(p, a) << '\n';
    }
  }
  return out.str();
}

std::string format_nfa(Nfa const& m, std::string_view header) {
  std::ostringstream out;
  write_preamble(out, m, m.initials(), header);
  for (State p = 1; p <= m.state_count(); ++p) {
    for (Symbol a = 0; a < m.alphabet_size(); ++a) {
      for (State q : m.next(p, a)) {
        out << "trans " << p << ' ' << m.alphabet()[a] << ' ' << q << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace tsemi
