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

#include "tsemi/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "tsemi/automata.hpp"
#include "tsemi/error.hpp"
#include "tsemi/semigroup.hpp"
#include "tsemi/text_format.hpp"
#include "tsemi/verification.hpp"
#include "tsemi/witnesses.hpp"

namespace tsemi::cli {

namespace {

  constexpr char kAnalyzeColumns[] =
      "TSV columns (analyze): reachable_states quotient_complexity "
      "syntactic_complexity monoid_size partially_ordered r_trivial l_trivial "
      "j_trivial h_trivial simon simon_gamma simon_maximal";
  constexpr char kBoundsColumns[] =
      "TSV columns (bounds): n r_trivial_bound j_trivial_bound floor_e_form "
      "reversal_bound witnessed_sigma_r witnessed_sigma_j witnessed_rev brute_max_j "
      "(\"-\" marks a cell outside its cap)";

  // Raised for unreadable input files; reported like malformed input.
  struct InputError : Error {
    using Error::Error;
  };

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  char const* yes_no(bool b) {
    return b ? "true" : "false";
  }

  char const* status_name(SimonResult::Status s) {
    switch (s) {
      case SimonResult::Status::holds:
        return "holds";
      case SimonResult::Status::fails:
        return "fails";
      case SimonResult::Status::skipped:
        return "skipped";
    }
    return "?";
  }

  std::string symbol_set(Dfa const& d, std::vector<Symbol> const& gamma) {
    std::string s = "{";
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      s += (i == 0 ? "" : ",") + d.alphabet()[gamma[i]];
    }
    return s + "}";
  }

  void emit_analysis(Dfa const& d, AnalysisReport const& r, bool tsv, std::ostream& out) {
    // A failure without a Gamma witness means the DFA is not partially ordered.
    bool const failed = r.simon.status == SimonResult::Status::fails && !r.simon.gamma.empty();
    std::string const gamma   = failed ? symbol_set(d, r.simon.gamma) : "-";
    std::string const maximal = failed ? to_string(r.simon.maximal_states) : "-";
    if (tsv) {
      out << r.reachable_states << '\t' << r.quotient_complexity << '\t'
          << r.syntactic_complexity << '\t' << r.monoid_size << '\t'
          << yes_no(r.partially_ordered) << '\t' << yes_no(r.r_trivial) << '\t'
          << yes_no(r.l_trivial) << '\t' << yes_no(r.j_trivial) << '\t'
          << yes_no(r.h_trivial) << '\t' << status_name(r.simon.status) << '\t' << gamma
          << '\t' << maximal << '\n';
      return;
    }
    out << "reachable_states: " << r.reachable_states << '\n'
        << "quotient_complexity: " << r.quotient_complexity << '\n'
        << "syntactic_complexity: " << r.syntactic_complexity << '\n'
        << "monoid_size: " << r.monoid_size << '\n'
        << "partially_ordered: " << yes_no(r.partially_ordered) << '\n'
        << "r_trivial: " << yes_no(r.r_trivial) << '\n'
        << "l_trivial: " << yes_no(r.l_trivial) << '\n'
        << "j_trivial: " << yes_no(r.j_trivial) << '\n'
        << "h_trivial: " << yes_no(r.h_trivial) << '\n'
        << "simon: " << status_name(r.simon.status);
    if (failed) {
      out << " gamma=" << gamma << " component=" << to_string(r.simon.component)
          << " maximal=" << maximal;
    } else if (!r.simon.holds()) {
      out << " (" << r.simon.reason << ')';
    }
    out << '\n';
  }

  ReportFormat parse_format(std::string const& s) {
    return s == "tsv" ? ReportFormat::tsv : ReportFormat::text;
  }

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transformation semigroups, syntactic monoids and state complexity "
               "of R- and J-trivial regular languages.",
               "tsemi"};
  app.require_subcommand(1);
  app.footer(std::string("Exit codes: 0 ok, 1 internal invariant violation, 2 malformed "
                         "input or usage, 3 resource limit.\n")
             + kAnalyzeColumns + "\n" + kBoundsColumns);

  std::string file;
  std::string format = "text";
  auto        format_check = CLI::IsMember({"text", "tsv"});

  // analyze
  AnalyzeOptions analyze_options;
  auto* analyze = app.add_subcommand("analyze", "Analyze a DFA file");
  analyze->add_option("FILE", file, "DFA in text format")->required();
  analyze->add_option("--simon-cap", analyze_options.simon_cap,
                      "Skip the component check above this alphabet size")
      ->capture_default_str();
  analyze->add_option("--closure-cap", analyze_options.closure_cap,
                      "Maximum transition monoid size")
      ->capture_default_str();
  analyze->add_option("--format", format, "text or tsv")->check(format_check)->capture_default_str();
  analyze->footer(kAnalyzeColumns);

  // witness
  std::string kind_name;
  std::size_t n   = 0;
  std::size_t cap = kDefaultWitnessCap;
  std::string output_path;
  auto* witness = app.add_subcommand("witness", "Emit a witness construction");
  witness
      ->add_option("KIND", kind_name,
                   "rtrivial (A_n), jtrivial-dfa (B_n), jtrivial-gens (GS_n), "
                   "jtrivial-monoid (S_n)")
      ->required()
      ->check(CLI::IsMember({"rtrivial", "jtrivial-dfa", "jtrivial-gens", "jtrivial-monoid"}));
  witness->add_option("-n", n, "Number of states")->required();
  witness->add_option("-o", output_path, "Write to FILE instead of stdout");
  witness->add_option("--cap", cap, "Maximum n for the n!-sized constructions")
      ->capture_default_str();

  // reverse
  std::size_t subset_cap = kDefaultSubsetCap;
  auto* reverse_cmd = app.add_subcommand("reverse", "Print quotient complexity of L and its reversal");
  reverse_cmd->add_option("FILE", file, "DFA in text format")->required();
  reverse_cmd->add_option("--subset-cap", subset_cap, "Maximum states for the subset construction")
      ->capture_default_str();

  // bounds
  BoundsOptions bounds_options;
  auto* bounds = app.add_subcommand("bounds", "Table of bounds against witnessed values");
  bounds->add_option("--max-n", bounds_options.max_n, "Last row")->required();
  bounds->add_option("--brute-max-n", bounds_options.brute_max_n,
                     "Run the exhaustive J-trivial search up to this n")
      ->capture_default_str();
  bounds->add_option("--brute-cap", bounds_options.brute_cap, "Cap for the exhaustive search")
      ->capture_default_str();
  bounds->add_option("--sigma-r-cap", bounds_options.sigma_r_cap, "Cap for witnessed_sigma_r")
      ->capture_default_str();
  bounds->add_option("--sigma-j-cap", bounds_options.sigma_j_cap, "Cap for witnessed_sigma_j")
      ->capture_default_str();
  bounds->add_option("--reversal-cap", bounds_options.reversal_cap, "Cap for witnessed_rev")
      ->capture_default_str();
  bounds->add_option("--format", format, "text or tsv")->check(format_check)->capture_default_str();
  bounds->footer(kBoundsColumns);

  // semigroup close / semigroup-close
  bool        list        = false;
  std::size_t closure_cap = kDefaultClosureCap;
  auto add_close_options = [&](CLI::App* cmd) {
    cmd->add_option("FILE", file, "Transformation list")->required();
    cmd->add_flag("--list", list, "Print all elements in canonical order");
    cmd->add_option("--closure-cap", closure_cap, "Maximum semigroup size")->capture_default_str();
  };
  auto* semigroup = app.add_subcommand("semigroup", "Semigroup operations");
  semigroup->require_subcommand(1);
  auto* close_cmd = semigroup->add_subcommand("close", "Close a generating set");
  add_close_options(close_cmd);
  auto* close_alias = app.add_subcommand("semigroup-close", "Same as 'semigroup close'");
  add_close_options(close_alias);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformedInput;
  }

  try {
    if (analyze->parsed()) {
      Dfa const d = parse_dfa(read_file(file));
      emit_analysis(d, tsemi::analyze(d, analyze_options), format == "tsv", out);
    } else if (witness->parsed()) {
      WitnessKind kind = WitnessKind::r_trivial_dfa;
      if (kind_name == "jtrivial-dfa") {
        kind = WitnessKind::j_trivial_dfa;
      } else if (kind_name == "jtrivial-gens") {
        kind = WitnessKind::j_trivial_generators;
      } else if (kind_name == "jtrivial-monoid") {
        kind = WitnessKind::j_trivial_monoid;
      }
      std::string const text = emit_witness(make_witness(kind, n, cap));
      if (output_path.empty()) {
        out << text;
      } else {
        std::ofstream file_out(output_path, std::ios::binary);
        if (!(file_out << text)) {
          throw InputError("cannot write '" + output_path + "'");
        }
      }
    } else if (reverse_cmd->parsed()) {
      Dfa const d = parse_dfa(read_file(file));
      out << "kappa: " << quotient_complexity(d) << '\n'
          << "kappa_reverse: " << reversal_complexity(d, subset_cap) << '\n';
    } else if (bounds->parsed()) {
      out << format_bounds(bounds_report(bounds_options), parse_format(format));
    } else if (close_cmd->parsed() || close_alias->parsed()) {
      auto const gens = parse_transformation_list(read_file(file));
      auto const s    = close(gens.items, closure_cap);
      if (list) {
        out << format_transformation_list(s.elements(), {},
                                          "closure size " + std::to_string(s.size()));
      } else {
        out << "size: " << s.size() << '\n';
      }
    }
  } catch (ParseError const& e) {
    err << "parse error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (InputError const& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (InvalidArgument const& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kMalformedInput;
  } catch (ResourceLimit const& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (InvariantViolation const& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariantViolation;
  }
  return kOk;
}

}  // namespace tsemi::cli
