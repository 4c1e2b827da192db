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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tsemi/text_format.hpp"
#include "tsemi/witnesses.hpp"
#include "test_support.hpp"

using namespace tsemi;

namespace {

struct Result {
  int         code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> const& args) {
  std::ostringstream out, err;
  int const          code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path()
           / ("tsemi_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed())
              + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override {
    std::filesystem::remove_all(dir_);
  }

  std::string write(std::string const& name, std::string const& text) {
    auto const path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  std::string path(std::string const& name) const {
    return (dir_ / name).string();
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, witness_then_analyze) {
  auto const file = path("a4.txt");
  ASSERT_EQ(run({"witness", "rtrivial", "-n", "4", "-o", file}).code, 0);
  auto const r = run({"analyze", file});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "reachable_states: 4\n"
            "quotient_complexity: 4\n"
            "syntactic_complexity: 24\n"
            "monoid_size: 24\n"
            "partially_ordered: true\n"
            "r_trivial: true\n"
            "l_trivial: false\n"
            "j_trivial: false\n"
            "h_trivial: true\n"
            "simon: fails gamma={g0,g34,g12,g13} component={1,2,3,4} maximal={2,4}\n");
  auto const tsv = run({"analyze", file, "--format", "tsv"});
  EXPECT_EQ(tsv.out, "4\t4\t24\t24\ttrue\ttrue\tfalse\tfalse\ttrue\tfails\t{g0,g34,g12,g13}\t{2,4}\n");
}

TEST_F(CliTest, analyze_simon_skip) {
  auto const file = write("a4.txt", emit_witness(make_witness(WitnessKind::r_trivial_dfa, 4)));
  auto const r = run({"analyze", file, "--simon-cap", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("simon: skipped ("), std::string::npos);
}

TEST_F(CliTest, witness_then_reverse) {
  auto const w = run({"witness", "jtrivial-dfa", "-n", "5"});
  ASSERT_EQ(w.code, 0);
  auto const file = write("b5.txt", w.out);
  auto const r = run({"reverse", file});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "kappa: 5\nkappa_reverse: 16\n");
  EXPECT_EQ(run({"reverse", file, "--subset-cap", "4"}).code, cli::kResourceLimit);
}

TEST_F(CliTest, bounds) {
  auto const r = run({"bounds", "--max-n", "4", "--brute-max-n", "4", "--format", "tsv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n4\t24\t16\t16\t8\t24\t16\t8\t16\n"), std::string::npos);
  auto const text = run({"bounds", "--max-n", "3"});
  EXPECT_EQ(text.out,
            "n  r_trivial_bound  j_trivial_bound  floor_e_form  reversal_bound  "
            "witnessed_sigma_r  witnessed_sigma_j  witnessed_rev  brute_max_j\n"
            "2                2                2             2               2  "
            "                2                  2              2            2\n"
            "3                6                5             5               4  "
            "                6                  5              4            5\n");
}

TEST_F(CliTest, semigroup_close) {
  auto const gens = write("gs4.txt", emit_witness(make_witness(WitnessKind::j_trivial_generators, 4)));
  auto const r = run({"semigroup", "close", gens});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "size: 16\n");
  auto const alias = run({"semigroup-close", gens});
  EXPECT_EQ(alias.out, r.out);
  auto const listed = run({"semigroup", "close", gens, "--list"});
  auto const parsed = parse_transformation_list(listed.out);
  auto const s4     = s_n_direct(4);
  EXPECT_EQ(parsed.items, std::vector<Transformation>(s4.elements().begin(), s4.elements().end()));
  EXPECT_EQ(run({"semigroup", "close", gens, "--closure-cap", "5"}).code, cli::kResourceLimit);
}

TEST_F(CliTest, exit_codes) {
  EXPECT_EQ(run({}).code, cli::kMalformedInput);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kMalformedInput);
  EXPECT_EQ(run({"bounds", "--max-n", "3", "--bogus"}).code, cli::kMalformedInput);
  EXPECT_EQ(run({"bounds", "--max-n", "3", "--format", "xml"}).code, cli::kMalformedInput);
  EXPECT_EQ(run({"analyze", path("missing.txt")}).code, cli::kMalformedInput);
  auto const bad = write("bad.txt", "states 2\nalphabet a\ninitial 1\nfinal 2\ntrans 1 a 2\n");
  auto const r   = run({"analyze", bad});
  EXPECT_EQ(r.code, cli::kMalformedInput);
  EXPECT_NE(r.err.find("missing transition for (state 2, symbol a)"), std::string::npos);
  EXPECT_EQ(run({"witness", "rtrivial", "-n", "9"}).code, cli::kResourceLimit);
  EXPECT_EQ(run({"witness", "rtrivial", "-n", "1"}).code, cli::kMalformedInput);
  EXPECT_EQ(run({"witness", "nope", "-n", "3"}).code, cli::kMalformedInput);
}

TEST_F(CliTest, help_documents_columns) {
  auto const r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("TSV columns (analyze)"), std::string::npos);
  EXPECT_NE(r.out.find("TSV columns (bounds)"), std::string::npos);
}

TEST_F(CliTest, deterministic_output) {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {"witness", "jtrivial-monoid", "-n", "5"},
           {"witness", "jtrivial-gens", "-n", "6"},
           {"witness", "rtrivial", "-n", "5"},
           {"bounds", "--max-n", "6", "--format", "tsv"}}) {
    auto const a = run(args);
    auto const b = run(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST_F(CliTest, emitted_witnesses_round_trip) {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto const ns = std::to_string(n);
    auto const a  = run({"witness", "rtrivial", "-n", ns});
    EXPECT_EQ(parse_dfa(a.out), witness_a(n));
    auto const b = run({"witness", "jtrivial-dfa", "-n", ns});
    EXPECT_EQ(parse_dfa(b.out), witness_b(n));
    auto const g = run({"witness", "jtrivial-gens", "-n", ns});
    EXPECT_EQ(parse_transformation_list(g.out).items, gs_n(n));
  }
}

TEST_F(CliTest, analyze_cyclic_dfa) {
  auto const file = write("cycle.txt",
                          "states 2\nalphabet a\ninitial 1\nfinal 2\ntrans 1 a 2\ntrans 2 a 1\n");
  auto const r = run({"analyze", file});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("partially_ordered: false\n"), std::string::npos);
  EXPECT_NE(r.out.find("simon: fails (automaton is not partially ordered)\n"), std::string::npos);
  EXPECT_EQ(run({"analyze", file, "--format", "tsv"}).out,
            "2\t2\t2\t2\tfalse\tfalse\tfalse\tfalse\tfalse\tfails\t-\t-\n");
}
