// Copyright 2026 The aphi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>

#include "aphi/errors.hpp"
#include "aphi/report.hpp"
#include "aphi/spec_io.hpp"

namespace aphi {
namespace {

TEST(GroupSpec, Variants) {
  EXPECT_EQ(parse_group_spec(R"({"type": "Zn", "n": 8})")->size(), 8u);
  const SpacePtr w = parse_group_spec(R"({"type": "Zwindow", "radius": 16})");
  EXPECT_TRUE(w->is_window());
  EXPECT_EQ(w->size(), 33u);
  EXPECT_EQ(parse_group_spec(R"({"type": "S", "n": 3})")->size(), 6u);
  const SpacePtr p = parse_group_spec(
      R"({"type": "product", "factors": [{"type": "Zn", "n": 2}, {"type": "Zn", "n": 3}]})");
  EXPECT_EQ(p->size(), 6u);
  EXPECT_TRUE(p->is_abelian());
}

TEST(GroupSpec, TableWithDerivedInverse) {
  const SpacePtr t = parse_group_spec(R"({"type": "table",
    "elements": ["e", "a"], "mul": [["e", "a"], ["a", "e"]], "identity": "e"})");
  ASSERT_EQ(t->size(), 2u);
  EXPECT_EQ(t->inv(*t->find("a")), *t->find("a"));
  EXPECT_TRUE(check_group_axioms(*t).pass);
}

TEST(GroupSpec, TableViolatingAxiomsIsRejected) {
  EXPECT_THROW(parse_group_spec(R"({"type": "table",
    "elements": ["e", "a"], "mul": [["e", "a"], ["a", "a"]], "identity": "e"})"),
               Error);
}

TEST(GroupSpec, MalformedJsonCarriesPosition) {
  try {
    parse_group_spec("{\n  \"type\": \"Zn\",\n  \"n\": 8,,\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 0);
  }
}

TEST(GroupSpec, UnknownKeyIsRejectedWithPosition) {
  try {
    parse_group_spec("{\"type\": \"Zn\",\n \"n\": 8, \"m\": 1}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'m'"), std::string::npos) << e.what();
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(GroupSpec, SemanticErrors) {
  EXPECT_THROW(parse_group_spec(R"({"type": "Zn", "n": 0})"), ParseError);
  EXPECT_THROW(parse_group_spec(R"({"type": "Zn"})"), ParseError);
  EXPECT_THROW(parse_group_spec(R"({"type": "Q8"})"), ParseError);
  EXPECT_THROW(parse_group_spec(R"([1, 2])"), ParseError);
}

TEST(PairSpec, Variants) {
  EXPECT_EQ(parse_pair_spec(R"({"kind": "power", "p": 2})").construction(),
            ComplementaryPair::Construction::closed_form);
  EXPECT_EQ(parse_pair_spec(R"({"kind": "power", "p": 3, "complement": "numeric"})").construction(),
            ComplementaryPair::Construction::numeric);
  EXPECT_NO_THROW(parse_pair_spec(R"({"kind": "entropy"})"));
  EXPECT_NO_THROW(parse_pair_spec(R"({"kind": "cosh"})"));
  const ComplementaryPair custom = parse_pair_spec(
      R"({"kind": "custom", "table": [[0,0,0],[1,0.5,1],[2,2,2],[4,8,4]]})");
  EXPECT_NEAR(custom.phi()(2.0), 2.0, 1e-12);
  EXPECT_THROW(parse_pair_spec(R"({"kind": "power", "p": 1})"), ParseError);
  EXPECT_THROW(parse_pair_spec(R"({"kind": "power"})"), ParseError);
  EXPECT_THROW(parse_pair_spec(R"({"kind": "entropy", "complement": "guess"})"), ParseError);
}

TEST(FunctionData, RowsCommentsAndSeparators) {
  const SpacePtr z4 = GroupSpace::cyclic(4);
  const GroupFunction f = parse_function_data(z4, "0 1 # first\n2 -0.5 2; 3 4e-1");
  EXPECT_EQ(f[0], Complex(1.0));
  EXPECT_EQ(f[1], Complex(0.0));
  EXPECT_EQ(f[2], Complex(-0.5, 2.0));
  EXPECT_EQ(f[3], Complex(0.4));
}

TEST(FunctionData, ErrorsCarryPosition) {
  const SpacePtr z4 = GroupSpace::cyclic(4);
  try {
    parse_function_data(z4, "0 1\n7 1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 1);
  }
  EXPECT_THROW(parse_function_data(z4, "1 x"), ParseError);
  EXPECT_THROW(parse_function_data(z4, "1"), ParseError);
}

TEST(Sets, RangesAndLabels) {
  const SpacePtr w = GroupSpace::window(10);
  EXPECT_EQ(parse_set(*w, "-1..1"), w->interval(-1, 1));
  EXPECT_EQ(parse_set(*w, "3, -2 0"), (ElementSet{*w->window_index(-2), *w->window_index(0),
                                                  *w->window_index(3)}));
  EXPECT_THROW(parse_set(*w, "11"), ParseError);
  EXPECT_THROW(parse_set(*w, "2..x"), ParseError);
  const SpacePtr p = GroupSpace::product({GroupSpace::cyclic(2), GroupSpace::cyclic(2)});
  EXPECT_EQ(parse_set(*p, "(0,1), (1,1)").size(), 2u);
}

TEST(Files, InlineOrFile) {
  EXPECT_EQ(inline_or_file(R"({"type": "Zn", "n": 3})"), R"({"type": "Zn", "n": 3})");
  const std::string path = ::testing::TempDir() + "aphi_io_test.json";
  {
    std::ofstream out(path);
    out << R"({"type": "Zn", "n": 5})";
  }
  EXPECT_EQ(parse_group_spec(inline_or_file(path))->size(), 5u);
  std::remove(path.c_str());
  EXPECT_THROW(read_file(path), ParseError);
}

TEST(FormatDouble, RoundTrips) {
  for (double v : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 6.02214076e23, 5e-324}) {
    EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v);
  }
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_double(std::nan("")), "nan");
}

TEST(Report, MachineLayout) {
  Report r("norm luxemburg");
  r.input("group", "Z8");
  r.input("seed", "0", true);
  r.value("norm", 0.5);
  r.value("alpha", 0.25, Provenance::closed_form);
  r.check("bound", 0.5, "<=", 1.0, 0.5, true);
  r.note("two\nlines");
  r.set_elapsed(1.25);
  const std::string m = r.render(ReportFormat::machine);
  EXPECT_EQ(m,
            "report.verb=norm luxemburg\n"
            "input.group=Z8\ninput.group.source=input\n"
            "input.seed=0\ninput.seed.source=default\n"
            "value.norm=0.5\nvalue.norm.source=computed\n"
            "value.alpha=0.25\nvalue.alpha.source=closed-form\n"
            "check.0.name=bound\ncheck.0.lhs=0.5\ncheck.0.relation=<=\ncheck.0.rhs=1\n"
            "check.0.slack=0.5\ncheck.0.pass=true\n"
            "note.0=two lines\n"
            "summary.checks=1\nsummary.failed=0\nsummary.status=pass\n");
  EXPECT_NE(r.render(ReportFormat::human).find("1.25"), std::string::npos);
}

TEST(Report, FailuresAndInequalitySteps) {
  Report r("x");
  InequalityStep ok{"a<=b", 1.0, 2.0};
  InequalityStep bad{"c<=d", 3.0, 2.0};
  r.check(ok, "chain.");
  r.check(bad, "chain.");
  EXPECT_EQ(r.failures(), 1u);
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.checks()[0].name, "chain.a<=b");
  EXPECT_DOUBLE_EQ(r.checks()[1].slack, -1.0);
  EXPECT_NE(r.render(ReportFormat::machine).find("summary.status=fail"), std::string::npos);
}

}  // namespace
}  // namespace aphi
