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
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "aphi/errors.hpp"
#include "commands.hpp"
#include "run_config.hpp"

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string temp_path(const std::string& name) {
  return ::testing::TempDir() + "aphi_cli_" + std::to_string(::getpid()) + "_" + name;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

// `args` is passed through the shell verbatim; `env` is prepended.
Outcome aphi(const std::string& args, const std::string& env = "") {
  const std::string out = temp_path("stdout"), err = temp_path("stderr");
  const std::string cmd = "env -u APHI_CONFIG " + env + " '" APHI_BIN "' " + args + " >'" + out +
                          "' 2>'" + err + "'";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

const std::string kZ8 = R"('{"type":"Zn","n":8}')";

TEST(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(aphi("--help").code, 0);
  EXPECT_EQ(aphi("").code, 2);
  EXPECT_EQ(aphi("norm").code, 2);
  EXPECT_EQ(aphi("norm luxemburg --bogus").code, 2);
}

TEST(Cli, LuxemburgOfHalfIndicator) {
  const Outcome o =
      aphi("norm luxemburg --group " + kZ8 + " --f-rows '0 1;1 1;2 1;3 1' --format machine");
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("value.luxemburg=0.5\n"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("input.phi.source=default\n"), std::string::npos);
  EXPECT_NE(o.out.find("summary.status=pass\n"), std::string::npos);
}

TEST(Cli, MachineReportsAreByteIdenticalPerSeed) {
  for (const std::string& args :
       {std::string("porosity witness --window 64 --probes 20 --seed 5 --format machine"),
        "segal report --group " + kZ8 + " --samples 6 --seed 5 --format machine"}) {
    const Outcome a = aphi(args), b = aphi(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_EQ(a.out.find("elapsed"), std::string::npos);
    EXPECT_NE(a.err.find("elapsed"), std::string::npos);
  }
  EXPECT_NE(aphi("porosity witness --window 64 --probes 20 --seed 5 --format machine").out,
            aphi("porosity witness --window 64 --probes 20 --seed 6 --format machine").out);
}

TEST(Cli, MalformedSpecReportsLineAndColumn) {
  const std::string path = write_temp("bad_group.json", "{\n  \"type\": \"Zn\",\n  \"n\": ,\n}\n");
  const Outcome o = aphi("group check --group '" + path + "'");
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("line 3"), std::string::npos) << o.err;
  EXPECT_NE(o.err.find("column"), std::string::npos) << o.err;
}

TEST(Cli, MalformedFunctionRows) {
  const Outcome o = aphi("norm luxemburg --group " + kZ8 + " --f-rows '0 1;9 1'");
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("unknown element"), std::string::npos) << o.err;
}

TEST(Cli, ConfigKeysAreStrict) {
  const std::string path = write_temp("strict.json", "{\"group\": {\"type\": \"Zn\", \"n\": 4},\n \"sede\": 3}");
  const Outcome o = aphi("group check --config '" + path + "'");
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("sede"), std::string::npos) << o.err;
  EXPECT_NE(o.err.find("line 2"), std::string::npos) << o.err;
}

TEST(Cli, ConfigFromEnvironmentAndOverride) {
  const std::string path = write_temp(
      "env.json", R"({"group": {"type": "Zn", "n": 8}, "f_rows": "0 1;1 1;2 1;3 1", "format": "machine"})");
  const Outcome fromenv = aphi("norm luxemburg", "APHI_CONFIG='" + path + "'");
  EXPECT_EQ(fromenv.code, 0) << fromenv.err;
  EXPECT_NE(fromenv.out.find("value.luxemburg=0.5\n"), std::string::npos) << fromenv.out;
  const Outcome over = aphi("norm luxemburg --f-rows '0 1;1 1'", "APHI_CONFIG='" + path + "'");
  EXPECT_EQ(over.code, 0) << over.err;
  EXPECT_NE(over.out.find("value.luxemburg=0.35355339059327"), std::string::npos) << over.out;
  EXPECT_EQ(aphi("norm luxemburg --config '" + path + "'").out, fromenv.out);
}

TEST(Cli, OutputFile) {
  const std::string path = temp_path("report.txt");
  const Outcome o = aphi("characters enumerate --group " + kZ8 + " --format machine -o '" + path + "'");
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(o.out.empty());
  EXPECT_NE(slurp(path).find("report.verb=characters enumerate"), std::string::npos);
}

TEST(Cli, EmptyBatteryPasses) {
  const std::string path = write_temp("empty.json", R"({"battery_groups": [], "battery_pairs": [], "format": "machine"})");
  const Outcome o = aphi("suite --config '" + path + "'");
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("summary.checks=0\n"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("input.seed.source=default\n"), std::string::npos) << o.out;
}

TEST(Cli, ZeroToleranceSuiteFails) {
  const std::string path = write_temp(
      "zero.json", R"({"battery_groups": [{"type": "Zn", "n": 2}, {"type": "Zwindow", "radius": 64}],
                      "battery_pairs": [{"kind": "entropy"}], "zero_tolerance": true})");
  const Outcome o = aphi("suite --format machine --config '" + path + "'");
  EXPECT_EQ(o.code, 1) << o.err;
  EXPECT_NE(o.out.find("summary.status=fail\n"), std::string::npos);
}

TEST(Cli, ScopeAndInfeasibility) {
  const Outcome p = aphi("porosity witness --window 5");
  EXPECT_EQ(p.code, 3);
  EXPECT_NE(p.err.find("Minimal window estimate"), std::string::npos) << p.err;
  EXPECT_EQ(aphi(R"(characters enumerate --group '{"type":"S","n":3}')").code, 3);
  EXPECT_EQ(aphi(R"(unit check --group '{"type":"Zwindow","radius":8}')").code, 3);
  const Outcome o = aphi(R"(aphi lemma-r --group '{"type":"Zwindow","radius":3}' --set -1..1 --epsilon 0.01)");
  EXPECT_EQ(o.code, 3);
  EXPECT_NE(o.err.find("needs a window of radius >= 101"), std::string::npos) << o.err;
}

TEST(ExitCodes, ErrorMapping) {
  using namespace aphi;
  EXPECT_EQ(cli::exit_code_for(ContradictionError("x", "dump")), cli::kContradiction);
  EXPECT_EQ(cli::exit_code_for(ScopeError("x")), cli::kScopeError);
  EXPECT_EQ(cli::exit_code_for(InfeasibleError("x")), cli::kScopeError);
  EXPECT_EQ(cli::exit_code_for(ParseError("x", 1, 2)), cli::kInputError);
  EXPECT_EQ(cli::exit_code_for(DomainError("x")), cli::kInputError);
  EXPECT_EQ(cli::exit_code_for(CapError("x")), cli::kInputError);
}

TEST(Verbs, EveryVerbPassesOnASmallGroup) {
  aphi::cli::RunConfig c = aphi::cli::parse_run_config(R"({
    "group": {"type": "Zn", "n": 4}, "f_rows": "0 1;1 -0.5 0.25", "g_rows": "0 1;3 2",
    "set": "0 1", "samples": 4, "probes": 5, "window": 64,
    "battery_groups": [{"type": "Zn", "n": 2}], "battery_pairs": [{"kind": "cosh"}]})");
  EXPECT_EQ(aphi::cli::verbs().size(), 18u);
  for (const std::string& verb : aphi::cli::verbs()) {
    c.verb = verb;
    const aphi::Report r = aphi::cli::run(c);
    EXPECT_TRUE(r.pass()) << verb << "\n" << r.render(aphi::ReportFormat::human);
  }
}

}  // namespace
