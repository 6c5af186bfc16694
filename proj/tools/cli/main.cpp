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

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "aphi/errors.hpp"
#include "aphi/spec_io.hpp"
#include "commands.hpp"

namespace {

using aphi::cli::RunConfig;

template <typename T>
void bind_option(CLI::App& app, const std::string& name, std::optional<T>& slot, const std::string& help) {
  app.add_option_function<T>(name, [&slot](const T& v) { slot = v; }, help);
}

int report_error(const std::exception& e) {
  std::cerr << "error: " << e.what();
  if (const auto* p = dynamic_cast<const aphi::ParseError*>(&e); p && p->line() > 0) {
    std::cerr << " (line " << p->line() << ", column " << p->column() << ")";
  }
  std::cerr << "\n";
  if (const auto* c = dynamic_cast<const aphi::ContradictionError*>(&e)) {
    std::cerr << "state dump:\n" << c->dump();
  }
  return aphi::cli::exit_code_for(e);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aphi: Orlicz Figa-Talamanca-Herz algebras on finite groups and Z-windows"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cli;
  std::optional<std::string> config_path;
  std::optional<bool> zero_tol;
  bind_option(app, "--config", config_path, "JSON run configuration (default: $APHI_CONFIG)");
  bind_option(app, "--group", cli.group, "group spec: JSON file or inline JSON");
  bind_option(app, "--phi", cli.phi, "N-function spec: JSON file or inline JSON");
  bind_option(app, "--f", cli.f, "function rows file ('element re [im]')");
  bind_option(app, "--f-rows", cli.f_rows, "inline function rows, ';'-separated");
  bind_option(app, "--g", cli.g, "second function rows file");
  bind_option(app, "--g-rows", cli.g_rows, "inline second function rows");
  bind_option(app, "--set", cli.set, "element labels, commas or spaces; a..b ranges");
  bind_option(app, "--seed", cli.seed, "64-bit seed");
  bind_option(app, "--tol-root", cli.tol_root, "root-finding tolerance");
  bind_option(app, "--tol-conj", cli.tol_conj, "conjugacy tolerance (relative)");
  bind_option(app, "--tol-check", cli.tol_check, "slack accepted as rounding");
  bind_option(app, "--output,-o", cli.output, "write the report here instead of stdout");
  app.add_option_function<std::string>(
         "--format", [&](const std::string& v) { cli.format = v; }, "human | machine")
      ->check(CLI::IsMember({"human", "machine"}));
  bind_option(app, "--n", cli.n, "E_n index");
  bind_option(app, "--R", cli.radius, "ball radius R");
  bind_option(app, "--V-radius", cli.v_radius, "V = [-r, r]");
  bind_option(app, "--window", cli.window, "Z-window radius");
  bind_option(app, "--probes", cli.probes, "ball members probed");
  bind_option(app, "--samples", cli.samples, "random samples");
  bind_option(app, "--epsilon", cli.epsilon, "Leptin epsilon");
  bind_option(app, "--budget", cli.budget, "decomposition search budget");
  bind_option(app, "--y-min", cli.y_min, "conjugate grid start");
  bind_option(app, "--y-max", cli.y_max, "conjugate grid end");
  bind_option(app, "--count", cli.count, "conjugate grid points");
  app.add_flag_function(
      "--zero-tolerance", [&](std::int64_t) { zero_tol = true; },
      "suite: force every tolerance to 0 (negative control)");

  const std::map<std::string, std::vector<std::string>> groups{
      {"nfunc", {"conjugate", "check"}},
      {"norm", {"modular", "luxemburg", "orlicz", "charfn"}},
      {"group", {"check", "convolve", "leptin"}},
      {"aphi", {"bound", "lemma-r", "submult"}},
      {"porosity", {"witness"}},
      {"segal", {"report"}},
      {"unit", {"check"}},
      {"characters", {"enumerate", "brute"}},
  };
  for (const auto& [head, leaves] : groups) {
    CLI::App* sub = app.add_subcommand(head, head + " verbs");
    sub->require_subcommand(1);
    for (const std::string& leaf : leaves) {
      sub->add_subcommand(leaf)->callback([&cli, name = head + " " + leaf] { cli.verb = name; });
    }
  }
  app.add_subcommand("suite", "full acceptance battery")->callback([&cli] { cli.verb = "suite"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return aphi::cli::kInputError;
  }
  if (zero_tol) cli.zero_tolerance = true;

  const auto start = std::chrono::steady_clock::now();
  try {
    RunConfig cfg;
    if (!config_path) {
      if (const char* env = std::getenv(aphi::cli::kConfigEnv); env && *env) config_path = env;
    }
    if (config_path) cfg = aphi::cli::parse_run_config(aphi::read_file(*config_path));
    const std::optional<std::string> file_verb = cfg.verb;
    cfg.merge(cli);
    cfg.verb = cli.verb;  // the command line always names the verb
    if (file_verb && *file_verb != *cli.verb) {
      std::cerr << "note: config verb '" << *file_verb << "' overridden by '" << *cli.verb << "'\n";
    }

    aphi::Report report = aphi::cli::run(cfg);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto format = cfg.format.value_or("human") == "machine" ? aphi::ReportFormat::machine
                                                                  : aphi::ReportFormat::human;
    report.input("format", cfg.format.value_or("human"), !cfg.format.has_value());
    report.set_elapsed(elapsed);
    const std::string text = report.render(format);
    if (cfg.output) {
      std::ofstream out(*cfg.output, std::ios::binary);
      if (!out) throw aphi::ParseError("cannot write '" + *cfg.output + "'");
      out << text;
    } else {
      std::cout << text;
    }
    if (format == aphi::ReportFormat::machine) {
      std::cerr << "elapsed_seconds=" << elapsed << "\n";
    }
    return report.pass() ? aphi::cli::kPass : aphi::cli::kChecksFailed;
  } catch (const std::exception& e) {
    return report_error(e);
  }
}
