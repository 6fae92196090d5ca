// Copyright 2026 The qudit-eet Authors
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

#include "cli/commands.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Entanglement of two driven, coupled qudits"};
  app.set_version_flag("--version", std::string(qeet_version()));
  app.require_subcommand(1, 1);

  qeet::cli::RunOptions options;
  std::string out_dir;
  unsigned threads = 0;

  const std::vector<std::pair<std::string, std::string>> help{
      {"excite", "initial qudit state and level populations after the pulse"},
      {"trace", "entropy of entanglement against gamma2 at the configured gamma"},
      {"sweep-gamma", "populations and maximum entanglement over a gamma range"},
      {"sweep-surface", "entropy over the (gamma, gamma2) plane"},
      {"compare-truncations", "four-, three-, two-level and single-exciton traces"},
      {"estimate-params", "model ratios from the site Hamiltonian and dipoles"},
      {"gamma-from-pulse", "drive strength from pulse energy, duration and spot size"},
  };
  for (const auto& [name, text] : help) {
    auto* sub = app.add_subcommand(name, text);
    sub->add_option("-c,--config", options.config_path, "INI config; defaults when omitted")
        ->check(CLI::ExistingFile);
    sub->add_option("-o,--out", out_dir, "output directory (overrides output.directory)");
    sub->add_flag("--svg", options.svg, "also write SVG plots");
    sub->add_option("-j,--threads", threads, "worker threads, 0 = all cores");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version exit 0; every parse error maps to the usage code.
    return app.exit(e) == 0 ? qeet::cli::kExitOk : qeet::cli::kExitUsage;
  }

  if (!out_dir.empty()) {
    options.out_dir = out_dir;
  }
  const auto* sub = app.get_subcommands().front();
  if (sub->count("--threads") > 0) {
    options.threads = threads;
  }
  return qeet::cli::run_cli(sub->get_name(), options, std::cout, std::cerr);
}
