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

#include "doctest.h"

#include "commands.hpp"
#include "config.hpp"
#include "format.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using namespace qeet::cli;

namespace {

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string first_line(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  return line;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("qudit_eet_test_" + name);
  fs::remove_all(dir);
  return dir;
}

// Small grids so the CLI tests stay quick.
const char* kSmall = R"(
[grid]
samples = 1001
gamma_count = 5
gamma_max = 4
sweep_samples = 801
surface_gamma_count = 5
surface_samples = 201
)";

} // namespace

TEST_CASE("config: empty input gives the defaults") {
  const auto c = parse("");
  const auto d = default_config();
  CHECK(c.model.level_ratios == d.model.level_ratios);
  CHECK(c.model.coupling_ratios == d.model.coupling_ratios);
  CHECK(c.params.gamma == 0.41);
  CHECK(c.params.delta == 29.9);
  CHECK(c.params.r == 2392.0);
  CHECK(c.estimation.block_a[0] == 16050.0);
  CHECK(c.defaults_applied.size() == known_keys().size());
}

TEST_CASE("config: negative gamma is rejected with its line") {
  try {
    parse("[params]\n\ngamma = -1\n");
    FAIL("accepted gamma = -1");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 3);
    CHECK(e.key() == "params.gamma");
  }
}

TEST_CASE("config: unknown keys and sections are rejected") {
  CHECK_THROWS_AS(parse("[params]\ngama = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse("[nonsense]\n"), ConfigError);
  CHECK_THROWS_AS(parse("gamma = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse("[params]\ngamma = 1\ngamma = 2\n"), ConfigError);
  CHECK_THROWS_AS(parse("[model]\nlevel_ratios = 0, 1, 2\n"), ConfigError);
  CHECK_THROWS_AS(parse("[params]\ngamma = abc\n"), ConfigError);
  CHECK_THROWS_AS(parse("[model]\ntruncation = five-level\n"), ConfigError);
}

TEST_CASE("config: serialize/parse round trip is bit-exact") {
  auto c = parse("[model]\ncoupling_ratios = 1, 0.5, -0.67, 0.72, 0.9, 0.81, 0.81, 0.76\n"
                 "[params]\ngamma = 0.1\n");
  CHECK(c.model.coupling_ratios[1] == 0.5);
  c.params.delta = 0.1 + 0.2; // not exactly representable in short decimal form
  c.model.coupling_ratios[1] = 1.0 / 3.0;
  const auto text = serialize_config(c);
  const auto back = parse(text);
  CHECK(back.model.coupling_ratios == c.model.coupling_ratios);
  CHECK(back.params.delta == c.params.delta);
  CHECK(back.params.gamma == c.params.gamma);
  CHECK(back.estimation.site_coupling[3] == c.estimation.site_coupling[3]);
  CHECK(serialize_config(back) == text);
  CHECK(back.defaults_applied.empty());
}

#ifdef QEET_SOURCE_DIR
TEST_CASE("config: shipped example equals the built-in defaults") {
  const auto shipped = parse_config_file(fs::path(QEET_SOURCE_DIR) / "configs" / "default.cfg");
  CHECK(shipped.defaults_applied.empty());
  CHECK(serialize_config(shipped) == serialize_config(default_config()));
}
#endif

TEST_CASE("format_number round-trips doubles") {
  for (double x : {0.1, 1.0 / 3.0, 2392.0, -0.67, 1e-300, 6.02214076e23}) {
    CHECK(std::strtod(format_number(x).c_str(), nullptr) == x);
  }
}

TEST_CASE("cli: golden CSV headers") {
  const auto cfg = parse(kSmall);
  const auto dir = scratch("headers");
  RunOptions opt;
  opt.out_dir = dir;
  opt.svg = true;
  for (const auto& name : subcommand_names()) {
    run_subcommand(name, cfg, opt);
  }
  CHECK(first_line(dir / "excite.csv") == "gamma,p0,p1,p2,p3");
  CHECK(first_line(dir / "excite_state.csv") == "level,re,im,population");
  CHECK(first_line(dir / "trace.csv") == "gamma,gamma2,entropy");
  CHECK(first_line(dir / "surface.csv") == "gamma,gamma2,entropy");
  CHECK(first_line(dir / "sweep_gamma.csv") == "gamma,p0,p1,p2,p3,e_max,e_max_gamma2");
  CHECK(first_line(dir / "compare_four-level.csv") == "gamma,gamma2,entropy");
  CHECK(first_line(dir / "compare_single-exciton.csv") == "gamma,gamma2,entropy");
  CHECK(first_line(dir / "compare_summary.csv") ==
        "truncation,e_max,e_max_gamma2,ratio_to_four_level");
  CHECK(first_line(dir / "gamma_from_pulse.csv") ==
        "formula_gamma,reference_gamma,relative_difference");
  for (const char* svg : {"trace.svg", "surface.svg", "sweep_gamma.svg",
                          "compare_truncations.svg"}) {
    CHECK(slurp(dir / svg).rfind("<svg", 0) == 0);
  }
  CHECK(fs::exists(dir / "estimate_params.txt"));
  CHECK(fs::exists(dir / "estimated_model.cfg"));
  const auto manifest = slurp(dir / "manifest.txt");
  CHECK(manifest.find(qeet_version()) != std::string::npos);
  CHECK(manifest.find("[defaults_applied]") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("cli: excite without drive") {
  const auto cfg = parse("[params]\ngamma = 0\n");
  const auto dir = scratch("excite");
  RunOptions opt;
  opt.out_dir = dir;
  run_subcommand("excite", cfg, opt);
  std::ifstream in(dir / "excite.csv");
  std::string header;
  std::string row;
  std::getline(in, header);
  std::getline(in, row);
  std::istringstream fields(row);
  std::string cell;
  std::vector<double> v;
  while (std::getline(fields, cell, ',')) {
    v.push_back(std::stod(cell));
  }
  REQUIRE(v.size() == 5);
  CHECK(v[0] == 0.0);
  CHECK(v[1] == doctest::Approx(1.0).epsilon(1e-14));
  fs::remove_all(dir);
}

TEST_CASE("cli: sweep-gamma row at gamma = 3") {
  const auto cfg = parse(std::string(kSmall) + "gamma_min = 2\n");
  const auto dir = scratch("sweep");
  RunOptions opt;
  opt.out_dir = dir;
  run_subcommand("sweep-gamma", cfg, opt);
  std::ifstream in(dir / "sweep_gamma.csv");
  std::string line;
  bool found = false;
  while (std::getline(in, line)) {
    if (line.rfind("3,", 0) == 0) {
      found = true;
      std::istringstream fields(line);
      std::string cell;
      std::vector<double> v;
      while (std::getline(fields, cell, ',')) {
        v.push_back(std::stod(cell));
      }
      REQUIRE(v.size() == 7);
      CHECK(v[2] > 0.85);
      CHECK(v[2] < 0.95);
    }
  }
  CHECK(found);
  fs::remove_all(dir);
}

TEST_CASE("cli: gamma-from-pulse reports both values") {
  const auto dir = scratch("pulse");
  RunOptions opt;
  opt.out_dir = dir;
  run_subcommand("gamma-from-pulse", parse(""), opt);
  std::ifstream in(dir / "gamma_from_pulse.csv");
  std::string header;
  std::string row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(row.find(",0.40999999999999998,") != std::string::npos);
  CHECK(row.rfind("0.346", 0) == 0);
  fs::remove_all(dir);
}

TEST_CASE("cli: outputs are idempotent and thread-count independent") {
  const auto cfg = parse(kSmall);
  const auto a = scratch("idem_a");
  const auto b = scratch("idem_b");
  RunOptions opt;
  opt.out_dir = a;
  opt.threads = 1;
  run_subcommand("sweep-surface", cfg, opt);
  const auto first = slurp(a / "surface.csv");
  run_subcommand("sweep-surface", cfg, opt);
  CHECK(slurp(a / "surface.csv") == first);
  opt.out_dir = b;
  opt.threads = 3;
  run_subcommand("sweep-surface", cfg, opt);
  CHECK(slurp(b / "surface.csv") == first);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("cli: exit codes") {
  std::ostringstream out;
  std::ostringstream err;
  const auto dir = scratch("exit");
  fs::create_directories(dir);
  const auto cfg = dir / "bad.cfg";
  std::ofstream(cfg) << "[params]\ngamma = -1\n";
  RunOptions opt;
  opt.config_path = cfg.string();
  opt.out_dir = dir / "out";
  CHECK(run_cli("excite", opt, out, err) == kExitConfig);
  CHECK(err.str().find("params.gamma") != std::string::npos);
  CHECK(err.str().find(":2") != std::string::npos);

  std::ofstream(cfg, std::ios::trunc) << "[params]\ngamma = 0.2\n";
  const auto blocker = dir / "file";
  std::ofstream(blocker) << "x";
  opt.out_dir = blocker / "sub";
  err.str("");
  CHECK(run_cli("excite", opt, out, err) == kExitIo);

  opt.out_dir = dir / "out";
  CHECK(run_cli("excite", opt, out, err) == kExitOk);
  CHECK(run_cli("no-such-command", opt, out, err) == kExitUsage);
  fs::remove_all(dir);
}

#ifdef QEET_CLI_BINARY
TEST_CASE("cli binary: end to end") {
  const auto dir = scratch("binary");
  fs::create_directories(dir);
  const std::string exe = QEET_CLI_BINARY;
  const auto run = [&](const std::string& args) {
    const std::string cmd = "\"" + exe + "\" " + args + " > \"" + (dir / "log").string() +
                            "\" 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(run("excite --out \"" + (dir / "o").string() + "\"") == 0);
  CHECK(fs::exists(dir / "o" / "excite.csv"));
  std::ofstream(dir / "bad.cfg") << "[params]\nbogus = 1\n";
  CHECK(run("excite --config \"" + (dir / "bad.cfg").string() + "\" --out \"" +
            (dir / "o").string() + "\"") == 2);
  CHECK(run("--version") == 0);
  CHECK(run("") == 1);
  CHECK(run("excite --bogus") == 1);
  fs::remove_all(dir);
}
#endif
