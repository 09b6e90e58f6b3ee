// Copyright 2026 The narrowband Authors
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

// Runs the installed command-line tool as a subprocess.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#ifndef NB_CLI_PATH
#error "NB_CLI_PATH must name the narrowband executable"
#endif

namespace {

constexpr double kPi = std::numbers::pi;

struct Result {
  int exit_code = -1;
  std::string out;
};

Result run(const std::string &args) {
  const std::string cmd = std::string(NB_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch(const std::string &name) {
  const auto dir = std::filesystem::temp_directory_path() / "nb_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::vector<std::string>> csv(const std::string &text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

double num(const std::string &s) { return std::stod(s); }

}  // namespace

TEST_CASE("synth") {
  const auto path = scratch("pi.json");
  const Result r = run("synth --angle 3.14159265 --objective area --out " +
                       path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("pulse_area: 9.4247") != std::string::npos);
  CHECK(r.out.find("infidelity_coeff: 2.283") != std::string::npos);
  const auto doc = nlohmann::json::parse(slurp(path));
  REQUIRE(doc["pulses"].size() == 5);
  double area = 0.0;
  for (const auto &p : doc["pulses"]) area += p["theta"].get<double>();
  CHECK(std::abs(area - 9.4248) < 5e-4);
  CHECK(doc["name"] == "task1");

  const Result sk = run("synth --angle 3.14159265 --family sk1");
  CHECK(sk.exit_code == 0);
  const auto skdoc = nlohmann::json::parse(sk.out);
  CHECK(skdoc["pulses"].size() == 3);

  const auto cpath = scratch("pi.csv");
  CHECK(run("synth --angle 180 --degrees --objective infidelity --out " +
            cpath.string())
            .exit_code == 0);
  const auto rows = csv(slurp(cpath));
  REQUIRE(rows.size() >= 3);
  CHECK(rows[0][0] == "# name: task1");
  // Second pulse; the optimizer fixes lambda to about 1e-9.
  CHECK(std::abs(num(rows[4][1]) - kPi) < 1e-6);

  const Result forced = run("synth --angle 1 --format csv");
  CHECK(forced.exit_code == 0);
  CHECK(forced.out.rfind("# name: task1", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("synth --angle 0").exit_code == 2);
  CHECK(run("synth --angle 7").exit_code == 2);
  CHECK(run("synth --angle -1").exit_code == 2);
  CHECK(run("synth").exit_code == 64);
  CHECK(run("synth --angle 1 --bogus").exit_code == 64);
  CHECK(run("synth --angle 1 --objective speed").exit_code == 64);
  CHECK(run("frobnicate").exit_code == 64);
  CHECK(run("").exit_code == 64);
  CHECK(run("sweep-epsilon --points 1").exit_code == 64);
  CHECK(run("sweep-epsilon --detection 1.5").exit_code == 64);
  CHECK(run("sweep-epsilon --angle 0").exit_code == 2);
  CHECK(run("sweep-position --waist-radius -1").exit_code == 64);
  CHECK(run("contours --n 1").exit_code == 64);
  CHECK(run("synth --angle 1 --out /nonexistent-dir/x.json").exit_code == 64);

  const Result help = run("verify --help");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("table") {
  const auto path = scratch("table.csv");
  REQUIRE(run("table --out " + path.string()).exit_code == 0);
  const auto rows = csv(slurp(path));
  REQUIRE(rows.size() == 17);
  const std::vector<std::string> header = {
      "subfamily", "net_rotation", "lambda_x", "lambda_y", "theta_1",
      "theta_2",   "theta_3",      "theta_4",  "theta_5",  "phi_1",
      "phi_2",     "phi_3",        "phi_4",    "phi_5",    "pulse_area",
      "infidelity_coeff"};
  CHECK(rows[0] == header);
  CHECK(rows[1][0] == "T_min");
  CHECK(std::abs(num(rows[1][1]) - kPi / 4) < 1e-8);
  CHECK(std::abs(num(rows[1][14]) - 5.7055) < 5e-4);
  CHECK(rows[15][0] == "E_min");
  CHECK(std::abs(num(rows[15][1]) - 7 * kPi / 4) < 1e-8);
  CHECK(std::abs(num(rows[15][15]) - 13.3445) < 5e-4);

  const auto meta = nlohmann::json::parse(slurp(path.string() + ".meta.json"));
  CHECK(meta["command"] == "table");
  CHECK(meta.contains("generated_at"));

  // Data files carry no timestamp, so reruns are byte identical.
  const auto again = scratch("table2.csv");
  REQUIRE(run("table --out " + again.string()).exit_code == 0);
  CHECK(slurp(path) == slurp(again));
}

TEST_CASE("sweep-epsilon") {
  const Result pi = run("sweep-epsilon --angle 3.141592653589793 --points 11 "
                        "--detection 0.9");
  REQUIRE(pi.exit_code == 0);
  const auto rows = csv(pi.out);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0] == std::vector<std::string>{"eps", "simple", "sk1",
                                            "task1_tmin", "task1_emin"});
  for (std::size_t c = 1; c < 5; ++c) {
    CHECK(num(rows[1][c]) == 0.0);
    CHECK(std::abs(num(rows[11][c]) - 0.9) < 1e-8);
  }
  CHECK(pi.out == run("sweep-epsilon --angle 3.141592653589793 --points 11 "
                      "--detection 0.9")
                      .out);

  const Result half = run("sweep-epsilon --angle 90 --degrees --points 3");
  REQUIRE(half.exit_code == 0);
  const auto hrows = csv(half.out);
  for (std::size_t c = 1; c < 5; ++c)
    CHECK(std::abs(num(hrows[3][c]) - 0.5) < 1e-8);

  const auto path = scratch("eps.csv");
  REQUIRE(run("sweep-epsilon --points 5 --out " + path.string()).exit_code == 0);
  const auto meta = nlohmann::json::parse(slurp(path.string() + ".meta.json"));
  CHECK(meta["detection"]["fidelity"] == 1.0);
  CHECK(meta["sequences"].size() == 4);
  CHECK(meta["sequences"][2]["name"] == "task1_tmin");
}

TEST_CASE("sweep-position") {
  const double w = 22.1;
  const auto path = scratch("pos.csv");
  REQUIRE(run("sweep-position --angle 3.141592653589793 --points 41 --span 200 "
              "--detection 0.8 --out " + path.string())
              .exit_code == 0);
  const auto rows = csv(slurp(path));
  REQUIRE(rows.size() == 42);
  CHECK(rows[0][0] == "x_um");
  CHECK(num(rows[1][0]) == -100.0);
  CHECK(num(rows[41][0]) == 100.0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double x = num(rows[i][0]);
    const double simple = num(rows[i][1]);
    const double expected =
        0.8 * std::pow(std::sin(kPi * std::exp(-x * x / (w * w)) / 2), 2);
    CHECK(std::abs(simple - expected) <= 1e-8 * std::max(1e-3, expected));
    if (x == 0.0)
      for (std::size_t c = 1; c < 5; ++c)
        CHECK(std::abs(num(rows[i][c]) - 0.8) < 1e-8);
    if (std::abs(x) >= w)
      for (std::size_t c = 3; c < 5; ++c) CHECK(num(rows[i][c]) <= simple);
  }
  const auto meta = nlohmann::json::parse(slurp(path.string() + ".meta.json"));
  CHECK(meta["beam"]["waist_radius_um"] == 22.1);
  CHECK(meta["span_um"] == 200.0);
}

TEST_CASE("contours") {
  const Result r = run("contours --n 4");
  REQUIRE(r.exit_code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 17);
  CHECK(rows[0] == std::vector<std::string>{"lambda_x", "lambda_y",
                                            "net_angle", "pulse_area",
                                            "infidelity_coeff"});
  CHECK(num(rows[6][0]) == 0.5);
  CHECK(num(rows[6][1]) == 0.5);
  CHECK(std::abs(num(rows[6][2]) - kPi) < 1e-8);
  CHECK(std::abs(num(rows[16][2]) - 2 * kPi) < 1e-8);
}

TEST_CASE("verify") {
  const Result r = run("verify");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("16/16 rows pass") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
