/*
 * Copyright (c) 2026, The spacetime Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

#include <filesystem>
#include <sstream>

#include <doctest.h>

#include "cli.hpp"
#include "spacetime/core/graph_io.hpp"

using namespace spacetime;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* f) { return std::string(SPACETIME_TEST_DATA) + "/" + f; }

}  // namespace

TEST_CASE("validate exit codes") {
  auto ok = run({"validate", data("valid_graph.json")});
  CHECK(ok.code == cli::kPass);
  CHECK(json::parse(ok.out)["ok"] == true);
  auto dup = run({"validate", data("duplicated_position.json")});
  CHECK(dup.code == cli::kViolation);
  CHECK(json::parse(dup.out)["violations"][0]["invariant"] == "Unicity of positions");
  CHECK(run({"validate", data("malformed.json")}).code == cli::kUsage);
  CHECK(run({"validate", data("missing.json")}).code == cli::kUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"enumerate", "--rule", "nope", "--line", "5"}).code == cli::kUsage);
  CHECK(run({"enumerate", "--rule", "particle"}).code == cli::kUsage);
  CHECK(run({"enumerate", "--rule", "particle", "--line", "5", "--right", "2"}).code ==
        cli::kUsage);
  CHECK(run({"check", "--rule", "particle", "--line", "6", "--properties", "nope"}).code ==
        cli::kUsage);
  CHECK(run({"--help"}).code == cli::kPass);
}

TEST_CASE("enumerate prints the index") {
  auto r = run({"enumerate", "--rule", "particle", "--line", "9", "--right", "1", "--left", "7",
                "--budget", "12"});
  REQUIRE(r.code == cli::kPass);
  auto j = json::parse(r.out);
  CHECK(j["cuts"] == 14);
  CHECK(j["budget"] == 12);
  auto zero = run({"enumerate", "--rule", "particle", "--ring", "6", "--budget", "0"});
  CHECK(json::parse(zero.out)["cuts"] == 1);
}

TEST_CASE("enumerate writes files") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "spacetime_cli_enumerate";
  fs::remove_all(dir);
  auto r = run({"enumerate", "--rule", "particle", "--ring", "4", "--budget", "0", "--out",
                dir.string()});
  CHECK(r.code == cli::kPass);
  CHECK(fs::exists(dir / "index.json"));
  CHECK(fs::exists(dir / "background.dot"));
  int cut_files = 0;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json" && e.path().filename() != "index.json") ++cut_files;
  CHECK(cut_files == 1);
  fs::remove_all(dir);
}

TEST_CASE("check verdicts") {
  CHECK(run({"check", "--rule", "particle", "--line", "6", "--budget", "10"}).code == cli::kPass);
  auto pd = run({"check", "--rule", "cex-nonportdec", "--properties", "port-decreasing"});
  CHECK(pd.code == cli::kViolation);
  auto np = run({"check", "--rule", "cex-nonprivate", "--properties", "privacy,consistency"});
  CHECK(np.code == cli::kViolation);
  auto j = json::parse(np.out);
  CHECK(j["passed"] == false);
  for (const auto& rep : j["reports"]) {
    CHECK(rep["passed"] == false);
    for (const auto& w : rep["witnesses"]) {
      if (w.contains("shared")) CHECK(w["shared"] == json::array({"w"}));
      if (w.contains("vertex")) CHECK(w["vertex"] == "0.w");
    }
  }
  CHECK(run({"check", "--graph", data("valid_graph.json"), "--properties", "commutativity"}).code ==
        cli::kPass);
}

TEST_CASE("ca command") {
  auto ok = run({"ca", "--width", "8", "--periodic", "--config", "1,0,0,0", "--budget", "12"});
  CHECK(ok.code == cli::kPass);
  auto j = json::parse(ok.out);
  CHECK(j["mismatches"] == 0);
  CHECK(j["layers"] >= 3);
  auto bad = run({"ca", "--width", "8", "--periodic", "--config", "1,0,0,0", "--budget", "12",
                  "--corrupt-entry", "1,0"});
  CHECK(bad.code == cli::kViolation);
  CHECK(json::parse(bad.out)["mismatches"] > 0);
  CHECK(run({"ca", "--width", "8", "--periodic", "--steps", "0"}).code == cli::kPass);
  CHECK(run({"ca", "--table", data("xor.json"), "--ring", "6", "--budget", "8"}).code ==
        cli::kPass);
  CHECK(run({"ca", "--config", "1,7", "--periodic"}).code == cli::kUsage);
  CHECK(run({"ca", "--table", data("malformed.json"), "--ring", "6"}).code == cli::kUsage);
}

TEST_CASE("dilation command") {
  auto r = run({"dilation"});
  CHECK(r.code == cli::kPass);
  auto j = json::parse(r.out);
  CHECK(j["center"] == 4);
  CHECK(j["left"] == 28);
  CHECK(j["right"] == 14);
  CHECK(j["ratio"] == 2.0);
  auto flat = json::parse(run({"dilation", "--no-color"}).out);
  CHECK(flat["ratio"] == 1.0);
  auto zero = json::parse(run({"dilation", "--firings", "0"}).out);
  for (const auto& [k, v] : zero["counts"].items()) CHECK(v == 0);
  CHECK(run({"dilation", "--center", "3"}).code == cli::kUsage);
  CHECK(run({"dilation", "--policy", "random:4"}).code != cli::kUsage);
}

TEST_CASE("output does not depend on the worker count") {
  for (const auto& base : std::vector<std::vector<std::string>>{
           {"enumerate", "--rule", "particle", "--ring", "8", "--right", "1", "--budget", "10"},
           {"check", "--rule", "particle", "--ring", "6", "--right", "1", "--budget", "8"},
           {"ca", "--width", "8", "--periodic", "--budget", "10", "--seed", "4"}}) {
    auto one = base, eight = base;
    one.insert(one.end(), {"--jobs", "1"});
    eight.insert(eight.end(), {"--jobs", "8"});
    auto a = run(one), b = run(eight);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
