// Copyright 2026 The platial Authors
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

// Drives the installed binary end to end through a shell, checking exit
// codes, report structure, and the documented case numbers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "platial/io.hpp"

namespace fs = std::filesystem;
using platial::io::Json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path temp_file(const std::string& tag) {
  static int counter = 0;
  return fs::temp_directory_path() /
         ("platial_cli_test_" + tag + "_" + std::to_string(getpid()) + "_" +
          std::to_string(++counter));
}

RunResult run_cli(const std::string& args) {
  static const bool env_ready = [] {
    setenv("PLATIAL_FIXTURES", PLATIAL_FIXTURE_DIR, 1);
    return true;
  }();
  (void)env_ready;

  const fs::path out = temp_file("stdout");
  const fs::path err = temp_file("stderr");
  const std::string cmd = std::string(PLATIAL_CLI_BIN) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int raw = std::system(cmd.c_str());
  RunResult r;
  REQUIRE(raw != -1);
  REQUIRE(WIFEXITED(raw));
  r.code = WEXITSTATUS(raw);
  r.out = slurp(out);
  r.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return r;
}

Json report_of(const RunResult& r) {
  REQUIRE(r.code == 0);
  return platial::io::parse_json(r.out, "stdout");
}

}  // namespace

TEST_CASE("validate parses every fixture and reports counts") {
  Json rep = report_of(run_cli("validate table1-canon.json"));
  CHECK(rep["summary"]["type"] == "timelines");
  CHECK(rep["summary"]["n_timelines"] == 7);
  CHECK(rep["summary"]["n_states"] == 12);
  CHECK(rep["tool"]["name"] == "platial");
  CHECK(rep["command"] == "validate");

  rep = report_of(run_cli("validate fig1-scales.json"));
  CHECK(rep["summary"]["type"] == "records");
  CHECK(rep["summary"]["n_records"] == 7);

  rep = report_of(run_cli("validate eferding-milestones.json"));
  CHECK(rep["summary"]["type"] == "milestones");
  CHECK(rep["summary"]["n_tracks"] == 146);

  rep = report_of(run_cli("validate attabad.json"));
  CHECK(rep["summary"]["n_records"] == 246);

  rep = report_of(run_cli("validate attabad-timelines.json"));
  CHECK(rep["summary"]["n_timelines"] == 380);
  CHECK(rep["summary"]["n_states"] == 760);
}

TEST_CASE("exit codes sort usage, io, and data problems apart") {
  CHECK(run_cli("").code == 64);
  CHECK(run_cli("conjugate table1-canon.json").code == 64);
  CHECK(run_cli("validate --frobnicate table1-canon.json").code == 64);
  CHECK(run_cli("classify").code == 64);
  CHECK(run_cli("mobility attabad-timelines.json --kind teleport").code == 64);

  CHECK(run_cli("validate no-such-file.json").code == 2);

  const fs::path broken = temp_file("broken");
  std::ofstream(broken) << "{\"records\": ";
  const RunResult bad_json = run_cli("validate " + broken.string());
  CHECK(bad_json.code == 1);
  CHECK(bad_json.err.find("invalid JSON") != std::string::npos);
  fs::remove(broken);

  const fs::path wrong = temp_file("wrong");
  std::ofstream(wrong) << R"({"format_version": "1", "tracks": [
    {"household_id": "h1", "mode": "relocation", "milestones": [
      {"kind": "removal_complete", "at": "2020-01-01T00:00:00Z"},
      {"kind": "disaster_occurrence", "at": "2019-01-01T00:00:00Z"}
    ]}]})";
  const RunResult bad_order = run_cli("validate " + wrong.string());
  CHECK(bad_order.code == 1);
  CHECK(bad_order.err.find("tracks[0]") != std::string::npos);
  fs::remove(wrong);

  CHECK(run_cli("similarity fig1-scales.json --weights 1,2").code == 1);
  CHECK(run_cli("similarity fig1-scales.json --weights a,b,c").code == 1);
  CHECK(run_cli("risk eferding.json --combiner max").code == 1);
  CHECK(run_cli("risk eferding.json --combiner geometric:0.5,0.4").code == 1);
  CHECK(run_cli("--version").code == 0);
}

TEST_CASE("classify labels the canonical timelines") {
  const Json rep = report_of(run_cli("classify table1-canon.json"));
  REQUIRE(rep["results"].size() == 7);

  auto row = [&](const std::string& id) -> const Json& {
    for (const Json& r : rep["results"]) {
      if (r["id"] == id) return r;
    }
    FAIL("no row for ", id);
    return rep;  // unreachable
  };

  CHECK(row("accident")["instantiation"] == "instantaneous");
  CHECK(row("accident")["lifespan"] == "permanent");
  CHECK(row("check-post")["lifespan"] == "temporary");
  CHECK(row("check-post")["status"] == "dissolved");
  CHECK(row("check-post")["instantiation"] == "planned");
  CHECK(row("demonstration")["boundary"] == "dynamic");
  CHECK(row("demonstration")["instantiation"] == "instantaneous");
  CHECK(row("eiffel-tower")["lifespan"] == "permanent");
  CHECK(row("eiffel-tower")["status"] == "active");
  CHECK(row("kaaba")["movability"] == "immovable");
  CHECK(row("shop-move")["movability"] == "movable");
  CHECK(row("wtc")["lifespan"] == "permanent");
  CHECK(row("wtc")["status"] == "dissolved");

  // Results come back sorted by id.
  for (std::size_t i = 1; i < rep["results"].size(); ++i) {
    CHECK(rep["results"][i - 1]["id"] < rep["results"][i]["id"]);
  }

  const Json con = report_of(run_cli("classify table3-canon.json"));
  auto crow = [&](const std::string& id) -> const Json& {
    for (const Json& r : con["results"]) {
      if (r["id"] == id) return r;
    }
    FAIL("no row for ", id);
    return con;  // unreachable
  };
  CHECK(crow("monument")["construction"] == "fixed-time-fixed-space");
  CHECK(crow("shop-annex")["construction"] == "fixed-time-changing-space");
  CHECK(crow("civic-hall")["construction"] == "changing-time-fixed-space");
  CHECK(crow("relocated-mosque")["construction"] ==
        "changing-time-changing-space");
}

TEST_CASE("similarity echoes its configuration and writes a unit diagonal") {
  const fs::path csv_path = temp_file("matrix");
  const Json rep = report_of(
      run_cli("similarity fig1-scales.json --weights 2,1,1 "
              "--spatial-scale 2500 --temporal-scale 7200 --csv-out " +
              csv_path.string()));

  // Every knob that shaped the numbers is in the report.
  CHECK(rep["config"]["weights"]["spatial"] == 2.0);
  CHECK(rep["config"]["weights"]["temporal"] == 1.0);
  CHECK(rep["config"]["weights"]["semantic"] == 1.0);
  CHECK(rep["config"]["spatial_scale"] == 2500.0);
  CHECK(rep["config"]["temporal_scale"] == 7200.0);
  CHECK(rep["summary"]["n_places"] == 7);
  CHECK(rep["summary"]["n_pairs"] == 21);
  for (const Json& r : rep["results"]) {
    CHECK(r["a"].get<std::string>() < r["b"].get<std::string>());
    const double s = r["similarity"].get<double>();
    CHECK(s >= 0.0);
    CHECK(s <= 1.0);
  }

  const std::string csv = slurp(csv_path);
  fs::remove(csv_path);
  std::istringstream lines(csv);
  std::string header;
  REQUIRE(std::getline(lines, header));
  CHECK(header.rfind("id,", 0) == 0);
  std::string line;
  int row_index = 0;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string cell;
    int col = -1;  // first cell is the row id
    while (std::getline(cells, cell, ',')) {
      if (col == row_index) CHECK(cell == "1");
      ++col;
    }
    CHECK(col == 7);
    ++row_index;
  }
  CHECK(row_index == 7);
}

TEST_CASE("mobility finds every documented move in the lake fixture") {
  const Json rep = report_of(run_cli(
      "mobility attabad-timelines.json --min-displacement 75 "
      "--essence-threshold 0.55"));
  CHECK(rep["summary"]["n_events"] == 380);
  CHECK(rep["summary"]["n_essence_breaks"] == 0);
  CHECK(rep["summary"]["n_places"] == 380);
  CHECK(rep["summary"]["mean_displacement"] == 5000.0);
  CHECK(rep["summary"]["max_displacement"] == 5000.0);
  CHECK(rep["config"]["kind"] == "corporeal");
  CHECK(rep["config"]["min_displacement"] == 75.0);
  CHECK(rep["config"]["essence_threshold"] == 0.55);
  CHECK(rep["config"]["geom_tol"] == 0.05);
  REQUIRE(rep["results"].size() == 380);
  CHECK(rep["results"][0]["essence_similarity"] == 1.0);
}

TEST_CASE("relocation reproduces the retreat-case counts") {
  const RunResult r =
      run_cli("relocation eferding-milestones.json --as-of 2019-12-31");
  REQUIRE(r.code == 0);
  CHECK(r.err == "eligible=146 signed=72 moved=57\n");

  const Json rep = platial::io::parse_json(r.out, "stdout");
  CHECK(rep["summary"]["eligible"] == 146);
  CHECK(rep["summary"]["reached"]["disaster_occurrence"] == 146);
  CHECK(rep["summary"]["reached"]["zone_designation"] == 146);
  CHECK(rep["summary"]["reached"]["agreement_deadline"] == 146);
  CHECK(rep["summary"]["reached"]["contract_signed"] == 72);
  CHECK(rep["summary"]["reached"]["removal_complete"] == 57);
  CHECK(rep["summary"]["metadata"]["zone_area_km2"] == 24.35);
  CHECK(rep["summary"]["metadata"]["buildings"] == 612);
  CHECK(rep["summary"]["metadata"]["housing_buildings"] == 138);
  CHECK(rep["config"]["as_of"] == "2019-12-31T23:59:59.999Z");

  // Without a cutoff the later signings and removals count too.
  const Json all = report_of(run_cli("relocation eferding-milestones.json"));
  CHECK(all["summary"]["reached"]["contract_signed"] == 80);
  CHECK(all["summary"]["reached"]["removal_complete"] == 65);
  CHECK(all["config"]["as_of"].is_null());
}

TEST_CASE("a bare as-of date covers its whole day") {
  const fs::path f = temp_file("asof");
  std::ofstream(f) << R"({"format_version": "1", "tracks": [
    {"household_id": "h-edge", "mode": "relocation", "milestones": [
      {"kind": "contract_signed", "at": "2019-12-31T23:59:59Z"}]},
    {"household_id": "h-next", "mode": "displacement", "milestones": [
      {"kind": "contract_signed", "at": "2020-01-01T00:00:00Z"}]}
  ]})";

  const Json cut =
      report_of(run_cli("relocation " + f.string() + " --as-of 2019-12-31"));
  CHECK(cut["summary"]["reached"]["contract_signed"] == 1);

  // A full timestamp is taken literally.
  const Json sharp = report_of(run_cli(
      "relocation " + f.string() + " --as-of 2019-12-31T00:00:00Z"));
  CHECK(sharp["summary"]["reached"]["contract_signed"] == 0);

  const Json next =
      report_of(run_cli("relocation " + f.string() + " --as-of 2020-01-01"));
  CHECK(next["summary"]["reached"]["contract_signed"] == 2);
  fs::remove(f);
}

TEST_CASE("risk combines the flood-zone property components") {
  const Json rep = report_of(run_cli("risk eferding.json"));
  CHECK(rep["summary"]["n_places"] == 8);
  CHECK(rep["summary"]["n_skipped"] == 1);  // the zone itself
  CHECK(rep["config"]["combiner"] == "product");

  bool found = false;
  for (const Json& r : rep["results"]) {
    if (r["id"] == "efd-prop-004") {
      found = true;
      CHECK(r["hazard"] == 0.8);
      CHECK(r["exposure"] == 0.7);
      CHECK(r["vulnerability"] == 0.5);
      CHECK(r["risk"].get<double>() == doctest::Approx(0.28));
    }
  }
  CHECK(found);

  const Json geo = report_of(
      run_cli("risk eferding.json --combiner geometric:0.5,0.3,0.2"));
  CHECK(geo["config"]["combiner"] == "geometric");
  CHECK(geo["config"]["weights"]["hazard"] == 0.5);
  REQUIRE(geo["results"].size() == 8);
}

TEST_CASE("reports are deterministic apart from the run timestamp") {
  const fs::path out1 = temp_file("rep1");
  const fs::path out2 = temp_file("rep2");
  REQUIRE(run_cli("relocation eferding-milestones.json --as-of 2019-12-31 "
                  "--out " +
                  out1.string())
              .code == 0);
  REQUIRE(run_cli("relocation eferding-milestones.json --as-of 2019-12-31 "
                  "--out " +
                  out2.string())
              .code == 0);
  Json a = platial::io::parse_json(slurp(out1), "rep1");
  Json b = platial::io::parse_json(slurp(out2), "rep2");
  fs::remove(out1);
  fs::remove(out2);
  a.erase("generated_at");
  b.erase("generated_at");
  CHECK(a.dump(2) == b.dump(2));
}
