#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = ifnorder::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
  const Run r = run(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return json::parse(r.out);
}

fs::path scratch(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "ifnorder-cli-test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << content;
  return p;
}

const std::string kA = R"({"mu": ["0.3","0.35","0.4","0.5"], "nu": ["0.1","0.2","0.25","0.3"]})";
const std::string kB = "<0.35 0.35 0.4 0.55|0 0.2 0.25 0.35>";
const std::string kTable2 = std::string(REFERENCE_DIR) + "/table2.json";

}  // namespace

TEST_CASE("compare") {
  const json d = run_json({"compare", kA, kB});
  CHECK(d.at("verdict") == "Less");
  CHECK(d.at("j") == 5);
  CHECK(d.at("cj_a") == "0.26125");
  CHECK(d.at("cj_b") == "0.30125");

  const json self = run_json({"compare", kA, kA});
  CHECK(self.at("verdict") == "Equivalent");
  CHECK(self.at("certified") == true);
  CHECK_FALSE(self.contains("j"));

  const json shallow = run_json({"--depth", "1", "compare", kA, kB});
  CHECK(shallow.at("verdict") == "Indistinguishable");

  const json files = run_json({"compare", scratch("a.json", kA).string(), scratch("b.txt", kB + "\n").string()});
  CHECK(files.at("verdict") == "Less");

  const Run table = run({"--format", "table", "compare", kA, kB});
  CHECK(table.code == 0);
  CHECK(table.out.rfind("verdict", 0) == 0);
  CHECK(table.out.find("0.30125") != std::string::npos);

  const json prec = run_json({"--prec", "2", "compare", kA, kB});
  CHECK(prec.at("cj_a") == "0.26");
}

TEST_CASE("usage and validation exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"compare", kA}).code == 2);
  CHECK(run({"compare", "<0.3 0.2|0.1>", kB}).code == 3);
  CHECK(run({"compare", "<0.3 x|0.1>", kB}).code == 2);
  CHECK(run({"compare", "{\"mu\": [", kB}).code == 2);
  CHECK(run({"compare", "/nonexistent/file", kB}).code == 2);
  CHECK(run({"--format", "xml", "compare", kA, kB}).code == 2);
  CHECK(run({"--prec", "-1", "compare", kA, kB}).code == 3);
  CHECK(run({"--seq", "bogus", "compare", kA, kB}).code == 2);
  CHECK(run({"--depth", "0", "compare", kA, kB}).code == 3);

  const auto bad_levels = scratch("levels.txt", "1,1\n0,0\n");
  CHECK(run({"--seq", "file:" + bad_levels.string(), "compare", kA, kB}).code == 3);

  // mu = nu = 1 on a shared core.
  const std::string touching = "<0 0 1 1|1 1 1 1>";
  const Run strict = run({"compare", touching, kB});
  CHECK(strict.code == 3);
  CHECK(strict.err.find("validation") != std::string::npos);

  CHECK(run({"--help"}).code == 0);
  CHECK(run({"compare", "--help"}).code == 0);
}

TEST_CASE("sort") {
  const std::string list = R"([{"tri": [["0.20","0.30","0.50"],["0.35","0.55","0.65"]]},
                               {"tri": [["0.17","0.32","0.58"],["0.37","0.63","0.73"]]},
                               {"tri": [["0.20","0.30","0.50"],["0.35","0.55","0.65"]]}])";
  const json d = run_json({"sort", list});
  REQUIRE(d.size() == 2);
  CHECK(d[0].at("members").size() == 1);
  CHECK(d[0].at("members")[0].at("index") == 1);
  CHECK(d[1].at("members").size() == 2);
  CHECK(d[1].at("indistinguishable") == false);

  const auto lines = scratch("list.txt", "# values\n" + kB + "\n\n<0.3 0.35 0.4 0.5|0.1 0.2 0.25 0.3>\n");
  const Run csv = run({"--format", "csv", "sort", lines.string()});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("rank,index,value,group\n1,1,", 0) == 0);
  CHECK(run({"sort", "[]"}).code == 3);
}

TEST_CASE("scores") {
  const json d = run_json({"scores", "<0.6|0.2>", "--pairs", "2"});
  REQUIRE(d.size() == 1);
  CHECK(d[0].at("kind") == "IFValue");
  CHECK(d[0].at("c").size() == 8);
  CHECK(d[0].at("c").at("C1") == "0.52");
  CHECK(d[0].at("legacy").at("chen-tan-s").at("value") == "0.4");
  const json t = run_json({"scores", "<0.17 0.3 0.47 0.56|0.05 0.13 0.16 0.23>"});
  CHECK_FALSE(t[0].at("legacy").contains("chen-tan-s"));
  CHECK(t[0].at("kind") == "Trapezoidal");

  const json only_c = run_json({"scores", "<0.6|0.2>", "--method", "c"});
  CHECK_FALSE(only_c[0].contains("legacy"));

  const json zy = run_json({"scores", "<0.2 0.2|0.2 0.2>", "--method", "zhang-yu-kminus"});
  CHECK(zy[0].at("legacy").at("zhang-yu-kminus").at("squared") == true);

  CHECK(run({"scores", "<0.1 0.2|0.3 0.4>", "--method", "chen-tan-s"}).code == 3);
  CHECK(run({"scores", "<0.6|0.2>", "--method", "nope"}).code == 2);
  CHECK(run({"scores", "<0.6|0.2>", "--pairs", "0"}).code == 3);
}

TEST_CASE("cuts") {
  const json d = run_json({"cuts", "<0.17 0.3 0.47 0.56|0.05 0.13 0.16 0.23>"});
  CHECK(d.at("mu").at("lo") == "0.3");
  CHECK(d.at("mu").at("hi") == "0.47");
  CHECK(d.at("nu").at("lo") == "0.13");
  CHECK(d.at("strong") == false);

  const json s = run_json({"cuts", "<0.17 0.3 0.47 0.56|0.05 0.13 0.16 0.23>", "--strong", "--alpha", "0"});
  CHECK(s.at("mu").at("lo_open") == true);
  CHECK(s.at("mu").at("lo") == "0.17");

  const json pt = run_json({"cuts", "<0.2|0.4>", "--alpha", "1/2", "--beta", "1/3"});
  CHECK(pt.at("level_range").at("mu").at("values").size() == 2);
  CHECK(run({"cuts", "<0.2|0.4>", "--alpha", "0"}).code == 3);
  CHECK(run({"cuts", "<0.2|0.4>", "--strong", "--alpha", "1"}).code == 3);
}

TEST_CASE("decide") {
  const json d = run_json({"decide", kTable2});
  CHECK(d.at("alternatives").size() == 10);
  CHECK(d.at("ranking")[0].at("id") == "x8");
  CHECK(d.at("wr")[0][2] == "0.18");
  CHECK(d.at("wr")[3][2] == "0");
  CHECK(d.at("wr")[0][0] == "0.5");
  CHECK_FALSE(d.contains("errata"));

  const json e = run_json({"decide", kTable2, "--errata", "--audit"});
  CHECK(e.at("errata").at("unreproduced").empty());
  CHECK(e.at("audit").size() == 90);

  const json csv_system = run_json({"decide", std::string(REFERENCE_DIR) + "/table2.csv"});
  CHECK(csv_system.at("wr") == d.at("wr"));

  const std::string tripled = R"({"alternatives": ["p", "q"],
    "attributes": [{"id": "a", "weight": 3}, {"id": "b", "weight": 6}],
    "cells": {"p": {"a": {"ifv": [0.6, 0.2]}, "b": {"ifv": [0.3, 0.5]}},
              "q": {"a": {"ifv": [0.4, 0.3]}, "b": {"ifv": [0.5, 0.1]}}}})";
  const auto path = scratch("tripled.json", tripled);
  CHECK(run({"decide", path.string()}).code == 3);
  const json n = run_json({"decide", path.string(), "--normalize"});
  CHECK(n.at("degrees").at("p") == "0.416667");
  CHECK(n.at("ranking")[0].at("id") == "q");

  const Run table = run({"--format", "table", "decide", kTable2, "--errata"});
  CHECK(table.code == 0);
  CHECK(table.out.find("known") != std::string::npos);
  CHECK(table.out.find("new") == std::string::npos);

  CHECK(run({"decide", "/nonexistent.json"}).code == 2);
}

TEST_CASE("emit-curve") {
  const Run r = run({"emit-curve", "<0.2 0.3 0.5|0.35 0.55 0.65>", "--step", "1/4"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(!rows.empty());
  CHECK(rows[0] == "x,mu,nu");
  // 0, 1/4, 1/2, 3/4, 1 plus the knots 0.2, 0.3, 0.35, 0.55, 0.65.
  CHECK(rows.size() == 1 + 10);
  CHECK(std::find(rows.begin(), rows.end(), "0.3,1,0") != rows.end());
  CHECK(std::find(rows.begin(), rows.end(), "0.55,0,1") != rows.end());

  const Run spike = run({"emit-curve", "<0.2|0.4>"});
  REQUIRE(spike.code == 0);
  CHECK(spike.out.rfind("# mu is a zero-width spike at 0.2\n# nu is a zero-width spike at 0.4\n", 0) == 0);

  const json j = run_json({"--format", "json", "emit-curve", "<0.2|0.4>", "--step", "1/2"});
  CHECK(j.at("flags").size() == 2);
  CHECK(j.at("points").size() == 5);

  CHECK(run({"emit-curve", "<0.2|0.4>", "--step", "0"}).code == 3);
  CHECK(run({"emit-curve", "<0.2|0.4>", "--step", "2"}).code == 3);
}
