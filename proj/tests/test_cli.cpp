#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hnc/cli.hpp"

using namespace hnc;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hnc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("hn-fiber at the so(3) origin lists several planes") {
  const auto r = run({"hn-fiber", "so3_r3", "--point", "0,0,0", "--seed", "0"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["degree_bound"] == 4);
  CHECK(j["curve_family"] == "rays=0 arc_degree=2 seed=0");
  const auto& spaces = j["points"][0]["covector_spaces"];
  CHECK(spaces.size() >= 3);
  for (const auto& s : spaces) CHECK(s["dim"] == 2);
  CHECK(j["points"][0]["sandwich"]["passed"] == true);
}

TEST_CASE("reports are byte-identical for identical inputs") {
  const std::vector<std::string> args{"nash-fiber", "order2_r2", "--seed", "5", "--curves", "12:3"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto c = run({"nash-fiber", "order2_r2", "--seed", "6", "--curves", "12:3"});
  CHECK(c.out != a.out);
}

TEST_CASE("elliptic verdicts and exit codes") {
  const auto ok = run({"elliptic", "so3_r3", "--op", "g1.g1+g2.g2+g3.g3", "--points", "0,0,0;1,0,0"});
  CHECK(ok.code == kExitOk);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["verdict"] == "elliptic");
  for (const auto& pt : j["points"]) {
    for (const auto& f : pt["fibers"]) CHECK(f["exact_minimum"] == "1");
  }
  const auto bad = run({"elliptic", "so3_r3", "--op", "g1.g1", "--points", "0,0,0"});
  CHECK(bad.code == kExitCheckFailed);
  CHECK(nlohmann::json::parse(bad.out)["verdict"] == "not elliptic");
  CHECK(run({"elliptic", "so3_r3", "--op", "g1"}).code == kExitUsage);
  CHECK(run({"elliptic", "so3_r3", "--op", "g1", "--convention", "nonvanishing", "--points", "1,0,0"}).code ==
        kExitCheckFailed);
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"analyze", "no_such_preset"}).code == kExitUsage);
  CHECK(run({"analyze", "so3_r3", "--points", "1,2"}).code == kExitUsage);
  CHECK(run({"nash-fiber", "so3_r3", "--curves", "x"}).code == kExitUsage);
  CHECK(run({"symbol", "so3_r3", "--op", "g1.g7"}).code == kExitUsage);
  const auto path = std::filesystem::temp_directory_path() / "hnc_cli_bad.preset";
  {
    std::ofstream f(path);
    f << "name: bad\nvars: x\ngenerators:\n  g1 = x*d/dy\n";
  }
  const auto r = run({"analyze", path.string()});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("4:10") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("analyze, symbol and poisson-check") {
  const auto a = run({"analyze", "vanishing_origin_2"});
  CHECK(a.code == kExitOk);
  const auto ja = nlohmann::json::parse(a.out);
  CHECK(ja["regular_rank"] == 2);
  CHECK(ja["points"][0]["isotropy"]["dim"] == 4);
  const auto s = run({"symbol", "r4_counterexample", "--op", "counterexample"});
  CHECK(s.code == kExitOk);
  const auto js = nlohmann::json::parse(s.out);
  CHECK(js["realization"] == "0");
  CHECK(js["symbol"] != "0");
  const auto dir = std::filesystem::temp_directory_path() / "hnc_cli_csv";
  std::filesystem::remove_all(dir);
  const auto pc = run({"poisson-check", "so3_r3", "--scenario", "rotate_z", "--csv", dir.string()});
  CHECK(pc.code == kExitOk);
  CHECK(std::filesystem::exists(dir / "trajectory_rotate_z.csv"));
  const auto jp = nlohmann::json::parse(pc.out);
  CHECK(jp["scenarios"][0]["max_drift"].get<double>() <= 1e-6);
  const auto custom = run({"poisson-check", "vanishing_origin_2", "--scenario", "a=g12 m=1,1 T=0.5 steps=100"});
  CHECK(custom.code == kExitOk);
  std::filesystem::remove_all(dir);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "hnc_cli_report.json";
  const auto r = run({"analyze", "debord_line", "--out", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream f(path);
  const auto j = nlohmann::json::parse(f);
  CHECK(j["command"] == "analyze");
  std::filesystem::remove(path);
}
