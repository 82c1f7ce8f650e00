#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/app.hpp"
#include "cli/commands.hpp"
#include "cli/output.hpp"
#include "cli/settings.hpp"
#include "doctest.h"

using namespace rlab_cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const std::string& env = "") {
  args.insert(args.begin(), "restriction-lab");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err, env);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  const fs::path dir = fs::path(RLAB_TEST_TMP) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string write_config(const std::string& dir, const std::string& text) {
  const std::string path = dir + "/run.cfg";
  std::ofstream(path) << text;
  return path;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("region command") {
  const auto dir = scratch("region");
  const auto r = cli({"region", "--p-min", "1", "--p-max", "1.6", "--q-min", "1", "--q-max", "4", "--step", "0.05",
                      "--out", dir});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "agreement 100% (non-boundary)"));
  const std::string csv = slurp(dir + "/region.csv");
  CHECK(csv.rfind("p,q,knapp_growth,dilation_growth,status,predicted_admissible,agrees\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 13 * 61);
  const std::string svg = slurp(dir + "/region.svg");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK_FALSE(contains(svg, "href"));
  CHECK_FALSE(contains(svg, "url("));
}

TEST_CASE("extension-tail command") {
  const auto dir = scratch("tail");
  const auto r = cli({"extension-tail", "--pprime", "4.5", "--rmax", "200", "--out", dir});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "classification: converged"));
  const std::string csv = slurp(dir + "/extension_tail.csv");
  CHECK(csv.rfind("pprime,radius,truncated_norm\n", 0) == 0);
  CHECK(contains(csv, "4.5,200,"));
}

TEST_CASE("knapp command") {
  const auto dir = scratch("knapp");
  const auto r = cli({"knapp", "--p", "1.2", "--q", "1", "--out", dir});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "expected 1.00"));
  CHECK(fs::exists(dir + "/knapp.csv"));
  CHECK(fs::exists(dir + "/knapp.svg"));
  // On the wider range the pre-asymptotic widths pull the fit off by 0.08.
  const auto wide = cli({"knapp", "--p", "1.2", "--q", "1", "--deltas", "2^-2..2^-7", "--out", dir});
  CHECK(wide.code == kExitDisagreement);
  CHECK(contains(wide.out, "fitted 1.08 expected 1.00"));
}

TEST_CASE("other commands") {
  const auto dir = scratch("misc");
  CHECK(cli({"dilation", "--p", "1.5", "--out", dir}).code == kExitOk);
  CHECK(cli({"tensor-check", "--out", dir}).code == kExitOk);
  CHECK(cli({"minkowski", "--trials", "200", "--out", dir}).code == kExitOk);
  for (const char* f : {"dilation.csv", "dilation.svg", "tensor_check.csv", "minkowski.csv"}) {
    CHECK(fs::exists(fs::path(dir) / f));
  }
  const auto dim = cli({"dimension-check", "--step", "0.25", "--dims", "1,2", "--out", dir});
  CHECK(dim.code == kExitOk);
  CHECK(contains(dim.out, "identical"));
}

TEST_CASE("minimal config applies defaults") {
  const auto dir = scratch("config");
  const auto cfg = write_config(dir, "# region run\nexperiment=region\n");
  const auto r = cli({"--config", cfg, "--print-plan"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("experiment=region\n", 0) == 0);
  CHECK(contains(r.out, "step=0.05\n"));
  CHECK(contains(r.out, "threshold=0.05\n"));
  CHECK(contains(r.out, "output_dir=out\n"));
}

TEST_CASE("flags override config values") {
  const auto dir = scratch("override");
  const auto cfg = write_config(dir, "experiment=region\nnodes_per_circle=128\n");
  CHECK(contains(cli({"--config", cfg, "--print-plan"}).out, "nodes_per_circle=128\n"));
  const auto r = cli({"--config", cfg, "--print-plan", "region", "--nodes", "512"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "nodes_per_circle=512\n"));
}

TEST_CASE("config validation") {
  const auto dir = scratch("invalid");
  auto r = cli({"--config", write_config(dir, "experiment=knapp\np=0.5\n")});
  CHECK(r.code == kExitError);
  CHECK(contains(r.err, "line 2"));
  CHECK(contains(r.err, "Lebesgue index must be ≥ 1"));
  r = cli({"--config", write_config(dir, "experiment=region\ncolour=blue\n")});
  CHECK(r.code == kExitError);
  CHECK(contains(r.err, "line 2"));
  r = cli({"--config", write_config(dir, "experiment=region\n\nstep 0.1\n")});
  CHECK(r.code == kExitError);
  CHECK(contains(r.err, "line 3"));
  r = cli({"--config", write_config(dir, "experiment=region\nstep=0.1\nstep=0.2\n")});
  CHECK(r.code == kExitError);
  CHECK(contains(r.err, "line 3"));
  CHECK_THROWS_AS(parse_config("experiment=sphere\n"), UsageError);
  CHECK(cli({"--config", dir + "/missing.cfg"}).code == kExitError);
}

TEST_CASE("usage errors") {
  CHECK(cli({"region", "--bogus", "1"}).code == kExitError);
  CHECK(cli({"teleport"}).code == kExitError);
  CHECK(cli({}).code == kExitError);
  const auto help = cli({"knapp", "--help"});
  CHECK(help.code == kExitOk);
  CHECK(contains(help.out, "knapp.csv: delta,ratio"));
  const auto coarse = cli({"knapp", "--nodes", "256", "--out", scratch("coarse")});
  CHECK(coarse.code == kExitError);
  CHECK(contains(coarse.err, "resolve"));
}

TEST_CASE("identical runs write identical files") {
  const auto a = scratch("det_a");
  const auto b = scratch("det_b");
  for (const auto& d : {a, b}) {
    REQUIRE(cli({"region", "--step", "0.1", "--out", d}).code == kExitOk);
    REQUIRE(cli({"knapp", "--out", d}).code == kExitOk);
    REQUIRE(cli({"minkowski", "--trials", "50", "--out", d}).code == kExitOk);
  }
  for (const char* f : {"region.csv", "region.svg", "knapp.csv", "knapp.svg", "minkowski.csv"}) {
    CHECK(slurp(fs::path(a) / f) == slurp(fs::path(b) / f));
  }
}

TEST_CASE("output directory precedence") {
  const auto env = scratch("env");
  const auto cfg_dir = scratch("cfgout");
  const auto cfg = write_config(cfg_dir, "experiment=tensor-check\noutput_dir=" + cfg_dir + "/from_config\n");
  CHECK(contains(cli({"--config", cfg, "--print-plan"}).out, "output_dir=" + cfg_dir + "/from_config\n"));
  CHECK(contains(cli({"--config", cfg, "--print-plan"}, env).out, "output_dir=" + env + "\n"));
  CHECK(contains(cli({"--config", cfg, "--print-plan", "--out", "flagdir"}, env).out, "output_dir=flagdir\n"));
  CHECK(cli({"tensor-check"}, env).code == kExitOk);
  CHECK(fs::exists(fs::path(env) / "tensor_check.csv"));
}

TEST_CASE("list parsing and formatting") {
  CHECK(parse_list("2^-2..2^-4") == std::vector<double>{0.25, 0.125, 0.0625});
  CHECK(parse_list("1,2,4") == std::vector<double>{1, 2, 4});
  CHECK(parse_list("2^0..2^2") == std::vector<double>{1, 2, 4});
  CHECK_THROWS_AS(parse_list("1,,2"), UsageError);
  CHECK(fmt(0.1) == "0.1");
  CHECK(fmt(1.0 / 3) == "0.333333333333333");
  Csv csv({"a", "b"});
  csv.row({"1", "2"});
  CHECK(csv.str() == "a,b\n1,2\n");
  CHECK_THROWS(csv.row({"1"}));
}
