#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wwm/grid.hpp"
#include "wwm/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args, const fs::path& dir) {
  fs::path out = dir / "stdout.txt";
  std::string cmd = std::string(WWM_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                    (dir / "stderr.txt").string();
  int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return {code, ss.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json slurp_json(const fs::path& p) { return json::parse(slurp(p)); }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("wwm_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("wigner subcommand writes the expected CSV and plot script") {
  TempDir tmp;
  fs::path csv = tmp.path / "w.csv";
  fs::path gp = tmp.path / "w.gp";
  RunResult r = run_cli("wigner --pre hermite:0 -o " + csv.string() + " --plot " + gp.string(),
                        tmp.path);
  CHECK(r.exit_code == 0);
  REQUIRE(fs::exists(csv));
  REQUIRE(fs::exists(gp));

  // Find the x=0, p=0 row and compare with 1/pi.
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,p,re,im");
  bool found = false;
  while (std::getline(in, line)) {
    double x, p, re, im;
    if (std::sscanf(line.c_str(), "%lg,%lg,%lg,%lg", &x, &p, &re, &im) != 4) continue;
    if (x == 0.0 && p == 0.0) {
      CHECK(std::abs(re - 1.0 / wwm::pi) < 1e-7);
      CHECK(std::abs(im) < 1e-12);
      found = true;
    }
  }
  CHECK(found);
  CHECK(slurp(gp).find("with image") != std::string::npos);
}

TEST_CASE("cat-state wigner run emits fringe data and a plot script") {
  TempDir tmp;
  fs::path csv = tmp.path / "cat.csv";
  fs::path gp = tmp.path / "cat.gp";
  RunResult r =
      run_cli("wigner --pre cat:3,0 -o " + csv.string() + " --plot " + gp.string(), tmp.path);
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(gp));
  // Sign alternation of W(0, p) across the interference fringes.
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  int sign_changes = 0;
  double prev = 0.0;
  while (std::getline(in, line)) {
    double x, p, re, im;
    if (std::sscanf(line.c_str(), "%lg,%lg,%lg,%lg", &x, &p, &re, &im) != 4) continue;
    if (x != 0.0 || p < 0.0 || p > 3.2) continue;
    if (std::abs(re) < 1e-6) continue;
    if (prev != 0.0 && re * prev < 0.0) ++sign_changes;
    prev = re;
  }
  CHECK(sign_changes >= 3);
}

TEST_CASE("weak-value subcommand: ground-state energy and all-routes table") {
  TempDir tmp;
  fs::path out = tmp.path / "wv.json";
  RunResult r = run_cli(
      "weak-value --pre hermite:0 --post hermite:0 --symbol H -o " + out.string(), tmp.path);
  CHECK(r.exit_code == 0);
  json j = slurp_json(out);
  CHECK(std::abs(j["re"].get<double>() - 0.5) < 1e-6);
  CHECK(std::abs(j["im"].get<double>()) < 1e-9);
  CHECK(j["route"] == "braket");
  CHECK(std::abs(j["overlap_re"].get<double>() - 1.0) < 1e-9);

  fs::path all = tmp.path / "all.json";
  RunResult r2 = run_cli("weak-value --pre hermite:0 --post coherent:2,0 --symbol x "
                         "--all-routes -o " + all.string(),
                         tmp.path);
  CHECK(r2.exit_code == 0);
  json table = slurp_json(all);
  REQUIRE(table.is_array());
  REQUIRE(table.size() == 4);
  CHECK(table[0]["route"] == "braket");
  CHECK(table[1]["route"] == "phase_space");
  CHECK(table[2]["route"] == "gr_operator");
  CHECK(table[3]["route"] == "heisenberg");
  for (size_t i = 1; i < 4; ++i) {
    CHECK(std::abs(table[i]["re"].get<double>() - table[0]["re"].get<double>()) < 1e-5);
    CHECK(std::abs(table[i]["im"].get<double>() - table[0]["im"].get<double>()) < 1e-5);
  }
}

TEST_CASE("weak-value negative control reports the quarter hbar^2 discrepancy") {
  TempDir tmp;
  fs::path out = tmp.path / "naive.json";
  RunResult r = run_cli("weak-value --pre hermite:0 --post hermite:0 --symbol H2 --naive -o " +
                            out.string(),
                        tmp.path);
  CHECK(r.exit_code == 0);
  json j = slurp_json(out);
  CHECK(std::abs(j["discrepancy_re"].get<double>() - 0.25) < 1e-6);
  CHECK(std::abs(j["re"].get<double>() - 0.5) < 1e-6);          // naive <H^2> = hbar^2/2
  CHECK(std::abs(j["correct_re"].get<double>() - 0.25) < 1e-6);  // true <H^2> = hbar^2/4
}

TEST_CASE("weak-value exits 4 on orthogonal states") {
  TempDir tmp;
  RunResult r = run_cli("weak-value --pre hermite:0 --post hermite:1 --symbol x", tmp.path);
  CHECK(r.exit_code == 4);
  RunResult forced = run_cli(
      "weak-value --pre hermite:0 --post hermite:1 --symbol x --force -o " +
          (tmp.path / "f.json").string(),
      tmp.path);
  CHECK(forced.exit_code == 0);
  CHECK(slurp_json(tmp.path / "f.json")["diverged"] == true);
}

TEST_CASE("malformed input exits 2 without partial outputs") {
  TempDir tmp;
  fs::path csv = tmp.path / "never.csv";
  RunResult r = run_cli("wigner --pre warped:3 -o " + csv.string(), tmp.path);
  CHECK(r.exit_code == 2);
  CHECK(!fs::exists(csv));

  fs::path bad = tmp.path / "bad.csv";
  wwm::atomic_write(bad.string(), "x,re,im\n0.0,garbage,0.0\n");
  RunResult r2 = run_cli("wigner --pre csv:" + bad.string() + " -o " + csv.string(), tmp.path);
  CHECK(r2.exit_code == 2);
  CHECK(!fs::exists(csv));
}

TEST_CASE("boundary-leak precondition exits 3") {
  TempDir tmp;
  // A constant-amplitude CSV state violates the boundary-decay invariant.
  wwm::SpatialGrid g = wwm::make_grid(256, 20.0, 1.0);
  std::ostringstream flat;
  flat << "x,re,im\n";
  for (int j = 0; j < g.n; ++j)
    flat << wwm::format_double(g.x(j)) << ",0.22360679774997896,0\n";
  fs::path state = tmp.path / "flat.csv";
  wwm::atomic_write(state.string(), flat.str());
  RunResult r = run_cli(
      "wigner --pre csv:" + state.string() + " -o " + (tmp.path / "x.csv").string(), tmp.path);
  CHECK(r.exit_code == 3);
}

TEST_CASE("rho subcommand reports a unit integral") {
  TempDir tmp;
  RunResult r = run_cli(
      "rho --pre hermite:0 --post coherent:2,0 -o " + (tmp.path / "rho.csv").string(), tmp.path);
  CHECK(r.exit_code == 0);
  double integral_re = 0.0, integral_im = 0.0;
  REQUIRE(std::sscanf(r.stdout_text.c_str(), "integral_re=%lg integral_im=%lg", &integral_re,
                      &integral_im) == 2);
  CHECK(std::abs(integral_re - 1.0) < 1e-7);
  CHECK(std::abs(integral_im) < 1e-7);
}

TEST_CASE("reconstruct subcommand: lundeen, gr and failure modes") {
  TempDir tmp;
  fs::path rep = tmp.path / "rep.json";
  fs::path state = tmp.path / "state.csv";
  RunResult r = run_cli("reconstruct --method lundeen --pre coherent:1,2 --p0 1.885 -o " +
                            rep.string() + " --state-csv " + state.string(),
                        tmp.path);
  CHECK(r.exit_code == 0);
  REQUIRE(fs::exists(rep));
  CHECK(fs::exists(state));
  json j = slurp_json(rep);
  CHECK(j["method"] == "lundeen");
  CHECK(j["fidelity"].get<double>() >= 1.0 - 1e-9);
  CHECK(j["state_csv"] == state.string());

  RunResult r2 = run_cli(
      "reconstruct --method gr --pre hermite:0 --post hermite:0 --lambda coherent:1,0 -o " +
          rep.string(),
      tmp.path);
  CHECK(r2.exit_code == 0);
  json j2 = slurp_json(rep);
  CHECK(j2["fidelity"].get<double>() >= 1.0 - 1e-6);
  CHECK(j2.contains("state_csv_inline"));

  RunResult r3 = run_cli(
      "reconstruct --method inversion --pre coherent:1,1 --post hermite:0 --x-ref 0 -o " +
          rep.string(),
      tmp.path);
  CHECK(r3.exit_code == 0);
  CHECK(slurp_json(rep)["fidelity"].get<double>() >= 1.0 - 1e-9);

  RunResult r4 = run_cli(
      "reconstruct --method lundeen --pre hermite:1 --p0 0 -o " + rep.string(), tmp.path);
  CHECK(r4.exit_code == 3);  // SmallMomentumAmplitude
}

TEST_CASE("reconstruct with synthetic noise degrades gracefully") {
  TempDir tmp;
  fs::path rep = tmp.path / "noisy.json";
  RunResult r = run_cli(
      "reconstruct --method gr --pre hermite:0 --post hermite:0 --lambda coherent:1,0 "
      "--noise 1e-6 --seed 7 -o " + rep.string(),
      tmp.path);
  CHECK(r.exit_code == 0);
  double f = slurp_json(rep)["fidelity"].get<double>();
  CHECK(f > 0.99);   // small noise, still close
  CHECK(f <= 1.0 + 1e-12);
}

TEST_CASE("mccoy subcommand prints the golden normal form") {
  TempDir tmp;
  RunResult r = run_cli("mccoy 2 2", tmp.path);
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("x^2 p^2 - 2i*hbar x p - (1/2) hbar^2") != std::string::npos);
}

TEST_CASE("config file drives a run and flags override it") {
  TempDir tmp;
  fs::path cfg = tmp.path / "scenario.ini";
  fs::path out = tmp.path / "wv.json";
  fs::path out2 = tmp.path / "override.json";
  wwm::atomic_write(cfg.string(), "grid=\"128,20.0\"\n"
                                  "[weak-value]\n"
                                  "pre=\"hermite:0\"\n"
                                  "post=\"hermite:0\"\n"
                                  "symbol=\"H\"\n"
                                  "output=\"" + out.string() + "\"\n");
  RunResult r = run_cli("--config " + cfg.string() + " weak-value", tmp.path);
  CHECK(r.exit_code == 0);
  CHECK(std::abs(slurp_json(out)["re"].get<double>() - 0.5) < 1e-6);

  // Command-line flags win over config values.
  RunResult r2 = run_cli(
      "--config " + cfg.string() + " weak-value -o " + out2.string(), tmp.path);
  CHECK(r2.exit_code == 0);
  CHECK(fs::exists(out2));
}

TEST_CASE("hbar env var sets the default") {
  TempDir tmp;
  fs::path out = tmp.path / "wv.json";
  std::string cmd = "WWM_HBAR=2.0 " + std::string(WWM_CLI_PATH) +
                    " weak-value --pre hermite:0 --post hermite:0 --symbol H -o " +
                    out.string() + " > /dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(std::abs(slurp_json(out)["re"].get<double>() - 1.0) < 1e-6);  // hbar/2 = 1
}

TEST_CASE("verify --quick passes and writes byte-identical reports") {
  TempDir tmp;
  fs::path rep1 = tmp.path / "r1.xml";
  fs::path rep2 = tmp.path / "r2.xml";
  RunResult a = run_cli("verify --quick --report " + rep1.string(), tmp.path);
  CHECK(a.exit_code == 0);
  CHECK(a.stdout_text.find("VERIFY OK") != std::string::npos);
  RunResult b = run_cli("verify --quick --report " + rep2.string(), tmp.path);
  CHECK(b.exit_code == 0);
  CHECK(slurp(rep1) == slurp(rep2));
  CHECK(slurp(rep1).find("<testsuite") != std::string::npos);
  CHECK(a.stdout_text == b.stdout_text);
}
