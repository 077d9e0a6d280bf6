// End-to-end tests of the command-line interface. The binary under test is
// located through the DHS_CLI environment variable (set by CTest).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string temp_path(const char* tag) {
  static int counter = 0;
  return "/tmp/dhs_cli_test_" + std::to_string(getpid()) + "_" +
         std::to_string(counter++) + "_" + tag;
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const char* bin = std::getenv("DHS_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "DHS_CLI must point at the CLI binary");
  const std::string out_path = temp_path("out");
  const std::string err_path = temp_path("err");
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + bin + "\" " +
                          args + " > " + out_path + " 2> " + err_path;
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

/// Data rows of a CSV output: comment lines skipped, header dropped.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  bool header_seen = false;
  for (const std::string& line : split(text, '\n')) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    rows.push_back(split(line, ','));
  }
  return rows;
}

std::string csv_header(const std::string& text) {
  for (const std::string& line : split(text, '\n')) {
    if (line.empty() || line[0] == '#') continue;
    return line;
  }
  return "";
}

}  // namespace

TEST_CASE("energies reproduces a tabulated pseudospin row") {
  const RunResult r = run_cli(
      "energies --symmetry pspin --D 5 --Cps 0 --sigma0 0.10 --alpha 0.1 "
      "--n 1 --kappa=-1");
  REQUIRE(r.exit_code == 0);
  CHECK(csv_header(r.out) == "n,kappa,sigma0,root1,root2,status");
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].size() == 6);
  CHECK(rows[0][0] == "1");
  CHECK(rows[0][1] == "-1");
  CHECK(std::abs(std::stod(rows[0][3]) - 2.279123264) <= 1e-6);
  CHECK(std::abs(std::stod(rows[0][4]) - 1.029346029) <= 1e-6);
  CHECK(rows[0][5] == "ok");
}

TEST_CASE("energies orders rows ascending n, descending kappa, ascending "
          "sigma0") {
  const RunResult r = run_cli(
      "energies --symmetry pspin --D 5 --sigma0 0.15,0.10 --alpha 0.1 "
      "--n 2,1 --kappa=-2,-1");
  REQUIRE(r.exit_code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 8);
  // first block: n=1 kappa=-1 sigma0 0.10 then 0.15
  CHECK(rows[0][0] == "1");
  CHECK(rows[0][1] == "-1");
  CHECK(rows[0][2] == "0.1");
  CHECK(rows[1][2] == "0.15");
  CHECK(rows[2][1] == "-2");
  CHECK(rows[4][0] == "2");
}

TEST_CASE("energies handles the non-relativistic limit with alpha sweeps") {
  const RunResult r = run_cli(
      "energies --symmetry nonrel --D 10 --sigma0 0.10 --alpha 0.10,0.20 "
      "--n 0 --l 1");
  REQUIRE(r.exit_code == 0);
  CHECK(csv_header(r.out) == "n,l,sigma0,alpha,energy,status");
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(std::abs(std::stod(rows[0][4]) - 2.61886) <= 5e-6);
  CHECK(rows[0][5] == "ok");
}

TEST_CASE("phase-shifts reproduces the pinned spin shift") {
  const RunResult r = run_cli(
      "phase-shifts --symmetry spin --D 10 --sigma0 0.5 --alpha 0.5 --Cs 5 "
      "--E 1 --l 0 --kappa=-1");
  REQUIRE(r.exit_code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(std::abs(std::stod(rows[0][2]) - (-7.915712885349041)) <= 1e-9);
  CHECK(rows[0][3] == "ok");
}

TEST_CASE("phase-shifts marks evanescent channels instead of failing") {
  // At C_ps = 0 and E = M the pseudospin wave number vanishes identically:
  // every channel is evanescent, and that classification is the output.
  const RunResult r = run_cli(
      "phase-shifts --symmetry pspin --D 10 --sigma0 0.1 --alpha 0.1 "
      "--Cps 0 --E 1 --l 0 --sweep-kappa=-5..5");
  REQUIRE(r.exit_code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 11);
  for (const auto& row : rows) {
    if (row[1] == "0") {
      CHECK(row[3] == "INVALID_KAPPA");
    } else {
      CHECK(row[2] == "");  // no real phase
      CHECK(row[3].substr(0, 14) == "EVANESCENT(k2=");
    }
  }
}

TEST_CASE("phase-shifts marks complex-exponent channels") {
  const RunResult r = run_cli(
      "phase-shifts --symmetry pspin --D 10 --sigma0 0.1 --alpha 0.1 "
      "--Cps 0.05 --E 1 --l 0 --kappa=1,2");
  REQUIRE(r.exit_code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][3].substr(0, 23) == "COMPLEX_LAMBDA(radicand");
  CHECK(rows[1][3] == "ok");
  CHECK(std::abs(std::stod(rows[1][2]) - (-2.306396884554417)) <= 1e-9);
}

TEST_CASE("wavefunction emits a consistent grid and magnitudes") {
  const RunResult r = run_cli(
      "wavefunction --symmetry spin --D 10 --sigma0 0.5 --alpha 0.5 --Cs 5 "
      "--E 1 --kappa=-1 --rmin 0.5 --rmax 1.0 --rstep 0.25");
  REQUIRE(r.exit_code == 0);
  CHECK(csv_header(r.out) == "r,re,im,abs2");
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(std::abs(std::stod(rows[0][0]) - 0.5) <= 1e-12);
  CHECK(std::abs(std::stod(rows[2][0]) - 1.0) <= 1e-12);
  for (const auto& row : rows) {
    const double re = std::stod(row[1]);
    const double im = std::stod(row[2]);
    const double abs2 = std::stod(row[3]);
    CHECK(std::abs(abs2 - (re * re + im * im)) <=
          1e-12 * std::max(1.0, abs2));
  }
}

TEST_CASE("wavefunction envelope check reports a sub-percent fit") {
  const RunResult r = run_cli(
      "wavefunction --symmetry spin --D 10 --sigma0 0.5 --alpha 0.5 --Cs 5 "
      "--E 1 --kappa=-1 --rmax 40 --rstep 0.01 --check-envelope");
  REQUIRE(r.exit_code == 0);
  double rel = 1.0;
  for (const std::string& line : split(r.out, '\n')) {
    if (line.rfind("# envelope_rel_error=", 0) == 0) {
      rel = std::stod(line.substr(21));
    }
  }
  CHECK(std::abs(rel) <= 0.01);
}

TEST_CASE("pekeris-report compares shifted and bare surrogates") {
  const RunResult r = run_cli("pekeris-report --alpha 0.1 --count 11");
  REQUIRE(r.exit_code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 11);
  CHECK(std::abs(std::stod(rows[0][1]) - 0.01) <= 1e-12);  // alpha r start
  CHECK(std::abs(std::stod(rows[10][1]) - 5.0) <= 1e-12);  // alpha r end
  // near the origin both surrogates track 1/r^2 closely
  CHECK(std::abs(std::stod(rows[0][4])) <= 1e-3);
  CHECK(std::abs(std::stod(rows[0][6])) <= 1e-3);
}

TEST_CASE("exit code contract") {
  // missing required option -> configuration error
  CHECK(run_cli("energies --symmetry pspin --D 5").exit_code == 2);
  // mutually exclusive constants -> configuration error
  CHECK(run_cli("energies --symmetry pspin --D 5 --sigma0 0.1 --alpha 0.1 "
                "--n 1 --kappa=-1 --Cps 0 --Cs 1")
            .exit_code == 2);
  // malformed wavefunction grid -> configuration error
  CHECK(run_cli("wavefunction --symmetry spin --D 10 --sigma0 0.5 "
                "--alpha 0.5 --Cs 5 --kappa=-1 --rmin 5 --rmax 2")
            .exit_code == 2);
  // window with no valid parameter region -> solver failure
  CHECK(run_cli("energies --symmetry pspin --D 5 --sigma0 0.1 --alpha 0.1 "
                "--n 1 --kappa=-1 --window=-0.9,-0.85")
            .exit_code == 3);
  // unknown subcommand -> configuration error
  CHECK(run_cli("frobnicate").exit_code == 2);
  // help -> success
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("kappa = 0 rows are annotated, not fatal") {
  const RunResult r = run_cli(
      "energies --symmetry pspin --D 5 --sigma0 0.1 --alpha 0.1 --n 1 "
      "--kappa=-1,0");
  REQUIRE(r.exit_code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 2);
  bool found_invalid = false;
  for (const auto& row : rows) {
    if (row[1] == "0") {
      found_invalid = true;
      CHECK(row.back() == "INVALID_KAPPA");
    }
  }
  CHECK(found_invalid);
}

TEST_CASE("config file supplies defaults and flags override it") {
  const std::string cfg_path = temp_path("cfg");
  {
    std::ofstream cfg(cfg_path);
    cfg << "# pseudospin table defaults\n"
        << "symmetry=pspin\n"
        << "D=5\n"
        << "sigma0=0.10\n"
        << "alpha=0.1\n"
        << "n=1\n"
        << "kappa=-1\n";
  }
  const RunResult from_file = run_cli("energies --config " + cfg_path);
  REQUIRE(from_file.exit_code == 0);
  const auto rows = csv_rows(from_file.out);
  REQUIRE(rows.size() == 1);
  CHECK(std::abs(std::stod(rows[0][3]) - 2.279123264) <= 1e-6);

  const RunResult overridden =
      run_cli("energies --config " + cfg_path + " --sigma0 0.15");
  REQUIRE(overridden.exit_code == 0);
  const auto rows2 = csv_rows(overridden.out);
  REQUIRE(rows2.size() == 1);
  CHECK(rows2[0][2] == "0.15");
  CHECK(std::abs(std::stod(rows2[0][3]) - 1.861708247) <= 1e-6);

  const RunResult missing = run_cli("energies --config /tmp/no_such_file.cfg");
  CHECK(missing.exit_code == 2);
  std::remove(cfg_path.c_str());
}

TEST_CASE("json output mirrors the csv table") {
  const RunResult r = run_cli(
      "phase-shifts --symmetry spin --D 10 --sigma0 0.5 --alpha 0.5 --Cs 5 "
      "--E 1 --l 0 --kappa=-1,2 --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["params"]["symmetry"] == "spin");
  CHECK(doc["columns"] == nlohmann::json({"l", "kappa", "delta", "status"}));
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][0][1] == -1);
  CHECK(std::abs(doc["rows"][0][2].get<double>() -
                 (-7.915712885349041)) <= 1e-9);
  CHECK(doc["rows"][0][3] == "ok");
}

TEST_CASE("validate passes and its output is byte-stable across runs and "
          "thread counts") {
  const RunResult a = run_cli("validate", "DHS_NUM_THREADS=1");
  const RunResult b = run_cli("validate", "DHS_NUM_THREADS=4");
  const RunResult c = run_cli("validate");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out.find("RESULT 14/14 checks passed") != std::string::npos);
}

TEST_CASE("strict phase validation fails honestly against the published "
          "tables") {
  const RunResult r = run_cli("validate --strict-phase");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("published") != std::string::npos);
  // the 14 self-consistency checks still pass
  CHECK(r.out.find("RESULT 14/17 checks passed") != std::string::npos);
}

TEST_CASE("table outputs are byte-stable across thread counts") {
  const std::string args =
      "phase-shifts --symmetry spin --D 10 --sigma0 0.5 --alpha 0.5 --Cs 10 "
      "--E 1 --l 0,1,2,3,4 --sweep-kappa=-5..5";
  const RunResult a = run_cli(args, "DHS_NUM_THREADS=1");
  const RunResult b = run_cli(args, "DHS_NUM_THREADS=8");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(csv_rows(a.out).size() == 55);
}
