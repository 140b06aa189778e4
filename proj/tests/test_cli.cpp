// End-to-end tests of the ncq executable: spawns the real binary, checks
// exit codes, CSV contents and determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ncq/csv.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(NCQ_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buffer{};
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe) != nullptr)
    result.output += buffer.data();
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

fs::path test_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "ncq_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path path = test_dir() / name;
  std::ofstream out(path);
  out << text;
  return path;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int column_index(const std::vector<std::string>& header,
                 const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

const char* kFreeConfigTemplate = R"({
  "physics": {"hbar": 1.0, "mass": 1.0, "k": 0.0, "dim": 1},
  "grid": {"axes": [{"x_min": -20, "x_max": 20, "n_points": 256}]},
  "initial": {"center": [0.0], "sigma": 1.0, "momentum": [0.5]},
  "potential": {"type": "free"},
  "plan": {"dt": 0.01, "n_steps": 100, "record_every": 20,
           "integrator": "split_step_strang"},
  "outputs": {"csv_path": "CSVPATH"}
})";

std::string free_config(const std::string& csv_path) {
  std::string text = kFreeConfigTemplate;
  text.replace(text.find("CSVPATH"), 7, csv_path);
  return text;
}

}  // namespace

TEST_CASE("CSV cells round-trip doubles exactly") {
  // %.17g carries the full precision of a double, so a parse-back must
  // reproduce the bits for any finite value.
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int i = 0; i < 2000; ++i) {
    const double v = std::ldexp(mant(rng), expo(rng));
    const double back = std::stod(ncq::format_double(v));
    CHECK(back == v);
  }
  CHECK(std::stod(ncq::format_double(0.0)) == 0.0);
}

TEST_CASE("missing config file exits 1 with a diagnostic") {
  const CliResult r = run_cli("run /definitely/not/here.json");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("error") != std::string::npos);
}

TEST_CASE("malformed config exits 1") {
  const fs::path cfg = write_file("broken.json", "{ not json");
  CHECK(run_cli("run " + cfg.string()).exit_code == 1);

  const fs::path bad_integrator = write_file("bad_integrator.json", [] {
    std::string text = free_config("unused.csv");
    text.replace(text.find("split_step_strang"), 17, "leapfrog");
    return text;
  }());
  const CliResult r = run_cli("run " + bad_integrator.string());
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("integrator") != std::string::npos);

  // Wrong-typed fields are config errors too, not numerical failures.
  const fs::path bad_type = write_file("bad_type.json", [] {
    std::string text = free_config("unused.csv");
    const std::string needle = "\"csv_path\": \"unused.csv\"";
    text.replace(text.find(needle), needle.size(), "\"csv_path\": 7");
    return text;
  }());
  CHECK(run_cli("run " + bad_type.string()).exit_code == 1);
}

TEST_CASE("frictionless run keeps the norm column at one") {
  const fs::path csv = test_dir() / "free_run.csv";
  const fs::path cfg = write_file("free.json", free_config(csv.string()));
  const CliResult r = run_cli("run " + cfg.string());
  REQUIRE(r.exit_code == 0);

  const auto rows = read_csv(csv);
  REQUIRE(rows.size() >= 2);
  const int norm_col = column_index(rows[0], "norm");
  REQUIRE(norm_col >= 0);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(std::abs(std::stod(rows[i][static_cast<std::size_t>(norm_col)]) - 1.0) <
          1e-10);
}

TEST_CASE("3-D damped run reaches the norm-decay target") {
  // exp(-2*3*0.1*1) = 0.548811636...
  const fs::path csv = test_dir() / "damped3d.csv";
  const std::string config = R"({
    "physics": {"hbar": 1.0, "mass": 1.0, "k": 0.1, "dim": 3},
    "grid": {"axes": [{"x_min": -4, "x_max": 4, "n_points": 32},
                      {"x_min": -4, "x_max": 4, "n_points": 32},
                      {"x_min": -4, "x_max": 4, "n_points": 32}]},
    "initial": {"center": [0, 0, 0], "sigma": 0.75, "momentum": [0, 0, 0]},
    "potential": {"type": "free"},
    "plan": {"dt": 0.01, "n_steps": 100, "record_every": 50,
             "integrator": "split_step_strang"},
    "outputs": {"csv_path": ")" + csv.string() + R"("}
  })";
  const fs::path cfg = write_file("damped3d.json", config);
  REQUIRE(run_cli("run " + cfg.string()).exit_code == 0);

  const auto rows = read_csv(csv);
  const int norm_col = column_index(rows[0], "norm");
  const double last_norm =
      std::stod(rows.back()[static_cast<std::size_t>(norm_col)]);
  CHECK(std::abs(last_norm - std::exp(-0.6)) < 1e-6);
}

TEST_CASE("identical configs produce byte-identical CSV output") {
  const fs::path csv_a = test_dir() / "det_a.csv";
  const fs::path csv_b = test_dir() / "det_b.csv";
  const fs::path cfg_a = write_file("det_a.json", free_config(csv_a.string()));
  const fs::path cfg_b = write_file("det_b.json", free_config(csv_b.string()));
  REQUIRE(run_cli("run " + cfg_a.string()).exit_code == 0);
  REQUIRE(run_cli("run " + cfg_b.string()).exit_code == 0);
  const std::string a = slurp(csv_a);
  CHECK(!a.empty());
  CHECK(a == slurp(csv_b));
}

TEST_CASE("snapshots and the SVG plot are emitted when requested") {
  const fs::path csv = test_dir() / "plot_run.csv";
  const fs::path svg = test_dir() / "plot_run.svg";
  std::string config = free_config(csv.string());
  const std::string extras = R"("csv_path": ")" + csv.string() +
                             R"(", "snapshot_every": 3, "svg_path": ")" +
                             svg.string() + R"(")";
  config.replace(config.find(R"("csv_path": ")" + csv.string() + "\""),
                 (R"("csv_path": ")" + csv.string() + "\"").size(), extras);
  const fs::path cfg = write_file("plot.json", config);
  REQUIRE(run_cli("run " + cfg.string()).exit_code == 0);

  CHECK(fs::exists(svg));
  CHECK(fs::exists(test_dir() / "plot_run_snap_0000.csv"));
  CHECK(fs::exists(test_dir() / "plot_run_snap_0003.csv"));
  CHECK(!fs::exists(test_dir() / "plot_run_snap_0001.csv"));
  const auto snap = read_csv(test_dir() / "plot_run_snap_0000.csv");
  REQUIRE(snap.size() == 257);  // header + one row per grid point
  CHECK(snap[0] == std::vector<std::string>{"x", "density", "re", "im"});
}

TEST_CASE("--output-dir redirects every artifact") {
  const fs::path outdir = test_dir() / "redirected";
  fs::create_directories(outdir);
  const fs::path cfg = write_file("redirect.json", free_config("inner_name.csv"));
  REQUIRE(run_cli("run " + cfg.string() + " --output-dir " + outdir.string())
              .exit_code == 0);
  CHECK(fs::exists(outdir / "inner_name.csv"));
}

TEST_CASE("verify passes by default and honors the failure hook") {
  const CliResult ok = run_cli("verify");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("FAIL") == std::string::npos);

  const CliResult broken = run_cli("verify --inject-moment4-error 1.01");
  CHECK(broken.exit_code == 3);
  CHECK(broken.output.find("FAIL") != std::string::npos);
}

TEST_CASE("verify rejects epsilons outside the short-time window") {
  const CliResult r = run_cli("verify --eps 3.0");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("guard") != std::string::npos);
}

namespace {

std::string oscillator_config(const fs::path& traj_csv,
                              const fs::path& compare_csv,
                              double classical_dt) {
  std::ostringstream dt;
  dt << classical_dt;
  return R"({
    "physics": {"hbar": 1.0, "mass": 1.0, "k": 0.0, "dim": 1},
    "grid": {"axes": [{"x_min": -20, "x_max": 20, "n_points": 512}]},
    "initial": {"center": [1.0], "sigma": 0.7071067811865476, "momentum": [0.0]},
    "potential": {"type": "harmonic", "omega": 1.0, "center": [0.0]},
    "plan": {"dt": 0.001, "n_steps": 2000, "record_every": 100,
             "integrator": "split_step_strang"},
    "outputs": {"csv_path": "unused.csv"},
    "classical": {"q0": [1.0], "v0": [0.0], "dt": )" +
         dt.str() + R"(, "n_steps": 2000, "csv_path": ")" + traj_csv.string() +
         R"("},
    "compare_csv_path": ")" + compare_csv.string() + R"("
  })";
}

}  // namespace

TEST_CASE("classical run emits a non-increasing w_nc column") {
  const fs::path traj = test_dir() / "traj.csv";
  const std::string config = R"({
    "physics": {"hbar": 1.0, "mass": 1.0, "k": 0.25, "dim": 1},
    "grid": {"axes": [{"x_min": -20, "x_max": 20, "n_points": 64}]},
    "initial": {"center": [0.0], "sigma": 2.0, "momentum": [0.0]},
    "potential": {"type": "harmonic", "omega": 1.0, "center": [0.0]},
    "plan": {"dt": 0.001, "n_steps": 1, "record_every": 1,
             "integrator": "split_step_strang"},
    "outputs": {"csv_path": "unused.csv"},
    "classical": {"q0": [1.0], "v0": [0.0], "dt": 0.002, "n_steps": 1500,
                  "csv_path": ")" + traj.string() + R"("}
  })";
  const fs::path cfg = write_file("classical.json", config);
  REQUIRE(run_cli("classical " + cfg.string()).exit_code == 0);

  const auto rows = read_csv(traj);
  const int w_col = column_index(rows[0], "w_nc");
  REQUIRE(w_col >= 0);
  double previous = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double w = std::stod(rows[i][static_cast<std::size_t>(w_col)]);
    CHECK(w <= previous + 1e-15);
    previous = w;
  }
}

TEST_CASE("compare: coherent state tracks the classical oscillator") {
  const fs::path traj = test_dir() / "cmp_traj.csv";
  const fs::path cmp = test_dir() / "cmp.csv";
  const fs::path cfg =
      write_file("compare.json", oscillator_config(traj, cmp, 0.001));
  const CliResult r = run_cli("compare " + cfg.string());
  REQUIRE(r.exit_code == 0);

  const auto rows = read_csv(cmp);
  const int dev_col = column_index(rows[0], "deviation");
  REQUIRE(dev_col >= 0);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(std::stod(rows[i][static_cast<std::size_t>(dev_col)]) <= 1e-4);
}

TEST_CASE("compare rejects mismatched time steps") {
  const fs::path cfg = write_file(
      "compare_bad.json",
      oscillator_config(test_dir() / "t.csv", test_dir() / "c.csv", 0.002));
  const CliResult r = run_cli("compare " + cfg.string());
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("dt") != std::string::npos);
}
