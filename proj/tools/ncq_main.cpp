// Command-line front end: quantum runs, the verification suite, classical
// trajectories and quantum/classical comparison.
//
// Exit codes: 0 success, 1 config/precondition error, 2 numerical failure,
// 3 verification check failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncq/classical.hpp"
#include "ncq/config.hpp"
#include "ncq/csv.hpp"
#include "ncq/errors.hpp"
#include "ncq/solver.hpp"
#include "ncq/svg.hpp"
#include "ncq/verify.hpp"
#include "ncq/wavefunction.hpp"

namespace {

using namespace ncq;

int exit_code_for(const SimError& e) {
  switch (e.kind()) {
    case ErrKind::invalid_argument:
    case ErrKind::precondition:
      return 1;
    case ErrKind::numerical:
    case ErrKind::quadrature:
      return 2;
  }
  return 2;
}

std::string snapshot_path(const RunConfig& cfg, long record_index) {
  std::string prefix;
  if (cfg.outputs.snapshot_prefix) {
    prefix = *cfg.outputs.snapshot_prefix;
  } else {
    prefix = cfg.outputs.csv_path;
    const auto dot = prefix.rfind('.');
    if (dot != std::string::npos) prefix.resize(dot);
    prefix += "_snap";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "_%04ld.csv", record_index);
  return prefix + buf;
}

int cmd_run(const RunConfig& cfg) {
  const Wavefunction psi0 =
      init_gaussian(cfg.grid, cfg.physics, cfg.initial.center,
                    cfg.initial.sigma, cfg.initial.momentum);

  long record_index = 0;
  RecordSink sink;
  if (cfg.outputs.snapshot_every > 0) {
    sink = [&](const ObservableRecord&, const Wavefunction& psi) {
      if (record_index % cfg.outputs.snapshot_every == 0)
        write_snapshot_csv(snapshot_path(cfg, record_index), psi);
      ++record_index;
    };
  }

  const EvolutionResult result =
      evolve(psi0, cfg.potential, cfg.physics, cfg.plan, sink);
  write_observables_csv(cfg.outputs.csv_path, result.records, cfg.physics.dim);

  if (cfg.outputs.svg_path) {
    PlotSeries norm{"norm", "steelblue", {}, {}};
    PlotSeries mean_x{"mean x", "firebrick", {}, {}};
    for (const ObservableRecord& rec : result.records) {
      norm.x.push_back(rec.time);
      norm.y.push_back(rec.norm);
      mean_x.x.push_back(rec.time);
      mean_x.y.push_back(rec.mean_position[0]);
    }
    const PlotSeries series[2] = {norm, mean_x};
    write_svg_plot(*cfg.outputs.svg_path, "norm and mean position", series);
  }

  std::cout << "wrote " << result.records.size() << " records to "
            << cfg.outputs.csv_path << " (final norm "
            << format_double(result.records.back().norm) << ")\n";
  return 0;
}

int cmd_verify(const VerifyOptions& options) {
  const std::vector<VerifyCheck> checks = run_verification(options);
  std::size_t failures = 0;
  for (const VerifyCheck& c : checks) {
    const char* status = c.pass ? "PASS" : "FAIL";
    if (!c.pass) ++failures;
    std::printf("[%s] %-46s measured % .6e  bounds [%g, %g]\n", status,
                c.name.c_str(), c.measured, c.bound_low, c.bound_high);
  }
  std::printf("%zu/%zu checks passed\n", checks.size() - failures,
              checks.size());
  return failures == 0 ? 0 : 3;
}

const ClassicalRunSpec& classical_spec(const RunConfig& cfg) {
  if (!cfg.classical)
    fail(ErrKind::invalid_argument, "config needs a 'classical' section");
  return *cfg.classical;
}

Trajectory run_classical(const RunConfig& cfg) {
  const ClassicalRunSpec& spec = classical_spec(cfg);
  ClassicalState initial;
  initial.q = spec.q0;
  initial.v = spec.v0;
  return integrate(initial, cfg.potential, cfg.physics, spec.dt, spec.n_steps);
}

int cmd_classical(const RunConfig& cfg) {
  const Trajectory traj = run_classical(cfg);
  write_trajectory_csv(classical_spec(cfg).csv_path, traj);
  std::cout << "wrote " << traj.samples.size() << " samples to "
            << classical_spec(cfg).csv_path << '\n';
  return 0;
}

int cmd_compare(const RunConfig& cfg) {
  const ClassicalRunSpec& spec = classical_spec(cfg);
  if (spec.dt != cfg.plan.dt)
    fail(ErrKind::invalid_argument,
         "compare needs matching quantum and classical dt");

  const Wavefunction psi0 =
      init_gaussian(cfg.grid, cfg.physics, cfg.initial.center,
                    cfg.initial.sigma, cfg.initial.momentum);
  const EvolutionResult result =
      evolve(psi0, cfg.potential, cfg.physics, cfg.plan);
  const Trajectory traj = run_classical(cfg);

  write_compare_csv(cfg.compare_csv_path, result.records, traj);
  const DeviationReport report = compare_ehrenfest(result.records, traj);
  std::cout << "compared " << report.n_compared
            << " records: max deviation " << format_double(report.max_abs)
            << ", rms " << format_double(report.rms) << " (csv: "
            << cfg.compare_csv_path << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonconservative Schrodinger simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir;
  VerifyOptions verify_options;

  CLI::App* run = app.add_subcommand("run", "evolve a wave packet");
  run->add_option("config", config_path, "JSON config file")->required();
  run->add_option("--output-dir", output_dir, "redirect output files");

  CLI::App* verify =
      app.add_subcommand("verify", "run the kernel/moment verification suite");
  verify->add_option("--eps", verify_options.epsilons,
                     "short-time epsilons to test");
  verify->add_option("--delta", verify_options.delta,
                     "quadrature regularization delta");
  verify
      ->add_option("--inject-moment4-error", verify_options.moment4_scale,
                   "test hook: scale the reference fourth moment")
      ->group("");  // hidden
  verify->add_option("--output-dir", output_dir, "accepted for symmetry");

  CLI::App* classical =
      app.add_subcommand("classical", "integrate a classical trajectory");
  classical->add_option("config", config_path, "JSON config file")->required();
  classical->add_option("--output-dir", output_dir, "redirect output files");

  CLI::App* compare =
      app.add_subcommand("compare", "quantum mean position vs classical path");
  compare->add_option("config", config_path, "JSON config file")->required();
  compare->add_option("--output-dir", output_dir, "redirect output files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_options);

    RunConfig cfg = load_config(config_path);
    if (!output_dir.empty()) apply_output_dir(cfg, output_dir);
    if (run->parsed()) return cmd_run(cfg);
    if (classical->parsed()) return cmd_classical(cfg);
    if (compare->parsed()) return cmd_compare(cfg);
  } catch (const SimError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
