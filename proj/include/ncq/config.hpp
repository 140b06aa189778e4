#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncq/grid.hpp"
#include "ncq/params.hpp"
#include "ncq/potential.hpp"
#include "ncq/solver.hpp"

namespace ncq {

struct InitialPacket {
  std::vector<double> center;
  double sigma = 1.0;
  std::vector<double> momentum;
};

struct OutputSpec {
  std::string csv_path = "observables.csv";
  long snapshot_every = 0;  // in records; 0 disables snapshots
  std::optional<std::string> snapshot_prefix;
  std::optional<std::string> svg_path;
};

struct ClassicalRunSpec {
  std::vector<double> q0;
  std::vector<double> v0;
  double dt = 0.0;
  long n_steps = 0;
  std::string csv_path = "trajectory.csv";
};

struct RunConfig {
  PhysicsParams physics;
  Grid grid;
  InitialPacket initial;
  PotentialSpec potential;
  EvolutionPlan plan;
  OutputSpec outputs;
  std::optional<ClassicalRunSpec> classical;
  std::string compare_csv_path = "compare.csv";
};

// Parses and validates a JSON config document. Throws SimError with
// ErrKind::invalid_argument on any structural or value problem.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

// Redirects every output path into dir (keeping base names).
void apply_output_dir(RunConfig& cfg, const std::string& dir);

}  // namespace ncq
