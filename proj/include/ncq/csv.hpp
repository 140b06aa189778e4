#pragma once

#include <span>
#include <string>
#include <vector>

#include "ncq/classical.hpp"
#include "ncq/observables.hpp"
#include "ncq/wavefunction.hpp"

namespace ncq {

// All CSV output uses %.17g so files round-trip doubles exactly and diff
// cleanly between runs.
std::string format_double(double v);

std::string observables_csv_header(int dim);
std::string observables_csv_row(const ObservableRecord& rec);

void write_observables_csv(const std::string& path,
                           std::span<const ObservableRecord> records, int dim);

// Snapshot of the density and amplitudes at one instant:
// columns x[,y,z],density,re,im.
void write_snapshot_csv(const std::string& path, const Wavefunction& psi);

// Columns time,q_*,v_*,kinetic,potential,lagrangian,action,w_nc.
void write_trajectory_csv(const std::string& path, const Trajectory& traj);

// Joined quantum/classical positions: time,mean_*,q_*,deviation.
void write_compare_csv(const std::string& path,
                       std::span<const ObservableRecord> quantum,
                       const Trajectory& classical);

}  // namespace ncq
