#include "ncq/csv.hpp"

#include <cstdio>
#include <fstream>

#include "ncq/errors.hpp"

namespace ncq {

namespace {

const char* kAxisNames[3] = {"x", "y", "z"};

std::ofstream open_or_fail(const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrKind::invalid_argument, "cannot open output file: " + path);
  return out;
}

void append_cell(std::string& row, double v) {
  if (!row.empty()) row += ',';
  row += format_double(v);
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string observables_csv_header(int dim) {
  std::string h = "time,norm";
  for (int a = 0; a < dim; ++a) h += std::string(",mean_") + kAxisNames[a];
  for (int a = 0; a < dim; ++a) h += std::string(",mean_p") + kAxisNames[a];
  h += ",energy_h0";
  return h;
}

std::string observables_csv_row(const ObservableRecord& rec) {
  std::string row;
  append_cell(row, rec.time);
  append_cell(row, rec.norm);
  for (int a = 0; a < rec.dim; ++a)
    append_cell(row, rec.mean_position[static_cast<std::size_t>(a)]);
  for (int a = 0; a < rec.dim; ++a)
    append_cell(row, rec.mean_momentum[static_cast<std::size_t>(a)]);
  append_cell(row, rec.mean_energy_h0);
  return row;
}

void write_observables_csv(const std::string& path,
                           std::span<const ObservableRecord> records, int dim) {
  std::ofstream out = open_or_fail(path);
  out << observables_csv_header(dim) << '\n';
  for (const ObservableRecord& rec : records)
    out << observables_csv_row(rec) << '\n';
}

void write_snapshot_csv(const std::string& path, const Wavefunction& psi) {
  std::ofstream out = open_or_fail(path);
  const Grid& g = psi.grid;
  std::string header;
  for (int a = 0; a < g.dim(); ++a) {
    if (!header.empty()) header += ',';
    header += kAxisNames[a];
  }
  out << header << ",density,re,im\n";
  for (std::size_t i = 0; i < psi.amps.size(); ++i) {
    std::string row;
    for (int a = 0; a < g.dim(); ++a)
      append_cell(row, g.coordinate(a, g.index_on_axis(i, a)));
    append_cell(row, std::norm(psi.amps[i]));
    append_cell(row, psi.amps[i].real());
    append_cell(row, psi.amps[i].imag());
    out << row << '\n';
  }
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
  std::ofstream out = open_or_fail(path);
  if (traj.samples.empty())
    fail(ErrKind::invalid_argument, "empty trajectory");
  const std::size_t d = traj.samples.front().state.q.size();
  std::string header = "time";
  for (std::size_t a = 0; a < d; ++a) header += std::string(",q_") + kAxisNames[a];
  for (std::size_t a = 0; a < d; ++a) header += std::string(",v_") + kAxisNames[a];
  out << header << ",kinetic,potential,lagrangian,action,w_nc\n";
  for (const TrajectorySample& s : traj.samples) {
    std::string row;
    append_cell(row, s.state.t);
    for (double q : s.state.q) append_cell(row, q);
    for (double v : s.state.v) append_cell(row, v);
    append_cell(row, s.kinetic);
    append_cell(row, s.potential);
    append_cell(row, s.lagrangian);
    append_cell(row, s.action);
    append_cell(row, s.state.w_nc);
    out << row << '\n';
  }
}

void write_compare_csv(const std::string& path,
                       std::span<const ObservableRecord> quantum,
                       const Trajectory& classical) {
  std::ofstream out = open_or_fail(path);
  if (quantum.empty() || classical.samples.empty())
    fail(ErrKind::invalid_argument, "empty comparison inputs");
  const int dim = quantum.front().dim;
  std::string header = "time";
  for (int a = 0; a < dim; ++a) header += std::string(",mean_") + kAxisNames[a];
  for (int a = 0; a < dim; ++a) header += std::string(",q_") + kAxisNames[a];
  out << header << ",deviation\n";

  std::size_t cursor = 0;
  for (const ObservableRecord& rec : quantum) {
    while (cursor < classical.samples.size() &&
           classical.samples[cursor].state.t < rec.time - 1e-9)
      ++cursor;
    if (cursor >= classical.samples.size() ||
        std::abs(classical.samples[cursor].state.t - rec.time) > 1e-9)
      fail(ErrKind::invalid_argument,
           "comparison time grids do not line up at t = " +
               std::to_string(rec.time));
    const ClassicalState& cs = classical.samples[cursor].state;
    std::string row;
    append_cell(row, rec.time);
    double dev_sq = 0.0;
    for (int a = 0; a < dim; ++a)
      append_cell(row, rec.mean_position[static_cast<std::size_t>(a)]);
    for (int a = 0; a < dim; ++a) {
      append_cell(row, cs.q[static_cast<std::size_t>(a)]);
      const double d =
          rec.mean_position[static_cast<std::size_t>(a)] - cs.q[static_cast<std::size_t>(a)];
      dev_sq += d * d;
    }
    append_cell(row, std::sqrt(dev_sq));
    out << row << '\n';
  }
}

}  // namespace ncq
