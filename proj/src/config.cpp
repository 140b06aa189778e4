#include "ncq/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ncq {

namespace {

using nlohmann::json;

std::vector<double> number_list(const json& node, int expected,
                                const std::string& what) {
  std::vector<double> out;
  if (node.is_number()) {
    out.assign(static_cast<std::size_t>(expected), node.get<double>());
    return out;
  }
  if (!node.is_array())
    fail(ErrKind::invalid_argument, what + " must be a number or array");
  for (const json& v : node) {
    if (!v.is_number())
      fail(ErrKind::invalid_argument, what + " entries must be numbers");
    out.push_back(v.get<double>());
  }
  if (expected >= 0 && out.size() != static_cast<std::size_t>(expected))
    fail(ErrKind::invalid_argument,
         what + " needs " + std::to_string(expected) + " entries");
  return out;
}

double require_number(const json& obj, const std::string& key,
                      const std::string& ctx) {
  if (!obj.contains(key) || !obj[key].is_number())
    fail(ErrKind::invalid_argument, ctx + " needs numeric field '" + key + "'");
  return obj[key].get<double>();
}

double optional_number(const json& obj, const std::string& key, double dflt) {
  if (!obj.contains(key)) return dflt;
  if (!obj[key].is_number())
    fail(ErrKind::invalid_argument, "field '" + key + "' must be numeric");
  return obj[key].get<double>();
}

IntegratorChoice parse_integrator(const std::string& name) {
  if (name == "crank_nicolson") return IntegratorChoice::crank_nicolson;
  if (name == "split_step_strang") return IntegratorChoice::split_step_strang;
  if (name == "exact_factored") return IntegratorChoice::exact_factored;
  fail(ErrKind::invalid_argument,
       "unknown integrator '" + name +
           "' (expected crank_nicolson, split_step_strang or exact_factored)");
}

Grid parse_grid(const json& node) {
  if (!node.is_object() || !node.contains("axes") || !node["axes"].is_array())
    fail(ErrKind::invalid_argument, "grid needs an 'axes' array");
  std::vector<Axis> axes;
  for (const json& ax : node["axes"]) {
    Axis a;
    a.x_min = require_number(ax, "x_min", "grid axis");
    a.x_max = require_number(ax, "x_max", "grid axis");
    a.n_points = static_cast<int>(require_number(ax, "n_points", "grid axis"));
    axes.push_back(a);
  }
  return Grid(std::move(axes));
}

PotentialSpec parse_potential(const json& node, const Grid& grid) {
  if (!node.is_object() || !node.contains("type") || !node["type"].is_string())
    fail(ErrKind::invalid_argument, "potential needs a string 'type'");
  const std::string type = node["type"].get<std::string>();
  const int dim = grid.dim();
  if (type == "free") return FreePotential{};
  if (type == "harmonic") {
    HarmonicPotential p;
    p.omega = require_number(node, "omega", "harmonic potential");
    p.center = node.contains("center")
                   ? number_list(node["center"], dim, "harmonic center")
                   : std::vector<double>(static_cast<std::size_t>(dim), 0.0);
    return p;
  }
  if (type == "barrier") {
    BarrierPotential p;
    p.height = require_number(node, "height", "barrier potential");
    p.half_width = require_number(node, "half_width", "barrier potential");
    p.center = node.contains("center")
                   ? number_list(node["center"], dim, "barrier center")
                   : std::vector<double>(static_cast<std::size_t>(dim), 0.0);
    return p;
  }
  if (type == "sampled") {
    SampledPotential p;
    p.grid = grid;
    p.values = number_list(node.contains("values") ? node["values"] : json(),
                           static_cast<int>(grid.total_points()),
                           "sampled potential values");
    return p;
  }
  fail(ErrKind::invalid_argument, "unknown potential type '" + type + "'");
}

}  // namespace

namespace {

RunConfig parse_config_impl(const json& doc) {
  if (!doc.is_object())
    fail(ErrKind::invalid_argument, "config root must be an object");

  RunConfig cfg;

  if (doc.contains("physics")) {
    const json& ph = doc["physics"];
    cfg.physics.hbar = optional_number(ph, "hbar", 1.0);
    cfg.physics.mass = optional_number(ph, "mass", 1.0);
    cfg.physics.friction_k = optional_number(ph, "k", 0.0);
    cfg.physics.dim = static_cast<int>(optional_number(ph, "dim", 1.0));
  }
  cfg.physics.validate();

  if (!doc.contains("grid"))
    fail(ErrKind::invalid_argument, "config needs a 'grid' section");
  cfg.grid = parse_grid(doc["grid"]);
  if (cfg.grid.dim() != cfg.physics.dim)
    fail(ErrKind::invalid_argument,
         "grid axis count must equal physics.dim");

  if (doc.contains("initial")) {
    const json& init = doc["initial"];
    cfg.initial.sigma = require_number(init, "sigma", "initial packet");
    cfg.initial.center =
        init.contains("center")
            ? number_list(init["center"], cfg.physics.dim, "initial center")
            : std::vector<double>(static_cast<std::size_t>(cfg.physics.dim), 0.0);
    cfg.initial.momentum =
        init.contains("momentum")
            ? number_list(init["momentum"], cfg.physics.dim, "initial momentum")
            : std::vector<double>(static_cast<std::size_t>(cfg.physics.dim), 0.0);
  } else {
    fail(ErrKind::invalid_argument, "config needs an 'initial' section");
  }

  cfg.potential = doc.contains("potential")
                      ? parse_potential(doc["potential"], cfg.grid)
                      : PotentialSpec(FreePotential{});
  validate_potential(cfg.potential, cfg.grid);

  if (!doc.contains("plan"))
    fail(ErrKind::invalid_argument, "config needs a 'plan' section");
  const json& plan = doc["plan"];
  cfg.plan.dt = require_number(plan, "dt", "plan");
  cfg.plan.n_steps = static_cast<long>(require_number(plan, "n_steps", "plan"));
  cfg.plan.record_every =
      static_cast<long>(optional_number(plan, "record_every", 1.0));
  if (!plan.contains("integrator") || !plan["integrator"].is_string())
    fail(ErrKind::invalid_argument, "plan needs a string 'integrator'");
  cfg.plan.integrator = parse_integrator(plan["integrator"].get<std::string>());
  cfg.plan.validate(cfg.physics);

  if (doc.contains("outputs")) {
    const json& out = doc["outputs"];
    if (out.contains("csv_path")) cfg.outputs.csv_path = out["csv_path"];
    cfg.outputs.snapshot_every =
        static_cast<long>(optional_number(out, "snapshot_every", 0.0));
    if (out.contains("snapshot_prefix"))
      cfg.outputs.snapshot_prefix = out["snapshot_prefix"].get<std::string>();
    if (out.contains("svg_path"))
      cfg.outputs.svg_path = out["svg_path"].get<std::string>();
  }

  if (doc.contains("classical")) {
    const json& cl = doc["classical"];
    ClassicalRunSpec spec;
    spec.q0 = number_list(cl.contains("q0") ? cl["q0"] : json(),
                          cfg.physics.dim, "classical q0");
    spec.v0 = number_list(cl.contains("v0") ? cl["v0"] : json(),
                          cfg.physics.dim, "classical v0");
    spec.dt = require_number(cl, "dt", "classical");
    spec.n_steps = static_cast<long>(require_number(cl, "n_steps", "classical"));
    if (cl.contains("csv_path")) spec.csv_path = cl["csv_path"];
    if (!(spec.dt > 0.0))
      fail(ErrKind::invalid_argument, "classical dt must be > 0");
    if (spec.n_steps < 0)
      fail(ErrKind::invalid_argument, "classical n_steps must be >= 0");
    cfg.classical = std::move(spec);
  }

  if (doc.contains("compare_csv_path"))
    cfg.compare_csv_path = doc["compare_csv_path"].get<std::string>();

  return cfg;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  try {
    return parse_config_impl(json::parse(json_text));
  } catch (const json::exception& e) {
    fail(ErrKind::invalid_argument, std::string("config parse error: ") + e.what());
  }
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrKind::invalid_argument, "cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

void apply_output_dir(RunConfig& cfg, const std::string& dir) {
  namespace fs = std::filesystem;
  auto redirect = [&](std::string& path) {
    path = (fs::path(dir) / fs::path(path).filename()).string();
  };
  redirect(cfg.outputs.csv_path);
  if (cfg.outputs.snapshot_prefix) redirect(*cfg.outputs.snapshot_prefix);
  if (cfg.outputs.svg_path) redirect(*cfg.outputs.svg_path);
  if (cfg.classical) redirect(cfg.classical->csv_path);
  redirect(cfg.compare_csv_path);
}

}  // namespace ncq
