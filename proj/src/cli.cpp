#include "udw/cli.hpp"

#include "udw/figures.hpp"
#include "udw/harvest.hpp"
#include "udw/limits.hpp"
#include "udw/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace udw {

namespace {

using nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scenario flags shared by compute and sweep; stored as text so that
// fractions such as 4/9 pass through the config parser unchanged.
struct ScenarioFlags {
  std::string config_path;
  std::map<std::string, std::string> values;

  void attach(CLI::App& app) {
    app.add_option("--config", config_path, "key=value configuration file");
    for (const auto& [flag, key] : flag_keys()) app.add_option(flag, values[key], "scenario " + key);
  }

  static std::vector<std::pair<std::string, std::string>> flag_keys() {
    return {{"--omega", "omega"}, {"--separation", "separation"}, {"--model", "model"},
            {"--width", "width"}, {"--mass", "mass"},             {"--speed-ratio", "speed_ratio"},
            {"--path", "path"}};
  }

  ConfigMap merged() const {
    ConfigMap map;
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw IoError("cannot read config file '" + config_path + "'");
      std::stringstream buf;
      buf << f.rdbuf();
      map = parse_config_text(buf.str());
    }
    for (const auto& [k, v] : values)
      if (!v.empty()) map[k] = v;
    return map;
  }
};

struct Tolerances {
  double rel = 1e-9;
  double abs = 1e-12;
  unsigned jobs = 0;

  void attach(CLI::App& app, bool with_jobs) {
    app.add_option("--rel-tol", rel, "relative quadrature tolerance")->check(CLI::PositiveNumber);
    app.add_option("--abs-tol", abs, "absolute quadrature tolerance")->check(CLI::PositiveNumber);
    if (with_jobs) app.add_option("--jobs", jobs, "worker threads (default: all processors)");
  }

  QuadratureSpec spec() const {
    QuadratureSpec s;
    s.rel_tol = rel;
    s.abs_tol = abs;
    return s;
  }
};

ordered_json regime_json(const ScenarioConfig& cfg) {
  const auto* d = std::get_if<Delocalized>(&cfg.model);
  if (!d) return {{"level", "not_applicable"}};
  const auto v = regime_check(*d);
  return {{"level", to_string(v.level)}, {"message", v.message}, {"lmc", v.lmc},
          {"lmc_s", v.lmc_s}, {"supersonic", v.supersonic}};
}

ordered_json number(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw IoError("write failed for '" + path + "'");
}

std::vector<double> parse_list(const std::string& text, const std::string& name) {
  if (text.find(':') != std::string::npos) {
    // reuse the axis grammar for ranges
    Axis ax = parse_axis("omega=" + text);
    return ax.values;
  }
  std::vector<double> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(parse_number(item, name));
  if (out.empty()) throw ConfigError("empty list for " + name);
  return out;
}

int cmd_compute(const ScenarioFlags& flags, const Tolerances& tol, std::ostream& out, std::ostream& err) {
  const ScenarioConfig cfg = scenario_from_map(flags.merged());
  const HarvestResult r = compute(cfg, tol.spec());
  ordered_json j{{"p_a", number(r.p_a)},
                 {"p_b", number(r.p_b)},
                 {"re_m", number(r.m.real())},
                 {"im_m", number(r.m.imag())},
                 {"abs_m", number(std::abs(r.m))},
                 {"negativity", number(r.negativity)},
                 {"err_p", r.err_p},
                 {"err_m", r.err_m},
                 {"regime", regime_json(cfg)},
                 {"converged", r.converged}};
  out << j.dump(2) << '\n';
  if (!r.converged) {
    err << "warning: quadrature did not reach the requested tolerance\n";
    return exit_nonconvergence;
  }
  return exit_ok;
}

struct SweepFlags {
  std::string x, y, out;
  double lmc = 0.0;
};

int cmd_sweep(const ScenarioFlags& flags, const SweepFlags& sf, const Tolerances& tol, std::ostream& out,
              std::ostream& err) {
  SweepRequest req;
  req.x = parse_axis(sf.x);
  if (!sf.y.empty()) req.y = parse_axis(sf.y);
  if (req.y && req.y->name == req.x.name) throw ConfigError("both axes sweep '" + req.x.name + "'");
  ConfigMap map = flags.merged();
  // swept keys need no fixed value; seed them from the axis so the base validates
  for (const Axis* ax : {&req.x, req.y ? &*req.y : nullptr})
    if (ax && !map.count(ax->name)) map[ax->name] = format_double(ax->values.front());
  if (sf.lmc > 0.0) {
    req.lmc = sf.lmc;
    if (!map.count("mass") && map.count("width")) map["mass"] = format_double(sf.lmc / parse_number(map["width"], "width"));
  }
  req.base = scenario_from_map(map);
  req.spec = tol.spec();
  req.jobs = tol.jobs;
  const SweepGrid grid = run_sweep(req);
  std::ostringstream csv;
  write_csv(grid, csv);
  write_text(sf.out, csv.str(), out);
  if (const size_t n = grid.failures()) err << "warning: " << n << " cell(s) did not converge or were rejected\n";
  return exit_ok;
}

struct FigureFlags {
  std::string id, dir = ".";
  int omega_points = 50, separation_points = 50, mass_points = 40;
};

int cmd_figure(const FigureFlags& ff, const Tolerances& tol, std::ostream& out, std::ostream& err) {
  FigureOptions o;
  o.omega_points = ff.omega_points;
  o.separation_points = ff.separation_points;
  o.mass_points = ff.mass_points;
  o.spec = tol.spec();
  o.jobs = tol.jobs;
  const FigureRun run = run_figure(figure_recipe(ff.id, o));
  std::vector<std::string> files;
  try {
    files = write_figure(run, ff.dir);
  } catch (const std::exception& e) {
    throw IoError(e.what());
  }
  for (const auto& f : files) out << "wrote " << f << '\n';
  for (const auto& a : run.assertions)
    out << (a.passed ? "PASS " : "FAIL ") << a.name << " (" << a.statement << "; measured " << a.measured << ")\n";
  size_t failures = 0;
  for (const auto& g : run.grids) failures += g.failures();
  if (failures) err << "warning: " << failures << " cell(s) did not converge or were rejected\n";
  return exit_ok;
}

struct LimitFlags {
  std::string kind, gammas = "0.4,0.2,0.1,0.05", masses = "1000,10000,100000,1000000", omega = "1",
                    separation = "1", path = "taylor", out;
  double lmc = 400.0, l = 1.0, width = 1.0;
};

ordered_json report_json(const LimitReport& rep) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : rep.values)
    rows.push_back({{"parameter", r.parameter}, {"p", number(r.p)}, {"abs_m", number(r.abs_m)},
                    {"negativity", number(r.negativity)}, {"err_p", r.err_p}, {"err_m", r.err_m},
                    {"converged", r.converged}});
  auto list = [](const std::vector<double>& v) {
    ordered_json a = ordered_json::array();
    for (double x : v) a.push_back(number(x));
    return a;
  };
  return {{"kind", rep.kind},
          {"values", rows},
          {"reference", {{"p", rep.reference.p}, {"abs_m", rep.reference.abs_m}, {"negativity", rep.reference.negativity}}},
          {"rates", {{"p", list(rep.rates.p)}, {"abs_m", list(rep.rates.abs_m)}, {"negativity", list(rep.rates.negativity)}}},
          {"p_error_monotone", rep.p_error_monotone},
          {"abs_m_error_monotone", rep.abs_m_error_monotone},
          {"p_final_rel_error", number(rep.p_final_rel_error)},
          {"abs_m_final_rel_error", number(rep.abs_m_final_rel_error)}};
}

std::string report_csv(const LimitReport& rep) {
  std::ostringstream o;
  o << (rep.kind == "gamma" ? "gamma" : "mass") << ",p,abs_m,negativity,err_p,err_m,converged\n";
  for (const auto& r : rep.values)
    o << format_csv_number(r.parameter) << ',' << format_csv_number(r.p) << ',' << format_csv_number(r.abs_m) << ','
      << format_csv_number(r.negativity) << ',' << format_csv_number(r.err_p) << ',' << format_csv_number(r.err_m)
      << ',' << (r.converged ? "true" : "false") << '\n';
  return o.str();
}

int cmd_limits(const LimitFlags& lf, const Tolerances& tol, std::ostream& out, std::ostream& err) {
  PathChoice path;
  if (lf.path == "taylor") path = PathChoice::Taylor;
  else if (lf.path == "exact") path = PathChoice::Exact;
  else throw ConfigError("path must be 'exact' or 'taylor', got '" + lf.path + "'");
  const double a = parse_number(lf.omega, "omega");
  const double s = parse_number(lf.separation, "separation");
  if (!(a > 0.0) || !(s > 0.0)) throw ConfigError("omega and separation must be positive");
  LimitReport rep;
  try {
    if (lf.kind == "gamma") {
      GammaFamily fam{lf.lmc, lf.l, parse_list(lf.gammas, "gammas")};
      rep = run_gamma_family(a, s, fam, path, tol.spec());
    } else {
      rep = mass_limit_check(a, s, lf.width, parse_list(lf.masses, "masses"), path, tol.spec());
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  out << report_json(rep).dump(2) << '\n';
  if (!lf.out.empty()) write_text(lf.out, report_csv(rep), out);
  for (const auto& r : rep.values)
    if (!r.converged) {
      err << "warning: quadrature did not reach the requested tolerance\n";
      return exit_nonconvergence;
    }
  return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement harvesting with Unruh-DeWitt detectors", "udw-harvest"};
  app.set_version_flag("--version", version_string);
  app.require_subcommand(1);

  ScenarioFlags compute_flags, sweep_flags;
  Tolerances compute_tol, sweep_tol, figure_tol, limit_tol;
  SweepFlags sf;
  FigureFlags ff;
  LimitFlags lf;

  auto* compute_cmd = app.add_subcommand("compute", "P, M and negativity at one configuration (JSON)");
  compute_flags.attach(*compute_cmd);
  compute_tol.attach(*compute_cmd, false);

  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a one- or two-axis grid (CSV)");
  sweep_flags.attach(*sweep_cmd);
  sweep_tol.attach(*sweep_cmd, true);
  sweep_cmd->add_option("--x", sf.x, "first axis, name=start:stop:count[:log] or name=v1,v2")->required();
  sweep_cmd->add_option("--y", sf.y, "optional second axis");
  sweep_cmd->add_option("--lmc", sf.lmc, "tie mass to lmc / width in every cell")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", sf.out, "CSV path (default: standard output)");

  auto* figure_cmd = app.add_subcommand("figure", "grid data and sidecar JSON for a figure recipe");
  figure_tol.attach(*figure_cmd, true);
  figure_cmd->add_option("id", ff.id, "recipe id")->required()->check(CLI::IsMember(figure_ids()));
  figure_cmd->add_option("--out", ff.dir, "output directory");
  figure_cmd->add_option("--omega-points", ff.omega_points)->check(CLI::PositiveNumber);
  figure_cmd->add_option("--separation-points", ff.separation_points)->check(CLI::PositiveNumber);
  figure_cmd->add_option("--mass-points", ff.mass_points)->check(CLI::PositiveNumber);

  auto* limits_cmd = app.add_subcommand("limits", "gamma-regularized or infinite-mass limit report");
  limit_tol.attach(*limits_cmd, false);
  limits_cmd->add_option("kind", lf.kind, "gamma or mass")->required()->check(CLI::IsMember({"gamma", "mass"}));
  limits_cmd->add_option("--omega", lf.omega);
  limits_cmd->add_option("--separation", lf.separation);
  limits_cmd->add_option("--lmc", lf.lmc, "fixed width * mass (gamma)")->check(CLI::PositiveNumber);
  limits_cmd->add_option("--l", lf.l, "width at gamma = 1 (gamma)")->check(CLI::PositiveNumber);
  limits_cmd->add_option("--gammas", lf.gammas, "descending list (gamma)");
  limits_cmd->add_option("--width", lf.width, "fixed width (mass)")->check(CLI::PositiveNumber);
  limits_cmd->add_option("--masses", lf.masses, "ascending list (mass)");
  limits_cmd->add_option("--path", lf.path, "exact or taylor");
  limits_cmd->add_option("--out", lf.out, "CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_malformed;
  }

  try {
    if (*compute_cmd) return cmd_compute(compute_flags, compute_tol, out, err);
    if (*sweep_cmd) return cmd_sweep(sweep_flags, sf, sweep_tol, out, err);
    if (*figure_cmd) return cmd_figure(ff, figure_tol, out, err);
    return cmd_limits(lf, limit_tol, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return exit_io;
  } catch (const RegimeRejected& e) {
    err << "error: regime rejected: " << e.what() << '\n';
    return exit_regime_rejected;
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << '\n';
    return exit_nonconvergence;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return exit_malformed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_malformed;
  }
}

}  // namespace udw
