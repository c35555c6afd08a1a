#include "udw/figures.hpp"

#include "udw/classical.hpp"
#include "udw/delocalized.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

namespace udw {

namespace {

constexpr double medium_width = 4.0 / 9.0;  // width of the medium figures
constexpr double medium_mass = 900.0;

RecipeParameter published(std::string name, std::string value) { return {std::move(name), std::move(value), true}; }
RecipeParameter chosen(std::string name, std::string value) { return {std::move(name), std::move(value), false}; }

std::string range_text(double lo, double hi, int n, const char* spacing = "linear") {
  return "[" + format_double(lo) + ", " + format_double(hi) + "], " + std::to_string(n) + " points, " + spacing;
}

ScenarioConfig delocalized(double width, double mass, double r) {
  ScenarioConfig cfg;
  cfg.model = Delocalized{width, mass, r, PathChoice::Taylor};
  return cfg;
}

SweepRequest heatmap(const ScenarioConfig& base, const FigureOptions& o) {
  SweepRequest r;
  r.x = linear_axis("omega", o.omega_min, o.omega_max, o.omega_points);
  r.y = linear_axis("separation", o.separation_min, o.separation_max, o.separation_points);
  r.base = base;
  r.spec = o.spec;
  r.jobs = o.jobs;
  return r;
}

void add_heatmap_extents(FigureRecipe& rec, const FigureOptions& o) {
  rec.parameters.push_back(chosen("omega", range_text(o.omega_min, o.omega_max, o.omega_points)));
  rec.parameters.push_back(
      chosen("separation", range_text(o.separation_min, o.separation_max, o.separation_points)));
}

ExtraColumn pointlike_p() {
  return {"p_pointlike", [](const ScenarioConfig& c) { return excitation_classical(c.omega, 0.0).value; }};
}

FigureRecipe fig1_part(bool smeared, const FigureOptions& o) {
  FigureRecipe rec;
  rec.id = smeared ? "fig1_top" : "fig1_bottom";
  rec.title = smeared ? "Negativity of Gaussian-smeared detectors, L = sigma"
                      : "Negativity of pointlike detectors";
  ScenarioConfig base;
  if (smeared) base.model = Smeared{1.0};
  rec.parameters.push_back(published("model", smeared ? "smeared" : "pointlike"));
  if (smeared) rec.parameters.push_back(published("width", "1"));
  add_heatmap_extents(rec, o);
  rec.grids.push_back({rec.id + ".csv", heatmap(base, o)});
  return rec;
}

const double fig4_gammas[6] = {0.4, 0.2, 0.1, 0.05, 0.025, 0.025};
const double fig4_lmc[6] = {400.0, 400.0, 400.0, 400.0, 400.0, 2000.0};

FigureRecipe fig4_panel(int panel, const FigureOptions& o) {
  const double g = fig4_gammas[panel - 1], lmc = fig4_lmc[panel - 1];
  FigureRecipe rec;
  rec.id = "fig4_panel" + std::to_string(panel);
  rec.title = "Negativity of delocalized detectors, gamma-regularized family, panel " + std::to_string(panel);
  rec.parameters.push_back(published("lmc", format_double(lmc)));
  rec.parameters.push_back(chosen("l", "1"));
  rec.parameters.push_back(chosen("gamma", format_double(g)));
  rec.parameters.push_back(chosen("width", format_double(g) + " (l gamma)"));
  rec.parameters.push_back(chosen("mass", format_double(lmc / g) + " (lmc / (l gamma))"));
  rec.parameters.push_back(chosen("speed_ratio", "1"));
  add_heatmap_extents(rec, o);
  rec.grids.push_back({rec.id + ".csv", heatmap(delocalized(g, lmc / g, 1.0), o)});
  rec.grids.push_back({rec.id + "_pointlike.csv", heatmap(ScenarioConfig{}, o)});
  return rec;
}

bool all_converged(const SweepGrid& g) { return g.failures() == 0; }

}  // namespace

std::vector<std::string> figure_ids() {
  std::vector<std::string> ids = {"fig1_top", "fig1_bottom", "fig1", "fig2", "fig3"};
  for (int p = 1; p <= 6; ++p) ids.push_back("fig4_panel" + std::to_string(p));
  for (const char* id : {"fig5_top", "fig5_bottom", "fig6"}) ids.push_back(id);
  return ids;
}

FigureRecipe figure_recipe(const std::string& id, const FigureOptions& o) {
  if (id == "fig1_top") return fig1_part(true, o);
  if (id == "fig1_bottom") return fig1_part(false, o);
  if (id == "fig1") {
    FigureRecipe rec = fig1_part(true, o);
    const FigureRecipe bottom = fig1_part(false, o);
    rec.id = "fig1";
    rec.title = "Negativity of smeared (L = sigma) and pointlike detectors on a shared grid";
    rec.grids.push_back(bottom.grids.front());
    return rec;
  }
  if (id == "fig2") {
    FigureRecipe rec;
    rec.id = id;
    rec.title = "Excitation probability against detector mass at L = 1000 sigma";
    rec.parameters = {published("width", "1000"), chosen("omega", "0.1, 0.5, 1, 2"),
                      chosen("mass", range_text(0.5, 1000.0, o.mass_points, "logarithmic")),
                      chosen("separation", "1"), chosen("speed_ratio", "1"),
                      published("reference", "pointlike excitation probability at the same gap (p_pointlike)")};
    ScenarioConfig base = delocalized(1000.0, 1.0, 1.0);
    SweepRequest r;
    r.x = Axis{"omega", {0.1, 0.5, 1.0, 2.0}};
    r.y = log_axis("mass", 0.5, 1000.0, o.mass_points);
    r.base = base;
    r.spec = o.spec;
    r.jobs = o.jobs;
    r.extras.push_back(pointlike_p());
    rec.grids.push_back({"fig2.csv", r});
    return rec;
  }
  if (id == "fig3") {
    FigureRecipe rec;
    rec.id = id;
    rec.title = "Entangling term against separation at Omega sigma = 0.1 and fixed M L";
    rec.parameters = {published("omega", "0.1"), published("lmc", "500"), chosen("width", "0.5, 1, 2"),
                      chosen("separation", range_text(o.separation_min, o.separation_max, o.separation_points)),
                      chosen("speed_ratio", "1"),
                      published("reference", "pointlike entangling term (abs_m_pointlike)")};
    ScenarioConfig base = delocalized(1.0, 500.0, 1.0);
    base.omega = 0.1;
    SweepRequest r;
    r.x = linear_axis("separation", o.separation_min, o.separation_max, o.separation_points);
    r.y = Axis{"width", {0.5, 1.0, 2.0}};
    r.base = base;
    r.lmc = 500.0;
    r.spec = o.spec;
    r.jobs = o.jobs;
    r.extras.push_back({"abs_m_pointlike", [](const ScenarioConfig& c) {
                          return std::abs(entangling_classical(c.omega, c.separation, 0.0).value);
                        }});
    rec.grids.push_back({"fig3.csv", r});
    return rec;
  }
  for (int p = 1; p <= 6; ++p)
    if (id == "fig4_panel" + std::to_string(p)) return fig4_panel(p, o);
  if (id == "fig5_top" || id == "fig6") {
    const bool f5 = id == "fig5_top";
    const double r_s = f5 ? 0.26 : 0.01;
    FigureRecipe rec;
    rec.id = id;
    rec.title = f5 ? "P, |M| and negativity against the gap in a medium with c_s = 0.26 c"
                   : "P, |M| and negativity against the gap in a medium with c_s = 0.01 c";
    rec.parameters = {published("width", "4/9"), published("mass", "900"), published("speed_ratio", format_double(r_s)),
                      published("separation", "0.1"),
                      chosen("omega", range_text(o.omega_min, o.omega_max, o.omega_points))};
    SweepRequest r;
    r.x = linear_axis("omega", o.omega_min, o.omega_max, o.omega_points);
    r.base = delocalized(medium_width, medium_mass, r_s);
    r.base.separation = 0.1;
    r.spec = o.spec;
    r.jobs = o.jobs;
    if (f5) {
      const QuadratureSpec spec = o.spec;
      r.extras.push_back({"p_vacuum", [spec](const ScenarioConfig& c) {
                            return excitation_delocalized(c.omega, Delocalized{medium_width, medium_mass, 1.0}, spec)
                                .value;
                          }});
      rec.parameters.push_back(chosen("reference", "vacuum excitation probability, speed_ratio = 1 (p_vacuum)"));
    }
    rec.grids.push_back({id + ".csv", r});
    return rec;
  }
  if (id == "fig5_bottom") {
    FigureRecipe rec;
    rec.id = id;
    rec.title = "Negativity of delocalized detectors in a medium with c_s = 0.26 c";
    rec.parameters = {published("width", "4/9"), published("mass", "900"), published("speed_ratio", "0.26"),
                      chosen("reference", "same detectors in vacuum, speed_ratio = 1")};
    add_heatmap_extents(rec, o);
    rec.grids.push_back({"fig5_bottom.csv", heatmap(delocalized(medium_width, medium_mass, 0.26), o)});
    rec.grids.push_back({"fig5_bottom_vacuum.csv", heatmap(delocalized(medium_width, medium_mass, 1.0), o)});
    return rec;
  }
  throw ConfigError("unknown figure id '" + id + "'");
}

double max_negativity(const SweepGrid& g) {
  double m = 0.0;
  for (const auto& r : g.results) m = std::max(m, r.negativity);
  return m;
}

size_t count_exceeding(const SweepGrid& a, const SweepGrid& b, double slack) {
  size_t n = 0;
  for (size_t c = 0; c < a.results.size(); ++c) n += a.results[c].negativity > b.results[c].negativity + slack;
  return n;
}

double mean_abs_negativity_deviation(const SweepGrid& a, const SweepGrid& b) {
  double s = 0.0;
  for (size_t c = 0; c < a.results.size(); ++c) s += std::abs(a.results[c].negativity - b.results[c].negativity);
  return a.results.empty() ? 0.0 : s / a.results.size();
}

namespace {

// share of zero-negativity cells in the largest-separation row
double zero_share_at_far_separation(const SweepGrid& g) {
  const size_t j = g.ny() - 1;
  size_t zeros = 0;
  for (size_t i = 0; i < g.x.values.size(); ++i) zeros += g.at(i, j).negativity == 0.0;
  return static_cast<double>(zeros) / g.x.values.size();
}

double nonzero_share(const SweepGrid& g) {
  size_t n = 0;
  for (const auto& r : g.results) n += r.negativity > 0.0;
  return static_cast<double>(n) / g.results.size();
}

void evaluate_assertions(FigureRun& run) {
  auto& out = run.assertions;
  const auto& id = run.recipe.id;
  for (size_t k = 0; k < run.grids.size(); ++k)
    out.push_back({"converged:" + run.recipe.grids[k].file, "every cell converged", all_converged(run.grids[k]),
                   static_cast<double>(run.grids[k].failures())});

  if (id == "fig1_top" || id == "fig1_bottom" || id == "fig1") {
    for (const auto& g : run.grids) {
      const double share = zero_share_at_far_separation(g);
      out.push_back({"grey_region_at_large_separation", "zero negativity somewhere on the largest-separation row",
                     share > 0.0, share});
      const double nz = nonzero_share(g);
      out.push_back({"harvesting_region", "nonzero negativity somewhere on the grid", nz > 0.0, nz});
    }
    if (id == "fig1") {
      const double n = count_exceeding(run.grids[0], run.grids[1]);
      out.push_back({"smeared_below_pointlike", "smeared negativity <= pointlike negativity at every cell", n == 0.0, n});
    }
  } else if (id == "fig2") {
    const auto& g = run.grids[0];
    size_t rising = 0, closing = 0;
    for (size_t i = 0; i < g.x.values.size(); ++i) {
      bool inc = true;
      for (size_t j = 0; j + 1 < g.ny(); ++j) inc = inc && g.at(i, j + 1).p_a > g.at(i, j).p_a;
      rising += inc;
      const double ref = g.extras[g.index(i, 0)][0];
      closing += std::abs(g.at(i, g.ny() - 1).p_a - ref) < std::abs(g.at(i, 0).p_a - ref);
    }
    out.push_back({"p_increases_with_mass", "P strictly increasing in mass for every gap", rising == g.x.values.size(),
                   static_cast<double>(rising)});
    out.push_back({"p_approaches_pointlike", "P at the largest mass is closer to the pointlike value than at the smallest",
                   closing == g.x.values.size(), static_cast<double>(closing)});
  } else if (id == "fig3") {
    const auto& g = run.grids[0];
    size_t ordered = 0, nearest = 0;
    for (size_t i = 0; i < g.x.values.size(); ++i) {
      ordered += std::abs(g.at(i, 0).m) > std::abs(g.at(i, g.ny() - 1).m);
      if (std::abs(g.x.values[i] - 0.5) < std::abs(g.x.values[nearest] - 0.5)) nearest = i;
    }
    bool chain = true;
    for (size_t j = 0; j + 1 < g.ny(); ++j) chain = chain && std::abs(g.at(nearest, j).m) > std::abs(g.at(nearest, j + 1).m);
    out.push_back({"width_ordering_near_s_half", "|M| strictly decreasing in width at the separation closest to 0.5",
                   chain, g.x.values[nearest]});
    out.push_back({"smaller_width_larger_m", "|M| at the smallest width exceeds |M| at the largest width at every separation",
                   ordered == g.x.values.size(), static_cast<double>(ordered) / g.x.values.size()});
  } else if (id.rfind("fig4_panel", 0) == 0) {
    const double mad = mean_abs_negativity_deviation(run.grids[0], run.grids[1]);
    out.push_back({"deviation_from_pointlike", "mean |N - N_pointlike| over the grid (reported)", std::isfinite(mad), mad});
  } else if (id == "fig5_top") {
    const auto& g = run.grids[0];
    size_t above = 0;
    for (size_t i = 0; i < g.x.values.size(); ++i) above += g.at(i).p_a > g.extras[i][0];
    out.push_back({"medium_enhances_p", "P in the medium exceeds the vacuum P at every gap", above == g.x.values.size(),
                   static_cast<double>(above)});
  } else if (id == "fig5_bottom") {
    const auto& med = run.grids[0];
    const auto& vac = run.grids[1];
    out.push_back({"harvesting_region", "nonzero negativity somewhere on the grid", nonzero_share(med) > 0.0,
                   nonzero_share(med)});
    const double above = count_exceeding(med, vac);
    out.push_back({"medium_below_vacuum", "medium negativity <= vacuum negativity at every cell", above == 0.0, above});
    size_t nonzero = 0, strict = 0;
    for (size_t c = 0; c < med.results.size(); ++c) {
      if (vac.results[c].negativity > 0.0 || med.results[c].negativity > 0.0) {
        ++nonzero;
        strict += med.results[c].negativity < vac.results[c].negativity;
      }
    }
    const double share = nonzero ? static_cast<double>(strict) / nonzero : 0.0;
    out.push_back({"medium_suppression", "strictly smaller negativity on at least 25% of the nonzero cells",
                   share >= 0.25, share});
  } else if (id == "fig6") {
    const double m = max_negativity(run.grids[0]);
    out.push_back({"no_harvesting", "max negativity = 0", m == 0.0, m});
  }
}

}  // namespace

FigureRun run_figure(const FigureRecipe& recipe) {
  FigureRun run;
  run.recipe = recipe;
  for (const auto& g : recipe.grids) run.grids.push_back(run_sweep(g.request));
  evaluate_assertions(run);
  return run;
}

std::string sidecar_json(const FigureRun& run) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["id"] = run.recipe.id;
  j["title"] = run.recipe.title;
  j["tool_version"] = version_string;
  auto& params = j["parameters"] = ordered_json::array();
  for (const auto& p : run.recipe.parameters)
    params.push_back({{"name", p.name}, {"value", p.value}, {"source", p.published ? "[paper-sourced]" : "[artifact-chosen]"}});
  auto& grids = j["grids"] = ordered_json::array();
  for (size_t k = 0; k < run.grids.size(); ++k) {
    const auto& g = run.grids[k];
    auto axis = [](const Axis& a) {
      return ordered_json{{"name", a.name}, {"count", a.values.size()}, {"min", a.values.front()}, {"max", a.values.back()}};
    };
    ordered_json e{{"file", run.recipe.grids[k].file}, {"x_axis", axis(g.x)}};
    e["y_axis"] = g.y ? axis(*g.y) : ordered_json(nullptr);
    ordered_json fixed = ordered_json::object();
    for (const auto& [name, value] : g.fixed) fixed[name] = value;
    e["fixed"] = fixed;
    e["extra_columns"] = g.extra_names;
    e["cells"] = g.results.size();
    e["failures"] = g.failures();
    e["rel_tol"] = g.spec.rel_tol;
    e["abs_tol"] = g.spec.abs_tol;
    grids.push_back(e);
  }
  auto& as = j["assertions"] = ordered_json::array();
  for (const auto& a : run.assertions) {
    ordered_json e{{"name", a.name}, {"statement", a.statement}, {"passed", a.passed}};
    e["measured"] = std::isfinite(a.measured) ? ordered_json(a.measured) : ordered_json(nullptr);
    as.push_back(e);
  }
  return j.dump(2) + "\n";
}

std::vector<std::string> write_figure(const FigureRun& run, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<std::string> written;
  auto open = [&](const std::string& name) {
    const std::string path = (fs::path(dir) / name).string();
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    written.push_back(path);
    return f;
  };
  for (size_t k = 0; k < run.grids.size(); ++k) {
    auto f = open(run.recipe.grids[k].file);
    write_csv(run.grids[k], f);
    if (!f) throw std::ios_base::failure("write failed: " + written.back());
  }
  auto f = open(run.recipe.id + ".json");
  f << sidecar_json(run);
  if (!f) throw std::ios_base::failure("write failed: " + written.back());
  return written;
}

}  // namespace udw
