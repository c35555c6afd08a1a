#pragma once

// Named grid recipes for the published figures, with their provenance and the
// qualitative features each grid is expected to show.

#include "udw/sweep.hpp"

#include <string>
#include <vector>

namespace udw {

struct RecipeParameter {
  std::string name;
  std::string value;
  bool published;  // false: chosen here for the grid
};

struct RecipeGrid {
  std::string file;  // CSV file name
  SweepRequest request;
};

struct FigureRecipe {
  std::string id;
  std::string title;
  std::vector<RecipeParameter> parameters;
  std::vector<RecipeGrid> grids;
};

struct FigureAssertion {
  std::string name;
  std::string statement;
  bool passed;
  double measured;
};

struct FigureRun {
  FigureRecipe recipe;
  std::vector<SweepGrid> grids;  // parallel to recipe.grids
  std::vector<FigureAssertion> assertions;
};

// Heatmap extents where the published figures give none, and grid sizes.
struct FigureOptions {
  double omega_min = 0.1, omega_max = 5.0;
  double separation_min = 0.05, separation_max = 5.0;
  int omega_points = 50;
  int separation_points = 50;
  int mass_points = 40;
  QuadratureSpec spec = {};
  unsigned jobs = 0;
};

std::vector<std::string> figure_ids();

// fig1_top, fig1_bottom, fig1, fig2, fig3, fig4_panel1 .. fig4_panel6,
// fig5_top, fig5_bottom, fig6. Throws ConfigError on an unknown id.
FigureRecipe figure_recipe(const std::string& id, const FigureOptions& options = {});

FigureRun run_figure(const FigureRecipe& recipe);

// Writes every grid CSV plus <id>.json into `dir`; returns the written paths.
// Throws std::ios_base::failure on I/O errors.
std::vector<std::string> write_figure(const FigureRun& run, const std::string& dir);

std::string sidecar_json(const FigureRun& run);

// Fraction-free helpers shared with the acceptance checks.
double max_negativity(const SweepGrid& g);
// cells where a.negativity > b.negativity beyond `slack`
size_t count_exceeding(const SweepGrid& a, const SweepGrid& b, double slack = 0.0);
double mean_abs_negativity_deviation(const SweepGrid& a, const SweepGrid& b);

}  // namespace udw
