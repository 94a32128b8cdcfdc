#pragma once

#include <filesystem>

namespace morphevo {

// SVG renderings derived purely from the CSV artifacts, so everything can
// be re-plotted without re-simulation.

// fitness.svg, trajectory.svg and body.svg for one run directory.
void plot_run(const std::filesystem::path& run_dir);

// fitness_mean.svg (mean with a 95% CI band over repetitions),
// boxplot_final.svg and trajectories.svg for one cell directory.
void plot_cell(const std::filesystem::path& cell_dir);

// Brain-mode comparison curves per task/inheritance pair for a grid
// directory.
void plot_grid(const std::filesystem::path& grid_dir);

// Dispatches on what the directory contains (run, cell or grid) and
// re-renders everything below it.
void plot_tree(const std::filesystem::path& dir);

} // namespace morphevo
