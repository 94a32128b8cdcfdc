#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "morphevo/evolution.hpp"

namespace morphevo {

// One cell execution: an evolution config plus artifact settings.
struct RunConfig {
    EvolutionConfig evo;
    int checkpoint_interval = 0; // generations between checkpoints, 0 = off

    std::string cell_name() const; // e.g. "point_nav_asexual_lamarckian"
};

struct GridConfig {
    std::vector<TaskKind> tasks = {TaskKind::PointNavigation, TaskKind::Rotation};
    std::vector<BrainMode> brain_modes = {BrainMode::Asexual, BrainMode::Sexual};
    std::vector<Inheritance> inheritances = {Inheritance::Darwinian, Inheritance::Lamarckian};
    int repetitions = 10;
    std::uint64_t base_seed = 1;
    int workers = 1;
    RunConfig base; // sizes, learner, task parameters shared by every cell

    void validate() const;
};

// JSON configs, schemas "morphevo/config/v1" and "morphevo/grid-config/v1".
// Absent keys keep their defaults; unknown keys are rejected.
RunConfig parse_run_config(const std::string& json_text);
GridConfig parse_grid_config(const std::string& json_text);
RunConfig load_run_config(const std::filesystem::path& file);
GridConfig load_grid_config(const std::filesystem::path& file);
std::string default_run_config_json();
std::string default_grid_config_json();
std::string run_config_to_json(const RunConfig& config);

struct RunSummary {
    std::filesystem::path dir;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    long evaluations = 0;
    long assessments = 0;
};

// Executes one run and writes its artifacts (runlog.csv, generations.csv,
// learning.csv, best_* files, checkpoints, plots) into out_dir. Completed
// run directories are never rewritten: an existing runlog.csv is an error.
RunSummary execute_run(const RunConfig& config, const std::filesystem::path& out_dir);

struct CellSummary {
    std::string name;
    std::filesystem::path dir;
    int repetitions = 0;
    double final_best_mean = 0.0;
    double final_best_max = 0.0;
    double final_mean_mean = 0.0;
};

struct GridSummary {
    std::filesystem::path dir;
    std::vector<CellSummary> cells;
};

// Runs every cell x repetition with seed base_seed + cell_index *
// repetitions + repetition_index, then aggregates and plots each cell.
GridSummary run_grid(const GridConfig& grid, const std::filesystem::path& out_dir);

// Recomputes a cell's aggregate.csv from its rep_*/generations.csv files.
void aggregate_cell(const std::filesystem::path& cell_dir);

void write_runlog_csv(const RunLog& log, std::ostream& out);
void write_generations_csv(const RunLog& log, std::ostream& out);
void write_learning_csv(const RunLog& log, std::ostream& out);
void write_grid_summary_csv(const GridSummary& summary, std::ostream& out);

} // namespace morphevo
