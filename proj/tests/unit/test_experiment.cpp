#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "morphevo/csv.hpp"
#include "morphevo/experiment.hpp"
#include "morphevo/plot.hpp"

using namespace morphevo;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "morphevo-tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

RunConfig desk_run() {
    RunConfig cfg;
    cfg.evo.population_size = 4;
    cfg.evo.offspring_per_gen = 2;
    cfg.evo.generations = 3;
    cfg.evo.learner.mu = 4;
    cfg.evo.learner.generations = 2;
    cfg.evo.task.kind = TaskKind::Rotation;
    cfg.evo.task.rotation.duration = 6.0;
    cfg.evo.seed = 11;
    return cfg;
}

} // namespace

TEST_CASE("default configs parse and round-trip") {
    RunConfig run = parse_run_config(default_run_config_json());
    CHECK(run.evo.population_size == 50);
    CHECK(run.evo.offspring_per_gen == 25);
    CHECK(run.evo.generations == 30);
    CHECK(run.evo.learner.mu == 10);
    CHECK(run.evo.learner.generations == 10);
    CHECK(run.evo.learner.F == 0.5);
    CHECK(run.evo.learner.CR == 0.9);
    CHECK(run.evo.task.point_nav.omega == 0.1);
    CHECK(run.evo.task.point_nav.reach_radius == 0.01);
    CHECK(run.evo.task.point_nav.duration == 40.0);
    CHECK(run.evo.task.rotation.duration == 30.0);
    CHECK(run.evo.sim.sample_rate_hz == 5.0);
    REQUIRE(run.evo.task.point_nav.targets.size() == 2);
    CHECK(run.evo.task.point_nav.targets[0].x == 1.0);
    CHECK(run.evo.task.point_nav.targets[0].y == -1.0);
    CHECK(run.evo.task.point_nav.targets[1].x == 0.0);
    CHECK(run.evo.task.point_nav.targets[1].y == -2.0);

    GridConfig grid = parse_grid_config(default_grid_config_json());
    CHECK(grid.repetitions == 10);
    CHECK(grid.tasks.size() == 2);
    CHECK(grid.brain_modes.size() == 2);
    CHECK(grid.inheritances.size() == 2);
}

TEST_CASE("malformed configs are rejected with clear errors") {
    CHECK_THROWS(parse_run_config("{not json"));
    CHECK_THROWS_AS(parse_run_config(R"({"schema":"wrong/v9"})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_run_config(
                        R"({"schema":"morphevo/config/v1","task":"flying"})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_run_config(
                        R"({"schema":"morphevo/config/v1","typo_key":1})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_run_config(
                        R"({"schema":"morphevo/config/v1","learner":{"mu":2}})"),
                    std::invalid_argument);
}

TEST_CASE("cell names enumerate the three axes") {
    RunConfig cfg;
    cfg.evo.task.kind = TaskKind::Rotation;
    cfg.evo.brain_mode = BrainMode::Sexual;
    cfg.evo.inheritance = Inheritance::Darwinian;
    CHECK(cfg.cell_name() == "rotation_sexual_darwinian");
}

TEST_CASE("execute_run writes the documented artifact set") {
    const fs::path dir = fresh_dir("single_run");
    RunConfig cfg = desk_run();
    cfg.checkpoint_interval = 2;
    RunSummary summary = execute_run(cfg, dir);

    for (const char* file :
         {"run_config.json", "runlog.csv", "generations.csv", "learning.csv",
          "best_trajectory.csv", "best_body.json", "best_brain.txt", "fitness.svg",
          "trajectory.svg", "body.svg", "checkpoint_gen002.json"})
        CHECK_MESSAGE(fs::exists(dir / file), file);

    CHECK(summary.evaluations == 4 + 2 * 2);
    CHECK(summary.assessments == summary.evaluations * (4 + 3 * 4));

    CsvTable runlog = read_csv_file((dir / "runlog.csv").string(), "morphevo/runlog/v1");
    CHECK(runlog.rows.size() == 8);
    CsvTable gens = read_csv_file((dir / "generations.csv").string(),
                                  "morphevo/generations/v1");
    CHECK(gens.rows.size() == 3);

    // completed runs are never overwritten
    CHECK_THROWS_AS(execute_run(cfg, dir), std::runtime_error);
}

TEST_CASE("a small grid produces cells, aggregates and plots") {
    const fs::path dir = fresh_dir("grid");
    GridConfig grid;
    grid.tasks = {TaskKind::Rotation};
    grid.brain_modes = {BrainMode::Asexual, BrainMode::Sexual};
    grid.inheritances = {Inheritance::Lamarckian};
    grid.repetitions = 2;
    grid.base_seed = 5;
    grid.base = desk_run();

    GridSummary summary = run_grid(grid, dir);
    REQUIRE(summary.cells.size() == 2);
    CHECK(summary.cells[0].name == "rotation_asexual_lamarckian");
    CHECK(summary.cells[1].name == "rotation_sexual_lamarckian");

    for (const auto& cell : summary.cells) {
        CHECK(cell.repetitions == 2);
        CHECK(fs::exists(cell.dir / "rep_00" / "runlog.csv"));
        CHECK(fs::exists(cell.dir / "rep_01" / "runlog.csv"));
        CHECK(fs::exists(cell.dir / "aggregate.csv"));
        CHECK(fs::exists(cell.dir / "fitness_mean.svg"));
        CHECK(fs::exists(cell.dir / "boxplot_final.svg"));
        CHECK(fs::exists(cell.dir / "trajectories.svg"));
    }
    CHECK(fs::exists(dir / "grid_config.json"));
    CHECK(fs::exists(dir / "summary.csv"));
    CHECK(fs::exists(dir / "compare_rotation_lamarckian.svg"));

    // run seeds follow base + cell * reps + rep
    auto seed_of = [](const fs::path& run_dir) {
        std::ifstream in(run_dir / "run_config.json");
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        const auto pos = text.find("\"seed\"");
        return text.substr(pos, text.find_first_of(",\n", pos) - pos);
    };
    CHECK(seed_of(summary.cells[0].dir / "rep_00") == "\"seed\": 5");
    CHECK(seed_of(summary.cells[0].dir / "rep_01") == "\"seed\": 6");
    CHECK(seed_of(summary.cells[1].dir / "rep_00") == "\"seed\": 7");

    // plots are derived from the CSVs alone: wipe and re-render
    fs::remove(summary.cells[0].dir / "fitness_mean.svg");
    fs::remove(summary.cells[0].dir / "rep_00" / "fitness.svg");
    plot_tree(dir);
    CHECK(fs::exists(summary.cells[0].dir / "fitness_mean.svg"));
    CHECK(fs::exists(summary.cells[0].dir / "rep_00" / "fitness.svg"));
}

TEST_CASE("csv formatting round-trips doubles exactly") {
    for (double v : {0.1, -2.54, 1.0 / 3.0, 1e-17, 123456.789}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}
