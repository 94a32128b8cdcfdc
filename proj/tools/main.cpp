#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "morphevo/experiment.hpp"
#include "morphevo/plot.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitRuntimeError = 2;

struct CommonFlags {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<int> workers;
};

int do_run(const CommonFlags& flags) {
    morphevo::RunConfig config;
    try {
        if (flags.out.empty()) throw std::invalid_argument("--out is required");
        if (!flags.config.empty()) config = morphevo::load_run_config(flags.config);
        if (flags.seed) config.evo.seed = *flags.seed;
        if (flags.workers) config.evo.workers = *flags.workers;
        config.evo.validate();
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    }

    try {
        morphevo::RunSummary summary = morphevo::execute_run(config, flags.out);
        std::cout << "run complete: " << summary.dir.string() << '\n'
                  << "  cell:        " << config.cell_name() << '\n'
                  << "  seed:        " << config.evo.seed << '\n'
                  << "  evaluations: " << summary.evaluations << '\n'
                  << "  assessments: " << summary.assessments << '\n'
                  << "  best fitness " << summary.best_fitness << ", mean "
                  << summary.mean_fitness << '\n';
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "run failed: " << e.what() << '\n';
        return kExitRuntimeError;
    }
}

int do_grid(const CommonFlags& flags) {
    morphevo::GridConfig grid;
    try {
        if (flags.out.empty()) throw std::invalid_argument("--out is required");
        if (!flags.config.empty()) grid = morphevo::load_grid_config(flags.config);
        if (flags.seed) grid.base_seed = *flags.seed;
        if (flags.workers) grid.workers = *flags.workers;
        grid.validate();
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    }

    try {
        morphevo::GridSummary summary = morphevo::run_grid(grid, flags.out);
        std::cout << "grid complete: " << summary.dir.string() << '\n';
        for (const auto& cell : summary.cells)
            std::cout << "  " << cell.name << ": reps " << cell.repetitions << ", final best mean "
                      << cell.final_best_mean << ", max " << cell.final_best_max << '\n';
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "grid failed: " << e.what() << '\n';
        return kExitRuntimeError;
    }
}

int do_plot(const CommonFlags& flags) {
    try {
        morphevo::plot_tree(flags.out);
        std::cout << "plots refreshed under " << flags.out << '\n';
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "plot failed: " << e.what() << '\n';
        return kExitRuntimeError;
    }
}

int do_verify(const std::string& scratch, bool skip_smoke) {
    morphevo::accept::Options options;
    options.include_smoke = !skip_smoke;
    options.scratch_dir = scratch;
    try {
        auto results = morphevo::accept::run_all(options, std::cout);
        int passed = 0;
        for (const auto& r : results)
            if (r.passed) ++passed;
        std::cout << passed << "/" << results.size() << " criteria passed\n";
        return morphevo::accept::all_passed(results) ? kExitOk : kExitRuntimeError;
    } catch (const std::exception& e) {
        std::cerr << "verify failed: " << e.what() << '\n';
        return kExitRuntimeError;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"morphevo - joint evolution of modular robot bodies and learning brains"};
    app.require_subcommand(1);

    CommonFlags run_flags, grid_flags, plot_flags;

    auto* run = app.add_subcommand("run", "execute one evolutionary run");
    run->add_option("--config", run_flags.config, "run config JSON (defaults when omitted)");
    run->add_option("--out", run_flags.out, "output directory");
    run->add_option("--seed", run_flags.seed, "override the run seed");
    run->add_option("--workers", run_flags.workers, "parallel learning workers");

    auto* grid = app.add_subcommand("grid", "execute a full experiment grid");
    grid->add_option("--config", grid_flags.config, "grid config JSON (defaults when omitted)");
    grid->add_option("--out", grid_flags.out, "output directory");
    grid->add_option("--seed", grid_flags.seed, "override the base seed");
    grid->add_option("--workers", grid_flags.workers, "parallel run workers");

    auto* plot = app.add_subcommand("plot", "re-render plots from CSV artifacts");
    plot->add_option("--out", plot_flags.out, "directory holding run artifacts")->required();

    std::string verify_scratch;
    bool skip_smoke = false;
    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    verify->add_option("--out", verify_scratch, "scratch directory for the checks");
    verify->add_flag("--skip-smoke", skip_smoke, "skip the desk-scale grid smoke check");

    bool print_config = false, print_grid_config = false;
    run->add_flag("--print-config", print_config, "print the default run config and exit");
    grid->add_flag("--print-config", print_grid_config,
                   "print the default grid config and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    if (run->parsed()) {
        if (print_config) {
            std::cout << morphevo::default_run_config_json() << '\n';
            return kExitOk;
        }
        return do_run(run_flags);
    }
    if (grid->parsed()) {
        if (print_grid_config) {
            std::cout << morphevo::default_grid_config_json() << '\n';
            return kExitOk;
        }
        return do_grid(grid_flags);
    }
    if (plot->parsed()) return do_plot(plot_flags);
    if (verify->parsed()) return do_verify(verify_scratch, skip_smoke);
    return kExitConfigError;
}
