#include "morphevo/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "morphevo/csv.hpp"
#include "morphevo/plot.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace morphevo {

namespace {

TaskKind task_from_name(const std::string& s) {
    if (s == "point_nav") return TaskKind::PointNavigation;
    if (s == "rotation") return TaskKind::Rotation;
    throw std::invalid_argument("unknown task: " + s);
}

BrainMode brain_mode_from_name(const std::string& s) {
    if (s == "asexual") return BrainMode::Asexual;
    if (s == "sexual") return BrainMode::Sexual;
    throw std::invalid_argument("unknown brain mode: " + s);
}

Inheritance inheritance_from_name(const std::string& s) {
    if (s == "darwinian") return Inheritance::Darwinian;
    if (s == "lamarckian") return Inheritance::Lamarckian;
    throw std::invalid_argument("unknown inheritance: " + s);
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok) throw std::invalid_argument("unknown config key '" + it.key() + "' in " + where);
    }
}

void apply_learner(const json& j, LearnerConfig& cfg) {
    reject_unknown_keys(j, {"mu", "generations", "F", "CR", "init_sigma"}, "learner");
    cfg.mu = j.value("mu", cfg.mu);
    cfg.generations = j.value("generations", cfg.generations);
    cfg.F = j.value("F", cfg.F);
    cfg.CR = j.value("CR", cfg.CR);
    cfg.init_sigma = j.value("init_sigma", cfg.init_sigma);
}

void apply_point_nav(const json& j, PointNavTask& task) {
    reject_unknown_keys(j, {"targets", "reach_radius", "omega", "duration", "steering_gain"},
                        "point_nav");
    if (j.contains("targets")) {
        task.targets.clear();
        for (const auto& t : j.at("targets")) {
            if (!t.is_array() || t.size() != 2)
                throw std::invalid_argument("each target must be an [x, y] pair");
            task.targets.push_back({t[0].get<double>(), t[1].get<double>()});
        }
        if (task.targets.empty()) throw std::invalid_argument("point_nav needs >= 1 target");
    }
    task.reach_radius = j.value("reach_radius", task.reach_radius);
    task.omega = j.value("omega", task.omega);
    task.duration = j.value("duration", task.duration);
    task.steering_gain = j.value("steering_gain", task.steering_gain);
}

void apply_sim(const json& j, SurrogateParams& sim, double& euler_dt) {
    reject_unknown_keys(j, {"control_dt", "sample_rate_hz", "thrust_coeff", "turn_coeff",
                            "euler_dt"},
                        "sim");
    sim.control_dt = j.value("control_dt", sim.control_dt);
    sim.sample_rate_hz = j.value("sample_rate_hz", sim.sample_rate_hz);
    sim.thrust_coeff = j.value("thrust_coeff", sim.thrust_coeff);
    sim.turn_coeff = j.value("turn_coeff", sim.turn_coeff);
    euler_dt = j.value("euler_dt", euler_dt);
}

void apply_cppn_mutation(const json& j, CppnMutationParams& m) {
    reject_unknown_keys(j,
                        {"weight_perturb_prob", "weight_sigma", "weight_reset_prob",
                         "add_connection_prob", "add_node_prob"},
                        "cppn_mutation");
    m.weight_perturb_prob = j.value("weight_perturb_prob", m.weight_perturb_prob);
    m.weight_sigma = j.value("weight_sigma", m.weight_sigma);
    m.weight_reset_prob = j.value("weight_reset_prob", m.weight_reset_prob);
    m.add_connection_prob = j.value("add_connection_prob", m.add_connection_prob);
    m.add_node_prob = j.value("add_node_prob", m.add_node_prob);
}

void apply_brain_mutation(const json& j, BrainMutationParams& m) {
    reject_unknown_keys(j, {"prob", "sigma"}, "brain_mutation");
    m.prob = j.value("prob", m.prob);
    m.sigma = j.value("sigma", m.sigma);
}

constexpr std::initializer_list<const char*> kCommonKeys = {
    "schema",        "population_size", "offspring_per_gen", "generations",
    "workers",       "checkpoint_interval", "learner",       "point_nav",
    "rotation",      "sim",             "cppn_mutation",     "brain_mutation"};

void apply_common(const json& j, RunConfig& cfg) {
    cfg.evo.population_size = j.value("population_size", cfg.evo.population_size);
    cfg.evo.offspring_per_gen = j.value("offspring_per_gen", cfg.evo.offspring_per_gen);
    cfg.evo.generations = j.value("generations", cfg.evo.generations);
    cfg.evo.workers = j.value("workers", cfg.evo.workers);
    cfg.checkpoint_interval = j.value("checkpoint_interval", cfg.checkpoint_interval);
    if (j.contains("learner")) apply_learner(j.at("learner"), cfg.evo.learner);
    if (j.contains("point_nav")) apply_point_nav(j.at("point_nav"), cfg.evo.task.point_nav);
    if (j.contains("rotation")) {
        reject_unknown_keys(j.at("rotation"), {"duration"}, "rotation");
        cfg.evo.task.rotation.duration =
            j.at("rotation").value("duration", cfg.evo.task.rotation.duration);
    }
    if (j.contains("sim")) apply_sim(j.at("sim"), cfg.evo.sim, cfg.evo.euler_dt);
    if (j.contains("cppn_mutation")) apply_cppn_mutation(j.at("cppn_mutation"), cfg.evo.cppn_mutation);
    if (j.contains("brain_mutation"))
        apply_brain_mutation(j.at("brain_mutation"), cfg.evo.brain_mutation);
}

json common_to_json(const RunConfig& cfg) {
    json j;
    j["population_size"] = cfg.evo.population_size;
    j["offspring_per_gen"] = cfg.evo.offspring_per_gen;
    j["generations"] = cfg.evo.generations;
    j["workers"] = cfg.evo.workers;
    j["checkpoint_interval"] = cfg.checkpoint_interval;
    j["learner"] = {{"mu", cfg.evo.learner.mu},
                    {"generations", cfg.evo.learner.generations},
                    {"F", cfg.evo.learner.F},
                    {"CR", cfg.evo.learner.CR},
                    {"init_sigma", cfg.evo.learner.init_sigma}};
    json targets = json::array();
    for (const auto& t : cfg.evo.task.point_nav.targets) targets.push_back({t.x, t.y});
    j["point_nav"] = {{"targets", targets},
                      {"reach_radius", cfg.evo.task.point_nav.reach_radius},
                      {"omega", cfg.evo.task.point_nav.omega},
                      {"duration", cfg.evo.task.point_nav.duration},
                      {"steering_gain", cfg.evo.task.point_nav.steering_gain}};
    j["rotation"] = {{"duration", cfg.evo.task.rotation.duration}};
    j["sim"] = {{"control_dt", cfg.evo.sim.control_dt},
                {"sample_rate_hz", cfg.evo.sim.sample_rate_hz},
                {"thrust_coeff", cfg.evo.sim.thrust_coeff},
                {"turn_coeff", cfg.evo.sim.turn_coeff},
                {"euler_dt", cfg.evo.euler_dt}};
    j["cppn_mutation"] = {{"weight_perturb_prob", cfg.evo.cppn_mutation.weight_perturb_prob},
                          {"weight_sigma", cfg.evo.cppn_mutation.weight_sigma},
                          {"weight_reset_prob", cfg.evo.cppn_mutation.weight_reset_prob},
                          {"add_connection_prob", cfg.evo.cppn_mutation.add_connection_prob},
                          {"add_node_prob", cfg.evo.cppn_mutation.add_node_prob}};
    j["brain_mutation"] = {{"prob", cfg.evo.brain_mutation.prob},
                           {"sigma", cfg.evo.brain_mutation.sigma}};
    return j;
}

} // namespace

std::string RunConfig::cell_name() const {
    std::string name = to_string(evo.task.kind);
    name += "_";
    name += to_string(evo.brain_mode);
    name += "_";
    name += to_string(evo.inheritance);
    return name;
}

void GridConfig::validate() const {
    if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
    if (tasks.empty() || brain_modes.empty() || inheritances.empty())
        throw std::invalid_argument("grid axes must be non-empty");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    base.evo.validate();
}

RunConfig parse_run_config(const std::string& json_text) {
    json j = json::parse(json_text);
    if (j.value("schema", "") != "morphevo/config/v1")
        throw std::invalid_argument("expected schema morphevo/config/v1");

    std::vector<const char*> known{kCommonKeys};
    known.insert(known.end(), {"task", "brain_mode", "inheritance", "seed"});
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok) throw std::invalid_argument("unknown config key '" + it.key() + "'");
    }

    RunConfig cfg;
    apply_common(j, cfg);
    cfg.evo.task.kind = task_from_name(j.value("task", "point_nav"));
    cfg.evo.brain_mode = brain_mode_from_name(j.value("brain_mode", "asexual"));
    cfg.evo.inheritance = inheritance_from_name(j.value("inheritance", "lamarckian"));
    cfg.evo.seed = j.value("seed", cfg.evo.seed);
    cfg.evo.validate();
    return cfg;
}

GridConfig parse_grid_config(const std::string& json_text) {
    json j = json::parse(json_text);
    if (j.value("schema", "") != "morphevo/grid-config/v1")
        throw std::invalid_argument("expected schema morphevo/grid-config/v1");

    std::vector<const char*> known{kCommonKeys};
    known.insert(known.end(), {"tasks", "brain_modes", "inheritances", "repetitions",
                               "base_seed", "grid_workers"});
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok) throw std::invalid_argument("unknown grid config key '" + it.key() + "'");
    }

    GridConfig grid;
    apply_common(j, grid.base);
    if (j.contains("tasks")) {
        grid.tasks.clear();
        for (const auto& t : j.at("tasks")) grid.tasks.push_back(task_from_name(t));
    }
    if (j.contains("brain_modes")) {
        grid.brain_modes.clear();
        for (const auto& m : j.at("brain_modes"))
            grid.brain_modes.push_back(brain_mode_from_name(m));
    }
    if (j.contains("inheritances")) {
        grid.inheritances.clear();
        for (const auto& i : j.at("inheritances"))
            grid.inheritances.push_back(inheritance_from_name(i));
    }
    grid.repetitions = j.value("repetitions", grid.repetitions);
    grid.base_seed = j.value("base_seed", grid.base_seed);
    grid.workers = j.value("grid_workers", grid.workers);
    grid.validate();
    return grid;
}

namespace {

std::string slurp(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open config file: " + file.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

} // namespace

RunConfig load_run_config(const fs::path& file) { return parse_run_config(slurp(file)); }
GridConfig load_grid_config(const fs::path& file) { return parse_grid_config(slurp(file)); }

std::string run_config_to_json(const RunConfig& cfg) {
    json j = common_to_json(cfg);
    j["schema"] = "morphevo/config/v1";
    j["task"] = to_string(cfg.evo.task.kind);
    j["brain_mode"] = to_string(cfg.evo.brain_mode);
    j["inheritance"] = to_string(cfg.evo.inheritance);
    j["seed"] = cfg.evo.seed;
    return j.dump(2);
}

std::string default_run_config_json() { return run_config_to_json(RunConfig{}); }

std::string default_grid_config_json() {
    GridConfig grid;
    json j = common_to_json(grid.base);
    j["schema"] = "morphevo/grid-config/v1";
    j["tasks"] = {"point_nav", "rotation"};
    j["brain_modes"] = {"asexual", "sexual"};
    j["inheritances"] = {"darwinian", "lamarckian"};
    j["repetitions"] = grid.repetitions;
    j["base_seed"] = grid.base_seed;
    j["grid_workers"] = grid.workers;
    return j.dump(2);
}

void write_runlog_csv(const RunLog& log, std::ostream& out) {
    out << "# schema: morphevo/runlog/v1\n";
    out << "generation,individual_id,parent_a,parent_b,fitness,assessments,modules,joints\n";
    for (const auto& r : log.individuals)
        write_csv_row(out, {std::to_string(r.generation), std::to_string(r.id),
                            std::to_string(r.parent_a), std::to_string(r.parent_b),
                            format_double(r.fitness), std::to_string(r.assessments),
                            std::to_string(r.modules), std::to_string(r.joints)});
}

void write_generations_csv(const RunLog& log, std::ostream& out) {
    out << "# schema: morphevo/generations/v1\n";
    out << "generation,best_fitness,mean_fitness,min_fitness,evaluations_total,assessments_total\n";
    for (const auto& g : log.generations)
        write_csv_row(out, {std::to_string(g.generation), format_double(g.best),
                            format_double(g.mean), format_double(g.worst),
                            std::to_string(g.evaluations_total),
                            std::to_string(g.assessments_total)});
}

void write_learning_csv(const RunLog& log, std::ostream& out) {
    out << "# schema: morphevo/learning/v1\n";
    out << "individual_id,learn_generation,best_performance,mean_performance,assessments_used\n";
    for (const auto& r : log.learning)
        write_csv_row(out, {std::to_string(r.individual_id), std::to_string(r.learn_generation),
                            format_double(r.best), format_double(r.mean),
                            std::to_string(r.assessments)});
}

namespace {

// writes population checkpoints every N generations
class CheckpointObserver : public EvolveObserver {
public:
    CheckpointObserver(fs::path dir, int interval, Inheritance inheritance)
        : dir_(std::move(dir)), interval_(interval), inheritance_(inheritance) {}

    void on_generation(int generation, const GenerationStats&,
                       const std::vector<Individual>& population) override {
        if (interval_ <= 0 || generation % interval_ != 0) return;
        json j;
        j["schema"] = "morphevo/checkpoint/v1";
        j["generation"] = generation;
        j["inheritance"] = to_string(inheritance_);
        j["individuals"] = json::array();
        for (const auto& ind : population) {
            json ji;
            ji["id"] = ind.id;
            ji["fitness"] = ind.fitness;
            ji["body_genome"] = json::parse(genome_to_json(ind.body_genome));
            ji["brain_genotype"] = ind.brain_genotype.values();
            ji["learned_brain"] = ind.learned_brain.values();
            j["individuals"].push_back(std::move(ji));
        }
        char name[48];
        std::snprintf(name, sizeof(name), "checkpoint_gen%03d.json", generation);
        std::ofstream out(dir_ / name);
        out << j.dump();
        out << '\n';
    }

private:
    fs::path dir_;
    int interval_;
    Inheritance inheritance_;
};

} // namespace

RunSummary execute_run(const RunConfig& config, const fs::path& out_dir) {
    config.evo.validate();
    fs::create_directories(out_dir);
    if (fs::exists(out_dir / "runlog.csv"))
        throw std::runtime_error("refusing to overwrite completed run in " + out_dir.string());

    {
        std::ofstream cfg_out(out_dir / "run_config.json");
        if (!cfg_out) throw std::runtime_error("output directory not writable: " + out_dir.string());
        cfg_out << run_config_to_json(config) << '\n';
    }

    CheckpointObserver checkpoints(out_dir, config.checkpoint_interval, config.evo.inheritance);
    const TaskSpec task = config.evo.task;
    const SurrogateParams sim = config.evo.sim;
    const double euler_dt = config.evo.euler_dt;
    EvolveResult result = evolve(
        config.evo,
        [&](const Body& body, const BrainGenotype& g) {
            return evaluate_on_task(body, g, task, sim, euler_dt);
        },
        &checkpoints);

    {
        std::ofstream out(out_dir / "runlog.csv");
        write_runlog_csv(result.log, out);
    }
    {
        std::ofstream out(out_dir / "generations.csv");
        write_generations_csv(result.log, out);
    }
    {
        std::ofstream out(out_dir / "learning.csv");
        write_learning_csv(result.log, out);
    }
    {
        std::ofstream out(out_dir / "best_body.json");
        out << body_to_json(result.best.body) << '\n';
    }
    {
        std::ofstream out(out_dir / "best_brain.txt");
        save_brain_genotype(result.best.learned_brain, out);
    }
    {
        Trajectory traj = simulate_task(result.best.body, result.best.learned_brain, task, sim,
                                        euler_dt);
        std::ofstream out(out_dir / "best_trajectory.csv");
        write_trajectory_csv(traj, out);
    }
    plot_run(out_dir);

    RunSummary summary;
    summary.dir = out_dir;
    summary.best_fitness = result.log.generations.back().best;
    summary.mean_fitness = result.log.generations.back().mean;
    summary.evaluations = result.log.total_evaluations;
    summary.assessments = result.log.total_assessments;
    return summary;
}

namespace {

std::string rep_dir_name(int rep) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "rep_%02d", rep);
    return buf;
}

} // namespace

void aggregate_cell(const fs::path& cell_dir) {
    // collect per-generation best/mean across every repetition
    std::vector<CsvTable> tables;
    std::vector<fs::path> reps;
    for (const auto& entry : fs::directory_iterator(cell_dir))
        if (entry.is_directory() && entry.path().filename().string().rfind("rep_", 0) == 0)
            reps.push_back(entry.path());
    std::sort(reps.begin(), reps.end());
    for (const auto& rep : reps)
        if (fs::exists(rep / "generations.csv"))
            tables.push_back(read_csv_file((rep / "generations.csv").string(),
                                           "morphevo/generations/v1"));
    if (tables.empty()) return;

    const std::size_t generations = tables.front().rows.size();
    std::ofstream out(cell_dir / "aggregate.csv");
    out << "# schema: morphevo/aggregate/v1\n";
    out << "generation,mean_best,se_best,mean_of_mean,se_mean,reps\n";
    const int best_col = tables.front().column("best_fitness");
    const int mean_col = tables.front().column("mean_fitness");
    for (std::size_t g = 0; g < generations; ++g) {
        std::vector<double> bests, means;
        for (const auto& t : tables) {
            if (g >= t.rows.size()) continue;
            bests.push_back(std::stod(t.rows[g][static_cast<std::size_t>(best_col)]));
            means.push_back(std::stod(t.rows[g][static_cast<std::size_t>(mean_col)]));
        }
        auto mean_of = [](const std::vector<double>& v) {
            double s = 0;
            for (double x : v) s += x;
            return s / static_cast<double>(v.size());
        };
        auto se_of = [&](const std::vector<double>& v, double m) {
            if (v.size() < 2) return 0.0;
            double ss = 0;
            for (double x : v) ss += (x - m) * (x - m);
            return std::sqrt(ss / static_cast<double>(v.size() - 1)) /
                   std::sqrt(static_cast<double>(v.size()));
        };
        const double mb = mean_of(bests), mm = mean_of(means);
        write_csv_row(out, {std::to_string(g + 1), format_double(mb),
                            format_double(se_of(bests, mb)), format_double(mm),
                            format_double(se_of(means, mm)), std::to_string(bests.size())});
    }
}

GridSummary run_grid(const GridConfig& grid, const fs::path& out_dir) {
    grid.validate();
    fs::create_directories(out_dir);
    {
        std::ofstream cfg_out(out_dir / "grid_config.json");
        if (!cfg_out) throw std::runtime_error("output directory not writable: " + out_dir.string());
        // echo the effective grid, not the defaults
        json j;
        json tasks = json::array(), modes = json::array(), inhs = json::array();
        for (auto t : grid.tasks) tasks.push_back(to_string(t));
        for (auto m : grid.brain_modes) modes.push_back(to_string(m));
        for (auto i : grid.inheritances) inhs.push_back(to_string(i));
        j["tasks"] = tasks;
        j["brain_modes"] = modes;
        j["inheritances"] = inhs;
        j["repetitions"] = grid.repetitions;
        j["base_seed"] = grid.base_seed;
        j["grid_workers"] = grid.workers;
        json common = common_to_json(grid.base);
        for (auto it = common.begin(); it != common.end(); ++it) j[it.key()] = it.value();
        j["schema"] = "morphevo/grid-config/v1";
        cfg_out << j.dump(2) << '\n';
    }

    // deterministic cell enumeration: tasks x brain modes x inheritances
    struct Job {
        RunConfig config;
        fs::path dir;
        std::string cell;
    };
    std::vector<Job> jobs;
    std::vector<std::string> cell_order;
    int cell_index = 0;
    for (TaskKind task : grid.tasks) {
        for (BrainMode mode : grid.brain_modes) {
            for (Inheritance inh : grid.inheritances) {
                RunConfig cfg = grid.base;
                cfg.evo.task.kind = task;
                cfg.evo.brain_mode = mode;
                cfg.evo.inheritance = inh;
                const std::string cell = cfg.cell_name();
                cell_order.push_back(cell);
                for (int rep = 0; rep < grid.repetitions; ++rep) {
                    cfg.evo.seed = grid.base_seed +
                                   static_cast<std::uint64_t>(cell_index) *
                                       static_cast<std::uint64_t>(grid.repetitions) +
                                   static_cast<std::uint64_t>(rep);
                    jobs.push_back({cfg, out_dir / cell / rep_dir_name(rep), cell});
                }
                ++cell_index;
            }
        }
    }

    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(grid.workers), jobs.size());
    if (workers <= 1) {
        for (const auto& job : jobs) execute_run(job.config, job.dir);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(jobs.size());
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                for (;;) {
                    std::size_t idx = cursor.fetch_add(1);
                    if (idx >= jobs.size()) return;
                    try {
                        RunConfig cfg = jobs[idx].config;
                        cfg.evo.workers = 1; // grid-level parallelism only
                        execute_run(cfg, jobs[idx].dir);
                    } catch (...) {
                        errors[idx] = std::current_exception();
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    GridSummary summary;
    summary.dir = out_dir;
    for (const auto& cell : cell_order) {
        const fs::path cell_dir = out_dir / cell;
        aggregate_cell(cell_dir);
        plot_cell(cell_dir);

        CellSummary cs;
        cs.name = cell;
        cs.dir = cell_dir;
        double best_sum = 0.0, mean_sum = 0.0, best_max = -1e300;
        int reps = 0;
        for (int rep = 0; rep < grid.repetitions; ++rep) {
            const fs::path gen_file = cell_dir / rep_dir_name(rep) / "generations.csv";
            if (!fs::exists(gen_file)) continue;
            CsvTable t = read_csv_file(gen_file.string(), "morphevo/generations/v1");
            if (t.rows.empty()) continue;
            const auto& last = t.rows.back();
            const double best = std::stod(last[static_cast<std::size_t>(t.column("best_fitness"))]);
            const double mean = std::stod(last[static_cast<std::size_t>(t.column("mean_fitness"))]);
            best_sum += best;
            mean_sum += mean;
            best_max = std::max(best_max, best);
            ++reps;
        }
        cs.repetitions = reps;
        if (reps > 0) {
            cs.final_best_mean = best_sum / reps;
            cs.final_best_max = best_max;
            cs.final_mean_mean = mean_sum / reps;
        }
        summary.cells.push_back(std::move(cs));
    }

    plot_grid(out_dir);
    {
        std::ofstream out(out_dir / "summary.csv");
        write_grid_summary_csv(summary, out);
    }
    return summary;
}

void write_grid_summary_csv(const GridSummary& summary, std::ostream& out) {
    out << "# schema: morphevo/grid-summary/v1\n";
    out << "cell,repetitions,final_best_mean,final_best_max,final_mean_mean\n";
    for (const auto& c : summary.cells)
        write_csv_row(out, {c.name, std::to_string(c.repetitions),
                            format_double(c.final_best_mean), format_double(c.final_best_max),
                            format_double(c.final_mean_mean)});
}

} // namespace morphevo
