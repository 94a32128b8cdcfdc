#include "morphevo/evolution.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace morphevo {

void EvolutionConfig::validate() const {
    if (population_size < 1) throw std::invalid_argument("population_size must be >= 1");
    if (offspring_per_gen < 1) throw std::invalid_argument("offspring_per_gen must be >= 1");
    if (generations < 1) throw std::invalid_argument("generations must be >= 1");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    learner.validate();
}

const Individual& binary_tournament(const std::vector<Individual>& population, Rng& rng) {
    if (population.empty()) throw std::invalid_argument("tournament over empty population");
    std::uniform_int_distribution<std::size_t> pick(0, population.size() - 1);
    const Individual& first = population[pick(rng)];
    const Individual& second = population[pick(rng)];
    return second.fitness > first.fitness ? second : first;
}

OffspringGenomes reproduce(const Individual& parent_a, const Individual& parent_b,
                           const EvolutionConfig& config, InnovationTracker& tracker, Rng& rng) {
    OffspringGenomes child;

    CppnGenome crossed = crossover_cppn(parent_a.body_genome, parent_b.body_genome,
                                        parent_a.fitness, parent_b.fitness, rng);
    child.body = mutate_cppn(crossed, rng, tracker, config.cppn_mutation);

    if (config.brain_mode == BrainMode::Sexual) {
        BrainGenotype recombined =
            uniform_crossover_brain(parent_a.brain_genotype, parent_b.brain_genotype, rng);
        child.brain = gaussian_mutate_brain(recombined, rng, config.brain_mutation);
    } else {
        const Individual& fitter = parent_b.fitness > parent_a.fitness ? parent_b : parent_a;
        child.brain = gaussian_mutate_brain(fitter.brain_genotype, rng, config.brain_mutation);
    }
    return child;
}

std::vector<Individual> survivor_selection(std::vector<Individual> current,
                                           std::vector<Individual> offspring,
                                           int population_size) {
    struct Ranked {
        Individual* ind;
        bool incumbent;
    };
    std::vector<Ranked> all;
    all.reserve(current.size() + offspring.size());
    for (auto& i : current) all.push_back({&i, true});
    for (auto& i : offspring) all.push_back({&i, false});

    std::sort(all.begin(), all.end(), [](const Ranked& a, const Ranked& b) {
        if (a.ind->fitness != b.ind->fitness) return a.ind->fitness > b.ind->fitness;
        if (a.incumbent != b.incumbent) return a.incumbent;
        return a.ind->id < b.ind->id;
    });

    std::vector<Individual> next;
    next.reserve(static_cast<std::size_t>(population_size));
    for (std::size_t r = 0; r < all.size() && next.size() < static_cast<std::size_t>(population_size); ++r)
        next.push_back(std::move(*all[r].ind));
    return next;
}

namespace {

// Learning and evaluation of a batch of fresh individuals. Each slot owns
// an rng derived from (seed, generation, slot), so results do not depend
// on the worker count or scheduling.
void learn_and_evaluate(std::vector<Individual>& batch, const EvolutionConfig& config,
                        const FitnessFn& evaluate, int generation, RunLog& log) {
    auto run_slot = [&](std::size_t slot) {
        Individual& ind = batch[slot];
        Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(generation), slot));
        auto assess = [&](const Body& body, const BrainGenotype& g) {
            return evaluate(body, g);
        };
        LearnResult lr = learn_brain(ind.body, ind.brain_genotype, assess, config.learner, rng);
        ind.learned_brain = std::move(lr.best);
        ind.assessments = lr.assessments;
        // the evolutionary evaluation of the learned brain (the fitness)
        ind.fitness = evaluate(ind.body, ind.learned_brain);
        for (const auto& h : lr.history)
            log.learning.push_back({ind.id, h.generation, h.best, h.mean, h.assessments});
    };

    const std::size_t n = batch.size();
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(config.workers), n);
    if (workers <= 1) {
        for (std::size_t s = 0; s < n; ++s) run_slot(s);
    } else {
        // slots are pre-partitioned; learning logs are appended in slot
        // order afterwards to keep files deterministic
        std::vector<RunLog> partial(n);
        std::vector<std::thread> pool;
        std::atomic<std::size_t> cursor{0};
        auto worker_fn = [&]() {
            for (;;) {
                std::size_t slot = cursor.fetch_add(1);
                if (slot >= n) return;
                Individual& ind = batch[slot];
                Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(generation), slot));
                auto assess = [&](const Body& body, const BrainGenotype& g) {
                    return evaluate(body, g);
                };
                LearnResult lr =
                    learn_brain(ind.body, ind.brain_genotype, assess, config.learner, rng);
                ind.learned_brain = std::move(lr.best);
                ind.assessments = lr.assessments;
                ind.fitness = evaluate(ind.body, ind.learned_brain);
                for (const auto& h : lr.history)
                    partial[slot].learning.push_back(
                        {ind.id, h.generation, h.best, h.mean, h.assessments});
            }
        };
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker_fn);
        for (auto& t : pool) t.join();
        for (auto& p : partial)
            for (auto& rec : p.learning) log.learning.push_back(rec);
    }
}

void finalize_individual(Individual& ind, const EvolutionConfig& config, RunLog& log,
                         int generation, EvolveObserver* observer) {
    if (config.inheritance == Inheritance::Lamarckian)
        ind.brain_genotype = ind.learned_brain; // learned traits become heritable

    log.total_evaluations += 1;
    log.total_assessments += ind.assessments;
    log.individuals.push_back({generation, ind.id, ind.parent_a, ind.parent_b, ind.fitness,
                               ind.assessments, ind.body.module_count(), ind.body.joint_count()});
    if (observer) observer->on_evaluated(ind);
}

GenerationStats summarize(int generation, const std::vector<Individual>& population,
                          const RunLog& log) {
    GenerationStats s;
    s.generation = generation;
    s.best = -std::numeric_limits<double>::infinity();
    s.worst = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (const auto& ind : population) {
        s.best = std::max(s.best, ind.fitness);
        s.worst = std::min(s.worst, ind.fitness);
        sum += ind.fitness;
    }
    s.mean = sum / static_cast<double>(population.size());
    s.evaluations_total = log.total_evaluations;
    s.assessments_total = log.total_assessments;
    return s;
}

} // namespace

EvolveResult evolve(const EvolutionConfig& config) {
    const TaskSpec task = config.task;
    const SurrogateParams sim = config.sim;
    const double euler_dt = config.euler_dt;
    return evolve(config, [task, sim, euler_dt](const Body& body, const BrainGenotype& g) {
        return evaluate_on_task(body, g, task, sim, euler_dt);
    });
}

EvolveResult evolve(const EvolutionConfig& config, const FitnessFn& evaluate,
                    EvolveObserver* observer) {
    config.validate();

    Rng master(config.seed);
    InnovationTracker tracker;
    RunLog log;
    long next_id = 1;

    // generation 1: random bodies and brains, learned before their first
    // evaluation
    std::vector<Individual> population;
    population.reserve(static_cast<std::size_t>(config.population_size));
    for (int i = 0; i < config.population_size; ++i) {
        Individual ind;
        ind.id = next_id++;
        ind.body_genome = random_cppn(master, tracker);
        ind.body = decode_body(ind.body_genome);
        ind.brain_genotype = BrainGenotype::random(master);
        ind.born_generation = 1;
        if (observer) observer->on_created(ind);
        population.push_back(std::move(ind));
    }

    learn_and_evaluate(population, config, evaluate, 1, log);
    for (auto& ind : population) finalize_individual(ind, config, log, 1, observer);

    log.generations.push_back(summarize(1, population, log));
    if (observer) observer->on_generation(1, log.generations.back(), population);

    for (int gen = 2; gen <= config.generations; ++gen) {
        std::vector<Individual> offspring;
        offspring.reserve(static_cast<std::size_t>(config.offspring_per_gen));
        for (int k = 0; k < config.offspring_per_gen; ++k) {
            const Individual& parent_a = binary_tournament(population, master);
            const Individual& parent_b = binary_tournament(population, master);
            OffspringGenomes genomes = reproduce(parent_a, parent_b, config, tracker, master);

            Individual child;
            child.id = next_id++;
            child.body_genome = std::move(genomes.body);
            child.body = decode_body(child.body_genome);
            child.brain_genotype = std::move(genomes.brain);
            child.parent_a = parent_a.id;
            child.parent_b = parent_b.id;
            child.born_generation = gen;
            if (observer) {
                observer->on_reproduced(parent_a, parent_b, child);
                observer->on_created(child);
            }
            offspring.push_back(std::move(child));
        }

        learn_and_evaluate(offspring, config, evaluate, gen, log);
        for (auto& ind : offspring) finalize_individual(ind, config, log, gen, observer);

        population = survivor_selection(std::move(population), std::move(offspring),
                                        config.population_size);

        log.generations.push_back(summarize(gen, population, log));
        if (observer) observer->on_generation(gen, log.generations.back(), population);
    }

    EvolveResult result;
    result.best = *std::max_element(population.begin(), population.end(),
                                    [](const Individual& a, const Individual& b) {
                                        return a.fitness < b.fitness;
                                    });
    result.final_population = std::move(population);
    result.log = std::move(log);
    return result;
}

const char* to_string(BrainMode m) {
    return m == BrainMode::Asexual ? "asexual" : "sexual";
}

const char* to_string(Inheritance i) {
    return i == Inheritance::Darwinian ? "darwinian" : "lamarckian";
}

const char* to_string(TaskKind t) {
    return t == TaskKind::PointNavigation ? "point_nav" : "rotation";
}

} // namespace morphevo
