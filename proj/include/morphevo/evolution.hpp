#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "morphevo/learner.hpp"
#include "morphevo/tasks.hpp"

namespace morphevo {

enum class BrainMode { Asexual, Sexual };
enum class Inheritance { Darwinian, Lamarckian };

struct Individual {
    long id = 0;
    CppnGenome body_genome;
    Body body = Body::core_only();
    BrainGenotype brain_genotype; // inheritable
    BrainGenotype learned_brain;  // used for evaluation
    double fitness = std::numeric_limits<double>::quiet_NaN();
    long parent_a = -1;
    long parent_b = -1;
    long assessments = 0;
    int born_generation = 1;
};

struct EvolutionConfig {
    int population_size = 50;
    int offspring_per_gen = 25;
    int generations = 30; // the initial population counts as generation 1
    BrainMode brain_mode = BrainMode::Asexual;
    Inheritance inheritance = Inheritance::Lamarckian;
    TaskSpec task;
    LearnerConfig learner;
    CppnMutationParams cppn_mutation;
    BrainMutationParams brain_mutation;
    SurrogateParams sim;
    double euler_dt = 0.001;
    std::uint64_t seed = 1;
    int workers = 1; // parallel learning slots; results are worker-count invariant

    void validate() const;
};

struct GenerationStats {
    int generation = 0;
    double best = 0.0;
    double mean = 0.0;
    double worst = 0.0;
    long evaluations_total = 0; // cumulative
    long assessments_total = 0; // cumulative
};

struct IndividualRecord {
    int generation = 0;
    long id = 0;
    long parent_a = -1;
    long parent_b = -1;
    double fitness = 0.0;
    long assessments = 0;
    int modules = 0;
    int joints = 0;
};

struct LearnRecord {
    long individual_id = 0;
    int learn_generation = 0;
    double best = 0.0;
    double mean = 0.0;
    long assessments = 0;
};

struct RunLog {
    std::vector<GenerationStats> generations;
    std::vector<IndividualRecord> individuals;
    std::vector<LearnRecord> learning;
    long total_evaluations = 0;
    long total_assessments = 0;
};

struct EvolveResult {
    RunLog log;
    std::vector<Individual> final_population;
    Individual best; // fittest member of the final population
};

// Instrumentation points; default hooks do nothing. Population snapshots
// are passed by reference and must not be retained.
class EvolveObserver {
public:
    virtual ~EvolveObserver() = default;
    // after genome creation, before learning; brain_genotype is the
    // inherited matrix
    virtual void on_created(const Individual&) {}
    virtual void on_reproduced(const Individual& parent_a, const Individual& parent_b,
                               const Individual& child) {}
    // after learning, evaluation and any inheritance update
    virtual void on_evaluated(const Individual&) {}
    virtual void on_generation(int generation, const GenerationStats&,
                               const std::vector<Individual>& population) {}
};

using FitnessFn = std::function<double(const Body&, const BrainGenotype&)>;

// Binary tournament with replacement; the higher fitness of two uniform
// draws wins, the first draw wins ties.
const Individual& binary_tournament(const std::vector<Individual>& population, Rng& rng);

struct OffspringGenomes {
    CppnGenome body;
    BrainGenotype brain;
};

// Body: NEAT-style crossover of both parents then mutation (bodies always
// recombine sexually). Brain: sexual mode recombines both parents'
// inheritable matrices then mutates; asexual mode mutates the fitter
// parent's matrix only.
OffspringGenomes reproduce(const Individual& parent_a, const Individual& parent_b,
                           const EvolutionConfig& config, InnovationTracker& tracker, Rng& rng);

// (mu + lambda) truncation; ties keep incumbents first, then lower ids.
std::vector<Individual> survivor_selection(std::vector<Individual> current,
                                           std::vector<Individual> offspring,
                                           int population_size);

// Runs the full loop with the surrogate-backed task evaluator.
EvolveResult evolve(const EvolutionConfig& config);

// Same loop with an injected evaluator (used by dry runs and tests).
EvolveResult evolve(const EvolutionConfig& config, const FitnessFn& evaluate,
                    EvolveObserver* observer = nullptr);

const char* to_string(BrainMode m);
const char* to_string(Inheritance i);
const char* to_string(TaskKind t);

} // namespace morphevo
