#pragma once

#include <functional>
#include <span>
#include <vector>

#include "morphevo/brain.hpp"
#include "morphevo/rng.hpp"

namespace morphevo {

struct LearnerConfig {
    int mu = 10;          // sample population size
    int generations = 10; // counting the initial population as generation 1
    double F = 0.5;       // differential scaling factor
    double CR = 0.9;      // crossover probability
    double init_sigma = 0.5;

    void validate() const; // throws std::invalid_argument
};

struct TripletMutants {
    std::vector<double> v1;
    std::vector<double> v2;
    std::vector<double> v3;
};

// Reversible differential mutation: each line perturbs with the freshly
// computed predecessors,
//   v1 = wi + F (wj - wk), v2 = wj + F (wk - v1), v3 = wk + F (v1 - v2).
TripletMutants revde_mutate_triplet(std::span<const double> wi, std::span<const double> wj,
                                    std::span<const double> wk, double F);

// Binomial crossover: per coordinate the mutant's value with probability
// CR, the target's otherwise.
std::vector<double> revde_crossover(std::span<const double> target,
                                    std::span<const double> mutant, double CR, Rng& rng);

struct LearnGenerationStats {
    int generation = 0;
    double best = 0.0;
    double mean = 0.0;
    long assessments = 0; // cumulative
};

struct RevdeResult {
    std::vector<double> best;
    double best_performance = 0.0;
    long assessments = 0;
    std::vector<LearnGenerationStats> history;
};

using VectorObjective = std::function<double(const std::vector<double>&)>;

// RevDE over plain vectors: mu samples seeded from `inherited` (sample 1
// verbatim, the rest with N(0, init_sigma^2) noise per entry), then per
// generation mu random triplets produce 3 crossed candidates each and the
// best mu of population and candidates survive. Total assessments are
// mu + 3*mu*(generations-1).
RevdeResult revde_optimize(const std::vector<double>& inherited, const VectorObjective& assess,
                           const LearnerConfig& config, Rng& rng);

struct LearnResult {
    BrainGenotype best;
    double best_performance = 0.0;
    long assessments = 0;
    std::vector<LearnGenerationStats> history;
};

using BrainObjective = std::function<double(const Body&, const BrainGenotype&)>;

// Lifetime learning of a brain for a fixed body. The inherited genotype is
// never modified; the returned best is a fresh matrix.
LearnResult learn_brain(const Body& body, const BrainGenotype& inherited,
                        const BrainObjective& assess, const LearnerConfig& config, Rng& rng);

} // namespace morphevo
