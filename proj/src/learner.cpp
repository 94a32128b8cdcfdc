#include "morphevo/learner.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace morphevo {

void LearnerConfig::validate() const {
    if (mu < 4) throw std::invalid_argument("learner mu must be at least 4");
    if (!(F > 0.0)) throw std::invalid_argument("learner F must be positive");
    if (CR < 0.0 || CR > 1.0) throw std::invalid_argument("learner CR must be in [0, 1]");
    if (generations < 0) throw std::invalid_argument("learner generations must be >= 0");
    if (init_sigma < 0.0) throw std::invalid_argument("learner init_sigma must be >= 0");
}

TripletMutants revde_mutate_triplet(std::span<const double> wi, std::span<const double> wj,
                                    std::span<const double> wk, double F) {
    if (wi.size() != wj.size() || wj.size() != wk.size())
        throw std::invalid_argument("triplet vectors must share a dimension");

    TripletMutants m;
    const std::size_t n = wi.size();
    m.v1.resize(n);
    m.v2.resize(n);
    m.v3.resize(n);
    for (std::size_t d = 0; d < n; ++d) m.v1[d] = wi[d] + F * (wj[d] - wk[d]);
    for (std::size_t d = 0; d < n; ++d) m.v2[d] = wj[d] + F * (wk[d] - m.v1[d]);
    for (std::size_t d = 0; d < n; ++d) m.v3[d] = wk[d] + F * (m.v1[d] - m.v2[d]);
    return m;
}

std::vector<double> revde_crossover(std::span<const double> target,
                                    std::span<const double> mutant, double CR, Rng& rng) {
    if (target.size() != mutant.size())
        throw std::invalid_argument("crossover vectors must share a dimension");
    std::vector<double> out(target.size());
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (std::size_t d = 0; d < out.size(); ++d)
        out[d] = (uniform(rng) < CR) ? mutant[d] : target[d];
    return out;
}

namespace {

// distinct triplet drawn uniformly from [0, mu)
std::array<std::size_t, 3> draw_triplet(std::size_t mu, Rng& rng) {
    std::uniform_int_distribution<std::size_t> first(0, mu - 1);
    std::size_t i = first(rng);
    std::uniform_int_distribution<std::size_t> second(0, mu - 2);
    std::size_t j = second(rng);
    if (j >= i) ++j;
    std::uniform_int_distribution<std::size_t> third(0, mu - 3);
    std::size_t k = third(rng);
    // map k past the two taken indices, in ascending order
    std::size_t lo = std::min(i, j), hi = std::max(i, j);
    if (k >= lo) ++k;
    if (k >= hi) ++k;
    return {i, j, k};
}

} // namespace

RevdeResult revde_optimize(const std::vector<double>& inherited, const VectorObjective& assess,
                           const LearnerConfig& config, Rng& rng) {
    config.validate();
    const std::size_t mu = static_cast<std::size_t>(config.mu);
    const std::size_t dim = inherited.size();

    std::vector<std::vector<double>> population;
    population.reserve(mu);
    population.push_back(inherited);
    std::normal_distribution<double> seed_noise(0.0, config.init_sigma);
    for (std::size_t s = 1; s < mu; ++s) {
        std::vector<double> sample = inherited;
        for (double& v : sample) v += seed_noise(rng);
        population.push_back(std::move(sample));
    }

    RevdeResult result;
    result.best.resize(dim);
    std::vector<double> performance(mu);
    for (std::size_t s = 0; s < mu; ++s) {
        performance[s] = assess(population[s]);
        ++result.assessments;
    }

    auto record_generation = [&](int gen) {
        double best = *std::max_element(performance.begin(), performance.end());
        double mean = std::accumulate(performance.begin(), performance.end(), 0.0) /
                      static_cast<double>(mu);
        result.history.push_back({gen, best, mean, result.assessments});
    };

    auto best_index = static_cast<std::size_t>(
        std::max_element(performance.begin(), performance.end()) - performance.begin());
    result.best = population[best_index];
    result.best_performance = performance[best_index];
    record_generation(1);

    for (int gen = 2; gen <= config.generations; ++gen) {
        std::vector<std::vector<double>> candidates;
        std::vector<double> candidate_perf;
        candidates.reserve(3 * mu);

        for (std::size_t t = 0; t < mu; ++t) {
            auto [i, j, k] = draw_triplet(mu, rng);
            TripletMutants m =
                revde_mutate_triplet(population[i], population[j], population[k], config.F);
            candidates.push_back(revde_crossover(population[i], m.v1, config.CR, rng));
            candidates.push_back(revde_crossover(population[j], m.v2, config.CR, rng));
            candidates.push_back(revde_crossover(population[k], m.v3, config.CR, rng));
        }

        candidate_perf.resize(candidates.size());
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            candidate_perf[c] = assess(candidates[c]);
            ++result.assessments;
            if (candidate_perf[c] > result.best_performance) {
                result.best_performance = candidate_perf[c];
                result.best = candidates[c];
            }
        }

        // elitist selection over population + candidates; stable ranking
        // keeps incumbents ahead of equal-scoring candidates
        std::vector<std::size_t> order(mu + candidates.size());
        std::iota(order.begin(), order.end(), 0);
        auto score = [&](std::size_t idx) {
            return idx < mu ? performance[idx] : candidate_perf[idx - mu];
        };
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return score(a) > score(b); });

        std::vector<std::vector<double>> next_pop;
        std::vector<double> next_perf;
        next_pop.reserve(mu);
        for (std::size_t r = 0; r < mu; ++r) {
            std::size_t idx = order[r];
            next_perf.push_back(score(idx));
            next_pop.push_back(idx < mu ? std::move(population[idx])
                                        : std::move(candidates[idx - mu]));
        }
        population = std::move(next_pop);
        performance = std::move(next_perf);
        record_generation(gen);
    }

    return result;
}

LearnResult learn_brain(const Body& body, const BrainGenotype& inherited,
                        const BrainObjective& assess, const LearnerConfig& config, Rng& rng) {
    auto vector_assess = [&](const std::vector<double>& flat) {
        BrainGenotype g;
        g.values() = flat;
        return assess(body, g);
    };

    RevdeResult r = revde_optimize(inherited.values(), vector_assess, config, rng);

    LearnResult out;
    out.best.values() = std::move(r.best);
    out.best_performance = r.best_performance;
    out.assessments = r.assessments;
    out.history = std::move(r.history);
    return out;
}

} // namespace morphevo
