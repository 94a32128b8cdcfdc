#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "morphevo/rng.hpp"

namespace morphevo {

// Feed-forward pattern network queried at body-grid coordinates during
// morphology growth: 4 inputs (x, y, z, tree distance to the core), 5
// outputs (brick / joint / empty type scores, then 0 / 90 degree rotation
// scores).
inline constexpr int kCppnInputs = 4;
inline constexpr int kCppnOutputs = 5;

enum class NodeKind { Input, Hidden, Output, Bias };
enum class Activation { Linear, Sigmoid, Sine, Gaussian };

struct NodeGene {
    int id = 0;
    NodeKind kind = NodeKind::Hidden;
    Activation activation = Activation::Linear;
};

struct ConnectionGene {
    int src = 0;
    int dst = 0;
    double weight = 0.0;
    bool enabled = true;
    int innovation = 0;
};

struct CppnGenome {
    std::vector<NodeGene> nodes;             // sorted by id
    std::vector<ConnectionGene> connections; // sorted by innovation

    const NodeGene* find_node(int id) const;
    bool has_connection(int src, int dst) const;
};

// Run-wide innovation bookkeeping. The same (src, dst) pair always maps to
// the same innovation number, and splitting the same connection always
// yields the same hidden node id, so genes stay alignable across genomes.
// Not thread-safe; confine to the reproduction thread.
class InnovationTracker {
public:
    InnovationTracker();

    int connection_innovation(int src, int dst);
    int node_for_split(int split_innovation);
    int peek_next_node_id() const { return next_node_id_; }

private:
    std::map<std::pair<int, int>, int> connections_;
    std::map<int, int> split_nodes_;
    int next_innovation_ = 0;
    int next_node_id_ = 0;
};

struct CppnMutationParams {
    double weight_perturb_prob = 0.8; // per connection, N(0, sigma^2) nudge
    double weight_sigma = 0.1;
    double weight_reset_prob = 0.05;  // per connection, redraw from U[-1, 1]
    double add_connection_prob = 0.1; // per genome, at most one structural change
    double add_node_prob = 0.05;
};

// Deterministic forward pass. Throws std::invalid_argument on a non-finite
// query.
std::array<double, kCppnOutputs> evaluate_cppn(const CppnGenome& genome,
                                               const std::array<double, kCppnInputs>& query);

// Minimal generation-0 genome: inputs fully connected to outputs, weights
// from U[-1, 1], no hidden nodes. Output activations are drawn uniformly
// from the activation set.
CppnGenome random_cppn(Rng& rng, InnovationTracker& tracker);

CppnGenome mutate_cppn(const CppnGenome& genome, Rng& rng, InnovationTracker& tracker,
                       const CppnMutationParams& params = {});

// Matching genes come uniformly from either parent, disjoint and excess
// genes from the fitter parent (ties favor parent a).
CppnGenome crossover_cppn(const CppnGenome& a, const CppnGenome& b,
                          double fitness_a, double fitness_b, Rng& rng);

bool is_acyclic(const CppnGenome& genome);
void validate_genome(const CppnGenome& genome); // throws on broken invariants

// Checkpoint serialization, schema "morphevo/cppn-genome/v1".
std::string genome_to_json(const CppnGenome& genome);
CppnGenome genome_from_json(const std::string& text);

} // namespace morphevo
