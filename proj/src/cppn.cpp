#include "morphevo/cppn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace morphevo {

namespace {

constexpr std::array<Activation, 4> kActivationSet = {
    Activation::Linear, Activation::Sigmoid, Activation::Sine, Activation::Gaussian};

double apply_activation(Activation act, double x) {
    switch (act) {
    case Activation::Linear: return x;
    case Activation::Sigmoid: return 1.0 / (1.0 + std::exp(-x));
    case Activation::Sine: return std::sin(x);
    case Activation::Gaussian: return std::exp(-x * x);
    }
    return x;
}

Activation random_activation(Rng& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, kActivationSet.size() - 1);
    return kActivationSet[pick(rng)];
}

// ids 0..3 are the inputs, 4..8 the outputs, both immutable
bool is_io_node(int id) { return id >= 0 && id < kCppnInputs + kCppnOutputs; }

// true if `to` is reachable from `from` along (enabled or disabled) connections
bool reachable(const CppnGenome& g, int from, int to) {
    if (from == to) return true;
    std::unordered_map<int, std::vector<int>> adj;
    for (const auto& c : g.connections) adj[c.src].push_back(c.dst);
    std::vector<int> stack{from};
    std::unordered_set<int> seen{from};
    while (!stack.empty()) {
        int node = stack.back();
        stack.pop_back();
        for (int next : adj[node]) {
            if (next == to) return true;
            if (seen.insert(next).second) stack.push_back(next);
        }
    }
    return false;
}

} // namespace

const NodeGene* CppnGenome::find_node(int id) const {
    for (const auto& n : nodes)
        if (n.id == id) return &n;
    return nullptr;
}

bool CppnGenome::has_connection(int src, int dst) const {
    return std::any_of(connections.begin(), connections.end(),
                       [&](const ConnectionGene& c) { return c.src == src && c.dst == dst; });
}

InnovationTracker::InnovationTracker() {
    next_node_id_ = kCppnInputs + kCppnOutputs;
}

int InnovationTracker::connection_innovation(int src, int dst) {
    auto key = std::make_pair(src, dst);
    auto it = connections_.find(key);
    if (it != connections_.end()) return it->second;
    int innov = next_innovation_++;
    connections_.emplace(key, innov);
    return innov;
}

int InnovationTracker::node_for_split(int split_innovation) {
    auto it = split_nodes_.find(split_innovation);
    if (it != split_nodes_.end()) return it->second;
    int id = next_node_id_++;
    split_nodes_.emplace(split_innovation, id);
    return id;
}

std::array<double, kCppnOutputs> evaluate_cppn(const CppnGenome& genome,
                                               const std::array<double, kCppnInputs>& query) {
    for (double q : query)
        if (!std::isfinite(q)) throw std::invalid_argument("cppn query must be finite");

    // Kahn topological order over all connections; node ids break ties so
    // the pass is deterministic.
    std::unordered_map<int, int> indegree;
    std::unordered_map<int, std::vector<int>> adj;
    for (const auto& n : genome.nodes) indegree[n.id];
    for (const auto& c : genome.connections) {
        ++indegree[c.dst];
        adj[c.src].push_back(c.dst);
    }

    std::vector<int> ready;
    for (const auto& n : genome.nodes)
        if (indegree[n.id] == 0) ready.push_back(n.id);
    std::sort(ready.begin(), ready.end());

    std::vector<int> order;
    order.reserve(genome.nodes.size());
    while (!ready.empty()) {
        std::pop_heap(ready.begin(), ready.end(), std::greater<>{});
        int node = ready.back();
        ready.pop_back();
        order.push_back(node);
        for (int next : adj[node]) {
            if (--indegree[next] == 0) {
                ready.push_back(next);
                std::push_heap(ready.begin(), ready.end(), std::greater<>{});
            }
        }
    }
    if (order.size() != genome.nodes.size())
        throw std::invalid_argument("cppn genome contains a cycle");

    std::unordered_map<int, double> sum;
    std::unordered_map<int, double> value;
    for (const auto& c : genome.connections) sum[c.dst]; // default 0

    for (int id : order) {
        const NodeGene* node = genome.find_node(id);
        double v = 0.0;
        switch (node->kind) {
        case NodeKind::Input: v = query[static_cast<std::size_t>(id)]; break;
        case NodeKind::Bias: v = 1.0; break;
        default: v = apply_activation(node->activation, sum[id]); break;
        }
        value[id] = v;
        for (const auto& c : genome.connections)
            if (c.src == id && c.enabled) sum[c.dst] += c.weight * v;
    }

    std::array<double, kCppnOutputs> out{};
    for (int i = 0; i < kCppnOutputs; ++i) out[static_cast<std::size_t>(i)] = value[kCppnInputs + i];
    return out;
}

CppnGenome random_cppn(Rng& rng, InnovationTracker& tracker) {
    CppnGenome g;
    for (int i = 0; i < kCppnInputs; ++i)
        g.nodes.push_back({i, NodeKind::Input, Activation::Linear});
    for (int o = 0; o < kCppnOutputs; ++o)
        g.nodes.push_back({kCppnInputs + o, NodeKind::Output, random_activation(rng)});

    std::uniform_real_distribution<double> weight(-1.0, 1.0);
    for (int i = 0; i < kCppnInputs; ++i) {
        for (int o = 0; o < kCppnOutputs; ++o) {
            int dst = kCppnInputs + o;
            g.connections.push_back(
                {i, dst, weight(rng), true, tracker.connection_innovation(i, dst)});
        }
    }
    std::sort(g.connections.begin(), g.connections.end(),
              [](const ConnectionGene& a, const ConnectionGene& b) {
                  return a.innovation < b.innovation;
              });
    return g;
}

namespace {

void mutate_add_node(CppnGenome& g, Rng& rng, InnovationTracker& tracker) {
    std::vector<std::size_t> enabled;
    for (std::size_t i = 0; i < g.connections.size(); ++i)
        if (g.connections[i].enabled) enabled.push_back(i);
    if (enabled.empty()) return;

    std::uniform_int_distribution<std::size_t> pick(0, enabled.size() - 1);
    const std::size_t split_index = enabled[pick(rng)];
    // copy before push_back: growing the vector invalidates references
    const ConnectionGene split = g.connections[split_index];

    int node_id = tracker.node_for_split(split.innovation);
    if (g.find_node(node_id)) return; // node already present from an earlier split

    g.connections[split_index].enabled = false;
    g.nodes.push_back({node_id, NodeKind::Hidden, random_activation(rng)});
    std::sort(g.nodes.begin(), g.nodes.end(),
              [](const NodeGene& a, const NodeGene& b) { return a.id < b.id; });

    g.connections.push_back(
        {split.src, node_id, 1.0, true, tracker.connection_innovation(split.src, node_id)});
    g.connections.push_back(
        {node_id, split.dst, split.weight, true, tracker.connection_innovation(node_id, split.dst)});
    std::sort(g.connections.begin(), g.connections.end(),
              [](const ConnectionGene& a, const ConnectionGene& b) {
                  return a.innovation < b.innovation;
              });
}

void mutate_add_connection(CppnGenome& g, Rng& rng, InnovationTracker& tracker) {
    std::vector<int> sources;
    std::vector<int> targets;
    for (const auto& n : g.nodes) {
        if (n.kind != NodeKind::Output) sources.push_back(n.id);
        if (n.kind != NodeKind::Input && n.kind != NodeKind::Bias) targets.push_back(n.id);
    }

    std::uniform_int_distribution<std::size_t> pick_src(0, sources.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_dst(0, targets.size() - 1);
    std::uniform_real_distribution<double> weight(-1.0, 1.0);

    // a cycle-inducing or duplicate pick is retried a bounded number of
    // times, then the mutation is skipped
    for (int attempt = 0; attempt < 20; ++attempt) {
        int src = sources[pick_src(rng)];
        int dst = targets[pick_dst(rng)];
        if (src == dst || g.has_connection(src, dst)) continue;
        if (reachable(g, dst, src)) continue;
        g.connections.push_back({src, dst, weight(rng), true,
                                 tracker.connection_innovation(src, dst)});
        std::sort(g.connections.begin(), g.connections.end(),
                  [](const ConnectionGene& a, const ConnectionGene& b) {
                      return a.innovation < b.innovation;
                  });
        return;
    }
}

} // namespace

CppnGenome mutate_cppn(const CppnGenome& genome, Rng& rng, InnovationTracker& tracker,
                       const CppnMutationParams& params) {
    CppnGenome g = genome;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    // at most one structural change per mutation
    double structural = uniform(rng);
    if (structural < params.add_node_prob) {
        mutate_add_node(g, rng, tracker);
    } else if (structural < params.add_node_prob + params.add_connection_prob) {
        mutate_add_connection(g, rng, tracker);
    }

    std::normal_distribution<double> nudge(0.0, params.weight_sigma);
    std::uniform_real_distribution<double> reset(-1.0, 1.0);
    for (auto& c : g.connections) {
        if (params.weight_reset_prob > 0.0 && uniform(rng) < params.weight_reset_prob) {
            c.weight = reset(rng);
        } else if (params.weight_perturb_prob > 0.0 && uniform(rng) < params.weight_perturb_prob) {
            c.weight += nudge(rng);
        }
    }
    return g;
}

CppnGenome crossover_cppn(const CppnGenome& a, const CppnGenome& b,
                          double fitness_a, double fitness_b, Rng& rng) {
    const CppnGenome& fitter = (fitness_b > fitness_a) ? b : a;
    const CppnGenome& other = (fitness_b > fitness_a) ? a : b;

    std::unordered_map<int, const ConnectionGene*> other_genes;
    for (const auto& c : other.connections) other_genes[c.innovation] = &c;

    // offspring topology equals the fitter parent's; matching genes draw
    // their weight and enabled flag from either parent uniformly
    CppnGenome child;
    std::uniform_int_distribution<int> coin(0, 1);
    for (const auto& gene : fitter.connections) {
        auto it = other_genes.find(gene.innovation);
        if (it != other_genes.end() && coin(rng) == 1) {
            child.connections.push_back(*it->second);
        } else {
            child.connections.push_back(gene);
        }
    }

    child.nodes = fitter.nodes;
    return child;
}

bool is_acyclic(const CppnGenome& genome) {
    // DFS coloring over all connections
    std::unordered_map<int, std::vector<int>> adj;
    for (const auto& c : genome.connections) adj[c.src].push_back(c.dst);
    std::unordered_map<int, int> color; // 0 new, 1 open, 2 done
    std::vector<std::pair<int, std::size_t>> stack;
    for (const auto& n : genome.nodes) {
        if (color[n.id] != 0) continue;
        stack.emplace_back(n.id, 0);
        color[n.id] = 1;
        while (!stack.empty()) {
            auto& [node, idx] = stack.back();
            auto& next = adj[node];
            if (idx < next.size()) {
                int child = next[idx++];
                if (color[child] == 1) return false;
                if (color[child] == 0) {
                    color[child] = 1;
                    stack.emplace_back(child, 0);
                }
            } else {
                color[node] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

void validate_genome(const CppnGenome& genome) {
    int inputs = 0, outputs = 0;
    std::unordered_set<int> ids;
    for (const auto& n : genome.nodes) {
        if (!ids.insert(n.id).second) throw std::invalid_argument("duplicate node id");
        if (n.kind == NodeKind::Input) ++inputs;
        if (n.kind == NodeKind::Output) ++outputs;
    }
    if (inputs != kCppnInputs || outputs != kCppnOutputs)
        throw std::invalid_argument("genome must keep 4 inputs and 5 outputs");
    std::unordered_set<int> innovations;
    for (const auto& c : genome.connections) {
        if (!ids.count(c.src) || !ids.count(c.dst))
            throw std::invalid_argument("connection endpoint missing");
        if (!innovations.insert(c.innovation).second)
            throw std::invalid_argument("duplicate innovation number");
    }
    if (!is_acyclic(genome)) throw std::invalid_argument("genome graph has a cycle");
}

namespace {

const char* kind_name(NodeKind k) {
    switch (k) {
    case NodeKind::Input: return "input";
    case NodeKind::Hidden: return "hidden";
    case NodeKind::Output: return "output";
    case NodeKind::Bias: return "bias";
    }
    return "hidden";
}

const char* activation_name(Activation a) {
    switch (a) {
    case Activation::Linear: return "linear";
    case Activation::Sigmoid: return "sigmoid";
    case Activation::Sine: return "sine";
    case Activation::Gaussian: return "gaussian";
    }
    return "linear";
}

NodeKind kind_from_name(const std::string& s) {
    if (s == "input") return NodeKind::Input;
    if (s == "hidden") return NodeKind::Hidden;
    if (s == "output") return NodeKind::Output;
    if (s == "bias") return NodeKind::Bias;
    throw std::invalid_argument("unknown node kind: " + s);
}

Activation activation_from_name(const std::string& s) {
    if (s == "linear") return Activation::Linear;
    if (s == "sigmoid") return Activation::Sigmoid;
    if (s == "sine") return Activation::Sine;
    if (s == "gaussian") return Activation::Gaussian;
    throw std::invalid_argument("unknown activation: " + s);
}

} // namespace

std::string genome_to_json(const CppnGenome& genome) {
    nlohmann::json j;
    j["schema"] = "morphevo/cppn-genome/v1";
    j["nodes"] = nlohmann::json::array();
    for (const auto& n : genome.nodes)
        j["nodes"].push_back({{"id", n.id},
                              {"kind", kind_name(n.kind)},
                              {"activation", activation_name(n.activation)}});
    j["connections"] = nlohmann::json::array();
    for (const auto& c : genome.connections)
        j["connections"].push_back({{"src", c.src},
                                    {"dst", c.dst},
                                    {"weight", c.weight},
                                    {"enabled", c.enabled},
                                    {"innovation", c.innovation}});
    return j.dump(2);
}

CppnGenome genome_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.value("schema", "") != "morphevo/cppn-genome/v1")
        throw std::invalid_argument("unexpected genome schema");
    CppnGenome g;
    for (const auto& n : j.at("nodes"))
        g.nodes.push_back({n.at("id").get<int>(), kind_from_name(n.at("kind")),
                           activation_from_name(n.at("activation"))});
    for (const auto& c : j.at("connections"))
        g.connections.push_back({c.at("src").get<int>(), c.at("dst").get<int>(),
                                 c.at("weight").get<double>(), c.at("enabled").get<bool>(),
                                 c.at("innovation").get<int>()});
    validate_genome(g);
    return g;
}

} // namespace morphevo
