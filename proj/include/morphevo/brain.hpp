#pragma once

#include <iosfwd>
#include <vector>

#include "morphevo/morphology.hpp"
#include "morphevo/rng.hpp"

namespace morphevo {

inline constexpr int kBrainRows = 440; // 21*21 grid cells minus the center
inline constexpr int kBrainCols = 14;  // internal + 12 neighbour slots + stacked slot

// Dense weight matrix addressed by 2D joint coordinates. The shape never
// depends on the body; rows a body does not use are still inherited.
class BrainGenotype {
public:
    BrainGenotype() : values_(kBrainRows * kBrainCols, 0.0) {}

    static BrainGenotype random(Rng& rng); // entries from U[-1, 1]

    double at(int row, int col) const { return values_[index(row, col)]; }
    double& at(int row, int col) { return values_[index(row, col)]; }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    bool operator==(const BrainGenotype& o) const { return values_ == o.values_; }

private:
    static std::size_t index(int row, int col);
    std::vector<double> values_; // row-major
};

// Row of the genotype holding the weights of a joint at 2D cell (x, y).
// raw = (x+10)*21 + (y+10); the center cell (raw 220) is excluded, rows
// above it shift down by one. Throws std::invalid_argument for the center
// or out-of-range coordinates.
int joint_gene_row(int x, int y);

// Column for the connection towards a neighbour at the given 2D offset
// inside the Manhattan ball of radius 2: column 0 is the joint's internal
// weight, 1..12 the nonzero offsets in lexicographic (dx, dy) order, 13
// the same-cell (stacked) connection.
int neighbour_column(int dx, int dy, bool stacked = false);

// The 12 nonzero offsets in column order.
const std::vector<std::pair<int, int>>& neighbour_offsets();

struct CpgCoupling {
    int i = 0; // +w contributes to joint i's x-equation
    int j = 0; // -w to joint j's
    double weight = 0.0;
};

// Per-joint oscillator pairs (x, y) with antisymmetric couplings between
// joints at tree distance <= 2. State starts at x = y = sqrt(2)/2 so an
// uncoupled unit-weight oscillator traces sin(t + pi/4).
class CpgNetwork {
public:
    CpgNetwork() = default;
    CpgNetwork(std::vector<double> internal_weights, std::vector<CpgCoupling> couplings);

    std::size_t joint_count() const { return w_.size(); }
    const std::vector<CpgCoupling>& couplings() const { return couplings_; }
    double internal_weight(std::size_t i) const { return w_[i]; }

    double state_x(std::size_t i) const { return x_[i]; }
    double state_y(std::size_t i) const { return y_[i]; }

    // One explicit Euler step from the pre-step state, all joints
    // simultaneously; returns tanh(x_i) per joint. Requires 0 < dt <= 0.01.
    std::vector<double> step(double dt);

    // Current outputs without advancing the state.
    std::vector<double> outputs() const;

private:
    std::vector<double> w_;
    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<CpgCoupling> couplings_;
};

// Maps genotype entries onto a network for the given body: one oscillator
// per active hinge, couplings for all pairs at tree distance <= 2. The
// weight of a pair lives in the row of the joint with the smaller gene
// row (column 13 when the pair shares a 2D cell).
CpgNetwork build_cpg_network(const Body& body, const BrainGenotype& genotype);

struct BrainMutationParams {
    double prob = 0.8;   // per entry
    double sigma = 0.5;  // N(0, sigma^2) additive, no clamping
};

// Each entry copied from either parent with probability 1/2.
BrainGenotype uniform_crossover_brain(const BrainGenotype& a, const BrainGenotype& b, Rng& rng);

BrainGenotype gaussian_mutate_brain(const BrainGenotype& g, Rng& rng,
                                    const BrainMutationParams& params = {});

// Checkpoint layout: header line "morphevo/brain-genotype/v1 440 14",
// then one whitespace-separated row per line, shortest round-trip floats.
void save_brain_genotype(const BrainGenotype& g, std::ostream& out);
BrainGenotype load_brain_genotype(std::istream& in);

} // namespace morphevo
