#include "morphevo/brain.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "morphevo/csv.hpp"

namespace morphevo {

std::size_t BrainGenotype::index(int row, int col) {
    if (row < 0 || row >= kBrainRows || col < 0 || col >= kBrainCols)
        throw std::invalid_argument("brain genotype index out of range");
    return static_cast<std::size_t>(row) * kBrainCols + static_cast<std::size_t>(col);
}

BrainGenotype BrainGenotype::random(Rng& rng) {
    BrainGenotype g;
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    for (double& v : g.values()) v = uniform(rng);
    return g;
}

int joint_gene_row(int x, int y) {
    if (x < -kGridBound || x > kGridBound || y < -kGridBound || y > kGridBound)
        throw std::invalid_argument("joint coordinate outside the 21x21 grid");
    if (x == 0 && y == 0)
        throw std::invalid_argument("the center cell holds the core, not a joint");
    int raw = (x + kGridBound) * 21 + (y + kGridBound);
    return raw < 220 ? raw : raw - 1;
}

const std::vector<std::pair<int, int>>& neighbour_offsets() {
    static const std::vector<std::pair<int, int>> offsets = [] {
        std::vector<std::pair<int, int>> v;
        for (int dx = -2; dx <= 2; ++dx)
            for (int dy = -2; dy <= 2; ++dy)
                if ((dx != 0 || dy != 0) && std::abs(dx) + std::abs(dy) <= 2)
                    v.emplace_back(dx, dy);
        std::sort(v.begin(), v.end());
        return v;
    }();
    return offsets;
}

int neighbour_column(int dx, int dy, bool stacked) {
    if (std::abs(dx) + std::abs(dy) > 2)
        throw std::invalid_argument("offset outside the radius-2 Manhattan ball");
    if (stacked) {
        if (dx != 0 || dy != 0)
            throw std::invalid_argument("stacked joints share their 2D cell");
        return 13;
    }
    if (dx == 0 && dy == 0) return 0;
    const auto& offsets = neighbour_offsets();
    auto it = std::find(offsets.begin(), offsets.end(), std::make_pair(dx, dy));
    return 1 + static_cast<int>(it - offsets.begin());
}

CpgNetwork::CpgNetwork(std::vector<double> internal_weights, std::vector<CpgCoupling> couplings)
    : w_(std::move(internal_weights)), couplings_(std::move(couplings)) {
    const double init = std::sqrt(2.0) / 2.0;
    x_.assign(w_.size(), init);
    y_.assign(w_.size(), init);
}

std::vector<double> CpgNetwork::step(double dt) {
    if (!(dt > 0.0) || dt > 0.01)
        throw std::invalid_argument("cpg step size must be in (0, 0.01]");

    std::vector<double> dx(w_.size(), 0.0);
    std::vector<double> dy(w_.size(), 0.0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        dx[i] = w_[i] * y_[i];
        dy[i] = -w_[i] * x_[i];
    }
    for (const auto& c : couplings_) {
        dx[static_cast<std::size_t>(c.i)] += c.weight * x_[static_cast<std::size_t>(c.j)];
        dx[static_cast<std::size_t>(c.j)] -= c.weight * x_[static_cast<std::size_t>(c.i)];
    }
    for (std::size_t i = 0; i < w_.size(); ++i) {
        x_[i] += dt * dx[i];
        y_[i] += dt * dy[i];
        if (!std::isfinite(x_[i]) || !std::isfinite(y_[i]))
            throw std::runtime_error("cpg state became non-finite");
    }
    return outputs();
}

std::vector<double> CpgNetwork::outputs() const {
    std::vector<double> out(x_.size());
    for (std::size_t i = 0; i < x_.size(); ++i) out[i] = std::tanh(x_[i]);
    return out;
}

CpgNetwork build_cpg_network(const Body& body, const BrainGenotype& genotype) {
    auto sites = joint_grid_2d(body);

    std::vector<double> internal(sites.size());
    std::vector<int> rows(sites.size());
    for (std::size_t i = 0; i < sites.size(); ++i) {
        rows[i] = joint_gene_row(sites[i].x, sites[i].y);
        internal[i] = genotype.at(rows[i], 0);
    }

    std::vector<CpgCoupling> couplings;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        for (std::size_t j = i + 1; j < sites.size(); ++j) {
            if (tree_distance(body, sites[i].module_index, sites[j].module_index) > 2) continue;

            int dx = sites[j].x - sites[i].x;
            int dy = sites[j].y - sites[i].y;
            if (dx == 0 && dy == 0) {
                // stacked pair: the reserved 14th slot of the shared row;
                // list order (decode order) fixes the sign orientation
                couplings.push_back({static_cast<int>(i), static_cast<int>(j),
                                     genotype.at(rows[i], neighbour_column(0, 0, true))});
                continue;
            }
            // tree distance <= 2 bounds the 2D Manhattan offset by 2, so a
            // column always exists; the smaller gene row owns the weight
            // and takes the +w side
            std::size_t a = i, b = j;
            if (rows[j] < rows[i]) std::swap(a, b);
            int col = neighbour_column(sites[b].x - sites[a].x, sites[b].y - sites[a].y);
            couplings.push_back({static_cast<int>(a), static_cast<int>(b),
                                 genotype.at(rows[a], col)});
        }
    }
    return CpgNetwork(std::move(internal), std::move(couplings));
}

BrainGenotype uniform_crossover_brain(const BrainGenotype& a, const BrainGenotype& b, Rng& rng) {
    BrainGenotype child;
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t i = 0; i < child.values().size(); ++i)
        child.values()[i] = coin(rng) ? b.values()[i] : a.values()[i];
    return child;
}

BrainGenotype gaussian_mutate_brain(const BrainGenotype& g, Rng& rng,
                                    const BrainMutationParams& params) {
    BrainGenotype child = g;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::normal_distribution<double> noise(0.0, params.sigma);
    for (double& v : child.values())
        if (uniform(rng) < params.prob) v += noise(rng);
    return child;
}

void save_brain_genotype(const BrainGenotype& g, std::ostream& out) {
    out << "morphevo/brain-genotype/v1 " << kBrainRows << ' ' << kBrainCols << '\n';
    for (int r = 0; r < kBrainRows; ++r) {
        for (int c = 0; c < kBrainCols; ++c) {
            if (c) out << ' ';
            out << format_double(g.at(r, c));
        }
        out << '\n';
    }
}

BrainGenotype load_brain_genotype(std::istream& in) {
    std::string tag;
    int rows = 0, cols = 0;
    in >> tag >> rows >> cols;
    if (tag != "morphevo/brain-genotype/v1" || rows != kBrainRows || cols != kBrainCols)
        throw std::runtime_error("unexpected brain genotype header");
    BrainGenotype g;
    for (double& v : g.values())
        if (!(in >> v)) throw std::runtime_error("truncated brain genotype file");
    return g;
}

} // namespace morphevo
