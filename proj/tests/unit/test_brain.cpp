#include <doctest.h>

#include <stdexcept>
#include <vector>

#include <cmath>
#include <set>
#include <sstream>

#include "morphevo/brain.hpp"

using namespace morphevo;

namespace {

Body plus_body() {
    Body b = Body::core_only();
    b.attach(0, Socket::Front, ModuleKind::ActiveHinge, 0);
    b.attach(0, Socket::Back, ModuleKind::ActiveHinge, 0);
    b.attach(0, Socket::Left, ModuleKind::ActiveHinge, 0);
    b.attach(0, Socket::Right, ModuleKind::ActiveHinge, 0);
    return b;
}

} // namespace

TEST_CASE("gene row formula marks the corners and the skipped center") {
    CHECK(joint_gene_row(-10, -10) == 0);
    CHECK(joint_gene_row(0, 1) == 220); // raw 221, shifted past the center
    CHECK(joint_gene_row(10, 10) == 439);
    CHECK_THROWS_AS(joint_gene_row(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(joint_gene_row(11, 0), std::invalid_argument);
    CHECK_THROWS_AS(joint_gene_row(0, -11), std::invalid_argument);
}

TEST_CASE("gene rows enumerate all 440 legal cells bijectively") {
    std::set<int> rows;
    for (int x = -10; x <= 10; ++x)
        for (int y = -10; y <= 10; ++y) {
            if (x == 0 && y == 0) continue;
            rows.insert(joint_gene_row(x, y));
        }
    CHECK(rows.size() == 440);
    CHECK(*rows.begin() == 0);
    CHECK(*rows.rbegin() == 439);
}

TEST_CASE("neighbour columns follow the fixed lexicographic order") {
    CHECK(neighbour_column(0, 0, false) == 0);
    CHECK(neighbour_column(0, 0, true) == 13);

    const std::vector<std::pair<int, int>> expected = {
        {-2, 0}, {-1, -1}, {-1, 0}, {-1, 1}, {0, -2}, {0, -1},
        {0, 1},  {0, 2},   {1, -1}, {1, 0},  {1, 1},  {2, 0}};
    REQUIRE(neighbour_offsets() == expected);
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(neighbour_column(expected[i].first, expected[i].second) ==
              static_cast<int>(i) + 1);

    CHECK_THROWS_AS(neighbour_column(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(neighbour_column(1, 1, true), std::invalid_argument);
}

TEST_CASE("bare core builds an empty network and stepping is a no-op") {
    BrainGenotype g;
    CpgNetwork net = build_cpg_network(Body::core_only(), g);
    CHECK(net.joint_count() == 0);
    CHECK(net.step(0.001).empty());
}

TEST_CASE("plus-shaped body yields four oscillators with six couplings") {
    Rng rng(3);
    CpgNetwork net = build_cpg_network(plus_body(), BrainGenotype::random(rng));
    CHECK(net.joint_count() == 4);
    CHECK(net.couplings().size() == 6); // C(4,2), all pairwise tree distance 2
}

TEST_CASE("a zero genotype freezes the state") {
    BrainGenotype zeros;
    CpgNetwork net = build_cpg_network(plus_body(), zeros);
    const double init = std::sqrt(2.0) / 2.0;
    for (int s = 0; s < 100; ++s) net.step(0.01);
    for (std::size_t i = 0; i < net.joint_count(); ++i) {
        CHECK(net.state_x(i) == init);
        CHECK(net.state_y(i) == init);
    }
    for (double out : net.outputs()) CHECK(out == doctest::Approx(std::tanh(init)));
}

TEST_CASE("couplings only reach joints within tree distance two") {
    // chain of hinges: distances 1, 2, 3 from the first
    Body chain = Body::core_only();
    int h1 = chain.attach(0, Socket::Front, ModuleKind::ActiveHinge, 0);
    int h2 = chain.attach(h1, Socket::Front, ModuleKind::ActiveHinge, 0);
    int h3 = chain.attach(h2, Socket::Front, ModuleKind::ActiveHinge, 0);
    int h4 = chain.attach(h3, Socket::Front, ModuleKind::ActiveHinge, 0);
    (void)h4;

    Rng rng(5);
    CpgNetwork net = build_cpg_network(chain, BrainGenotype::random(rng));
    CHECK(net.joint_count() == 4);
    // pairs at distance <= 2: (1,2) (1,3) (2,3) (2,4) (3,4) -> 5 couplings
    CHECK(net.couplings().size() == 5);
}

TEST_CASE("uncoupled unit oscillator follows the closed-form sine") {
    CpgNetwork net({1.0}, {});
    const double dt = 0.001;
    const int quarter = static_cast<int>(std::round(M_PI / 4.0 / dt));
    for (int k = 1; k <= quarter; ++k) net.step(dt);
    const double t = quarter * dt;
    CHECK(std::abs(net.state_x(0) - std::sin(t + M_PI / 4.0)) < 2e-3);
    CHECK(net.state_x(0) == doctest::Approx(1.0).epsilon(2e-3));
}

TEST_CASE("euler energy drift over one period stays under one percent") {
    CpgNetwork net({1.0}, {});
    const double dt = 0.001;
    const double r0 = net.state_x(0) * net.state_x(0) + net.state_y(0) * net.state_y(0);
    const int steps = static_cast<int>(std::round(2.0 * M_PI / dt));
    for (int k = 0; k < steps; ++k) net.step(dt);
    const double r1 = net.state_x(0) * net.state_x(0) + net.state_y(0) * net.state_y(0);
    CHECK(std::abs(r1 / r0 - 1.0) < 0.01);
}

TEST_CASE("outputs never leave [-1, 1]") {
    Rng rng(9);
    BrainGenotype g = BrainGenotype::random(rng);
    for (double& v : g.values()) v *= 10.0; // push x far outside [-1, 1]
    CpgNetwork net = build_cpg_network(plus_body(), g);
    bool in_range = true;
    for (int s = 0; s < 2000; ++s)
        for (double out : net.step(0.01))
            if (out < -1.0 || out > 1.0) in_range = false;
    CHECK(in_range); // tanh saturates to +-1.0 in doubles but never beyond

    // with moderate weights the bound is strict
    CpgNetwork mild = build_cpg_network(plus_body(), BrainGenotype::random(rng));
    bool strict = true;
    for (int s = 0; s < 2000; ++s)
        for (double out : mild.step(0.01))
            if (out <= -1.0 || out >= 1.0) strict = false;
    CHECK(strict);
}

TEST_CASE("step size preconditions are enforced") {
    CpgNetwork net({1.0}, {});
    CHECK_THROWS_AS(net.step(0.0), std::invalid_argument);
    CHECK_THROWS_AS(net.step(0.05), std::invalid_argument);
}

TEST_CASE("the smaller gene row owns the coupling weight and its sign") {
    Body b = Body::core_only();
    b.attach(0, Socket::Front, ModuleKind::ActiveHinge, 0); // site 0, cell (0,1), row 220
    b.attach(0, Socket::Left, ModuleKind::ActiveHinge, 0);  // site 1, cell (-1,0), row 199

    BrainGenotype g; // zeros: no internal dynamics, one coupling only
    const int owner_row = joint_gene_row(-1, 0);
    const int col = neighbour_column(0 - (-1), 1 - 0); // offset towards the other joint
    g.at(owner_row, col) = 0.7;

    CpgNetwork net = build_cpg_network(b, g);
    REQUIRE(net.joint_count() == 2);
    REQUIRE(net.couplings().size() == 1);
    const CpgCoupling& c = net.couplings()[0];
    CHECK(c.i == 1); // the smaller gene row takes the +w side
    CHECK(c.j == 0);
    CHECK(c.weight == 0.7);

    // one Euler step from the symmetric start: dx_i = +w x_j, dx_j = -w x_i
    const double init = std::sqrt(2.0) / 2.0;
    net.step(0.01);
    CHECK(net.state_x(1) == doctest::Approx(init + 0.01 * 0.7 * init));
    CHECK(net.state_x(0) == doctest::Approx(init - 0.01 * 0.7 * init));
}

TEST_CASE("stacked joints couple through the reserved column") {
    // a vertical hinge chain: both joints project to (1,0)
    Body b = Body::core_only();
    int brick = b.attach(0, Socket::Right, ModuleKind::Brick, 90); // (1,0,0)
    int h1 = b.attach(brick, Socket::Left, ModuleKind::ActiveHinge, 0); // (1,0,1)
    int h2 = b.attach(h1, Socket::Front, ModuleKind::ActiveHinge, 0);   // (1,0,2)
    CHECK(b.module(h1).grid_pos == GridVec{1, 0, 1});
    CHECK(b.module(h2).grid_pos == GridVec{1, 0, 2});

    Rng rng(13);
    BrainGenotype g = BrainGenotype::random(rng);
    CpgNetwork net = build_cpg_network(b, g);
    REQUIRE(net.joint_count() == 2);
    REQUIRE(net.couplings().size() == 1); // stacked pair at tree distance 1

    const int row = joint_gene_row(1, 0);
    CHECK(net.couplings()[0].weight == g.at(row, 13));
    CHECK(net.couplings()[0].i == 0); // decode order fixes the orientation
    CHECK(net.couplings()[0].j == 1);
}

TEST_CASE("crossover copies entries verbatim from either parent") {
    Rng rng(15);
    BrainGenotype a, b;
    for (double& v : a.values()) v = 0.0;
    for (double& v : b.values()) v = 1.0;

    BrainGenotype child = uniform_crossover_brain(a, b, rng);
    double mean = 0.0;
    for (double v : child.values()) {
        CHECK((v == 0.0 || v == 1.0));
        mean += v;
    }
    mean /= static_cast<double>(child.values().size());
    CHECK(mean > 0.47);
    CHECK(mean < 0.53);

    BrainGenotype same = uniform_crossover_brain(a, a, rng);
    CHECK(same == a);
}

TEST_CASE("gaussian mutation touches about eighty percent of entries") {
    Rng rng(17);
    BrainGenotype g = BrainGenotype::random(rng);

    BrainMutationParams off{0.0, 0.5};
    CHECK(gaussian_mutate_brain(g, rng, off) == g);

    BrainGenotype mutated = gaussian_mutate_brain(g, rng);
    int changed = 0;
    for (std::size_t i = 0; i < g.values().size(); ++i)
        if (mutated.values()[i] != g.values()[i]) ++changed;
    const double fraction = static_cast<double>(changed) / 6160.0;
    CHECK(fraction > 0.77);
    CHECK(fraction < 0.83);
}

TEST_CASE("mean absolute mutation matches the half-normal value") {
    Rng rng(19);
    BrainGenotype g;
    double sum = 0.0;
    long count = 0;
    for (int round = 0; round < 20; ++round) {
        BrainGenotype m = gaussian_mutate_brain(g, rng);
        for (std::size_t i = 0; i < g.values().size(); ++i) {
            if (m.values()[i] != g.values()[i]) {
                sum += std::abs(m.values()[i] - g.values()[i]);
                ++count;
            }
        }
    }
    const double mean_abs = sum / static_cast<double>(count);
    CHECK(mean_abs == doctest::Approx(0.5 * std::sqrt(2.0 / M_PI)).epsilon(0.05));
}

TEST_CASE("operators cover rows the current body does not use") {
    // a bare-core body uses no rows at all, yet inheritance still carries
    // the full matrix
    Rng rng(21);
    BrainGenotype g = BrainGenotype::random(rng);
    BrainGenotype m = gaussian_mutate_brain(g, rng);
    int changed = 0;
    for (std::size_t i = 0; i < g.values().size(); ++i)
        if (m.values()[i] != g.values()[i]) ++changed;
    CHECK(changed > 4000); // far more rows than any body can use
    for (double v : m.values()) CHECK(std::isfinite(v));
}

TEST_CASE("genotype checkpoints round-trip bit-exactly") {
    Rng rng(23);
    BrainGenotype g = BrainGenotype::random(rng);
    std::stringstream buffer;
    save_brain_genotype(g, buffer);
    BrainGenotype loaded = load_brain_genotype(buffer);
    CHECK(loaded == g);

    std::stringstream bad("morphevo/brain-genotype/v1 2 2\n0 0\n0 0\n");
    CHECK_THROWS_AS(load_brain_genotype(bad), std::runtime_error);
}
