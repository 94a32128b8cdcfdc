#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <map>
#include <set>
#include <tuple>

#include "morphevo/morphology.hpp"

using namespace morphevo;

namespace {

// fixed five-vector regardless of the query
CppnQueryFn constant_eval(std::array<double, 5> out) {
    return [out](const std::array<double, 4>&) { return out; };
}

std::set<std::tuple<int, int, int>> position_set(const Body& b) {
    std::set<std::tuple<int, int, int>> s;
    for (const auto& m : b.modules()) s.insert({m.grid_pos.x, m.grid_pos.y, m.grid_pos.z});
    return s;
}

} // namespace

TEST_CASE("empty-dominant genome decodes to a bare core") {
    Body b = decode_body_with(constant_eval({0.0, 0.0, 1.0, 1.0, 0.0}));
    CHECK(b.module_count() == 1);
    CHECK(b.module(0).kind == ModuleKind::Core);
    CHECK(joint_grid_2d(b).empty());
}

TEST_CASE("hinge-dominant genome grows breadth-first to exactly ten modules") {
    // joint score on top, rotation 0
    Body b = decode_body_with(constant_eval({0.0, 1.0, 0.0, 1.0, 0.0}));
    CHECK(b.module_count() == 10);
    for (int i = 1; i < b.module_count(); ++i)
        CHECK(b.module(i).kind == ModuleKind::ActiveHinge);

    // breadth-first growth of the constant genome, traced by hand: four
    // hinges around the core, then one hinge on each chain front
    const std::vector<std::tuple<int, int, int>> expected = {
        {0, 0, 0},  {0, 1, 0}, {0, -1, 0}, {-1, 0, 0}, {1, 0, 0},
        {0, 2, 0}, {0, -2, 0}, {-2, 0, 0}, {2, 0, 0},  {0, 3, 0}};
    REQUIRE(b.module_count() == static_cast<int>(expected.size()));
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const auto& m = b.module(static_cast<int>(i));
        CHECK(std::tuple(m.grid_pos.x, m.grid_pos.y, m.grid_pos.z) == expected[i]);
    }
}

TEST_CASE("module attached to the front of the core sits at (0,1,0)") {
    Body b = Body::core_only();
    int idx = b.attach(0, Socket::Front, ModuleKind::Brick, 0);
    CHECK(b.module(idx).grid_pos == GridVec{0, 1, 0});
    CHECK(b.module(idx).depth == 1);
}

TEST_CASE("type ties pick the lowest-index output") {
    // brick and joint tie: brick (output 0) wins
    Body b = decode_body_with([](const std::array<double, 4>& q) {
        if (q[3] > 1.0) return std::array<double, 5>{0, 0, 1, 1, 0}; // stop after depth 1
        return std::array<double, 5>{1, 1, 0, 1, 1};                 // ties everywhere
    });
    CHECK(b.module_count() == 5); // core + 4 around it
    for (int i = 1; i < b.module_count(); ++i) {
        CHECK(b.module(i).kind == ModuleKind::Brick);
        CHECK(b.module(i).rotation_deg == 0); // rotation tie -> 0 degrees
    }
}

TEST_CASE("collision skipping ends the branch without placing a module") {
    // two branches race for (1,1,0); the breadth-first earlier one wins and
    // the later branch simply ends
    auto whitelist = [](const std::array<double, 4>& q) {
        const std::tuple<int, int, int> cell{static_cast<int>(q[0]), static_cast<int>(q[1]),
                                             static_cast<int>(q[2])};
        const std::set<std::tuple<int, int, int>> allowed{{0, 1, 0}, {1, 0, 0}, {1, 1, 0}};
        if (allowed.count(cell)) return std::array<double, 5>{1, 0, 0, 1, 0};
        return std::array<double, 5>{0, 0, 1, 1, 0};
    };
    Body b = decode_body_with(whitelist);
    CHECK(b.module_count() == 4);
    CHECK(position_set(b).size() == 4);
    // the cell went to the first brick's right socket, not the second's
    const auto& contested = b.module(3);
    CHECK(contested.grid_pos == GridVec{1, 1, 0});
    CHECK(contested.parent == 1);
}

TEST_CASE("decoding is deterministic and matches evaluation behavior") {
    Rng rng(41);
    InnovationTracker tracker;
    CppnGenome g = random_cppn(rng, tracker);
    for (int i = 0; i < 25; ++i) g = mutate_cppn(g, rng, tracker);

    Body a = decode_body(g);
    Body b = decode_body(g);
    CHECK(a == b);

    // a mock evaluator replaying the genome's outputs yields the same body
    Body c = decode_body_with(
        [&g](const std::array<double, 4>& q) { return evaluate_cppn(g, q); });
    CHECK(a == c);
}

TEST_CASE("fuzzed decoding keeps every body invariant") {
    Rng rng(43);
    InnovationTracker tracker;
    for (int trial = 0; trial < 150; ++trial) {
        CppnGenome g = random_cppn(rng, tracker);
        for (int i = 0; i < trial % 12; ++i) g = mutate_cppn(g, rng, tracker);
        Body b = decode_body(g);

        CHECK(b.module_count() >= 1);
        CHECK(b.module_count() <= kMaxModules);
        CHECK(position_set(b).size() == static_cast<std::size_t>(b.module_count()));
        int cores = 0;
        for (const auto& m : b.modules()) {
            if (m.kind == ModuleKind::Core) ++cores;
            CHECK(std::abs(m.grid_pos.x) <= kGridBound);
            CHECK(std::abs(m.grid_pos.y) <= kGridBound);
            CHECK(std::abs(m.grid_pos.z) <= kGridBound);
        }
        CHECK(cores == 1);
        CHECK(b.module(0).kind == ModuleKind::Core);

        for (const auto& site : joint_grid_2d(b)) CHECK((site.x != 0 || site.y != 0));
    }
}

TEST_CASE("joint projection drops z and flags stacked joints") {
    Body plus = Body::core_only();
    plus.attach(0, Socket::Front, ModuleKind::ActiveHinge, 0);
    plus.attach(0, Socket::Back, ModuleKind::ActiveHinge, 0);
    plus.attach(0, Socket::Left, ModuleKind::ActiveHinge, 0);
    plus.attach(0, Socket::Right, ModuleKind::ActiveHinge, 0);

    auto sites = joint_grid_2d(plus);
    REQUIRE(sites.size() == 4);
    std::set<std::pair<int, int>> coords;
    for (const auto& s : sites) {
        coords.insert({s.x, s.y});
        CHECK_FALSE(s.stacked);
    }
    CHECK(coords == std::set<std::pair<int, int>>{{0, 1}, {0, -1}, {-1, 0}, {1, 0}});
}

TEST_CASE("stacked joints project to the same 2D cell") {
    // grow upwards via a 90-degree brick so two hinges share (x, y)
    Body b = Body::core_only();
    int brick = b.attach(0, Socket::Front, ModuleKind::Brick, 90); // at (0,1,0)
    b.attach(0, Socket::Right, ModuleKind::ActiveHinge, 0);        // (1,0,0)
    // the rotated brick's left socket points up; the upper brick's front
    // keeps pointing up, its right socket points along +y
    int upper = b.attach(brick, Socket::Left, ModuleKind::Brick, 0); // (0,1,1)
    CHECK(b.module(upper).grid_pos == GridVec{0, 1, 1});
    int hinge_a = b.attach(brick, Socket::Front, ModuleKind::ActiveHinge, 0); // (0,2,0)
    int hinge_b = b.attach(upper, Socket::Right, ModuleKind::ActiveHinge, 0); // (0,2,1)
    CHECK(b.module(hinge_a).grid_pos == GridVec{0, 2, 0});
    CHECK(b.module(hinge_b).grid_pos == GridVec{0, 2, 1});

    auto sites = joint_grid_2d(b);
    REQUIRE(sites.size() == 3);
    int stacked = 0;
    for (const auto& s : sites) {
        if (s.stacked) {
            ++stacked;
            CHECK(s.x == 0);
            CHECK(s.y == 2);
        }
    }
    CHECK(stacked == 2);

    // a hinge landing over the core's column is refused: it would have no
    // genotype row
    CHECK_THROWS_AS(b.attach(upper, Socket::Left, ModuleKind::ActiveHinge, 0),
                    std::invalid_argument);
}

TEST_CASE("tree distance counts path edges") {
    Body b = Body::core_only();
    int h1 = b.attach(0, Socket::Front, ModuleKind::ActiveHinge, 0);
    int h2 = b.attach(0, Socket::Back, ModuleKind::ActiveHinge, 0);
    int h3 = b.attach(h1, Socket::Front, ModuleKind::ActiveHinge, 0);

    CHECK(tree_distance(b, h1, h1) == 0);
    CHECK(tree_distance(b, h1, h2) == 2); // hinge - core - hinge
    CHECK(tree_distance(b, h1, h3) == 1); // parent-child edge
    CHECK(tree_distance(b, h2, h3) == 3);
    CHECK_THROWS_AS(tree_distance(b, 0, 99), std::invalid_argument);
}

TEST_CASE("body serialization round-trips") {
    Body b = decode_body_with(constant_eval({0.0, 1.0, 0.0, 0.0, 1.0}));
    Body copy = body_from_json(body_to_json(b));
    CHECK(b == copy);
    CHECK(copy.module_count() == b.module_count());
}
