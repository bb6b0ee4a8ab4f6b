#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coarse/ends.hpp"
#include "coarse/trees.hpp"
#include "oracles.hpp"

using namespace coarse;

namespace {

void check_profile_against_flood_fill(const SpaceOracle& space, Radius r_max, Radius horizon) {
    const auto profile = ends_profile(space, space.basepoint(), r_max, horizon);
    REQUIRE(profile.levels.size() == static_cast<std::size_t>(r_max));
    for (Radius r = 1; r <= r_max; ++r) {
        CHECK(profile.counts()[static_cast<std::size_t>(r - 1)] ==
              oracle::unbounded_components(space, space.basepoint(), r, horizon));
    }
}

}  // namespace

TEST_CASE("ends profiles agree with flood fill") {
    check_profile_against_flood_fill(*make_line(), 8, 20);
    check_profile_against_flood_fill(*make_halfline(), 8, 20);
    check_profile_against_flood_fill(*make_grid(2), 6, 18);
    check_profile_against_flood_fill(*make_regular_tree(3), 5, 7);
    check_profile_against_flood_fill(*make_free_group(2), 3, 5);
    check_profile_against_flood_fill(*make_staircase(30), 6, 40);
    check_profile_against_flood_fill(*make_staircase(30, StepRule::Constant), 6, 18);
    std::mt19937_64 rng(2);
    RandomTreeOptions opts;
    opts.core_vertices = 40;
    opts.hairs = 4;
    auto hairy = random_hairy_tree(rng, opts);
    check_profile_against_flood_fill(*hairy, 6, hairy->suggested_horizon(6));
    auto cycle = make_finite({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "t"}});
    check_profile_against_flood_fill(*cycle, 2, 3);
}

TEST_CASE("the open ball gives d (d-1)^(R-1) on regular trees") {
    for (int d : {3, 4}) {
        auto tree = make_regular_tree(d);
        const auto profile = ends_profile(*tree, tree->basepoint(), 4, 5);
        std::size_t expected = static_cast<std::size_t>(d);
        for (auto c : profile.counts()) {
            CHECK(c == expected);
            expected *= static_cast<std::size_t>(d - 1);
        }
        const auto count = stabilized_end_count(profile);
        CHECK(count.growing());
    }
}

TEST_CASE("stabilized counts") {
    auto line = make_line();
    const auto two = stabilized_end_count(ends_profile(*line, line->basepoint(), 12, 36));
    REQUIRE(two.stabilized);
    CHECK(*two.stabilized == 2);
    auto grid = make_grid(2);
    const auto one = stabilized_end_count(ends_profile(*grid, grid->basepoint(), 10, 30));
    REQUIRE(one.stabilized);
    CHECK(*one.stabilized == 1);
    // Too short to judge and not growing.
    CHECK_THROWS_AS(stabilized_end_count(ends_profile(*line, line->basepoint(), 4, 12)), InputError);
    // A finite graph has no ends once the ball swallows it.
    auto path = make_finite({{"a", "b"}, {"b", "c"}});
    const auto none = stabilized_end_count(ends_profile(*path, path->basepoint(), 10, 11));
    REQUIRE(none.stabilized);
    CHECK(*none.stabilized == 0);
}

TEST_CASE("components carry representatives and witnesses") {
    auto line = make_line();
    const auto profile = ends_profile(*line, line->basepoint(), 3, 10);
    const auto& level = profile.levels.back();
    REQUIRE(level.components.size() == 2);
    for (const auto& c : level.components) {
        CHECK(std::abs(c.witness.key[0]) == 10);
        CHECK(std::abs(c.representative.key[0]) >= 3);
        CHECK(c.size == 8);
    }
}

TEST_CASE("same end on lattices and trees") {
    auto line = make_line();
    auto up = periodic_geodesic_ray(*line, {1}, 40);
    auto down = periodic_geodesic_ray(*line, {-1}, 40);
    CHECK(same_end(*line, up, down, 8).relation == EndRelation::Different);
    CHECK(same_end(*line, up, up, 8).relation == EndRelation::Same);

    auto grid = make_grid(2);
    auto east = VertexRay::sparse({{0, VertexId{0, 0}}, {1, VertexId{1, 0}}},
                                  [](std::int64_t t) { return VertexId{static_cast<std::int32_t>(t), 0}; })
                    .extended_to(40);
    auto south = VertexRay::sparse({{0, VertexId{0, 0}}, {1, VertexId{0, -1}}},
                                   [](std::int64_t t) { return VertexId{0, -static_cast<std::int32_t>(t)}; })
                     .extended_to(40);
    const auto v = same_end(*grid, east, south, 6);
    CHECK(v.relation == EndRelation::Same);
    REQUIRE(!v.witnesses.empty());
    // The stored k-path stays outside the ball and moves by single edges.
    const auto& path = v.witnesses.front().example_path;
    REQUIRE(path.size() >= 2);
    for (std::size_t i = 1; i < path.size(); ++i) CHECK(distance(*grid, path[i - 1], path[i]) == 1);
    for (const auto& p : path) CHECK(distance(*grid, grid->basepoint(), p) > v.witnesses.front().r);

    auto tree = make_regular_tree(3);
    auto r0 = periodic_geodesic_ray(*tree, {0}, 12);
    auto r01 = periodic_geodesic_ray(*tree, {0, 1}, 12);
    CHECK(same_end(*tree, r0, r01, 4).relation == EndRelation::Different);
}

TEST_CASE("k-paths jump across small balls") {
    auto line = make_line();
    auto up = periodic_geodesic_ray(*line, {1}, 40);
    auto down = periodic_geodesic_ray(*line, {-1}, 40);
    SameEndOptions opts;
    opts.k = 7;
    opts.horizon = 20;
    const auto v = same_end(*line, up, down, 3, opts);
    CHECK(v.relation == EndRelation::Different);
    REQUIRE(v.witnesses.size() == 3);
    CHECK(v.witnesses[0].connected);
    CHECK(v.witnesses[1].connected);
    CHECK_FALSE(v.witnesses[2].connected);
}

TEST_CASE("rays that do not leave the window are inconclusive") {
    auto line = make_line();
    VertexRay bouncing({VertexId{0}, VertexId{1}, VertexId{0}, VertexId{1}, VertexId{0}});
    auto up = periodic_geodesic_ray(*line, {1}, 20);
    const auto v = same_end(*line, bouncing, up, 3);
    CHECK(v.relation == EndRelation::Inconclusive);
    CHECK_FALSE(v.note.empty());
    CHECK_THROWS_AS(same_end(*line, up, up, 5, SameEndOptions{1, 5, false}), InputError);
}

TEST_CASE("geodesic representatives reach every end") {
    auto tree = make_regular_tree(3);
    const auto reps = geodesic_representatives(*tree, tree->basepoint(), 2, 4);
    CHECK(reps.size() == 6);
    for (const auto& r : reps) {
        CHECK(r.size() == 5);
        CHECK(r.front() == tree->basepoint());
    }
}
