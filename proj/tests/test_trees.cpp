#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coarse/trees.hpp"
#include "oracles.hpp"

using namespace coarse;

namespace {

VertexRay walk(const SpaceOracle& space, std::initializer_list<const char*> names) {
    std::vector<VertexId> v;
    for (auto n : names) v.push_back(space.parse(n));
    return VertexRay(std::move(v));
}

// Length of the common prefix of two periodic child patterns, unrolled.
Radius common_prefix(const std::vector<std::int32_t>& p, const std::vector<std::int32_t>& q, Radius limit) {
    for (Radius h = 0; h < limit; ++h) {
        if (p[static_cast<std::size_t>(h) % p.size()] != q[static_cast<std::size_t>(h) % q.size()]) return h;
    }
    return limit;
}

}  // namespace

TEST_CASE("tree oracle accepts trees and rejects cycles") {
    CHECK_NOTHROW(TreeOracle(make_regular_tree(3)));
    CHECK_NOTHROW(TreeOracle(make_free_group(2)));
    CHECK_THROWS_AS(TreeOracle(make_grid(2)), InputError);
    CHECK_THROWS_AS(TreeOracle(make_finite({{"a", "b"}, {"b", "c"}, {"c", "a"}})), InputError);
    const TreeOracle tree(make_regular_tree(3));
    const auto v = tree.space().parse("1.0.1.1");
    CHECK(tree.depth(v) == 4);
    CHECK(tree.ancestor(v, 2) == tree.space().parse("1.0"));
    CHECK(tree.root_path(v).size() == 5);
    CHECK_FALSE(tree.parent(tree.root()).has_value());
}

TEST_CASE("tree geodesics and meets against BFS") {
    const TreeOracle tree(make_regular_tree(4));
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        VertexId u = tree.root(), v = tree.root();
        for (int k = 0; k < 6; ++k) {
            auto nu = tree.space().neighbors(u);
            u = nu[rng() % nu.size()];
            auto nv = tree.space().neighbors(v);
            v = nv[rng() % nv.size()];
        }
        const auto path = tree_geodesic(tree, u, v);
        CHECK(static_cast<Radius>(path.size()) - 1 == oracle::bfs_distance(tree.space(), u, v));
        const auto m = meet(tree, u, v);
        CHECK(tree.depth(u) + tree.depth(v) - 2 * tree.depth(m) == oracle::bfs_distance(tree.space(), u, v));
    }
}

TEST_CASE("chain extraction") {
    const auto space = make_regular_tree(3);
    const TreeOracle tree(space);
    std::mt19937_64 rng(4);
    const auto spine = periodic_geodesic_ray(*space, {0, 1}, 20);
    const auto star = detour_ray(tree, spine, 20, 3, rng);
    const auto ex = underlying_geodesic_ray(tree, star);
    REQUIRE(ex.chain);
    CHECK(ex.contained);
    CHECK(ex.order_convex);
    CHECK(ex.chain->length() >= 20);
    for (Radius h = 0; h <= 20; ++h) CHECK(*ex.chain->at(h) == *spine.at(h));
    CHECK(*ex.chain->at(ex.chain->length() + 5) == *spine.at(ex.chain->length() + 5));

    // Two boundary vertices with no extension to separate them.
    const auto forked = underlying_geodesic_ray(tree, walk(*space, {"root", "0", "root", "1"}));
    CHECK_FALSE(forked.chain);
    CHECK(forked.boundary_vertices.size() == 2);
    // Ends below its deepest point.
    CHECK_THROWS_AS(underlying_geodesic_ray(tree, walk(*space, {"root", "0", "0.0", "0"})), InputError);
    CHECK_THROWS_AS(underlying_geodesic_ray(tree, walk(*space, {"0", "0.0"})), InputError);
}

TEST_CASE("pi0 on periodic and perturbed rays") {
    const auto space = make_regular_tree(3);
    const TreeOracle tree(space);
    const std::vector<std::vector<std::int32_t>> patterns{{0}, {1}, {0, 1}, {0, 0, 1}, {1, 0}, {0, 1, 1}};
    std::mt19937_64 rng(8);
    for (const auto& p : patterns) {
        for (const auto& q : patterns) {
            const auto a = periodic_geodesic_ray(*space, p, 16);
            const auto b = detour_ray(tree, periodic_geodesic_ray(*space, q, 16), 16, 2, rng);
            const auto v = pi0_equivalent(tree, a, b);
            const auto prefix = common_prefix(p, q, v.compared_height);
            if (prefix == v.compared_height) {
                CHECK(v.relation == EndRelation::Same);
            } else {
                CHECK(v.relation == EndRelation::Different);
                REQUIRE(v.divergence_height);
                CHECK(*v.divergence_height == prefix);
            }
        }
    }
}

TEST_CASE("pi0 agrees with the ends criterion on hairy trees") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 5; ++trial) {
        RandomTreeOptions opts;
        opts.core_vertices = 40;
        opts.hairs = 3;
        const auto space = random_hairy_tree(rng, opts);
        const TreeOracle tree(space);
        for (std::int32_t i = 0; i < 3; ++i) {
            for (std::int32_t j = 0; j < 3; ++j) {
                const auto a = hair_ray(tree, i, 40);
                const auto b = detour_ray(tree, hair_ray(tree, j, 40), 40, 3, rng);
                const auto v = pi0_equivalent(tree, a, b);
                CHECK(v.relation == (i == j ? EndRelation::Same : EndRelation::Different));
                const Radius r_max = space->suggested_horizon(1);
                SameEndOptions so;
                so.horizon = r_max + 150;
                so.keep_paths = false;
                const auto e = same_end(*space, a.extended_to(200), b.extended_to(200), r_max, so);
                CHECK(e.relation == v.relation);
            }
        }
    }
}

TEST_CASE("homotopy witness") {
    const auto space = make_regular_tree(3);
    const TreeOracle tree(space);
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 5; ++trial) {
        const auto spine = periodic_geodesic_ray(*space, {static_cast<std::int32_t>(trial % 2), 1, 0}, 14);
        const auto alpha = detour_ray(tree, spine, 14, 3, rng);
        const auto w = homotopy_witness(tree, alpha);
        CHECK(w.passes);
        CHECK(w.lipschitz == 1);
        const auto& phi = w.phi;
        for (std::int64_t h = 0; h <= phi.height(); ++h) {
            CHECK(phi.at(0, h) == *alpha.at(h));
            CHECK(phi.at(h, h) == *spine.at(h));
        }
        for (const auto& b : w.certificate.bounds) CHECK(b.same_row <= 2 * b.r);
    }
    // A sparse ray is interpolated first; its witness still starts on the unit-step version.
    const auto sparse = VertexRay::sparse({{0, space->parse("root")}, {1, space->parse("0.1")}, {2, space->parse("0.1.0.0")}});
    CHECK(homotopy_witness(tree, sparse).passes);
}

TEST_CASE("six point configurations") {
    const auto space = make_regular_tree(3);
    const TreeOracle tree(space);
    auto p = [&](const char* n) { return space->parse(n); };
    // Two geodesics fellow-travelling from near the root out to 0.0.0.0.
    const auto ok = six_point_gap(tree, p("root"), p("0.0"), p("0.0.0.0"), p("1"), p("0.0"), p("0.0.0.1"), 3);
    CHECK(ok.hypotheses_hold);
    CHECK(ok.gap == 0);
    const auto bad = six_point_gap(tree, p("root"), p("1"), p("0.0.0.0"), p("root"), p("0"), p("0.0.0.0"), 3);
    CHECK_FALSE(bad.hypothesis[1]);
    CHECK_FALSE(bad.hypotheses_hold);

    std::mt19937_64 rng(30);
    auto random_vertex = [&](int steps) {
        VertexId v = tree.root();
        for (int k = 0; k < steps; ++k) {
            auto nb = space->neighbors(v);
            v = nb[rng() % nb.size()];
        }
        return v;
    };
    int tested = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const Radius r = 1 + static_cast<Radius>(rng() % 3);
        const auto x1 = random_vertex(3), x3 = random_vertex(6);
        const auto gx = tree_geodesic(tree, x1, x3);
        const auto y1 = random_vertex(3), y3 = random_vertex(6);
        const auto gy = tree_geodesic(tree, y1, y3);
        const auto x2 = gx[rng() % gx.size()], y2 = gy[rng() % gy.size()];
        const auto res = six_point_gap(tree, x1, x2, x3, y1, y2, y3, r);
        if (!res.hypotheses_hold) continue;
        ++tested;
        CHECK(res.gap < 2 * r);
    }
    CHECK(tested > 0);
}
