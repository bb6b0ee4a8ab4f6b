#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "coarse/io.hpp"
#include "coarse/local_graph.hpp"
#include "oracles.hpp"

using namespace coarse;

namespace {

// Random vertex within `radius` of the basepoint, by a random walk.
VertexId random_vertex(const SpaceOracle& space, std::mt19937_64& rng, int steps) {
    VertexId v = space.basepoint();
    for (int i = 0; i < steps; ++i) {
        auto nb = space.neighbors(v);
        v = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
    }
    return v;
}

void check_closed_form_against_bfs(const SpaceOracle& space, int walk, int trials) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < trials; ++i) {
        const auto u = random_vertex(space, rng, walk);
        const auto v = random_vertex(space, rng, walk);
        CHECK(distance(space, u, v) == oracle::bfs_distance(space, u, v));
    }
}

void check_symmetric_neighbours(const SpaceOracle& space, Radius r) {
    for (const auto& v : ball(space, space.basepoint(), r)) {
        const auto nb = space.neighbors(v);
        CHECK(nb.size() <= space.degree_bound());
        for (const auto& w : nb) {
            const auto back = space.neighbors(w);
            CHECK(std::find(back.begin(), back.end(), v) != back.end());
        }
    }
}

}  // namespace

TEST_CASE("lattice balls and distances") {
    auto line = make_line();
    CHECK(ball(*line, line->basepoint(), 5).size() == 11);
    CHECK(distance(*line, VertexId{-3}, VertexId{4}) == 7);
    auto half = make_halfline();
    CHECK(ball(*half, half->basepoint(), 5).size() == 6);
    CHECK_FALSE(half->contains(VertexId{-1}));
    auto grid = make_grid(2);
    for (Radius r = 0; r <= 6; ++r) CHECK(ball(*grid, grid->basepoint(), r).size() == std::size_t(2 * r * r + 2 * r + 1));
    CHECK(distance(*grid, VertexId{1, -2}, VertexId{-3, 5}) == 11);
    check_symmetric_neighbours(*grid, 4);
    auto grid3 = make_grid(3);
    check_closed_form_against_bfs(*grid3, 5, 20);
}

TEST_CASE("regular tree ball sizes follow 1 + d((d-1)^r - 1)/(d-2)") {
    auto tree = make_regular_tree(4);
    std::size_t expected = 1, sphere = 4;
    for (Radius r = 1; r <= 5; ++r) {
        expected += sphere;
        sphere *= 3;
        CHECK(ball(*tree, tree->basepoint(), r).size() == expected);
    }
    check_closed_form_against_bfs(*tree, 6, 40);
    check_symmetric_neighbours(*tree, 3);
    CHECK(tree->format(tree->parse("0.1.1")) == "0.1.1");
    CHECK(tree->format(tree->basepoint()) == "root");
    CHECK_THROWS_AS(tree->parse("0.3"), InputError);  // later levels use 0..d-2
}

TEST_CASE("free group words") {
    auto f2 = make_free_group(2);
    CHECK(f2->format(f2->parse("aBa")) == "aBa");
    CHECK(f2->format(f2->basepoint()) == "e");
    CHECK_THROWS_AS(f2->parse("aA"), InputError);
    CHECK(distance(*f2, f2->parse("ab"), f2->parse("aB")) == 2);
    check_closed_form_against_bfs(*f2, 6, 40);
    CHECK(ball(*f2, f2->basepoint(), 2).size() == 17);
}

TEST_CASE("staircase geometry") {
    auto s = make_staircase(12);
    CHECK(s->format(s->parse("L5")) == "L5");
    CHECK(s->format(s->parse("S5:7")) == "S5:7");
    CHECK_THROWS_AS(s->parse("S5:25"), InputError);  // step(5) has interior offsets 1..24
    // L_n and R_n are joined by descending to some step j, crossing it and climbing back.
    for (int n = 1; n <= 12; ++n) {
        int best = 2 * n;
        for (int j = 1; j <= n; ++j) best = std::min(best, 2 * (n - j) + j * j);
        CHECK(distance(*s, staircase_left(n), staircase_right(n)) == best);
    }
    check_closed_form_against_bfs(*s, 40, 60);
    check_symmetric_neighbours(*s, 10);
    auto c = make_staircase(30, StepRule::Constant);
    CHECK(distance(*c, staircase_left(20), staircase_right(20)) == 1);
    check_closed_form_against_bfs(*c, 20, 30);
}

TEST_CASE("hairy tree closed form matches BFS") {
    std::mt19937_64 rng(3);
    RandomTreeOptions opts;
    opts.core_vertices = 60;
    opts.hairs = 3;
    auto t = random_hairy_tree(rng, opts);
    CHECK(t->is_tree());
    check_closed_form_against_bfs(*t, 25, 60);
    check_symmetric_neighbours(*t, 8);
    CHECK_THROWS_AS(make_hairy_tree({0, 0}, {}), InputError);
    auto small = make_hairy_tree({-1, 0, 0}, {1, 2});
    CHECK(small->format(small->parse("h1.7")) == "h1.7");
    CHECK(distance(*small, small->parse("h0.3"), small->parse("h1.2")) == 7);
}

TEST_CASE("finite graphs") {
    auto g = make_finite({{"a", "b"}, {"b", "c"}, {"b", "a"}, {"c", "c"}});
    CHECK(g->neighbors(g->parse("b")).size() == 2);
    CHECK(distance(*g, g->parse("a"), g->parse("c")) == 2);
    CHECK_THROWS_AS(make_finite_adjacency({{"a", {"b"}}, {"b", {}}}), InputError);
    EdgeListOptions bounded;
    bounded.max_degree = 1;
    CHECK_THROWS_AS(make_finite({{"a", "b"}, {"a", "c"}}, bounded), InputError);

    const std::string path = "test_space_edges.txt";
    {
        std::ofstream out(path);
        out << "# a square with a tail\nx y\ny z\nz w\nw x\nw tail\n";
    }
    EdgeListOptions opts;
    opts.basepoint = "x";
    auto sq = load_edge_list(path, opts);
    CHECK(sq->format(sq->basepoint()) == "x");
    CHECK(ball(*sq, sq->basepoint(), 1).size() == 3);
    CHECK(distance(*sq, sq->parse("x"), sq->parse("tail")) == 2);
    std::remove(path.c_str());
}

TEST_CASE("geodesics are shortest edge paths") {
    std::mt19937_64 rng(5);
    for (const auto& space : {make_grid(2), make_regular_tree(3), make_staircase(10)}) {
        for (int i = 0; i < 20; ++i) {
            const auto u = random_vertex(*space, rng, 15);
            const auto v = random_vertex(*space, rng, 15);
            const auto path = geodesic(*space, u, v);
            REQUIRE(!path.empty());
            CHECK(path.front() == u);
            CHECK(path.back() == v);
            CHECK(static_cast<Radius>(path.size()) - 1 == oracle::bfs_distance(*space, u, v));
            for (std::size_t j = 1; j < path.size(); ++j) CHECK(oracle::bfs_distance(*space, path[j - 1], path[j], 1) == 1);
        }
    }
}

TEST_CASE("horizon is enforced") {
    auto line = make_line(10);
    CHECK_THROWS_AS(distance(*line, VertexId{0}, VertexId{11}), HorizonError);
    CHECK_THROWS_AS(ball(*line, line->basepoint(), 11), HorizonError);
    CHECK_NOTHROW(distance(*line, VertexId{-10}, VertexId{10}));
}

TEST_CASE("complement components against flood fill") {
    auto line = make_line();
    auto comps = components_outside(*line, line->basepoint(), 3, 10);
    CHECK(comps.size() == 2);
    for (const auto& c : comps) CHECK(c.unbounded);
    auto g = make_finite({{"o", "a"}, {"a", "b"}, {"o", "c"}, {"c", "d"}, {"d", "e"}}, {});
    auto fc = components_outside(*g, g->parse("o"), 1, 3);
    REQUIRE(fc.size() == 2);
    std::size_t unbounded = 0;
    for (const auto& c : fc) unbounded += c.unbounded;
    CHECK(unbounded == 1);
}

TEST_CASE("local graph snapshot") {
    auto grid = make_grid(2);
    LocalGraph g(*grid, grid->basepoint(), 4);
    const auto ref = oracle::bfs(*grid, grid->basepoint(), 4);
    CHECK(g.size() == ref.size());
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(g.size()); ++i) CHECK(g.dist(i) == ref.at(g.vertex(i)));
    UnionFind uf(4);
    uf.unite(0, 1);
    uf.unite(2, 3);
    CHECK(uf.find(0) == uf.find(1));
    CHECK(uf.find(1) != uf.find(2));
}

TEST_CASE("space specs round-trip through build_space") {
    for (const auto& space : {make_line(), make_halfline(), make_grid(3), make_regular_tree(4), make_free_group(2),
                              make_staircase(20, StepRule::Constant), make_hairy_tree({-1, 0, 1}, {2})}) {
        auto rebuilt = build_space(space->spec());
        CHECK(rebuilt->kind_name() == space->kind_name());
        CHECK(rebuilt->spec() == space->spec());
    }
    CHECK(build_space({{"kind", "grid"}, {"params", {{"n", 2}}}})->kind_name() == "grid-2");
    CHECK_THROWS_AS(build_space({{"kind", "torus"}}), InputError);
    CHECK_THROWS_AS(build_space({{"kind", "staircase"}}), InputError);
    CHECK_THROWS_AS(build_space({{"kind", "grid-x"}}), InputError);
}

TEST_CASE("dot export lists the ball") {
    auto line = make_line();
    const auto dot = export_dot(*line, line->basepoint(), 2);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("\"-2\"") != std::string::npos);
}
