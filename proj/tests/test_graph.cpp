#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "wlladder/graph.hpp"
#include "wlladder/graph_io.hpp"
#include "wlladder/isomorphism.hpp"
#include "wlladder/named_graphs.hpp"

using namespace wlladder;

TEST_CASE("build_graph basics") {
    Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);

    Graph single = Graph::build(1, {});
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    CHECK_THROWS_AS(Graph::build(4, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(4, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(2, {{0, 1}}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(2, {{0, 1}}, {-1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(2, {{0, 1}}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("edges are normalized smaller endpoint first and sorted") {
    Graph g = Graph::build(4, {{3, 1}, {2, 0}});
    CHECK(g.edge(0).u == 0);
    CHECK(g.edge(0).v == 2);
    CHECK(g.edge(1).u == 1);
    CHECK(g.edge(1).v == 3);
}

TEST_CASE("induced_delete") {
    Graph k3 = complete_graph(3);
    std::vector<Vertex> s{2};
    Graph g = k3.induced_delete(s);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);

    Graph c6 = cycle_graph(6);
    std::vector<Vertex> s0{0};
    Graph p = c6.induced_delete(s0);
    CHECK(p.vertex_count() == 5);
    CHECK(p.edge_count() == 4);
    CHECK(p == path_graph(5));

    std::vector<Vertex> empty;
    CHECK(c6.induced_delete(empty) == c6);

    std::vector<Vertex> bad{7};
    CHECK_THROWS_AS(c6.induced_delete(bad), std::invalid_argument);
}

TEST_CASE("induced_delete carries weights") {
    Graph g = Graph::build(3, {{0, 1}, {1, 2}}, {2.5, 3.5});
    std::vector<Vertex> s{0};
    Graph h = g.induced_delete(s);
    CHECK(h.edge_count() == 1);
    CHECK(h.weight(0) == 3.5);
}

TEST_CASE("induced_delete composition law") {
    // deleting {v} then S' equals deleting {v} ∪ S'' in one shot,
    // where S'' maps S' back to original labels
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testutil::random_graph(rng, 8);
        Vertex v = static_cast<Vertex>(rng() % 8);
        // pick a 2-subset of the reduced graph
        Vertex a = static_cast<Vertex>(rng() % 7);
        Vertex b = static_cast<Vertex>(rng() % 7);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        std::vector<Vertex> sv{v};
        Graph gv = g.induced_delete(sv);
        std::vector<Vertex> sp{a, b};
        Graph left = gv.induced_delete(sp);

        auto unrelabel = [&](Vertex x) { return x >= v ? x + 1 : x; };
        std::vector<Vertex> all{v, unrelabel(a), unrelabel(b)};
        std::sort(all.begin(), all.end());
        Graph right = g.induced_delete(all);
        CHECK(left == right);
    }
}

TEST_CASE("closed_neighborhood") {
    Graph k3 = complete_graph(3);
    CHECK(k3.closed_neighborhood(0) == std::vector<Vertex>{0, 1, 2});

    Graph edgeless = Graph::build(3, {});
    CHECK(edgeless.closed_neighborhood(0) == std::vector<Vertex>{0});

    Graph k33 = k33_graph();
    CHECK(k33.closed_neighborhood(1) == std::vector<Vertex>{1, 3, 4, 5});
    CHECK_THROWS_AS(k33.closed_neighborhood(6), std::invalid_argument);
}

TEST_CASE("brute-force isomorphism") {
    Graph c6 = cycle_graph(6);
    Graph two_tri = Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(are_isomorphic_bruteforce(c6, two_tri));

    Graph k3 = complete_graph(3);
    Graph k3p = Graph::build(3, {{2, 1}, {0, 2}, {1, 0}});
    CHECK(are_isomorphic_bruteforce(k3, k3p));

    CHECK_THROWS_AS(are_isomorphic_bruteforce(complete_graph(17), complete_graph(17)),
                    std::invalid_argument);
}

TEST_CASE("isomorphism invariant under relabeling") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = testutil::random_graph(rng, n);
        CHECK(are_isomorphic_bruteforce(g, g));
        Graph h = testutil::permute_graph(g, testutil::random_permutation(rng, n));
        CHECK(are_isomorphic_bruteforce(g, h));
    }
}

TEST_CASE("parse and write") {
    Graph k3 = parse_graph("3 3\n0 1\n1 2\n0 2\n");
    CHECK(k3 == complete_graph(3));

    Graph w = parse_graph("2 1\n0 1 2.5\n");
    CHECK(w.weighted());
    CHECK(w.weight(0) == 2.5);

    CHECK(parse_graph("# comment\n2 1\n# another\n0 1\n").edge_count() == 1);

    CHECK_THROWS_AS(parse_graph(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("x y\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("2 1\n0 5\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), std::invalid_argument);
}

TEST_CASE("write/parse round-trip is identity on normalized text") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testutil::random_graph(rng, 3 + static_cast<int>(rng() % 8));
        std::string t = write_graph(g);
        CHECK(write_graph(parse_graph(t)) == t);
        CHECK(parse_graph(t) == g);
    }
    // weighted round-trip at 17 significant digits
    Graph w = Graph::build(3, {{0, 1}, {1, 2}}, {1.0 / 3.0, 2.5});
    CHECK(parse_graph(write_graph(w)) == w);
}
