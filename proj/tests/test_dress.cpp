#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"
#include "wlladder/dress.hpp"
#include "wlladder/named_graphs.hpp"

using namespace wlladder;

TEST_CASE("init_values") {
    EdgeValues d = init_values(complete_graph(3));
    CHECK(d.loops == std::vector<double>{2, 2, 2});
    CHECK(d.edges == std::vector<double>{1, 1, 1});

    Graph w = Graph::build(2, {{0, 1}}, {2.5});
    EdgeValues dw = init_values(w);
    CHECK(dw.loops == std::vector<double>{2, 2});
    CHECK(dw.edges == std::vector<double>{2.5});

    EdgeValues de = init_values(Graph::build(3, {}));
    CHECK(de.loops.size() == 3);
    CHECK(de.edges.empty());
}

TEST_CASE("vertex_norm") {
    Graph k3 = complete_graph(3);
    EdgeValues d = init_values(k3);
    for (Vertex u = 0; u < 3; ++u) CHECK(vertex_norm(k3, d, u) == doctest::Approx(2.0));

    Graph iso = Graph::build(1, {});
    CHECK(vertex_norm(iso, init_values(iso), 0) == doctest::Approx(std::sqrt(2.0)));

    Graph c6 = cycle_graph(6);
    auto [dc, rep] = dress_fixpoint(c6);
    CHECK(rep.converged);
    CHECK(vertex_norm(c6, dc, 0) == doctest::Approx(std::sqrt(2.0 + 2.0 * std::sqrt(2.0))).epsilon(1e-5));
}

TEST_CASE("dress_step on K3 from init") {
    Graph k3 = complete_graph(3);
    EdgeValues d = dress_step(k3, init_values(k3));
    for (double v : d.edges) CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
    for (double v : d.loops) CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("single edge fixed point is 2") {
    auto [d, rep] = dress_fixpoint(path_graph(2));
    CHECK(rep.converged);
    CHECK(d.edges[0] == doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("dress_step rejects corrupted state") {
    Graph k3 = complete_graph(3);
    EdgeValues d = init_values(k3);
    d.edges[1] = 0.0;
    CHECK_THROWS_AS(dress_step(k3, d), std::invalid_argument);
    d.edges[1] = -1.0;
    CHECK_THROWS_AS(dress_step(k3, d), std::invalid_argument);
}

TEST_CASE("loop invariance: loop slots return exactly 2 up to rounding") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testutil::random_graph(rng, 3 + static_cast<int>(rng() % 8));
        EdgeValues d = init_values(g);
        std::uniform_real_distribution<double> val(0.1, 2.0);
        for (double& x : d.edges) x = val(rng);
        EdgeValues d2 = dress_step(g, d);
        for (double v : d2.loops) CHECK(v == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("boundedness: unweighted values stay in (0, 2]") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = testutil::random_graph(rng, n);
        EdgeValues d = init_values(g);
        for (int it = 0; it < 100; ++it) {
            d = dress_step(g, d);
            for (double v : d.edges) {
                CHECK(v > 0.0);
                CHECK(v <= 2.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("equivariance under relabeling") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + static_cast<int>(rng() % 7);
        Graph g = testutil::random_graph(rng, n);
        auto pi = testutil::random_permutation(rng, n);
        Graph h = testutil::permute_graph(g, pi);
        EdgeValues dg = init_values(g);
        EdgeValues dh = init_values(h);
        for (int it = 0; it < 20; ++it) {
            dg = dress_step(g, dg);
            dh = dress_step(h, dh);
            for (int e = 0; e < g.edge_count(); ++e) {
                Vertex u = pi[static_cast<std::size_t>(g.edge(e).u)];
                Vertex v = pi[static_cast<std::size_t>(g.edge(e).v)];
                int eh = h.edge_index(std::min(u, v), std::max(u, v));
                REQUIRE(eh >= 0);
                CHECK(std::abs(dh.edges[static_cast<std::size_t>(eh)] -
                               dg.edges[static_cast<std::size_t>(e)]) < 1e-9);
            }
        }
    }
}

TEST_CASE("closed-form fixed points") {
    for (int n = 3; n <= 8; ++n) {
        auto [d, rep] = dress_fixpoint(complete_graph(n));
        CHECK(rep.converged);
        CHECK(rep.iterations <= 100);
        for (double v : d.edges) CHECK(std::abs(v - 2.0) < 1e-6);
    }
    for (int n = 4; n <= 12; ++n) {
        auto [d, rep] = dress_fixpoint(cycle_graph(n));
        CHECK(rep.converged);
        for (double v : d.edges) CHECK(std::abs(v - std::sqrt(2.0)) < 1e-6);
    }
    auto [d, rep] = dress_fixpoint(k33_graph());
    CHECK(rep.converged);
    for (double v : d.edges) CHECK(std::abs(v - 2.0 / std::sqrt(3.0)) < 1e-6);
}

TEST_CASE("edgeless graph converges immediately") {
    auto [d, rep] = dress_fixpoint(Graph::build(5, {}));
    CHECK(rep.converged);
    CHECK(rep.iterations == 0);
    CHECK(d.edges.empty());
    CHECK(d.loops == std::vector<double>(5, 2.0));
}

TEST_CASE("fixpoint argument validation") {
    CHECK_THROWS_AS(dress_fixpoint(complete_graph(3), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(dress_fixpoint(complete_graph(3), 1e-6, 0), std::invalid_argument);
}

TEST_CASE("non-convergence is reported, not thrown") {
    auto [d, rep] = dress_fixpoint(k33_graph(), 1e-6, 2);
    CHECK_FALSE(rep.converged);
    CHECK(rep.iterations == 2);
    CHECK(rep.final_delta >= 1e-6);
    (void)d;
}

TEST_CASE("weighted initialization: transient may exceed 2, limit does not depend on it") {
    Graph w = Graph::build(3, {{0, 1}, {0, 2}, {1, 2}}, {9.0, 1.0, 1.0});
    EdgeValues d1 = dress_step(w, init_values(w));
    CHECK(*std::max_element(d1.edges.begin(), d1.edges.end()) > 2.0);
    auto [d, rep] = dress_fixpoint(w);
    CHECK(rep.converged);
    for (double v : d.edges) CHECK(v == doctest::Approx(2.0).epsilon(1e-5));
}
