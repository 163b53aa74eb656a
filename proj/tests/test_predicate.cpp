#include <doctest.h>
#include <random>

#include "degpath/extremal.hpp"
#include "degpath/graph.hpp"
#include "degpath/graph6.hpp"
#include "degpath/path_finder.hpp"
#include "oracles.hpp"

using degpath::Error;
using degpath::Graph;
using degpath::PathSearchOptions;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("exact_length_path examples") {
    auto p6 = exact_length_path(path_graph(6), 0, 5, 5);
    REQUIRE(p6.has_value());
    CHECK(*p6 == std::vector<int>{0, 1, 2, 3, 4, 5});

    auto around = exact_length_path(cycle_graph(6), 0, 1, 5);
    REQUIRE(around.has_value());
    CHECK(*around == std::vector<int>{0, 5, 4, 3, 2, 1});

    // Same-side endpoints of a complete bipartite graph admit no odd path.
    Graph k34 = degpath::complete_bipartite(3, 4);
    CHECK_FALSE(exact_length_path(k34, 0, 1, 5).has_value());
}

TEST_CASE("exact_length_path is the lexicographically least path") {
    // Two internally disjoint 2-paths from 0 to 3; the one through 1 wins.
    Graph diamond = Graph::from_edges(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
    auto p = exact_length_path(diamond, 0, 3, 2);
    REQUIRE(p.has_value());
    CHECK(*p == std::vector<int>{0, 1, 3});
}

TEST_CASE("exact_length_path argument errors") {
    Graph g = path_graph(4);
    CHECK_THROWS_AS(exact_length_path(g, 1, 1, 2), Error);
    CHECK_THROWS_AS(exact_length_path(g, 0, 1, 0), Error);
    CHECK_THROWS_AS(exact_length_path(g, 0, 1, 4), Error);  // l > n-1
    CHECK_THROWS_AS(exact_length_path(g, 0, 7, 2), Error);
}

TEST_CASE("pruning options never change the answer") {
    std::mt19937_64 rng(41);
    PathSearchOptions plain{false, false};
    PathSearchOptions dist_only{true, false};
    PathSearchOptions parity_only{false, true};
    for (int round = 0; round < 200; ++round) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = oracles::random_graph(rng, n, 15 + static_cast<int>(rng() % 60));
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                for (int l = 1; l < n; ++l) {
                    auto a = exact_length_path(g, u, v, l, plain);
                    CHECK(a == exact_length_path(g, u, v, l, dist_only));
                    CHECK(a == exact_length_path(g, u, v, l, parity_only));
                    CHECK(a == exact_length_path(g, u, v, l));
                }
            }
        }
    }
}

TEST_CASE("find_equal_degree_path examples") {
    auto c6 = find_equal_degree_path(cycle_graph(6), 5);
    REQUIRE(c6.has_value());
    CHECK(degpath::witness_is_valid(cycle_graph(6), *c6));
    CHECK(cycle_graph(6).degree(c6->vertices.front()) == 2);
    // Deterministic least witness: first class (degree 2), pair (0, 1).
    CHECK(c6->vertices == std::vector<int>{0, 5, 4, 3, 2, 1});

    CHECK_FALSE(find_equal_degree_path(degpath::complete_bipartite(11, 12), 5).has_value());
    CHECK_FALSE(find_equal_degree_path(degpath::complete_bipartite(2, 3), 3).has_value());
}

TEST_CASE("avoids examples") {
    CHECK_FALSE(degpath::avoids(degpath::complete_graph(4), 3));
    CHECK(degpath::avoids(Graph(7), 5));

    Graph h6 = degpath::half_graph(6);
    CHECK(degpath::avoids(h6, 4) == !oracles::naive_contains_equal_degree_path(h6, 4));
}

TEST_CASE("lengths beyond n-1 cannot be realized") {
    CHECK(degpath::avoids(degpath::complete_graph(5), 5));
    CHECK(degpath::avoids(degpath::complete_bipartite(1, 2), 5));
    CHECK_FALSE(find_equal_degree_path(degpath::complete_graph(3), 7).has_value());
    CHECK_THROWS_AS(degpath::avoids(Graph(3), 0), Error);
}

TEST_CASE("completeness against the injective-sequence oracle, n <= 7") {
    for (int n = 2; n <= 7; ++n) {
        degpath::for_each_iso_class(n, [&](const Graph& g) {
            for (int l = 1; l <= 6; ++l)
                CHECK(degpath::avoids(g, l) == !oracles::naive_contains_equal_degree_path(g, l));
        });
    }
}

TEST_CASE("bipartite parity: unbalanced complete bipartite graphs avoid odd lengths") {
    for (int total = 2; total <= 40; ++total) {
        for (int a = 1; 2 * a < total; ++a) {
            Graph g = degpath::complete_bipartite(a, total - a);
            for (int l = 1; l <= std::min(total - 1, 7); l += 2) CHECK(degpath::avoids(g, l));
        }
    }
}

TEST_CASE("avoidance is not monotone under edge addition") {
    // Fixture pairs (G, G+e) at l = 5 frozen from an exhaustive search over
    // n <= 6; each direction of the flip occurs.
    Graph gain = degpath::graph6_decode("E?N?");
    Graph gain_plus = degpath::graph6_decode("EON?");
    CHECK(gain_plus.edge_count() == gain.edge_count() + 1);
    CHECK(degpath::avoids(gain, 5));
    CHECK_FALSE(degpath::avoids(gain_plus, 5));
    CHECK_FALSE(oracles::naive_contains_equal_degree_path(gain, 5));
    CHECK(oracles::naive_contains_equal_degree_path(gain_plus, 5));

    Graph lose = degpath::graph6_decode("E@U_");
    Graph lose_plus = degpath::graph6_decode("EPU_");
    CHECK(lose_plus.edge_count() == lose.edge_count() + 1);
    CHECK_FALSE(degpath::avoids(lose, 5));
    CHECK(degpath::avoids(lose_plus, 5));
    CHECK(oracles::naive_contains_equal_degree_path(lose, 5));
    CHECK_FALSE(oracles::naive_contains_equal_degree_path(lose_plus, 5));
}

TEST_CASE("witness soundness over seeded random graphs") {
    std::mt19937_64 rng(59);
    int witnesses = 0;
    for (int round = 0; round < 2000; ++round) {
        int n = 2 + static_cast<int>(rng() % 15);
        Graph g = oracles::random_graph(rng, n, 10 + static_cast<int>(rng() % 81));
        int l = 1 + static_cast<int>(rng() % 6);
        auto w = find_equal_degree_path(g, l);
        if (!w) continue;
        ++witnesses;
        CHECK(w->length() == l);
        CHECK(degpath::witness_is_valid(g, *w));
    }
    CHECK(witnesses > 100);  // the property suite actually exercises witnesses
}
