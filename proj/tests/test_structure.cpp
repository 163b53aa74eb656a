#include <bit>
#include <doctest.h>
#include <random>

#include "degpath/graph.hpp"
#include "degpath/structure.hpp"
#include "oracles.hpp"

using degpath::Error;
using degpath::Graph;
using degpath::LambdaParams;

TEST_CASE("decompose on the symmetric bipartite pair") {
    Graph k23 = degpath::complete_bipartite(2, 3);
    auto d = degpath::decompose(k23, 2, 3);  // both on the 3-side
    CHECK_FALSE(d.adjacent);
    CHECK(d.common_size() == 2);
    CHECK(d.only_u_size() == 0);
    CHECK(d.only_v_size() == 0);
    CHECK(d.neither_size() == 1);
    CHECK(d.common_size() == 2 + 2 + 1 - 5 + 2);
}

TEST_CASE("decompose on an adjacent complete-graph pair") {
    Graph k4 = degpath::complete_graph(4);
    auto d = degpath::decompose(k4, 0, 1);
    CHECK(d.adjacent);
    CHECK(d.common_size() == 2);
    CHECK(d.neither_size() == 0);
    CHECK(d.common_size() == 3 + 3 + 0 - 4 + 0);
}

TEST_CASE("decompose rejects a repeated vertex") {
    CHECK_THROWS_AS(degpath::decompose(degpath::complete_graph(3), 1, 1), Error);
}

TEST_CASE("decomposition identity on 300 random graphs, all pairs") {
    std::mt19937_64 rng(101);
    for (int round = 0; round < 300; ++round) {
        int n = 2 + static_cast<int>(rng() % 15);  // n <= 16
        int percent = (round % 3 == 0) ? 20 : (round % 3 == 1) ? 50 : 80;
        Graph g = oracles::random_graph(rng, n, percent);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                auto d = degpath::decompose(g, u, v);

                // Recompute every part with plain adjacency loops.
                std::uint64_t common = 0, only_u = 0, only_v = 0, neither = 0;
                for (int w = 0; w < n; ++w) {
                    if (w == u || w == v) continue;
                    bool wu = g.has_edge(w, u), wv = g.has_edge(w, v);
                    std::uint64_t bit = std::uint64_t{1} << w;
                    if (wu && wv) common |= bit;
                    else if (wu) only_u |= bit;
                    else if (wv) only_v |= bit;
                    else neither |= bit;
                }
                CHECK(d.common == common);
                CHECK(d.only_u == only_u);
                CHECK(d.only_v == only_v);
                CHECK(d.neither == neither);
                CHECK(d.adjacent == g.has_edge(u, v));

                const int identity = g.degree(u) + g.degree(v) + std::popcount(neither) - n +
                                     2 * (1 - (d.adjacent ? 1 : 0));
                CHECK(std::popcount(common) == identity);

                const int part_total = 2 + std::popcount(common) + std::popcount(only_u) +
                                       std::popcount(only_v) + std::popcount(neither);
                CHECK(part_total == n);
            }
        }
    }
}

TEST_CASE("degree bound audit on avoiding and non-avoiding graphs") {
    auto k34 = degpath::audit_common_neighbor_bound(degpath::complete_bipartite(3, 4));
    CHECK(k34.applicable);
    CHECK(k34.violations.empty());

    // C7 joins two degree-2 vertices by a path of length five.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 7; ++i) edges.emplace_back(i, (i + 1) % 7);
    auto c7 = degpath::audit_common_neighbor_bound(Graph::from_edges(7, edges));
    CHECK_FALSE(c7.applicable);
    CHECK(c7.violations.empty());
}

TEST_CASE("lambda trivial zero: no slots at all") {
    for (int delta = 1; delta <= 6; ++delta) {
        for (int beta = 1; beta <= delta; ++beta) {
            LambdaParams p{delta + 1, delta, beta, delta};
            CHECK(degpath::lambda_closed(p) == 0);
            CHECK(degpath::lambda_oracle(p) == 0);
        }
    }
}

TEST_CASE("lambda frozen examples") {
    LambdaParams a{6, 4, 3, 2};
    CHECK(degpath::lambda_closed(a) == 8);
    CHECK(degpath::lambda_oracle(a) == 8);

    LambdaParams b{6, 5, 1, 3};  // b - beta = 2 >= nu - delta = 1
    CHECK(degpath::lambda_closed(b) == 7);
    CHECK(degpath::lambda_oracle(b) == 7);
}

TEST_CASE("lambda parameter validation") {
    CHECK_THROWS_AS(degpath::lambda_closed({6, 4, 0, 2}), Error);
    CHECK_THROWS_AS(degpath::lambda_closed({6, 4, 3, 5}), Error);   // b > delta
    CHECK_THROWS_AS(degpath::lambda_closed({4, 4, 2, 2}), Error);   // nu < delta + 1
    CHECK_THROWS_AS(degpath::lambda_oracle({13, 4, 2, 2}), Error);  // oracle budget
}

TEST_CASE("lambda closed form equals the exhaustive maximum on the full grid") {
    for (int nu = 2; nu <= 9; ++nu)
        for (int delta = 1; delta < nu; ++delta)
            for (int b = 1; b <= delta; ++b)
                for (int beta = 1; beta <= delta; ++beta) {
                    LambdaParams p{nu, delta, beta, b};
                    CHECK(degpath::lambda_closed(p) == degpath::lambda_oracle(p));
                }
}
