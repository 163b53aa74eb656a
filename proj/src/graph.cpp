#include "degpath/graph.hpp"

#include <bit>

namespace degpath {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        throw Error(ErrorCode::size, "vertex count must be in [1, 64], got " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u == v) throw Error(ErrorCode::loop, "loop at vertex " + std::to_string(u));
        g.check_vertex(u);
        g.check_vertex(v);
        g.adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw Error(ErrorCode::out_of_range,
                    "vertex " + std::to_string(v) + " not in [0, " + std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
}

std::uint64_t Graph::neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

int Graph::edge_count() const {
    int total = 0;
    for (std::uint64_t row : adj_) total += std::popcount(row);
    return total / 2;
}

Graph Graph::with_edge(int u, int v) const {
    if (u == v) throw Error(ErrorCode::loop, "loop at vertex " + std::to_string(u));
    check_vertex(u);
    check_vertex(v);
    Graph g = *this;
    g.adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Graph g = *this;
    g.adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    g.adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    // The last row has no higher neighbors; skipping it also keeps the
    // shift below 64 when n = 64.
    for (int i = 0; i + 1 < n_; ++i) {
        std::uint64_t higher = adj_[static_cast<std::size_t>(i)] >> (i + 1);
        while (higher) {
            int j = i + 1 + std::countr_zero(higher);
            out.emplace_back(i, j);
            higher &= higher - 1;
        }
    }
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw Error(ErrorCode::size, "bipartite sides must be >= 1");
    if (a + b > kMaxVertices) throw Error(ErrorCode::size, "bipartite graph exceeds 64 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph::from_edges(a + b, edges);
}

Graph half_graph(int n) {
    if (n < 1) throw Error(ErrorCode::size, "half graph size must be >= 1");
    if (2 * n > kMaxVertices) throw Error(ErrorCode::size, "half graph exceeds 64 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) edges.emplace_back(i - 1, n + j - 1);
    return Graph::from_edges(2 * n, edges);
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    const int n = g.vertex_count();
    p.degrees.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        p.degrees[static_cast<std::size_t>(v)] = d;
        p.classes[d].push_back(v);
        p.max_degree = std::max(p.max_degree, d);
    }
    for (auto it = p.classes.rbegin(); it != p.classes.rend(); ++it) {
        if (it->second.size() >= 2) {
            p.repeated_degree = it->first;
            break;
        }
    }
    return p;
}

std::uint64_t pair_bits(const Graph& g) {
    const int n = g.vertex_count();
    if (pair_bit_count(n) > 64)
        throw Error(ErrorCode::size, "upper triangle does not fit one word");
    std::uint64_t bits = 0;
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.has_edge(i, j)) bits |= std::uint64_t{1} << k;
    return bits;
}

Graph graph_from_pair_bits(int n, std::uint64_t bits) {
    if (pair_bit_count(n) > 64)
        throw Error(ErrorCode::size, "upper triangle does not fit one word");
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((bits >> k) & 1) {
                g.adj_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                g.adj_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }
    return g;
}

}  // namespace degpath
