#include "degpath/path_finder.hpp"

#include <array>
#include <bit>

namespace degpath {

namespace {

constexpr int kUnreachable = 127;

struct PathSearch {
    const Graph& g;
    int n;
    int target;
    std::uint64_t target_bit;
    bool distance_prune;
    std::array<std::int8_t, kMaxVertices> dist{};  // BFS distance from target
    std::vector<int> path;
    std::uint64_t used = 0;

    PathSearch(const Graph& graph, int to, const PathSearchOptions& opt)
        : g(graph),
          n(graph.vertex_count()),
          target(to),
          target_bit(std::uint64_t{1} << to),
          distance_prune(opt.distance_prune) {
        dist.fill(kUnreachable);
        dist[static_cast<std::size_t>(to)] = 0;
        std::uint64_t frontier = target_bit;
        std::uint64_t seen = target_bit;
        for (int d = 1; frontier && d < kUnreachable; ++d) {
            std::uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= g.neighbor_mask(v);
            }
            next &= ~seen;
            seen |= next;
            std::uint64_t fresh = next;
            while (fresh) {
                int v = std::countr_zero(fresh);
                fresh &= fresh - 1;
                dist[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(d);
            }
            frontier = next;
        }
    }

    // Neighbors are tried in ascending id order, so the first complete path is
    // the lexicographically least one.
    bool dfs(int cur, int budget) {
        if (budget == 1) {
            if ((g.neighbor_mask(cur) >> target) & 1) {
                path.push_back(target);
                return true;
            }
            return false;
        }
        if (budget == 2) {
            // The middle vertex must neighbor both ends; take the least.
            std::uint64_t cand = g.neighbor_mask(cur) & g.neighbor_mask(target) & ~used;
            if (!cand) return false;
            path.push_back(std::countr_zero(cand));
            path.push_back(target);
            return true;
        }
        if (budget > n - std::popcount(used)) return false;  // not enough fresh vertices
        std::uint64_t cand = g.neighbor_mask(cur) & ~used & ~target_bit;
        while (cand) {
            int x = std::countr_zero(cand);
            cand &= cand - 1;
            if (distance_prune && dist[static_cast<std::size_t>(x)] > budget - 1) continue;
            used |= std::uint64_t{1} << x;
            path.push_back(x);
            if (dfs(x, budget - 1)) return true;
            path.pop_back();
            used &= ~(std::uint64_t{1} << x);
        }
        return false;
    }
};

}  // namespace

namespace {

// Two-colors the graph if possible; colors[v] in {0, 1}, component by component.
bool two_coloring(const Graph& g, std::array<std::int8_t, kMaxVertices>& colors) {
    const int n = g.vertex_count();
    colors.fill(-1);
    for (int s = 0; s < n; ++s) {
        if (colors[static_cast<std::size_t>(s)] >= 0) continue;
        std::uint64_t side[2] = {std::uint64_t{1} << s, 0};
        std::uint64_t frontier = side[0];
        std::uint64_t visited = side[0];
        int c = 0;
        colors[static_cast<std::size_t>(s)] = 0;
        while (frontier) {
            std::uint64_t expanded = 0;
            std::uint64_t scan = frontier;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                expanded |= g.neighbor_mask(v);
            }
            if (expanded & side[c]) return false;  // edge inside one color class
            std::uint64_t fresh = expanded & ~visited;
            c = 1 - c;
            side[c] |= fresh;
            visited |= fresh;
            scan = fresh;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                colors[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(c);
            }
            frontier = fresh;
        }
    }
    return true;
}

}  // namespace

std::optional<std::vector<int>> exact_length_path(const Graph& g, int from, int to, int length,
                                                  const PathSearchOptions& opt) {
    const int n = g.vertex_count();
    if (from < 0 || from >= n || to < 0 || to >= n)
        throw Error(ErrorCode::out_of_range, "path endpoint out of range");
    if (from == to) throw Error(ErrorCode::bad_args, "path endpoints must differ");
    if (length < 1 || length > n - 1)
        throw Error(ErrorCode::bad_args, "path length must be in [1, n-1]");

    if (opt.parity_prune) {
        std::array<std::int8_t, kMaxVertices> colors{};
        if (two_coloring(g, colors)) {
            const int needed_parity =
                colors[static_cast<std::size_t>(from)] == colors[static_cast<std::size_t>(to)] ? 0
                                                                                               : 1;
            if (length % 2 != needed_parity) return std::nullopt;
        }
    }

    PathSearch search(g, to, opt);
    if (opt.distance_prune && search.dist[static_cast<std::size_t>(from)] > length)
        return std::nullopt;
    search.path.push_back(from);
    search.used = std::uint64_t{1} << from;
    if (search.dfs(from, length)) return search.path;
    return std::nullopt;
}

std::optional<PathWitness> find_equal_degree_path(const Graph& g, int length) {
    const int n = g.vertex_count();
    if (length < 1) throw Error(ErrorCode::bad_args, "path length must be >= 1");
    if (length > n - 1) return std::nullopt;  // no simple path that long exists

    // Degree classes without map overhead; vertices within a class ascend.
    std::array<std::vector<int>, kMaxVertices> classes;
    for (int v = 0; v < n; ++v) classes[static_cast<std::size_t>(g.degree(v))].push_back(v);

    for (int d = 0; d < n; ++d) {
        const auto& members = classes[static_cast<std::size_t>(d)];
        if (members.size() < 2) continue;
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                auto path = exact_length_path(g, members[a], members[b], length);
                if (path) return PathWitness{std::move(*path)};
            }
        }
    }
    return std::nullopt;
}

bool avoids(const Graph& g, int length) { return !find_equal_degree_path(g, length).has_value(); }

bool witness_is_valid(const Graph& g, const PathWitness& w) {
    const int n = g.vertex_count();
    if (w.vertices.size() < 2) return false;
    std::uint64_t seen = 0;
    for (int v : w.vertices) {
        if (v < 0 || v >= n) return false;
        if ((seen >> v) & 1) return false;
        seen |= std::uint64_t{1} << v;
    }
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
        if (!g.has_edge(w.vertices[i], w.vertices[i + 1])) return false;
    return g.degree(w.vertices.front()) == g.degree(w.vertices.back());
}

}  // namespace degpath
