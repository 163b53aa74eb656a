#include "degpath/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace degpath {

namespace {

constexpr int kCanonicalMax = 10;
constexpr std::uint32_t kColMax = 0xFFFFFFFFu;

// Equitable refinement of the degree partition.  Cells are kept in an
// isomorphism-invariant order: initially ascending by degree, and every split
// replaces a cell by its subcells ascending by neighbor count against the
// target cell.  The scan order depends only on the partition structure, so
// isomorphic graphs refine to corresponding partitions.
std::vector<std::vector<int>> refined_partition(const Graph& g) {
    const int n = g.vertex_count();
    std::map<int, std::vector<int>> by_degree;
    for (int v = 0; v < n; ++v) by_degree[g.degree(v)].push_back(v);
    std::vector<std::vector<int>> cells;
    for (auto& [d, vs] : by_degree) cells.push_back(vs);

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t target = 0; target < cells.size() && !changed; ++target) {
            std::uint64_t target_mask = 0;
            for (int v : cells[target]) target_mask |= std::uint64_t{1} << v;
            for (std::size_t ci = 0; ci < cells.size() && !changed; ++ci) {
                if (cells[ci].size() <= 1) continue;
                std::map<int, std::vector<int>> split;
                for (int v : cells[ci])
                    split[std::popcount(g.neighbor_mask(v) & target_mask)].push_back(v);
                if (split.size() <= 1) continue;
                std::vector<std::vector<int>> next(cells.begin(),
                                                   cells.begin() + static_cast<long>(ci));
                for (auto& [cnt, vs] : split) next.push_back(vs);
                next.insert(next.end(), cells.begin() + static_cast<long>(ci) + 1, cells.end());
                cells = std::move(next);
                changed = true;
            }
        }
    }
    return cells;
}

// Minimal labeling search.  Positions are filled left to right; filling
// position p fixes column p of the upper triangle (adjacency of the new vertex
// to the already placed ones, earliest placed in the most significant bit).
// A branch is cut as soon as its column exceeds the best known one at that
// depth; a strictly smaller column resets all deeper columns.
struct LabelingSearch {
    const Graph& g;
    int n;
    std::vector<int> cell_of_position;
    std::vector<std::vector<int>> cells;
    std::vector<int> order;
    std::vector<std::uint32_t> best_col;
    std::vector<int> best_order;
    std::uint64_t used = 0;

    explicit LabelingSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {
        cells = refined_partition(g);
        cell_of_position.reserve(static_cast<std::size_t>(n));
        for (std::size_t ci = 0; ci < cells.size(); ++ci)
            for (std::size_t k = 0; k < cells[ci].size(); ++k)
                cell_of_position.push_back(static_cast<int>(ci));
        order.assign(static_cast<std::size_t>(n), -1);
        best_col.assign(static_cast<std::size_t>(n), kColMax);
        best_order.assign(static_cast<std::size_t>(n), -1);
    }

    void dfs(int p) {
        if (p == n) {
            best_order = order;  // every placed column matched best_col exactly
            return;
        }
        for (int w : cells[static_cast<std::size_t>(cell_of_position[static_cast<std::size_t>(p)])]) {
            if ((used >> w) & 1) continue;
            std::uint32_t col = 0;
            const std::uint64_t w_mask = g.neighbor_mask(w);
            for (int i = 0; i < p; ++i)
                col = (col << 1) | static_cast<std::uint32_t>(
                                       (w_mask >> order[static_cast<std::size_t>(i)]) & 1);
            if (col > best_col[static_cast<std::size_t>(p)]) continue;
            if (col < best_col[static_cast<std::size_t>(p)]) {
                best_col[static_cast<std::size_t>(p)] = col;
                for (int q = p + 1; q < n; ++q) best_col[static_cast<std::size_t>(q)] = kColMax;
            }
            order[static_cast<std::size_t>(p)] = w;
            used |= std::uint64_t{1} << w;
            dfs(p + 1);
            used &= ~(std::uint64_t{1} << w);
        }
    }

    std::vector<int> run() {
        dfs(0);
        return best_order;
    }
};

std::vector<int> canonical_order(const Graph& g) {
    if (g.vertex_count() > kCanonicalMax)
        throw Error(ErrorCode::size, "canonical form budgeted to n <= 10");
    return LabelingSearch(g).run();
}

Graph relabel(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (g.has_edge(order[static_cast<std::size_t>(p)], order[static_cast<std::size_t>(q)]))
                edges.emplace_back(p, q);
    return Graph::from_edges(n, edges);
}

}  // namespace

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_order(g)); }

std::uint64_t canonical_bits(const Graph& g) { return pair_bits(canonical_graph(g)); }

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    const std::uint64_t bits = canonical_bits(g);
    const int nbits = pair_bit_count(n);
    CanonicalForm form;
    form.n = n;
    form.bytes.assign(static_cast<std::size_t>((nbits + 7) / 8), '\0');
    for (int k = 0; k < nbits; ++k)
        if ((bits >> k) & 1)
            form.bytes[static_cast<std::size_t>(k / 8)] |= static_cast<char>(0x80 >> (k % 8));
    return form;
}

}  // namespace degpath
