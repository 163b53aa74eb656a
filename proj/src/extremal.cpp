#include "degpath/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>
#include <unordered_set>

#include "degpath/canonical.hpp"
#include "degpath/graph6.hpp"
#include "degpath/path_finder.hpp"

namespace degpath {

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Unbiased-enough bounded draw that is bit-identical on every platform
// (std::uniform_int_distribution is not portable).
std::size_t draw_below(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// One augmentation level: canonical bits of every one-edge extension of every
// class in `level`.  Chunks are farmed out to workers with thread-local sets;
// the union is order-independent, so scheduling cannot change the result.
std::vector<std::uint64_t> augment_level(int n, const std::vector<std::uint64_t>& level,
                                         int threads) {
    const int workers = std::min<int>(resolve_threads(threads),
                                      std::max<std::size_t>(level.size(), 1));
    std::vector<std::unordered_set<std::uint64_t>> partial(static_cast<std::size_t>(workers));
    std::atomic<std::size_t> cursor{0};

    auto work = [&](int w) {
        auto& out = partial[static_cast<std::size_t>(w)];
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= level.size()) break;
            const Graph g = graph_from_pair_bits(n, level[i]);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (!g.has_edge(a, b)) out.insert(canonical_bits(g.with_edge(a, b)));
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    std::unordered_set<std::uint64_t> merged;
    for (auto& p : partial) merged.insert(p.begin(), p.end());
    std::vector<std::uint64_t> next(merged.begin(), merged.end());
    std::sort(next.begin(), next.end());
    return next;
}

void walk_iso_classes(int n, int threads,
                      const std::function<void(const Graph&, int)>& visit) {
    if (n < 1 || n > 10)
        throw Error(ErrorCode::size, "exhaustive enumeration budgeted to n <= 10");
    const int max_edges = pair_bit_count(n);
    std::vector<std::uint64_t> level = {0};
    for (int m = 0;; ++m) {
        for (std::uint64_t bits : level) visit(graph_from_pair_bits(n, bits), m);
        if (m == max_edges) break;
        level = augment_level(n, level, threads);
    }
}

}  // namespace

void for_each_iso_class(int n, const std::function<void(const Graph&)>& visit, int threads) {
    walk_iso_classes(n, threads, [&](const Graph& g, int) { visit(g); });
}

std::string report_tsv_header() { return "n\tl\tp\texact\tcount_extremal"; }

std::string report_tsv_row(const ExtremalReport& r) {
    return std::to_string(r.n) + "\t" + std::to_string(r.l) + "\t" + std::to_string(r.max_edges) +
           "\t" + (r.exact ? "1" : "0") + "\t" + std::to_string(r.extremal_graph6.size());
}

ExtremalReport enumerate_exact(int n, int l, int threads) {
    if (n < 2 || n > 10) throw Error(ErrorCode::size, "exact extremal needs 2 <= n <= 10");
    if (l < 1) throw Error(ErrorCode::bad_args, "path length must be >= 1");

    const auto start = Clock::now();
    ExtremalReport report;
    report.n = n;
    report.l = l;
    report.exact = true;

    if (l >= n) {
        // No simple path has that many edges, so every graph qualifies and the
        // complete graph is the unique maximizer.
        report.max_edges = pair_bit_count(n);
        report.extremal_graph6 = {graph6_encode(canonical_graph(complete_graph(n)))};
        report.graphs_examined = 1;
        report.wall_seconds = seconds_since(start);
        return report;
    }

    int best_edges = -1;
    std::vector<std::string> best;
    std::uint64_t examined = 0;
    walk_iso_classes(n, threads, [&](const Graph& g, int m) {
        ++examined;
        if (!avoids(g, l)) return;
        if (m > best_edges) {
            best_edges = m;
            best.clear();
        }
        if (m == best_edges) best.push_back(graph6_encode(g));
    });

    std::sort(best.begin(), best.end());
    report.max_edges = best_edges;
    report.extremal_graph6 = std::move(best);
    report.graphs_examined = examined;
    report.wall_seconds = seconds_since(start);
    return report;
}

namespace {

struct ClimbResult {
    Graph graph;
    std::uint64_t examined = 0;
};

std::vector<std::pair<int, int>> missing_edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

ClimbResult climb(Graph g, int l, std::mt19937_64 rng, const SearchConfig& cfg) {
    ClimbResult result{g, 0};
    int stagnation = 0;
    for (int step = 0; step < cfg.moves_per_restart; ++step) {
        auto gaps = missing_edges(result.graph);
        if (gaps.empty()) break;
        if (stagnation < cfg.plateau_patience) {
            auto [i, j] = gaps[draw_below(rng, gaps.size())];
            Graph h = result.graph.with_edge(i, j);
            ++result.examined;
            if (avoids(h, l)) {
                result.graph = std::move(h);
                stagnation = 0;
            } else {
                ++stagnation;
            }
        } else {
            // Plateau: trade one edge for another, keeping the count.
            auto present = result.graph.edges();
            auto [a, b] = present[draw_below(rng, present.size())];
            auto [i, j] = gaps[draw_below(rng, gaps.size())];
            Graph h = result.graph.without_edge(a, b).with_edge(i, j);
            ++result.examined;
            if (avoids(h, l)) {
                result.graph = std::move(h);
                stagnation = 0;
            }
        }
    }
    return result;
}

}  // namespace

ExtremalReport search_lower_bound(int n, int l, const SearchConfig& cfg) {
    if (n < 1 || n > kMaxVertices) throw Error(ErrorCode::size, "search needs 1 <= n <= 64");
    if (l < 1) throw Error(ErrorCode::bad_args, "path length must be >= 1");
    if (cfg.restarts < 1 || cfg.moves_per_restart < 0)
        throw Error(ErrorCode::bad_args, "search needs restarts >= 1 and moves >= 0");

    const auto start = Clock::now();
    std::uint64_t examined = 0;

    // Warm starts: complete bipartite splits, most balanced first.  Splits
    // that already contain the configuration are dropped.
    std::vector<Graph> starts;
    for (int a = n / 2; a >= 1; --a) {
        Graph candidate = complete_bipartite(a, n - a);
        ++examined;
        if (avoids(candidate, l)) starts.push_back(std::move(candidate));
    }

    std::vector<ClimbResult> runs;
    runs.reserve(static_cast<std::size_t>(cfg.restarts));
    for (int r = 0; r < cfg.restarts; ++r) {
        Graph g0 = static_cast<std::size_t>(r) < starts.size()
                       ? starts[static_cast<std::size_t>(r)]
                       : Graph(n);
        runs.push_back({std::move(g0), 0});
    }

    const int workers = std::min(resolve_threads(cfg.threads), cfg.restarts);
    std::atomic<int> cursor{0};
    auto work = [&] {
        for (;;) {
            int r = cursor.fetch_add(1);
            if (r >= cfg.restarts) break;
            std::mt19937_64 rng(splitmix64(cfg.seed + static_cast<std::uint64_t>(r)));
            runs[static_cast<std::size_t>(r)] =
                climb(runs[static_cast<std::size_t>(r)].graph, l, std::move(rng), cfg);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    // Deterministic merge: edge count descending, then graph6 ascending.
    const Graph* best = nullptr;
    std::string best_g6;
    for (const auto& run : runs) {
        examined += run.examined;
        std::string g6 = graph6_encode(run.graph);
        if (!best || run.graph.edge_count() > best->edge_count() ||
            (run.graph.edge_count() == best->edge_count() && g6 < best_g6)) {
            best = &run.graph;
            best_g6 = std::move(g6);
        }
    }

    ExtremalReport report;
    report.n = n;
    report.l = l;
    report.exact = false;
    report.seed = cfg.seed;
    report.max_edges = best ? best->edge_count() : 0;
    if (best)
        report.extremal_graph6 = {n <= 10 ? graph6_encode(canonical_graph(*best)) : best_g6};
    report.graphs_examined = examined;
    report.wall_seconds = seconds_since(start);
    return report;
}

bool verify_construction(int half_size, int l, ConstructionKind kind) {
    Graph g = kind == ConstructionKind::odd_order
                  ? complete_bipartite(half_size, half_size + 1)
                  : complete_bipartite(half_size - 1, half_size + 1);
    const int expected = kind == ConstructionKind::odd_order ? half_size * half_size + half_size
                                                             : half_size * half_size - 1;
    return g.edge_count() == expected && avoids(g, l);
}

}  // namespace degpath
