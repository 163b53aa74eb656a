#ifndef DEGPATH_EXTREMAL_HPP
#define DEGPATH_EXTREMAL_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "degpath/graph.hpp"

namespace degpath {

struct ExtremalReport {
    int n = 0;
    int l = 0;
    int max_edges = 0;                         // p, or the best lower bound
    std::vector<std::string> extremal_graph6;  // canonical graph6 when n <= 10
    bool exact = false;
    std::uint64_t graphs_examined = 0;
    double wall_seconds = 0.0;
    std::uint64_t seed = 0;  // 0 for exact runs
};

std::string report_tsv_header();
std::string report_tsv_row(const ExtremalReport& report);

/// Exhaustive p computation over all iso-classes on n vertices (n <= 10).
/// Generation is levelwise by edge count with canonical-form dedup; the
/// avoidance property is not monotone under edge addition, so every class is
/// augmented regardless of its own verdict.
ExtremalReport enumerate_exact(int n, int l, int threads = 0);

struct SearchConfig {
    std::uint64_t seed = 1;
    int restarts = 16;
    int moves_per_restart = 3000;
    int plateau_patience = 50;
    int threads = 0;  // 0 = hardware concurrency
};

/// Seeded hill climb over avoiding graphs: random edge additions, plateau
/// edge swaps, warm starts from the complete bipartite splits of n.  Output is
/// a lower bound (exact = false) and is byte-deterministic for a fixed config.
ExtremalReport search_lower_bound(int n, int l, const SearchConfig& cfg = {});

enum class ConstructionKind {
    odd_order,   // K_{k,k+1} on 2k+1 vertices, k*k + k edges
    even_order,  // K_{k-1,k+1} on 2k vertices, k*k - 1 edges
};

/// Builds the construction and checks both the avoidance and the edge count.
bool verify_construction(int half_size, int l, ConstructionKind kind);

/// Visits one canonically labeled representative per iso-class, levels by
/// edge count ascending, classes within a level by canonical bits ascending.
void for_each_iso_class(int n, const std::function<void(const Graph&)>& visit, int threads = 0);

}  // namespace degpath

#endif
