#ifndef DEGPATH_PATH_FINDER_HPP
#define DEGPATH_PATH_FINDER_HPP

#include <optional>
#include <vector>

#include "degpath/graph.hpp"

namespace degpath {

/// A simple path whose endpoints have equal degree in the host graph.
struct PathWitness {
    std::vector<int> vertices;  // length+1 pairwise distinct vertices

    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct PathSearchOptions {
    /// BFS lower-bound pruning; sound, never changes the result.
    bool distance_prune = true;
    /// In a bipartite graph every path between two fixed vertices has the same
    /// length parity, so a mismatched request fails without searching.  Sound,
    /// never changes the result.
    bool parity_prune = true;
};

/// The least simple path from `from` to `to` with exactly `length` edges under
/// lexicographic order of the vertex sequence, or nullopt if none exists.
std::optional<std::vector<int>> exact_length_path(const Graph& g, int from, int to, int length,
                                                  const PathSearchOptions& opt = {});

/// First equal-degree endpoint pair admitting a path of exactly `length`
/// edges, scanning degree classes ascending and pairs lexicographically.
/// Lengths beyond n-1 cannot be realized, so they yield nullopt.
std::optional<PathWitness> find_equal_degree_path(const Graph& g, int length);

/// True iff the graph has no equal-degree pair joined by a `length`-edge path.
bool avoids(const Graph& g, int length);

bool witness_is_valid(const Graph& g, const PathWitness& w);

}  // namespace degpath

#endif
