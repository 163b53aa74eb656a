#ifndef DEGPATH_GRAPH_HPP
#define DEGPATH_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace degpath {

// Hard cap of the exact engine: one adjacency row per machine word.
constexpr int kMaxVertices = 64;

enum class ErrorCode {
    out_of_range,  // vertex id not in [0, n)
    loop,          // edge (i, i)
    size,          // n outside the supported range of the operation
    bad_args,      // invalid argument combination
    malformed,     // unparsable input (graph6)
    bad_params,    // parameter set violates its invariants
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

/// Simple undirected graph on n <= 64 vertices, one adjacency bitmask per vertex.
/// Immutable once built; with_edge/without_edge return modified copies.
class Graph {
  public:
    explicit Graph(int n);

    /// Builds a graph from an explicit edge list (duplicates collapse).
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const noexcept { return n_; }
    bool has_edge(int u, int v) const;
    std::uint64_t neighbor_mask(int v) const;
    int degree(int v) const;
    int edge_count() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    /// All edges as (i, j) with i < j, in ascending order.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

  private:
    void check_vertex(int v) const;

    friend Graph graph_from_pair_bits(int n, std::uint64_t bits);

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

Graph complete_graph(int n);

/// K_{a,b}: vertices 0..a-1 on one side, a..a+b-1 on the other.
Graph complete_bipartite(int a, int b);

/// Half graph on 2n vertices: a_i = i-1, b_j = n+j-1, a_i ~ b_j iff i <= j.
Graph half_graph(int n);

struct DegreeProfile {
    std::vector<int> degrees;               // degrees[v] = deg(v)
    std::map<int, std::vector<int>> classes;  // degree -> sorted vertex list
    int max_degree = 0;
    std::optional<int> repeated_degree;     // largest degree held by >= 2 vertices
};

DegreeProfile degree_profile(const Graph& g);

// Upper-triangle bit packing shared by graph6, canonical forms and the
// labeled-graph iteration: bit k corresponds to the k-th pair in the order
// (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),... (columns ascending, row within column).

constexpr int pair_bit_count(int n) { return n * (n - 1) / 2; }

/// Packs the upper triangle into a word, first pair in bit 0.  Needs n <= 11.
std::uint64_t pair_bits(const Graph& g);

/// Inverse of pair_bits.
Graph graph_from_pair_bits(int n, std::uint64_t bits);

}  // namespace degpath

#endif
