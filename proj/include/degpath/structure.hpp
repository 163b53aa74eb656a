#ifndef DEGPATH_STRUCTURE_HPP
#define DEGPATH_STRUCTURE_HPP

#include <cstdint>
#include <vector>

#include "degpath/graph.hpp"

namespace degpath {

/// Split of the vertex set around a pair (u, v): common neighbors, private
/// neighbors of each, and the vertices adjacent to neither.  Together with
/// {u, v} these four sets partition V, and
///   |common| = d(u) + d(v) + |neither| - n + 2*(1 - adjacent).
struct PairDecomposition {
    int u = 0;
    int v = 0;
    bool adjacent = false;
    std::uint64_t common = 0;   // N(u) & N(v)
    std::uint64_t only_u = 0;   // N(u) minus v and common
    std::uint64_t only_v = 0;   // N(v) minus u and common
    std::uint64_t neither = 0;  // rest of V minus {u, v}

    int common_size() const;
    int only_u_size() const;
    int only_v_size() const;
    int neither_size() const;
};

/// Both invariants (partition, size identity) are checked before returning.
PairDecomposition decompose(const Graph& g, int u, int v);

struct BoundViolation {
    int u = 0, v = 0, w = 0;

    friend bool operator==(const BoundViolation&, const BoundViolation&) = default;
};

/// Degree bound audit over a graph that avoids the length-5 configuration:
/// every common neighbor w of an equal-degree pair u, v must satisfy
///   d(w) <= n - d(u) + 2 + [uv edge].
/// A non-empty violation list on an avoiding graph indicates a bug in either
/// the path predicate or this audit, never a property of the graph.
struct AuditReport {
    bool applicable = false;  // true iff the graph avoids length 5
    std::vector<BoundViolation> violations;
};

AuditReport audit_common_neighbor_bound(const Graph& g);

/// Parameters of the constrained degree-sum maximum exposed by the CLI
/// `lambda` subcommand: the value sequence has delta-b distinct entries from
/// {1..delta-1} plus nu-delta-1 entries from {0..delta-1}, and values above
/// beta may appear at most once overall.
struct LambdaParams {
    int nu = 0;
    int delta = 0;
    int beta = 0;
    int b = 0;
};

/// Closed form of the maximum.  Dispatches the three regimes of b - beta and
/// cross-checks each against the unified expression.
long long lambda_closed(const LambdaParams& p);

/// Exhaustive maximization over all admissible value sequences (nu <= 12).
long long lambda_oracle(const LambdaParams& p);

}  // namespace degpath

#endif
