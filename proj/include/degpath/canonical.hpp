#ifndef DEGPATH_CANONICAL_HPP
#define DEGPATH_CANONICAL_HPP

#include <compare>
#include <string>

#include "degpath/graph.hpp"

namespace degpath {

/// Canonical upper-triangle bit-string: equal bytes iff the graphs are
/// isomorphic.  Exact, but budgeted to n <= 10.
struct CanonicalForm {
    int n = 0;
    std::string bytes;  // pair bits packed MSB-first

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Graph& g);

/// The canonically relabeled copy of g.
Graph canonical_graph(const Graph& g);

/// Same labeling as canonical_graph, packed as pair bits (cheap set key).
std::uint64_t canonical_bits(const Graph& g);

}  // namespace degpath

#endif
