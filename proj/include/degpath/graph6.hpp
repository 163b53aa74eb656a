#ifndef DEGPATH_GRAPH6_HPP
#define DEGPATH_GRAPH6_HPP

#include <string>
#include <string_view>

#include "degpath/graph.hpp"

namespace degpath {

/// Standard graph6 encoding: size prefix N(n), then the upper-triangle bits in
/// pair order (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups,
/// each +63.  n <= 62 uses the one-byte prefix, 63..64 the '~' long form.
std::string graph6_encode(const Graph& g);

/// Strict decoder: rejects bad prefixes, short/long payloads and nonzero padding.
Graph graph6_decode(std::string_view text);

}  // namespace degpath

#endif
