#include "degpath/graph6.hpp"

namespace degpath {

namespace {

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // 63 <= n <= 258047: '~' then n as three 6-bit groups, high first.
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw Error(ErrorCode::malformed, "empty graph6 string");
    for (char c : text)
        if (!printable(c))
            throw Error(ErrorCode::malformed, "graph6 byte out of range");

    std::size_t pos = 0;
    long long n = 0;
    if (text[0] != '~') {
        n = text[0] - 63;
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) throw Error(ErrorCode::malformed, "truncated graph6 size prefix");
        n = (static_cast<long long>(text[1] - 63) << 12) |
            (static_cast<long long>(text[2] - 63) << 6) | static_cast<long long>(text[3] - 63);
        if (n <= 62) throw Error(ErrorCode::malformed, "non-canonical graph6 size prefix");
        pos = 4;
    } else {
        if (text.size() < 8) throw Error(ErrorCode::malformed, "truncated graph6 size prefix");
        n = 0;
        for (int k = 2; k < 8; ++k) n = (n << 6) | static_cast<long long>(text[k] - 63);
        if (n <= 258047) throw Error(ErrorCode::malformed, "non-canonical graph6 size prefix");
        pos = 8;
    }
    if (n < 1 || n > kMaxVertices)
        throw Error(ErrorCode::size, "graph6 order " + std::to_string(n) + " unsupported");

    const int bits = pair_bit_count(static_cast<int>(n));
    const std::size_t payload = (static_cast<std::size_t>(bits) + 5) / 6;
    if (text.size() - pos < payload) throw Error(ErrorCode::malformed, "graph6 payload too short");
    if (text.size() - pos > payload) throw Error(ErrorCode::malformed, "trailing bytes after graph6 payload");

    Graph g(static_cast<int>(n));
    int k = 0;
    int i = 0, j = 1;
    for (std::size_t c = 0; c < payload; ++c) {
        int group = text[pos + c] - 63;
        for (int b = 5; b >= 0; --b, ++k) {
            int bit = (group >> b) & 1;
            if (k < bits) {
                if (bit) g = g.with_edge(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (bit) {
                throw Error(ErrorCode::malformed, "nonzero padding in graph6 payload");
            }
        }
    }
    return g;
}

}  // namespace degpath
