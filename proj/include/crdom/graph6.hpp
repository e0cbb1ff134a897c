#pragma once

#include <string>
#include <string_view>

#include "crdom/graph.hpp"

namespace crdom {

// graph6: one byte n+63 for the order, then the upper adjacency triangle in
// column order ((0,1), (0,2), (1,2), (0,3), ...) packed six bits per byte,
// most significant bit first, each byte offset by 63. Only the single-byte
// order form (n <= 62) is handled.

inline constexpr std::string_view graph6_header = ">>graph6<<";

inline std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    out.reserve(1 + static_cast<std::size_t>((n * (n - 1) / 2 + 5) / 6));
    out.push_back(static_cast<char>(n + 63));

    int value = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | static_cast<int>((g.row(i) >> j) & 1U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((value << (6 - filled)) + 63));
    return out;
}

/// Parses one graph6 line. A leading ">>graph6<<" header and a trailing
/// line ending are accepted. Throws ParseError carrying the byte offset of
/// the first fault.
inline Graph from_graph6(std::string_view line)
{
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);

    std::size_t pos = 0;
    if (line.substr(0, graph6_header.size()) == graph6_header)
        pos = graph6_header.size();

    if (pos >= line.size())
        throw ParseError("empty graph6 line", pos);

    const auto head = static_cast<unsigned char>(line[pos]);
    if (head == 126)
        throw ParseError("multi-byte order form is not supported (order > 62)", pos);
    if (head < 63 || head > 126)
        throw ParseError("byte outside the graph6 range 63..126", pos);
    const int n = head - 63;
    if (n == 0)
        throw ParseError("graphs of order 0 are not supported", pos);
    ++pos;

    const int pairs = n * (n - 1) / 2;
    const auto body_bytes = static_cast<std::size_t>((pairs + 5) / 6);

    GraphBuilder b{n};
    int i = 0;
    int j = 1;
    int consumed = 0;
    for (std::size_t k = 0; k < body_bytes; ++k, ++pos) {
        if (pos >= line.size())
            throw ParseError("truncated graph6 body: expected " + std::to_string(body_bytes) + " bytes", pos);
        const auto c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126)
            throw ParseError("byte outside the graph6 range 63..126", pos);
        const int value = c - 63;
        for (int shift = 5; shift >= 0; --shift) {
            const bool set = (value >> shift) & 1;
            if (consumed < pairs) {
                if (set)
                    b.connect(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
                ++consumed;
            }
            else if (set) {
                throw ParseError("nonzero padding bit", pos);
            }
        }
    }
    if (pos != line.size())
        throw ParseError("trailing bytes after graph6 body", pos);
    return b.build();
}

} // namespace crdom
