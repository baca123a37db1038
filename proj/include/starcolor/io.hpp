#ifndef starcolor_io_hpp
#define starcolor_io_hpp

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "starcolor/errors.hpp"
#include "starcolor/graph.hpp"

namespace starcolor {

// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (0,1) (0,2) (1,2) (0,3) ..., packed big-endian into 6-bit
// groups, each printed as (value + 63). N(n) is one byte for n <= 62, '~' plus
// three bytes for n <= 258047 and "~~" plus six bytes above that.

namespace detail {

inline constexpr int g6_bias = 63;
inline constexpr std::uint64_t g6_short_max = 62;
inline constexpr std::uint64_t g6_medium_max = 258047;
inline constexpr std::uint64_t g6_long_max = 68719476735ULL;

inline void g6_put_bits(std::string& out, std::uint64_t value, int groups) {
    for (int i = groups - 1; i >= 0; --i) {
        out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3f) + g6_bias));
    }
}

inline int g6_value(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw ParseError("graph6: truncated input", pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < g6_bias || c > 126) {
        throw ParseError("graph6: byte " + std::to_string(c) + " outside printable range 63..126", pos);
    }
    return c - g6_bias;
}

inline std::string_view strip_line(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

} // namespace detail

inline std::string write_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    if (n <= detail::g6_short_max) {
        detail::g6_put_bits(out, n, 1);
    } else if (n <= detail::g6_medium_max) {
        out.push_back('~');
        detail::g6_put_bits(out, n, 3);
    } else {
        out += "~~";
        detail::g6_put_bits(out, n, 6);
    }

    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + detail::g6_bias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + detail::g6_bias));
    return out;
}

/// Parses one graph6 record. An optional ">>graph6<<" header and a trailing
/// newline are accepted. Errors carry the byte offset of the offending byte.
inline Graph read_graph6(std::string_view text) {
    text = detail::strip_line(text);
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) pos = header.size();
    if (pos >= text.size()) throw ParseError("graph6: empty input", pos);

    std::uint64_t n = 0;
    if (text[pos] != '~') {
        n = static_cast<std::uint64_t>(detail::g6_value(text, pos));
        pos += 1;
    } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
        pos += 2;
        for (int i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::uint64_t>(detail::g6_value(text, pos++));
        if (n <= detail::g6_medium_max) throw ParseError("graph6: non-canonical 8-byte size", pos - 6);
    } else {
        pos += 1;
        for (int i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(detail::g6_value(text, pos++));
        if (n <= detail::g6_short_max) throw ParseError("graph6: non-canonical 4-byte size", pos - 3);
    }
    if (n > (std::uint64_t{1} << 20)) throw ParseError("graph6: order too large", 0);

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() - pos < bytes) {
        throw ParseError("graph6: payload truncated, expected " + std::to_string(bytes) +
                             " bytes, found " + std::to_string(text.size() - pos),
                         text.size());
    }
    if (text.size() - pos > bytes) throw ParseError("graph6: trailing bytes after payload", pos + bytes);

    GraphBuilder b(static_cast<std::size_t>(n));
    std::uint64_t index = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++index) {
            const int byte = detail::g6_value(text, pos + index / 6);
            if ((byte >> (5 - index % 6)) & 1) b.add_edge(i, j);
        }
    }
    return std::move(b).build();
}

/// One graph per non-empty line.
inline std::vector<Graph> read_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = detail::strip_line(text.substr(start, end - start));
        if (!line.empty()) {
            try {
                out.push_back(read_graph6(line));
            } catch (const ParseError& e) {
                throw ParseError(std::string("line ") + std::to_string(out.size() + 1) + ": " + e.what(),
                                 start + e.position());
            }
        }
        start = end + 1;
    }
    return out;
}

// DIMACS .col: "c" comment lines, one "p edge n m" header ("p col" is
// accepted too), then "e u v" lines with 1-based endpoints.

inline std::string write_dimacs_col(const Graph& g) {
    std::ostringstream out;
    const auto es = g.edges();
    out << "p edge " << g.order() << ' ' << es.size() << '\n';
    for (const auto& [u, v] : es) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    return out.str();
}

/// Parses DIMACS text. Errors carry the 1-based line number. A header edge
/// count that disagrees with the number of distinct edges is reported through
/// `warnings` (when given); the edges actually listed win.
inline Graph read_dimacs_col(std::string_view text, std::vector<std::string>* warnings = nullptr) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::size_t header_line = 0;
    std::uint64_t declared_edges = 0;
    std::optional<GraphBuilder> builder;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag) || tag == "c") continue;
        if (tag == "p") {
            if (builder) throw ParseError("dimacs: duplicate header", line_no);
            std::string kind;
            long long n = -1;
            long long m = -1;
            if (!(fields >> kind >> n >> m) || (kind != "edge" && kind != "col") || n < 0 || m < 0) {
                throw ParseError("dimacs: malformed header, expected 'p edge n m'", line_no);
            }
            builder.emplace(static_cast<std::size_t>(n));
            declared_edges = static_cast<std::uint64_t>(m);
            header_line = line_no;
        } else if (tag == "e") {
            if (!builder) throw ParseError("dimacs: edge before 'p edge' header", line_no);
            long long u = 0;
            long long v = 0;
            if (!(fields >> u >> v)) throw ParseError("dimacs: malformed edge line", line_no);
            const auto n = static_cast<long long>(builder->order());
            if (u < 1 || v < 1 || u > n || v > n) {
                throw ParseError("dimacs: vertex index " + std::to_string((u < 1 || u > n) ? u : v) +
                                     " outside 1.." + std::to_string(n),
                                 line_no);
            }
            if (u == v) throw ParseError("dimacs: self-loop at vertex " + std::to_string(u), line_no);
            builder->add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw ParseError("dimacs: unknown line type '" + tag + "'", line_no);
        }
    }
    if (!builder) throw ParseError("dimacs: missing 'p edge' header", line_no);
    Graph g = std::move(*builder).build();
    if (warnings && g.size() != declared_edges) {
        warnings->push_back("dimacs: header on line " + std::to_string(header_line) + " declares " +
                            std::to_string(declared_edges) + " edges, found " + std::to_string(g.size()));
    }
    return g;
}

} // namespace starcolor

#endif // starcolor_io_hpp
