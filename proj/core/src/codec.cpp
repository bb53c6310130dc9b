#include "alphaenergy/codec.hpp"

#include "alphaenergy/error.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <vector>

namespace alphaenergy {

namespace {

constexpr int kBias = 63;

std::size_t triangle_bytes(std::size_t n) { return (n * (n - 1) / 2 + 5) / 6; }

} // namespace

Graph parse_graph6(std::string_view record) {
    if (record.empty()) {
        throw MalformedGraph6("graph6: empty record", 0);
    }
    const auto header = static_cast<unsigned char>(record[0]);
    if (header == 126) {
        throw Unsupported("graph6: orders above 62 (extended size header) are not supported");
    }
    if (header < kBias || header > 126) {
        throw MalformedGraph6("graph6: size byte out of range 63..126", 0);
    }
    const std::size_t n = header - kBias;
    if (n == 0) {
        throw Unsupported("graph6: the empty graph on zero vertices is not supported");
    }
    const std::size_t expected = 1 + triangle_bytes(n);
    if (record.size() != expected) {
        throw MalformedGraph6("graph6: expected " + std::to_string(expected) + " bytes for n=" + std::to_string(n) +
                                  ", got " + std::to_string(record.size()),
                              std::min(record.size(), expected));
    }
    for (std::size_t i = 1; i < record.size(); ++i) {
        const auto byte = static_cast<unsigned char>(record[i]);
        if (byte < kBias || byte > 126) {
            throw MalformedGraph6("graph6: byte out of range 63..126", i);
        }
    }

    std::vector<Edge> edges;
    std::size_t bit = 0;
    auto bit_at = [&](std::size_t index) {
        const int chunk = static_cast<unsigned char>(record[1 + index / 6]) - kBias;
        return (chunk >> (5 - index % 6)) & 1;
    };
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            if (bit_at(bit)) {
                edges.push_back({i, j});
            }
        }
    }
    for (std::size_t pad = bit; pad < 6 * triangle_bytes(n); ++pad) {
        if (bit_at(pad)) {
            throw MalformedGraph6("graph6: nonzero padding bit", 1 + pad / 6);
        }
    }
    return Graph(n, edges);
}

std::string serialize_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kGraph6MaxOrder) {
        throw Unsupported("graph6: cannot encode n=" + std::to_string(n) + " with a single-byte header");
    }
    std::string out(1 + triangle_bytes(n), static_cast<char>(kBias));
    out[0] = static_cast<char>(kBias + n);
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j)) {
                out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
            }
        }
    }
    return out;
}

namespace {

// Splits a line into whitespace-separated unsigned integers.
std::vector<std::size_t> integers(std::string_view line, std::size_t line_no) {
    std::vector<std::size_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        if (i == line.size()) {
            break;
        }
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        const std::size_t consumed = static_cast<std::size_t>(ptr - (line.data() + i));
        if (ec != std::errc() || consumed == 0 ||
            (i + consumed < line.size() && line[i + consumed] != ' ' && line[i + consumed] != '\t' &&
             line[i + consumed] != '\r')) {
            throw MalformedEdgeList("edge list: expected non-negative integers", line_no);
        }
        out.push_back(value);
        i += consumed;
    }
    return out;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::size_t n = 0;
    std::size_t m = 0;
    bool have_header = false;
    std::size_t header_line = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        const std::string_view line =
            text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') {
            continue;
        }
        const auto fields = integers(line, line_no);
        if (fields.size() != 2) {
            throw MalformedEdgeList("edge list: expected exactly two integers per line", line_no);
        }
        if (!have_header) {
            n = fields[0];
            m = fields[1];
            if (n == 0) {
                throw MalformedEdgeList("edge list: vertex count must be positive", line_no);
            }
            if (n > 1 && m > n * (n - 1) / 2) {
                throw MalformedEdgeList("edge list: more edges than a simple graph on n vertices allows", line_no);
            }
            have_header = true;
            header_line = line_no;
            continue;
        }
        if (edges.size() == m) {
            throw MalformedEdgeList("edge list: more edge lines than the declared m=" + std::to_string(m), line_no);
        }
        const std::size_t u = fields[0];
        const std::size_t v = fields[1];
        if (u >= n || v >= n) {
            throw MalformedEdgeList("edge list: vertex out of range 0.." + std::to_string(n - 1), line_no);
        }
        if (u == v) {
            throw MalformedEdgeList("edge list: self-loop at vertex " + std::to_string(u), line_no);
        }
        const Edge e = Edge::between(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (!seen.insert(e).second) {
            throw MalformedEdgeList("edge list: duplicate edge", line_no);
        }
        edges.push_back(e);
    }
    if (!have_header) {
        throw MalformedEdgeList("edge list: missing 'n m' header", line_no);
    }
    if (edges.size() != m) {
        throw MalformedEdgeList("edge list: header on line " + std::to_string(header_line) + " declares " +
                                    std::to_string(m) + " edges but " + std::to_string(edges.size()) +
                                    " were listed",
                                line_no);
    }
    return Graph(n, edges);
}

} // namespace alphaenergy
