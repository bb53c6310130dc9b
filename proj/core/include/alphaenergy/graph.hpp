#ifndef ALPHAENERGY_GRAPH_HPP
#define ALPHAENERGY_GRAPH_HPP

#include "alphaenergy/densela.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace alphaenergy {

using Vertex = std::uint32_t;

/// Unordered vertex pair, normalised so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static Edge between(Vertex a, Vertex b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    /// Throws InvalidGraph on n == 0, out-of-range endpoints, self-loops or
    /// duplicate edges.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    static Graph empty(std::size_t n) { return Graph(n, std::span<const Edge>{}); }

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    /// Edges sorted lexicographically.
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool has_edge(Vertex a, Vertex b) const;

    /// Per-vertex degrees indexed by vertex.
    std::vector<std::size_t> degrees() const;
    /// Degrees sorted non-increasingly.
    std::vector<std::size_t> degree_sequence() const;
    std::size_t max_degree() const noexcept;
    bool is_regular() const noexcept;

    bool operator==(const Graph& other) const { return edges_ == other.edges_ && order() == other.order(); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

SymmetricMatrix adjacency_matrix(const Graph& g);
SymmetricMatrix degree_matrix(const Graph& g);

/// Breadth-first reachability from vertex 0.
bool is_connected(const Graph& g);

/// Copy of g without edge {u,v}; throws NoSuchEdge.
Graph delete_edge(const Graph& g, Vertex u, Vertex v);

/// Copy of g with edge {u,v} added; throws InvalidGraph if it already exists.
Graph add_edge(const Graph& g, Vertex u, Vertex v);

/// Sum of squared vertex degrees.
std::uint64_t zagreb_index(const Graph& g);

} // namespace alphaenergy

#endif // ALPHAENERGY_GRAPH_HPP
