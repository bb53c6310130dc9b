#include "alphaenergy/graph.hpp"

#include "alphaenergy/error.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace alphaenergy {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    if (n == 0) {
        throw InvalidGraph("graph must have at least one vertex");
    }
    edges_.reserve(edges.size());
    for (const Edge& raw : edges) {
        if (raw.u >= n || raw.v >= n) {
            throw InvalidGraph("edge {" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                               "} has an endpoint outside 0.." + std::to_string(n - 1));
        }
        if (raw.u == raw.v) {
            throw InvalidGraph("self-loop at vertex " + std::to_string(raw.u));
        }
        edges_.push_back(Edge::between(raw.u, raw.v));
    }
    std::sort(edges_.begin(), edges_.end());
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw InvalidGraph("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    }
    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
    }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a >= order() || b >= order()) {
        return false;
    }
    const auto& list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> out;
    out.reserve(order());
    for (const auto& list : adjacency_) {
        out.push_back(list.size());
    }
    return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
    auto out = degrees();
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& list : adjacency_) {
        best = std::max(best, list.size());
    }
    return best;
}

bool Graph::is_regular() const noexcept {
    return std::all_of(adjacency_.begin(), adjacency_.end(),
                       [&](const auto& list) { return list.size() == adjacency_.front().size(); });
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
    SymmetricMatrix a(g.order());
    for (const Edge& e : g.edges()) {
        a.set(e.u, e.v, 1.0);
    }
    return a;
}

SymmetricMatrix degree_matrix(const Graph& g) {
    SymmetricMatrix d(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        d.set(v, v, static_cast<double>(g.degree(v)));
    }
    return d;
}

bool is_connected(const Graph& g) {
    std::vector<bool> seen(g.order(), false);
    std::queue<Vertex> frontier;
    frontier.push(0);
    seen[0] = true;
    std::size_t visited = 1;
    while (!frontier.empty()) {
        const Vertex v = frontier.front();
        frontier.pop();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++visited;
                frontier.push(w);
            }
        }
    }
    return visited == g.order();
}

Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) {
        throw NoSuchEdge("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    const Edge target = Edge::between(u, v);
    std::vector<Edge> kept;
    kept.reserve(g.size() - 1);
    for (const Edge& e : g.edges()) {
        if (e != target) {
            kept.push_back(e);
        }
    }
    return Graph(g.order(), kept);
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.push_back(Edge{u, v});
    return Graph(g.order(), edges);
}

std::uint64_t zagreb_index(const Graph& g) {
    std::uint64_t sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const std::uint64_t d = g.degree(v);
        sum += d * d;
    }
    return sum;
}

} // namespace alphaenergy
