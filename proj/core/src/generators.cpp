#include "alphaenergy/generators.hpp"

#include "alphaenergy/error.hpp"
#include "alphaenergy/random.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <type_traits>

namespace alphaenergy {

namespace {

Graph from_edges(std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }

Graph complete(std::size_t n) {
    if (n < 1) {
        throw InvalidParameters("complete: n must be at least 1");
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            edges.push_back({u, v});
        }
    }
    return from_edges(n, edges);
}

Graph star(std::size_t delta) {
    if (delta < 1) {
        throw InvalidParameters("star: delta must be at least 1");
    }
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= delta; ++v) {
        edges.push_back({0, v});
    }
    return from_edges(delta + 1, edges);
}

Graph cycle(std::size_t n) {
    if (n < 3) {
        throw InvalidParameters("cycle: n must be at least 3");
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        edges.push_back(Edge::between(v, static_cast<Vertex>((v + 1) % n)));
    }
    return from_edges(n, edges);
}

Graph path(std::size_t n) {
    if (n < 1) {
        throw InvalidParameters("path: n must be at least 1");
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) {
        edges.push_back({v, v + 1});
    }
    return from_edges(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    if (a < 1 || b < 1) {
        throw InvalidParameters("complete_bipartite: both parts must be non-empty");
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u) {
        for (Vertex v = 0; v < b; ++v) {
            edges.push_back({u, static_cast<Vertex>(a + v)});
        }
    }
    return from_edges(a + b, edges);
}

Graph petersen() {
    std::vector<std::pair<int, int>> subsets;
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            subsets.emplace_back(i, j);
        }
    }
    std::vector<Edge> edges;
    for (Vertex x = 0; x < subsets.size(); ++x) {
        for (Vertex y = x + 1; y < subsets.size(); ++y) {
            const auto [a, b] = subsets[x];
            const auto [c, d] = subsets[y];
            if (a != c && a != d && b != c && b != d) {
                edges.push_back({x, y});
            }
        }
    }
    return from_edges(subsets.size(), edges);
}

Graph erdos_renyi(const family::ErdosRenyi& spec) {
    if (spec.n < 1 || !(spec.p >= 0.0 && spec.p <= 1.0)) {
        throw InvalidParameters("erdos_renyi: need n >= 1 and p in [0, 1]");
    }
    Rng rng(spec.seed);
    const int attempts = spec.require_connected ? kErdosRenyiRetryCap : 1;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < spec.n; ++u) {
            for (Vertex v = u + 1; v < spec.n; ++v) {
                if (rng.unit() < spec.p) {
                    edges.push_back({u, v});
                }
            }
        }
        Graph g = from_edges(spec.n, edges);
        if (!spec.require_connected || is_connected(g)) {
            return g;
        }
    }
    throw GenerationFailure("erdos_renyi: no connected sample after " + std::to_string(kErdosRenyiRetryCap) +
                            " attempts");
}

// Is there still a pair among the leftover stubs that would form a new edge?
bool has_suitable_pair(const std::set<Edge>& edges, const std::map<Vertex, int>& leftovers) {
    if (leftovers.empty()) {
        return true;
    }
    for (auto a = leftovers.begin(); a != leftovers.end(); ++a) {
        for (auto b = std::next(a); b != leftovers.end(); ++b) {
            if (!edges.contains(Edge{a->first, b->first})) {
                return true;
            }
        }
    }
    return false;
}

// Pairing model with rejection: shuffle the stubs, pair neighbours, keep the
// pairs that would be loops or duplicates as leftovers and repeat on them.
std::optional<std::set<Edge>> try_pairing(std::size_t n, std::size_t k, Rng& rng) {
    std::set<Edge> edges;
    std::vector<Vertex> stubs;
    stubs.reserve(n * k);
    for (std::size_t copy = 0; copy < k; ++copy) {
        for (Vertex v = 0; v < n; ++v) {
            stubs.push_back(v);
        }
    }
    while (!stubs.empty()) {
        std::map<Vertex, int> leftovers;
        rng.shuffle(std::span<Vertex>(stubs));
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            const Vertex a = stubs[i];
            const Vertex b = stubs[i + 1];
            if (a != b && !edges.contains(Edge::between(a, b))) {
                edges.insert(Edge::between(a, b));
            } else {
                ++leftovers[a];
                ++leftovers[b];
            }
        }
        if (!has_suitable_pair(edges, leftovers)) {
            return std::nullopt;
        }
        stubs.clear();
        for (const auto& [v, count] : leftovers) {
            stubs.insert(stubs.end(), static_cast<std::size_t>(count), v);
        }
    }
    return edges;
}

Graph random_regular(const family::RandomRegular& spec) {
    const std::size_t n = spec.n;
    const std::size_t k = spec.k;
    if (n < 1 || k >= n || (n * k) % 2 != 0) {
        throw InvalidParameters("random_regular: need k < n and n*k even (n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
    }
    // Dense degrees are sampled as the complement of a sparse regular graph.
    const bool complement = 2 * k > n - 1;
    const std::size_t degree = complement ? n - 1 - k : k;

    Rng rng(spec.seed);
    for (int attempt = 0; attempt < kRandomRegularRetryCap; ++attempt) {
        auto sampled = try_pairing(n, degree, rng);
        if (!sampled) {
            continue;
        }
        std::vector<Edge> edges;
        if (complement) {
            for (Vertex u = 0; u < n; ++u) {
                for (Vertex v = u + 1; v < n; ++v) {
                    if (!sampled->contains(Edge{u, v})) {
                        edges.push_back({u, v});
                    }
                }
            }
        } else {
            edges.assign(sampled->begin(), sampled->end());
        }
        return from_edges(n, edges);
    }
    throw GenerationFailure("random_regular: pairing failed " + std::to_string(kRandomRegularRetryCap) + " times");
}

template <typename T>
T parse_number(std::string_view text, std::string_view context) {
    const std::string owned(text);
    if constexpr (std::is_floating_point_v<T>) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(owned, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (owned.empty() || used != owned.size()) {
            throw InvalidParameters("cannot parse number '" + owned + "' in " + std::string(context));
        }
        return static_cast<T>(value);
    } else {
        T value{};
        const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || result.ec != std::errc() || result.ptr != text.data() + text.size()) {
            throw InvalidParameters("cannot parse integer '" + owned + "' in " + std::string(context));
        }
        return value;
    }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

} // namespace

Graph generate(const Family& spec) {
    return std::visit(
        [](const auto& f) -> Graph {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, family::Complete>) {
                return complete(f.n);
            } else if constexpr (std::is_same_v<T, family::Star>) {
                return star(f.delta);
            } else if constexpr (std::is_same_v<T, family::Cycle>) {
                return cycle(f.n);
            } else if constexpr (std::is_same_v<T, family::Path>) {
                return path(f.n);
            } else if constexpr (std::is_same_v<T, family::CompleteBipartite>) {
                return complete_bipartite(f.a, f.b);
            } else if constexpr (std::is_same_v<T, family::Petersen>) {
                return petersen();
            } else if constexpr (std::is_same_v<T, family::ErdosRenyi>) {
                return erdos_renyi(f);
            } else {
                return random_regular(f);
            }
        },
        spec);
}

std::vector<Family> parse_families(std::string_view text) {
    const std::size_t colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    const std::string context = "family '" + std::string(text) + "'";

    if (name == "petersen") {
        if (!args.empty()) {
            throw InvalidParameters("petersen takes no parameters");
        }
        return {family::Petersen{}};
    }

    const auto fields = split(args, ',');
    auto expect = [&](std::size_t count) {
        if (args.empty() || fields.size() != count) {
            throw InvalidParameters(context + ": expected " + std::to_string(count) + " parameter(s)");
        }
    };

    if (name == "complete" || name == "star" || name == "cycle" || name == "path") {
        expect(1);
        std::size_t lo;
        std::size_t hi;
        const std::size_t dots = fields[0].find("..");
        if (dots == std::string_view::npos) {
            lo = hi = parse_number<std::size_t>(fields[0], context);
        } else {
            lo = parse_number<std::size_t>(fields[0].substr(0, dots), context);
            hi = parse_number<std::size_t>(fields[0].substr(dots + 2), context);
        }
        if (lo > hi) {
            throw InvalidParameters(context + ": empty range");
        }
        std::vector<Family> out;
        for (std::size_t v = lo; v <= hi; ++v) {
            if (name == "complete") {
                out.emplace_back(family::Complete{v});
            } else if (name == "star") {
                out.emplace_back(family::Star{v});
            } else if (name == "cycle") {
                out.emplace_back(family::Cycle{v});
            } else {
                out.emplace_back(family::Path{v});
            }
        }
        return out;
    }
    if (name == "bipartite") {
        expect(2);
        return {family::CompleteBipartite{parse_number<std::size_t>(fields[0], context),
                                          parse_number<std::size_t>(fields[1], context)}};
    }
    if (name == "er" || name == "er-connected") {
        expect(3);
        return {family::ErdosRenyi{parse_number<std::size_t>(fields[0], context),
                                   parse_number<double>(fields[1], context),
                                   parse_number<std::uint64_t>(fields[2], context), name == "er-connected"}};
    }
    if (name == "regular") {
        expect(3);
        return {family::RandomRegular{parse_number<std::size_t>(fields[0], context),
                                      parse_number<std::size_t>(fields[1], context),
                                      parse_number<std::uint64_t>(fields[2], context)}};
    }
    throw InvalidParameters("unknown graph family '" + std::string(name) + "'");
}

std::string describe(const Family& spec) {
    return std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            std::ostringstream os;
            if constexpr (std::is_same_v<T, family::Complete>) {
                os << "complete:" << f.n;
            } else if constexpr (std::is_same_v<T, family::Star>) {
                os << "star:" << f.delta;
            } else if constexpr (std::is_same_v<T, family::Cycle>) {
                os << "cycle:" << f.n;
            } else if constexpr (std::is_same_v<T, family::Path>) {
                os << "path:" << f.n;
            } else if constexpr (std::is_same_v<T, family::CompleteBipartite>) {
                os << "bipartite:" << f.a << ',' << f.b;
            } else if constexpr (std::is_same_v<T, family::Petersen>) {
                os << "petersen";
            } else if constexpr (std::is_same_v<T, family::ErdosRenyi>) {
                os.precision(17);
                os << (f.require_connected ? "er-connected:" : "er:") << f.n << ',' << f.p << ',' << f.seed;
            } else {
                os << "regular:" << f.n << ',' << f.k << ',' << f.seed;
            }
            return os.str();
        },
        spec);
}

} // namespace alphaenergy
