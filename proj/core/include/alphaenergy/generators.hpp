#ifndef ALPHAENERGY_GENERATORS_HPP
#define ALPHAENERGY_GENERATORS_HPP

#include "alphaenergy/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace alphaenergy {

namespace family {

struct Complete {
    std::size_t n;
};
/// K_{1,delta}; vertex 0 is the centre.
struct Star {
    std::size_t delta;
};
struct Cycle {
    std::size_t n;
};
struct Path {
    std::size_t n;
};
/// Parts {0..a-1} and {a..a+b-1}.
struct CompleteBipartite {
    std::size_t a;
    std::size_t b;
};
/// Kneser graph K(5,2).
struct Petersen {};
struct ErdosRenyi {
    std::size_t n;
    double p;
    std::uint64_t seed;
    bool require_connected = false;
};
struct RandomRegular {
    std::size_t n;
    std::size_t k;
    std::uint64_t seed;
};

} // namespace family

using Family = std::variant<family::Complete, family::Star, family::Cycle, family::Path,
                            family::CompleteBipartite, family::Petersen, family::ErdosRenyi,
                            family::RandomRegular>;

/// Connectivity retries for ErdosRenyi{require_connected = true}.
inline constexpr int kErdosRenyiRetryCap = 1000;
/// Pairing-model restarts before random_regular gives up.
inline constexpr int kRandomRegularRetryCap = 1000;

/// Builds the named graph. Throws InvalidParameters for out-of-range
/// parameters and GenerationFailure when a retry cap is exhausted.
Graph generate(const Family& spec);

/// Parses descriptors such as "complete:5", "star:3", "cycle:7", "path:4",
/// "bipartite:2,3", "petersen", "er:10,0.3,42", "er-connected:10,0.3,42" and
/// "regular:10,3,7". Single-parameter families also accept a range
/// "star:1..10", which expands to one descriptor per value.
std::vector<Family> parse_families(std::string_view text);

/// Human-readable descriptor that `parse_families` maps back to `spec`.
std::string describe(const Family& spec);

} // namespace alphaenergy

#endif // ALPHAENERGY_GENERATORS_HPP
