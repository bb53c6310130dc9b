#ifndef ALPHAENERGY_CODEC_HPP
#define ALPHAENERGY_CODEC_HPP

#include "alphaenergy/graph.hpp"

#include <string>
#include <string_view>

namespace alphaenergy {

/// Largest order expressible with a single-byte graph6 size header.
inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Decodes one graph6 record (no trailing newline).
///
/// Byte 0 is n + 63; the rest carry the upper triangle column by column,
/// x(0,1), x(0,2), x(1,2), x(0,3), ..., six bits per byte, most significant
/// bit first, zero padded. Throws MalformedGraph6 with the offending byte
/// offset, or Unsupported for n == 0 or an extended size header.
Graph parse_graph6(std::string_view record);

/// Inverse of parse_graph6; throws Unsupported if n > 62.
std::string serialize_graph6(const Graph& g);

/// Parses "n m" followed by m lines "u v". Blank lines and lines starting
/// with '#' are skipped. Throws MalformedEdgeList with the 1-based line.
Graph parse_edge_list(std::string_view text);

} // namespace alphaenergy

#endif // ALPHAENERGY_CODEC_HPP
