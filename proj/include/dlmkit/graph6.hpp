#ifndef DLMKIT_GRAPH6_HPP
#define DLMKIT_GRAPH6_HPP

#include <string>
#include <string_view>

#include "dlmkit/graph.hpp"

namespace dlm {

/// Parses one graph6 line (trailing LF/CR/space stripped). Supports the
/// one-byte header for n <= 62 and the 126-prefixed three-byte header up to
/// the vertex cap. Throws ParseError on malformed input.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding: upper-triangle column-major bits in 6-bit
/// groups, each +63, zero padded. No trailing newline.
std::string to_graph6(const Graph& g);

} // namespace dlm

#endif
