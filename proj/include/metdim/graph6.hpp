#pragma once

#include <string>
#include <string_view>

#include "metdim/graph.hpp"

namespace metdim {

/// Largest order representable with the one-byte graph6 header.
inline constexpr int kMaxGraph6Order = 62;

/// Decodes one short-form graph6 line. Trailing CR/LF and spaces are
/// ignored. Throws ParseError naming the offending byte.
Graph parse_graph6(std::string_view text);

/// Encodes `g` in short-form graph6. Throws InvalidArgument when n > 62.
std::string to_graph6(const Graph& g);

}  // namespace metdim
