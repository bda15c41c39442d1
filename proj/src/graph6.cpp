#include "metdim/graph6.hpp"

#include <vector>

#include "metdim/errors.hpp"

namespace metdim {
namespace {

constexpr int kOffset = 63;
constexpr int kMaxByte = 126;

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("empty graph6 string", 0);

  const int header = static_cast<unsigned char>(text[0]);
  if (header == kMaxByte) throw ParseError("long-form graph6 header (n > 62) is not supported", 0);
  if (header < kOffset || header > kMaxByte) throw ParseError("invalid graph6 header byte", 0);
  const int n = header - kOffset;
  if (n == 0) throw ParseError("graph6 header encodes an empty graph", 0);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - 1 < body) throw ParseError("graph6 body too short", text.size());
  if (text.size() - 1 > body) throw ParseError("unexpected trailing bytes in graph6", 1 + body);

  Graph g(n);
  std::size_t k = 0;
  for (Vertex col = 1; col < n; ++col) {
    for (Vertex row = 0; row < col; ++row, ++k) {
      const std::size_t pos = 1 + k / 6;
      const int byte = static_cast<unsigned char>(text[pos]);
      if (byte < kOffset || byte > kMaxByte) throw ParseError("graph6 byte out of range", pos);
      if ((byte - kOffset) & (1 << (5 - k % 6))) g.add_edge(row, col);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t pos = body;
    const int byte = static_cast<unsigned char>(text[pos]);
    if (byte < kOffset || byte > kMaxByte) throw ParseError("graph6 byte out of range", pos);
    const int padding = (1 << (6 - bits % 6)) - 1;
    if ((byte - kOffset) & padding) throw ParseError("non-zero padding bits in graph6", pos);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw InvalidArgument("graph6 short form supports n <= 62, got " + std::to_string(n));
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<int> sextets((bits + 5) / 6, 0);
  std::size_t k = 0;
  for (Vertex col = 1; col < n; ++col) {
    for (Vertex row = 0; row < col; ++row, ++k) {
      if (g.adjacent(row, col)) sextets[k / 6] |= 1 << (5 - k % 6);
    }
  }
  std::string out;
  out.reserve(1 + sextets.size());
  out.push_back(static_cast<char>(kOffset + n));
  for (int s : sextets) out.push_back(static_cast<char>(kOffset + s));
  return out;
}

}  // namespace metdim
