#include "metdim/distance.hpp"

#include <algorithm>

#include "metdim/errors.hpp"

namespace metdim {

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()) {
  d_.assign(static_cast<std::size_t>(n_) * n_, static_cast<std::int8_t>(kUnreachable));
  for (Vertex s = 0; s < n_; ++s) {
    auto* row = &d_[static_cast<std::size_t>(s) * n_];
    VertexMask seen = vertex_bit(s);
    VertexMask frontier = seen;
    for (int depth = 0; frontier != 0; ++depth) {
      for_each_vertex(frontier, [&](Vertex v) { row[v] = static_cast<std::int8_t>(depth); });
      VertexMask next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
      frontier = next & ~seen;
      seen |= frontier;
    }
    if (seen != g.vertices()) connected_ = false;
  }
}

DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

bool is_connected(const Graph& g) {
  VertexMask seen = vertex_bit(0);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == g.vertices();
}

int diameter(const DistanceMatrix& dm) {
  if (!dm.connected()) throw ConnectivityError("diameter requires a connected graph");
  int best = 0;
  for (Vertex u = 0; u < dm.order(); ++u)
    for (Vertex v = u + 1; v < dm.order(); ++v) best = std::max(best, dm.at(u, v));
  return best;
}

int diameter(const Graph& g) { return diameter(DistanceMatrix(g)); }

}  // namespace metdim
