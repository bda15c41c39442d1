#pragma once

#include <cstdint>
#include <vector>

#include "metdim/graph.hpp"

namespace metdim {

/// All-pairs hop counts of an unweighted graph. Immutable once built.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  explicit DistanceMatrix(const Graph& g);

  int order() const noexcept { return n_; }
  /// d(u,v), or kUnreachable when no path exists.
  int at(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  bool connected() const noexcept { return connected_; }

 private:
  int n_;
  bool connected_ = true;
  std::vector<std::int8_t> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

/// One BFS from vertex 0.
bool is_connected(const Graph& g);

/// Largest finite distance. Throws ConnectivityError on disconnected input.
int diameter(const Graph& g);
int diameter(const DistanceMatrix& dm);

}  // namespace metdim
