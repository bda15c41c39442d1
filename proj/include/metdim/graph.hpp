#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace metdim {

using Vertex = int;

/// Bitset over vertices 0..63; bit v set means v is a member.
using VertexMask = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr VertexMask vertex_bit(Vertex v) { return VertexMask{1} << v; }

constexpr VertexMask full_mask(int n) {
  return n >= kMaxOrder ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline int popcount(VertexMask m) { return std::popcount(m); }

/// Visits the members of `m` in increasing order.
template <class F>
void for_each_vertex(VertexMask m, F&& f) {
  while (m != 0) {
    const Vertex v = std::countr_zero(m);
    m &= m - 1;
    f(v);
  }
}

std::vector<Vertex> to_vertices(VertexMask m);
VertexMask to_mask(std::span<const Vertex> vs);

/// Simple undirected graph on vertices 0..n-1 with one adjacency word per
/// vertex. Loops are never stored and adjacency is always symmetric.
/// Connectivity is not an invariant.
class Graph {
 public:
  /// Edgeless graph of order n, 1 <= n <= 64.
  explicit Graph(int n);

  int order() const noexcept { return n_; }
  VertexMask vertices() const noexcept { return full_mask(n_); }

  bool adjacent(Vertex u, Vertex v) const;
  VertexMask neighbors(Vertex v) const;
  int degree(Vertex v) const { return popcount(neighbors(v)); }
  std::size_t edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Relabelled copy in which new vertex i is old vertex order[i].
  Graph permuted(std::span<const Vertex> order) const;

  /// Subgraph induced by `keep`, vertices renumbered in increasing order.
  Graph induced(VertexMask keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int n_;
  std::vector<VertexMask> adj_;
};

/// Sorted degree sequence, largest first.
std::vector<int> degree_sequence(const Graph& g);

}  // namespace metdim
