#include "metdim/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "metdim/errors.hpp"

namespace metdim {

std::vector<Vertex> to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_vertex(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

VertexMask to_mask(std::span<const Vertex> vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= vertex_bit(v);
  return m;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder) {
    throw InvalidArgument("graph order must be in [1, 64], got " + std::to_string(n));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(n_));
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] & vertex_bit(v)) != 0;
}

VertexMask Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexMask m : adj_) twice += static_cast<std::size_t>(popcount(m));
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    for_each_vertex(adj_[u] & ~full_mask(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
  }
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("loops are not allowed");
  adj_[u] |= vertex_bit(v);
  adj_[v] |= vertex_bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~vertex_bit(v);
  adj_[v] &= ~vertex_bit(u);
}

Graph Graph::permuted(std::span<const Vertex> order) const {
  if (static_cast<int>(order.size()) != n_) {
    throw InvalidArgument("permutation length does not match graph order");
  }
  VertexMask seen = 0;
  for (Vertex v : order) {
    check_vertex(v);
    seen |= vertex_bit(v);
  }
  if (seen != vertices()) throw InvalidArgument("not a permutation");

  Graph out(n_);
  for (Vertex i = 0; i < n_; ++i) {
    for (Vertex j = i + 1; j < n_; ++j) {
      if (adj_[order[i]] & vertex_bit(order[j])) out.add_edge(i, j);
    }
  }
  return out;
}

Graph Graph::induced(VertexMask keep) const {
  keep &= vertices();
  const auto kept = to_vertices(keep);
  if (kept.empty()) throw InvalidArgument("induced subgraph must be non-empty");
  Graph out(static_cast<int>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      if (adj_[kept[i]] & vertex_bit(kept[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return out;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> deg;
  deg.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) deg.push_back(g.degree(v));
  std::sort(deg.begin(), deg.end(), std::greater<>());
  return deg;
}

}  // namespace metdim
