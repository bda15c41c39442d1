#pragma once

#include <string_view>
#include <vector>

#include "metdim/distance.hpp"
#include "metdim/graph.hpp"

namespace metdim {

/// Type of a twin class: a singleton, a clique of size >= 2, or an
/// independent set of size >= 2.
enum class VertexType { One, K, N };

/// "1", "K" or "N".
std::string_view to_string(VertexType t);

/// Partition of V(G) into twin classes together with the twin graph G*.
///
/// Classes are sorted internally and ordered by their smallest member;
/// quotient vertex i is classes[i]. Two quotient vertices are adjacent iff
/// the members of the corresponding classes are adjacent in G.
struct TwinDecomposition {
  Graph graph;
  std::vector<std::vector<Vertex>> classes;
  std::vector<int> class_of;
  Graph quotient;
  std::vector<VertexType> types;
  int alpha = 0;  // number of classes of type K or N

  int class_count() const { return static_cast<int>(classes.size()); }
  int class_size(int c) const { return static_cast<int>(classes[c].size()); }
  VertexMask members(int c) const;
  /// Lowest-index member of class c.
  Vertex representative(int c) const { return classes[c].front(); }
};

/// N(u) \ {v} == N(v) \ {u}. Throws InvalidArgument when u == v.
bool are_twins(const Graph& g, Vertex u, Vertex v);

TwinDecomposition twin_decomposition(const Graph& g);

/// diam(G*) <= diam(G) and d_G*(u*, v*) == d_G(u, v) for every pair of
/// non-twin vertices. Requires a connected g with n >= 2.
bool quotient_distance_check(const Graph& g, const TwinDecomposition& td);

/// Vertices at distance exactly i from v, ascending.
std::vector<Vertex> shell(const DistanceMatrix& dm, Vertex v, int i);

}  // namespace metdim
