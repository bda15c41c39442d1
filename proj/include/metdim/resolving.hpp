#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "metdim/distance.hpp"
#include "metdim/graph.hpp"

namespace metdim {

/// Distance vector of a vertex with respect to an ordered landmark list.
using Representation = std::vector<int>;

Representation representation(const DistanceMatrix& dm, Vertex v,
                              std::span<const Vertex> landmarks);

/// True iff the vertices outside `landmarks` have pairwise distinct
/// representations. Landmarks are always distinguished by their own zero
/// coordinate, so they are not compared. Requires a connected graph.
bool is_resolving_set(const DistanceMatrix& dm, std::span<const Vertex> landmarks);

struct BasisResult {
  int beta = 0;
  std::vector<Vertex> basis;   // ascending
  std::uint64_t explored = 0;  // candidate sets tested
};

inline constexpr int kDefaultNaiveCap = 12;
inline constexpr int kDefaultPrunedCap = 20;

/// Tries every vertex subset by increasing size, lexicographically within a
/// size, and returns the first resolving one. Kept as the reference oracle.
BasisResult metric_dimension_naive(const Graph& g, int cap = kDefaultNaiveCap);

/// Exact metric dimension with twin pruning.
///
/// Every resolving set holds all but at most one vertex of each twin class,
/// and a missing member may always be swapped for another member of its
/// class. So the search fixes the mandatory part (each class minus its
/// lowest-index member) and only enumerates subsets of the class
/// representatives, smallest first, lexicographically within a size.
BasisResult metric_dimension(const Graph& g, int cap = kDefaultPrunedCap);

/// n - n(G*) <= beta <= n - diam(G) and 1 <= beta <= n - 1.
bool verify_bounds(const Graph& g, const BasisResult& result);

}  // namespace metdim
