#pragma once

#include "metdim/graph.hpp"

/// Constructors for the named graphs used throughout the library. Binary
/// operations number the first operand's vertices before the second's.
namespace metdim::make {

Graph complete(int n);
Graph empty(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete_bipartite(int s, int t);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

/// Triangle 0,1,2 with pendant 3 attached to 0.
Graph paw();
/// K_4 minus the edge 2-3; vertices 0,1 have degree 3.
Graph diamond();
/// C_4 on 0..3 joined to hub 4.
Graph wheel4();
Graph petersen();

}  // namespace metdim::make
