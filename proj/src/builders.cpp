#include "metdim/builders.hpp"

#include <string>

#include "metdim/errors.hpp"

namespace metdim::make {
namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw InvalidArgument(std::string(what) + " needs a positive size, got " + std::to_string(n));
}

}  // namespace

Graph complete(int n) {
  require_positive(n, "complete graph");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty(int n) {
  require_positive(n, "empty graph");
  return Graph(n);
}

Graph path(int n) {
  require_positive(n, "path");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices, got " + std::to_string(n));
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_bipartite(int s, int t) {
  require_positive(s, "complete bipartite graph");
  require_positive(t, "complete bipartite graph");
  return join(empty(s), empty(t));
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
  return out;
}

Graph paw() { return join(complete(1), disjoint_union(complete(2), complete(1))); }

Graph diamond() {
  Graph g = complete(4);
  g.remove_edge(2, 3);
  return g;
}

Graph wheel4() { return join(cycle(4), complete(1)); }

Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

}  // namespace metdim::make
