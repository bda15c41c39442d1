#include "metdim/twin.hpp"

#include <algorithm>
#include <numeric>

#include "metdim/errors.hpp"

namespace metdim {

std::string_view to_string(VertexType t) {
  switch (t) {
    case VertexType::One: return "1";
    case VertexType::K: return "K";
    case VertexType::N: return "N";
  }
  return "?";
}

VertexMask TwinDecomposition::members(int c) const { return to_mask(classes[c]); }

bool are_twins(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw InvalidArgument("are_twins needs two distinct vertices");
  return (g.neighbors(u) & ~vertex_bit(v)) == (g.neighbors(v) & ~vertex_bit(u));
}

TwinDecomposition twin_decomposition(const Graph& g) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (are_twins(g, u, v)) {
        const int a = find(u), b = find(v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> classes;
  for (Vertex v = 0; v < n; ++v) {
    const int root = find(v);
    if (class_of[root] < 0) {
      class_of[root] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    class_of[v] = class_of[root];
    classes[class_of[v]].push_back(v);
  }

  const int k = static_cast<int>(classes.size());
  Graph quotient(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.adjacent(classes[a].front(), classes[b].front())) quotient.add_edge(a, b);

  std::vector<VertexType> types;
  int alpha = 0;
  for (const auto& cls : classes) {
    if (cls.size() == 1) {
      types.push_back(VertexType::One);
    } else {
      // Classes are homogeneous, so one pair decides.
      types.push_back(g.adjacent(cls[0], cls[1]) ? VertexType::K : VertexType::N);
      ++alpha;
    }
  }

  return TwinDecomposition{g, std::move(classes), std::move(class_of), std::move(quotient),
                           std::move(types), alpha};
}

bool quotient_distance_check(const Graph& g, const TwinDecomposition& td) {
  if (g.order() < 2) throw InvalidArgument("quotient_distance_check needs n >= 2");
  const DistanceMatrix dg(g);
  if (!dg.connected()) throw ConnectivityError("quotient_distance_check needs a connected graph");
  const DistanceMatrix dq(td.quotient);
  if (diameter(dq) > diameter(dg)) return false;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const int cu = td.class_of[u], cv = td.class_of[v];
      if (cu == cv) continue;
      if (dq.at(cu, cv) != dg.at(u, v)) return false;
    }
  }
  return true;
}

std::vector<Vertex> shell(const DistanceMatrix& dm, Vertex v, int i) {
  if (v < 0 || v >= dm.order()) throw InvalidArgument("shell: vertex out of range");
  if (!dm.connected()) throw ConnectivityError("shell requires a connected graph");
  std::vector<Vertex> out;
  for (Vertex u = 0; u < dm.order(); ++u)
    if (dm.at(v, u) == i) out.push_back(u);
  return out;
}

}  // namespace metdim
