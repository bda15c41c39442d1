#include "metdim/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "metdim/distance.hpp"
#include "metdim/errors.hpp"
#include "metdim/graph6.hpp"

namespace metdim {
namespace {

using Edges = std::vector<std::pair<int, int>>;

Edges normalized(Edges edges) {
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  return edges;
}

void check_template(const Template& t) {
  const StructureTemplate& shape = structure_template(t.structure);
  if (t.order() != shape.order() || static_cast<int>(t.types.size()) != shape.order()) {
    throw InvalidArgument("template for " + std::string(to_string(t.structure)) + " needs " +
                          std::to_string(shape.order()) + " classes");
  }
  if (normalized(t.quotient_edges) != normalized(shape.edges)) {
    throw InvalidArgument("template edges do not match structure " +
                          std::string(to_string(t.structure)));
  }
  for (int i = 0; i < t.order(); ++i) {
    const bool singleton = t.types[i] == VertexType::One;
    if (singleton ? t.sizes[i] != 1 : t.sizes[i] < 2) {
      throw InvalidArgument("class " + std::to_string(i) + ": size " + std::to_string(t.sizes[i]) +
                            " is inconsistent with type " + std::string(to_string(t.types[i])));
    }
  }
  if (t.vertex_count() > kMaxOrder) throw InvalidArgument("template expands beyond 64 vertices");
}

// Calls f(sizes) for every assignment of sizes in [lo, hi] to `slots`
// summing to `total`, lexicographically.
template <class F>
void compositions(int slots, int total, int lo, int hi, std::vector<int>& acc, F&& f) {
  if (slots == 0) {
    if (total == 0) f(acc);
    return;
  }
  for (int s = lo; s <= std::min(hi, total); ++s) {
    if (total - s < lo * (slots - 1)) break;
    acc.push_back(s);
    compositions(slots - 1, total - s, lo, hi, acc, f);
    acc.pop_back();
  }
}

}  // namespace

int Template::vertex_count() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

Template make_template(StructureId id, std::vector<VertexType> types, std::vector<int> sizes) {
  return Template{id, structure_template(id).edges, std::move(types), std::move(sizes)};
}

Graph expand(const Template& t) {
  check_template(t);
  std::vector<int> start(static_cast<std::size_t>(t.order()) + 1, 0);
  for (int i = 0; i < t.order(); ++i) start[i + 1] = start[i] + t.sizes[i];

  Graph g(start.back());
  for (int c = 0; c < t.order(); ++c) {
    if (t.types[c] != VertexType::K) continue;
    for (Vertex u = start[c]; u < start[c + 1]; ++u)
      for (Vertex v = u + 1; v < start[c + 1]; ++v) g.add_edge(u, v);
  }
  for (auto [a, b] : t.quotient_edges) {
    for (Vertex u = start[a]; u < start[a + 1]; ++u)
      for (Vertex v = start[b]; v < start[b + 1]; ++v) g.add_edge(u, v);
  }
  return g;
}

bool validate_template(const Template& t) {
  Graph g(1);
  try {
    g = expand(t);
  } catch (const Error&) {
    return false;
  }
  const TwinDecomposition td = twin_decomposition(g);
  if (td.class_count() != t.order()) return false;
  Vertex next = 0;
  for (int c = 0; c < t.order(); ++c) {
    if (td.class_size(c) != t.sizes[c] || td.classes[c].front() != next) return false;
    if (td.types[c] != t.types[c]) return false;
    next += t.sizes[c];
  }
  Graph shape(t.order());
  for (auto [a, b] : t.quotient_edges) shape.add_edge(a, b);
  return td.quotient == shape;
}

std::vector<Template> enumerate_templates(StructureId id, int n) {
  const StructureTemplate& shape = structure_template(id);
  const int k = shape.order();
  std::vector<Template> out;
  if (n < k) return out;

  // Automorphisms of the template graph; a (types, sizes) labelling is kept
  // only the first time its orbit is seen.
  const Graph g = shape.graph();
  std::vector<std::vector<int>> autos;
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : shape.edges) ok = ok && g.adjacent(perm[u], perm[v]);
    if (ok) autos.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::set<std::vector<int>> seen_orbits;
  auto orbit_key = [&](const std::vector<VertexType>& ts, const std::vector<int>& sizes) {
    std::vector<int> best;
    for (const auto& a : autos) {
      std::vector<int> key(static_cast<std::size_t>(2 * k));
      for (int i = 0; i < k; ++i) {
        key[a[i]] = static_cast<int>(ts[i]);
        key[k + a[i]] = sizes[i];
      }
      if (best.empty() || key < best) best = std::move(key);
    }
    return best;
  };

  static constexpr VertexType kTypes[] = {VertexType::One, VertexType::K, VertexType::N};
  const int max_size = n - k + 2;
  std::vector<VertexType> types(static_cast<std::size_t>(k));
  int combos = 1;
  for (int i = 0; i < k; ++i) combos *= 3;

  for (int code = 0; code < combos; ++code) {
    for (int i = k - 1, c = code; i >= 0; --i, c /= 3) types[i] = kTypes[c % 3];
    if (!shape.admits(types)) continue;

    const int blown = static_cast<int>(std::count_if(
        types.begin(), types.end(), [](VertexType t) { return t != VertexType::One; }));
    const int remaining = n - (k - blown);
    std::vector<int> acc;
    compositions(blown, remaining, 2, max_size, acc, [&](const std::vector<int>& split) {
      std::vector<int> sizes(static_cast<std::size_t>(k), 1);
      for (int i = 0, j = 0; i < k; ++i)
        if (types[i] != VertexType::One) sizes[i] = split[j++];
      if (!seen_orbits.insert(orbit_key(types, sizes)).second) return;
      Template t{id, shape.edges, types, std::move(sizes)};
      if (validate_template(t)) out.push_back(std::move(t));
    });
  }
  return out;
}

std::vector<CanonicalForm> enumerate_n_minus_3(int n, int cap) {
  if (n < 4) throw InvalidArgument("enumerate_n_minus_3 needs n >= 4");
  if (n > cap || n > kCanonicalCap) {
    throw CapExceeded("enumerate_n_minus_3: order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(std::min(cap, kCanonicalCap)));
  }
  std::set<CanonicalForm> forms;
  for (StructureId id : n_minus_3_structures()) {
    for (const Template& t : enumerate_templates(id, n)) forms.insert(canonical_form(expand(t)));
  }
  return {forms.begin(), forms.end()};
}

std::vector<Graph> all_graphs(int n, int cap) {
  if (n < 1) throw InvalidArgument("all_graphs needs n >= 1");
  if (n > cap || n > kCanonicalCap) {
    throw CapExceeded("all_graphs: order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(std::min(cap, kCanonicalCap)));
  }
  std::vector<Graph> level{Graph(1)};
  for (int m = 1; m < n; ++m) {
    std::set<CanonicalForm> next;
    for (const Graph& g : level) {
      for (VertexMask nbrs = 0; nbrs < vertex_bit(m); ++nbrs) {
        Graph h(m + 1);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        for_each_vertex(nbrs, [&](Vertex v) { h.add_edge(v, m); });
        next.insert(canonical_form(h));
      }
    }
    level.clear();
    for (const auto& f : next) level.push_back(parse_graph6(f.str()));
  }
  return level;
}

std::vector<Graph> connected_graphs(int n, int cap) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n, cap))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

std::vector<Fixture> sufficiency_fixtures() {
  using enum VertexType;
  struct Row {
    const char* name;
    StructureId id;
    std::vector<VertexType> types;
  };
  const std::vector<Row> rows = {
      {"G1:N-N-1", StructureId::G1, {N, N, One}},
      {"G1:N-N-N", StructureId::G1, {N, N, N}},
      {"G2a", StructureId::G2, {K, N, One}},
      {"G2b", StructureId::G2, {K, One, N}},
      {"G3:H", StructureId::G3, {One, N, One, One}},
      {"G3:H1", StructureId::G3, {K, N, K, One}},
      {"G3:H2", StructureId::G3, {K, N, One, N}},
      {"G3:H3", StructureId::G3, {N, N, One, N}},
      {"G4", StructureId::G4, {One, One, One, One, One}},
      {"G5:H", StructureId::G5, {One, One, One, One, One}},
      {"G5:R", StructureId::G5, {K, K, K, One, One}},
      {"G6:H", StructureId::G6, {One, One, One, One, One}},
      {"G6:H1", StructureId::G6, {N, One, One, One, One}},
      {"G6:H2", StructureId::G6, {K, K, K, One, One}},
      {"G6:H3", StructureId::G6, {K, One, K, K, One}},
      {"G7:H", StructureId::G7, {One, One, K, One, One}},
      {"G7:R", StructureId::G7, {K, K, K, One, One}},
      {"G8:H", StructureId::G8, {N, One, K, One}},
      {"G8:R", StructureId::G8, {N, K, K, One}},
      {"G9", StructureId::G9, {K, K, One, One}},
      {"G10:H", StructureId::G10, {K, K, One, One, One}},
      {"G10:R", StructureId::G10, {K, K, One, One, K}},
      {"D3_P4a", StructureId::D3_P4a, {One, One, One, One}},
      {"D3_P4a:leaf-K", StructureId::D3_P4a, {K, One, One, One}},
      {"D3_P4b", StructureId::D3_P4b, {K, K, One, One}},
      {"D3_P4c", StructureId::D3_P4c, {N, One, N, One}},
      {"D3_P4d", StructureId::D3_P4d, {N, K, N, One}},
      {"D3_Pprime:H", StructureId::D3_Pprime, {One, One, One, One, One}},
      {"D3_Pprime:R", StructureId::D3_Pprime, {One, K, K, One, K}},
  };

  std::vector<Fixture> out;
  for (const auto& s : rows) {
    std::vector<int> sizes;
    for (VertexType t : s.types) sizes.push_back(t == One ? 1 : 2);
    Graph g = expand(make_template(s.id, s.types, sizes));
    const int n = g.order();
    out.push_back(Fixture{s.name, s.id, std::move(g), n - 3});
  }
  return out;
}

}  // namespace metdim
