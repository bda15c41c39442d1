#include "metdim/characterize.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "metdim/distance.hpp"
#include "metdim/errors.hpp"

namespace metdim {

std::string_view to_string(StructureId id) {
  switch (id) {
    case StructureId::Path: return "PATH";
    case StructureId::Complete: return "COMPLETE";
    case StructureId::NM2_Kst: return "NM2_Kst";
    case StructureId::NM2_JoinEmpty: return "NM2_JoinEmpty";
    case StructureId::NM2_JoinKtK1: return "NM2_JoinKtK1";
    case StructureId::G1: return "G1";
    case StructureId::G2: return "G2";
    case StructureId::G3: return "G3";
    case StructureId::G4: return "G4";
    case StructureId::G5: return "G5";
    case StructureId::G6: return "G6";
    case StructureId::G7: return "G7";
    case StructureId::G8: return "G8";
    case StructureId::G9: return "G9";
    case StructureId::G10: return "G10";
    case StructureId::D3_P4a: return "D3_P4a";
    case StructureId::D3_P4b: return "D3_P4b";
    case StructureId::D3_P4c: return "D3_P4c";
    case StructureId::D3_P4d: return "D3_P4d";
    case StructureId::D3_Pprime: return "D3_Pprime";
  }
  return "?";
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Path: return "PATH";
    case Family::Complete: return "COMPLETE";
    case Family::NMinus2: return "N-2";
    case Family::NMinus3: return "N-3";
  }
  return "?";
}

Family family_of(StructureId id) {
  switch (id) {
    case StructureId::Path: return Family::Path;
    case StructureId::Complete: return Family::Complete;
    case StructureId::NM2_Kst:
    case StructureId::NM2_JoinEmpty:
    case StructureId::NM2_JoinKtK1: return Family::NMinus2;
    default: return Family::NMinus3;
  }
}

int predicted_beta(Family f, int n) {
  switch (f) {
    case Family::Path: return 1;
    case Family::Complete: return n - 1;
    case Family::NMinus2: return n - 2;
    case Family::NMinus3: return n - 3;
  }
  return 0;
}

bool Classification::contains(Family f) const {
  return std::any_of(predicted.begin(), predicted.end(),
                     [&](const Prediction& p) { return family_of(p.id) == f; });
}

bool is_path(const Graph& g) {
  const int n = g.order();
  if (g.edge_count() != static_cast<std::size_t>(n - 1) || !is_connected(g)) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

bool is_complete(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != g.order() - 1) return false;
  return true;
}

std::optional<NMinus2Match> match_n_minus_2(const Graph& g) {
  const int n = g.order();
  if (n < 4) throw InvalidArgument("match_n_minus_2 needs n >= 4");
  if (!is_connected(g)) throw ConnectivityError("match_n_minus_2 requires a connected graph");
  const VertexMask all = g.vertices();

  // K_{s,t}: the part of vertex 0 and its neighbourhood.
  {
    const VertexMask b = g.neighbors(0);
    const VertexMask a = all & ~b;
    bool ok = true;
    for_each_vertex(a, [&](Vertex v) { ok = ok && g.neighbors(v) == b; });
    for_each_vertex(b, [&](Vertex v) { ok = ok && g.neighbors(v) == a; });
    if (ok) {
      const int s = popcount(a), t = popcount(b);
      return NMinus2Match{StructureId::NM2_Kst, std::min(s, t), std::max(s, t)};
    }
  }

  VertexMask universal = 0;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) universal |= vertex_bit(v);
  const VertexMask rest = all & ~universal;
  if (universal == 0) return std::nullopt;

  // K_s v ~K_t: the non-universal vertices are independent.
  {
    bool independent = true;
    for_each_vertex(rest, [&](Vertex v) { independent = independent && (g.neighbors(v) & rest) == 0; });
    if (independent && popcount(rest) >= 2) {
      return NMinus2Match{StructureId::NM2_JoinEmpty, popcount(universal), popcount(rest)};
    }
  }

  // K_s v (K_t u K_1): one isolated vertex in G[rest], the others a clique.
  for (Vertex x = 0; x < n; ++x) {
    if (!(rest & vertex_bit(x)) || (g.neighbors(x) & rest) != 0) continue;
    const VertexMask clique = rest & ~vertex_bit(x);
    if (clique == 0) continue;
    bool ok = true;
    for_each_vertex(clique, [&](Vertex v) { ok = ok && (g.neighbors(v) & rest) == (clique & ~vertex_bit(v)); });
    if (ok) return NMinus2Match{StructureId::NM2_JoinKtK1, popcount(universal), popcount(clique)};
  }
  return std::nullopt;
}

namespace {

std::optional<StructureMatch> match_templates(const TwinDecomposition& td,
                                              std::span<const StructureTemplate> templates) {
  const Graph& q = td.quotient;
  const int k = q.order();
  std::vector<VertexType> mapped(static_cast<std::size_t>(k));
  for (const auto& tpl : templates) {
    if (tpl.order() != k || tpl.edges.size() != q.edge_count()) continue;
    const Graph shape = tpl.graph();
    std::vector<int> image(static_cast<std::size_t>(k));
    std::iota(image.begin(), image.end(), 0);
    do {
      bool iso = true;
      for (int i = 0; i < k && iso; ++i)
        for (int j = i + 1; j < k && iso; ++j)
          iso = shape.adjacent(i, j) == q.adjacent(image[i], image[j]);
      if (!iso) continue;
      for (int i = 0; i < k; ++i) mapped[i] = td.types[image[i]];
      if (!tpl.admits(mapped)) continue;
      StructureMatch m{tpl.id, {}};
      for (int i = 0; i < k; ++i) m.roles.roles.emplace_back(tpl.roles[i], image[i]);
      return m;
    } while (std::next_permutation(image.begin(), image.end()));
  }
  return std::nullopt;
}

void require_diameter(const TwinDecomposition& td, int want, const char* who) {
  const DistanceMatrix dm(td.graph);
  if (!dm.connected()) throw ConnectivityError(std::string(who) + " requires a connected graph");
  if (diameter(dm) != want) {
    throw InvalidArgument(std::string(who) + " requires diameter " + std::to_string(want));
  }
}

}  // namespace

std::optional<StructureMatch> match_diam2_structure(const TwinDecomposition& td) {
  require_diameter(td, 2, "match_diam2_structure");
  return match_templates(td, diameter2_templates());
}

std::optional<StructureMatch> match_diam3_structure(const TwinDecomposition& td) {
  require_diameter(td, 3, "match_diam3_structure");
  return match_templates(td, diameter3_templates());
}

Classification classify(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw InvalidArgument("classify needs n >= 2");
  const DistanceMatrix dm(g);
  if (!dm.connected()) throw ConnectivityError("classify requires a connected graph");

  Classification out;
  auto add = [&](StructureId id) -> Prediction& {
    out.predicted.push_back(Prediction{id, predicted_beta(family_of(id), n), {}, std::nullopt});
    return out.predicted.back();
  };

  if (is_path(g)) add(StructureId::Path);
  if (is_complete(g)) add(StructureId::Complete);
  if (n >= 4) {
    if (auto m = match_n_minus_2(g)) add(m->id).params = std::pair{m->s, m->t};
  }

  const int diam = diameter(dm);
  if (diam == 2 || diam == 3) {
    const TwinDecomposition td = twin_decomposition(g);
    auto m = diam == 2 ? match_diam2_structure(td) : match_diam3_structure(td);
    if (m) add(m->id).roles = std::move(m->roles);
  }

  for (const auto& p : out.predicted)
    if (p.beta != out.predicted.front().beta) out.consistent = false;
  return out;
}

}  // namespace metdim
