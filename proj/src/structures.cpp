// Twin-graph structures of the graphs with metric dimension n - 3.
//
// Each entry fixes a small template graph, names its vertices and encodes
// the type restrictions as a predicate over the types listed in template
// vertex order. Matching tries every isomorphism from the template onto G*,
// so the predicates are written symmetrically and never rely on which of
// two automorphic vertices got which label.

#include <algorithm>
#include <array>
#include <string>

#include "metdim/characterize.hpp"
#include "metdim/errors.hpp"

namespace metdim {
namespace {

using T = VertexType;
using Types = std::span<const VertexType>;

bool one(T t) { return t == T::One; }
bool one_or_k(T t) { return t == T::One || t == T::K; }
bool one_or_n(T t) { return t == T::One || t == T::N; }
bool k_or_n(T t) { return t == T::K || t == T::N; }

int alpha(Types t) { return static_cast<int>(std::count_if(t.begin(), t.end(), k_or_n)); }

// G1: triangle with at most one vertex of type (1K).
bool admits_g1(Types t) { return std::count_if(t.begin(), t.end(), one_or_k) <= 1; }

// G2: path leaf0 - center - leaf2.
bool admits_g2(Types t) {
  const bool case_a = t[1] == T::N && (t[0] == T::K || t[2] == T::K);
  const bool case_b = (t[0] == T::K && k_or_n(t[2])) || (t[2] == T::K && k_or_n(t[0]));
  return case_a || case_b;
}

// G3: paw; 0 has degree 3, 1 and 2 have degree 2, 3 is the leaf.
bool admits_g3(Types t) {
  auto split = [&](T n_side, T other) {
    if (n_side != T::N || !one_or_k(other)) return false;
    if (other == T::K && (t[3] == T::N || t[0] == T::N)) return false;
    return true;
  };
  return one_or_n(t[3]) && (split(t[1], t[2]) || split(t[2], t[1]));
}

// G4: C_5, every vertex of type (1).
bool admits_g4(Types t) { return std::all_of(t.begin(), t.end(), one); }

// G5: C_5 0-1-2-3-4 with chord 0-2; 3 and 4 are the adjacent degree-2
// vertices.
bool admits_g5(Types t) {
  return one(t[3]) && one(t[4]) && one_or_k(t[0]) && one_or_k(t[1]) && one_or_k(t[2]);
}

// G6: C_5 0-1-2-3-4 with chords 0-2 and 0-3; 0 has degree 4.
bool admits_g6(Types t) {
  for (int v = 1; v < 5; ++v)
    if (!one_or_k(t[v])) return false;
  static constexpr std::array<std::array<bool, 5>, 5> kAdj{{
      {false, true, true, true, true},
      {true, false, true, false, false},
      {true, true, false, true, false},
      {true, false, true, false, true},
      {true, false, false, true, false},
  }};
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) {
      if (!kAdj[u][v] && t[u] == T::K && t[v] == T::K) return false;
      if (kAdj[u][v] && ((t[u] == T::K && t[v] == T::N) || (t[u] == T::N && t[v] == T::K)))
        return false;
    }
  }
  return true;
}

bool one_k_and_one_one(T a, T b) {
  return (a == T::K && b == T::One) || (a == T::One && b == T::K);
}

// G7: diamond (0,1 of degree 3, 2,3 of degree 2) plus leaf 4 on vertex 0.
bool admits_g7(Types t) {
  return one(t[4]) && one_or_k(t[0]) && one_or_k(t[1]) && one_k_and_one_one(t[2], t[3]);
}

// G8: diamond (0,1 of degree 3, 2,3 of degree 2).
bool admits_g8(Types t) {
  const bool hubs = (t[0] == T::N && one_or_k(t[1])) || (t[1] == T::N && one_or_k(t[0]));
  return hubs && one_k_and_one_one(t[2], t[3]);
}

// Exactly two K vertices, consecutive on the 4-cycle 0-1-2-3, the rest (1).
bool adjacent_k_pair_on_c4(Types t) {
  int mask = 0;
  for (int v = 0; v < 4; ++v) {
    if (t[v] == T::K) mask |= 1 << v;
    else if (t[v] != T::One) return false;
  }
  return mask == 0b0011 || mask == 0b0110 || mask == 0b1100 || mask == 0b1001;
}

// G9: C_4.
bool admits_g9(Types t) { return adjacent_k_pair_on_c4(t); }

// G10: rim 0-1-2-3 with hub 4.
bool admits_g10(Types t) { return adjacent_k_pair_on_c4(t.first(4)) && one_or_k(t[4]); }

// Diameter 3: G* is the path 0-1-2-3 or the path with an extra vertex 4 on
// the middle edge.
bool admits_p4a(Types t) { return alpha(t) <= 1; }

bool admits_p4b(Types t) {
  if (alpha(t) != 2) return false;
  for (int i = 0; i < 3; ++i) {
    if (!k_or_n(t[i]) || !k_or_n(t[i + 1])) continue;
    if (t[0] == T::K && i == 0 && t[1] != T::K) return false;
    if (t[3] == T::K && i == 2 && t[2] != T::K) return false;
    return true;
  }
  return false;
}

bool admits_p4c(Types t) {
  if (alpha(t) != 2) return false;
  return (t[0] == T::N && t[2] == T::N) || (t[1] == T::N && t[3] == T::N);
}

bool admits_p4d(Types t) {
  if (alpha(t) != 3) return false;
  for (int x = 1; x <= 2; ++x) {
    if (k_or_n(t[x]) && t[x - 1] == T::N && t[x + 1] == T::N) return true;
  }
  return false;
}

bool admits_pprime(Types t) {
  return one(t[0]) && one(t[3]) && one_or_k(t[1]) && one_or_k(t[2]) && one_or_k(t[4]);
}

const std::vector<StructureTemplate>& diam2() {
  static const std::vector<StructureTemplate> kTemplates = {
      {StructureId::G1, {{0, 1}, {0, 2}, {1, 2}}, {"a", "b", "c"}, admits_g1},
      {StructureId::G2, {{0, 1}, {1, 2}}, {"leaf-a", "center", "leaf-b"}, admits_g2},
      {StructureId::G3,
       {{0, 1}, {0, 2}, {1, 2}, {0, 3}},
       {"degree-3", "degree-2-a", "degree-2-b", "leaf"},
       admits_g3},
      {StructureId::G4,
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}},
       {"c0", "c1", "c2", "c3", "c4"},
       admits_g4},
      {StructureId::G5,
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}},
       {"chord-a", "apex", "chord-b", "degree-2-a", "degree-2-b"},
       admits_g5},
      {StructureId::G6,
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {0, 3}},
       {"degree-4", "degree-2-a", "degree-3-a", "degree-3-b", "degree-2-b"},
       admits_g6},
      {StructureId::G7,
       {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}},
       {"degree-4", "degree-3", "degree-2-a", "degree-2-b", "leaf"},
       admits_g7},
      {StructureId::G8,
       {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}},
       {"degree-3-a", "degree-3-b", "degree-2-a", "degree-2-b"},
       admits_g8},
      {StructureId::G9,
       {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
       {"c0", "c1", "c2", "c3"},
       admits_g9},
      {StructureId::G10,
       {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}, {2, 4}, {3, 4}},
       {"rim-0", "rim-1", "rim-2", "rim-3", "hub"},
       admits_g10},
  };
  return kTemplates;
}

const std::vector<StructureTemplate>& diam3() {
  static const std::vector<StructureTemplate> kTemplates = {
      {StructureId::D3_P4a, {{0, 1}, {1, 2}, {2, 3}}, {"u0", "u1", "u2", "u3"}, admits_p4a},
      {StructureId::D3_P4b, {{0, 1}, {1, 2}, {2, 3}}, {"u0", "u1", "u2", "u3"}, admits_p4b},
      {StructureId::D3_P4c, {{0, 1}, {1, 2}, {2, 3}}, {"u0", "u1", "u2", "u3"}, admits_p4c},
      {StructureId::D3_P4d, {{0, 1}, {1, 2}, {2, 3}}, {"u0", "u1", "u2", "u3"}, admits_p4d},
      {StructureId::D3_Pprime,
       {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}},
       {"u0", "u1", "u2", "u3", "apex"},
       admits_pprime},
  };
  return kTemplates;
}

}  // namespace

Graph StructureTemplate::graph() const {
  Graph g(order());
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::span<const StructureTemplate> diameter2_templates() { return diam2(); }
std::span<const StructureTemplate> diameter3_templates() { return diam3(); }

const StructureTemplate& structure_template(StructureId id) {
  for (const auto& t : diam2())
    if (t.id == id) return t;
  for (const auto& t : diam3())
    if (t.id == id) return t;
  throw InvalidArgument("no twin-graph template for structure " + std::string(to_string(id)));
}

std::vector<StructureId> n_minus_3_structures() {
  std::vector<StructureId> out;
  for (const auto& t : diam2()) out.push_back(t.id);
  for (const auto& t : diam3()) out.push_back(t.id);
  return out;
}

}  // namespace metdim
