#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "metdim/graph.hpp"
#include "metdim/twin.hpp"

namespace metdim {

enum class StructureId {
  Path,
  Complete,
  NM2_Kst,
  NM2_JoinEmpty,
  NM2_JoinKtK1,
  G1, G2, G3, G4, G5, G6, G7, G8, G9, G10,
  D3_P4a, D3_P4b, D3_P4c, D3_P4d, D3_Pprime,
};

/// Which metric-dimension value a structure certifies.
enum class Family { Path, Complete, NMinus2, NMinus3 };

std::string_view to_string(StructureId id);
std::string_view to_string(Family f);
Family family_of(StructureId id);
/// Predicted metric dimension for a graph of order n in the family.
int predicted_beta(Family f, int n);

/// Template vertex roles mapped onto twin-graph vertices (class indices).
struct RoleAssignment {
  std::vector<std::pair<std::string_view, int>> roles;
};

struct StructureMatch {
  StructureId id;
  RoleAssignment roles;
};

struct NMinus2Match {
  StructureId id;
  int s = 0;
  int t = 0;
};

struct Prediction {
  StructureId id;
  int beta = 0;
  RoleAssignment roles;                       // twin-graph structures only
  std::optional<std::pair<int, int>> params;  // (s, t) for the n-2 families
};

struct Classification {
  std::vector<Prediction> predicted;
  bool consistent = true;  // all predicted values agree

  bool contains(Family f) const;
};

/// A twin-graph blueprint: a fixed small graph with named roles and a
/// predicate on the per-vertex types, both in template vertex order.
struct StructureTemplate {
  StructureId id;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string_view> roles;
  bool (*admits)(std::span<const VertexType> types);

  int order() const { return static_cast<int>(roles.size()); }
  Graph graph() const;
};

/// Templates for diameter-2 graphs with beta = n - 3, in G1..G10 order.
std::span<const StructureTemplate> diameter2_templates();
/// Templates for diameter-3 graphs with beta = n - 3.
std::span<const StructureTemplate> diameter3_templates();
/// Throws InvalidArgument for ids that are not twin-graph structures.
const StructureTemplate& structure_template(StructureId id);
/// Every twin-graph structure id (diameter 2, then diameter 3).
std::vector<StructureId> n_minus_3_structures();

bool is_path(const Graph& g);
bool is_complete(const Graph& g);

/// Recognises K_{s,t}, K_s v ~K_t (t >= 2) and K_s v (K_t u K_1), tried in
/// that order. Requires a connected graph with n >= 4.
std::optional<NMinus2Match> match_n_minus_2(const Graph& g);

/// First of G1..G10 whose template is isomorphic to G* under a map that
/// satisfies the type constraints. Requires diam(G) == 2.
std::optional<StructureMatch> match_diam2_structure(const TwinDecomposition& td);

/// Same for the diameter-3 structures. Requires diam(G) == 3.
std::optional<StructureMatch> match_diam3_structure(const TwinDecomposition& td);

/// Runs every applicable recogniser and collects all matches.
Classification classify(const Graph& g);

}  // namespace metdim
