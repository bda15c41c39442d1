#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "metdim/characterize.hpp"
#include "metdim/graph.hpp"
#include "metdim/twin.hpp"

namespace metdim {

/// Concrete twin-graph blueprint: a structure's template graph with a type
/// and class size for each template vertex. Expanding it yields a graph
/// whose twin graph is the template, provided no two classes collapse.
struct Template {
  StructureId structure;
  std::vector<std::pair<int, int>> quotient_edges;
  std::vector<VertexType> types;
  std::vector<int> sizes;

  int order() const { return static_cast<int>(sizes.size()); }
  int vertex_count() const;
};

/// Template for `id` with the catalogue edges filled in.
Template make_template(StructureId id, std::vector<VertexType> types, std::vector<int> sizes);

/// Classes become consecutive vertex blocks in template order; a K class is a
/// clique, an N class independent; template edges become complete joins.
/// Throws InvalidArgument when sizes and types disagree or the edges are not
/// the structure's template graph.
Graph expand(const Template& t);

/// True iff the twin decomposition of expand(t) has exactly t's classes,
/// types and quotient.
bool validate_template(const Template& t);

/// Every valid template of order-n expansions admitted by the structure's
/// type constraints. Types vary fastest-last in 1 < K < N order, then class
/// sizes in lexicographic order. K and N classes get sizes 2..n-order+2.
/// Labellings that differ by an automorphism of the template graph are
/// emitted once, as the first one reached in that order.
std::vector<Template> enumerate_templates(StructureId id, int n);

/// Lexicographically smallest graph6 string over all relabelings.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& str() const noexcept { return bytes_; }

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  std::string bytes_;
};

inline constexpr int kCanonicalCap = 10;
inline constexpr int kEnumerationCap = 8;

CanonicalForm canonical_form(const Graph& g, int cap = kCanonicalCap);

/// Canonical forms of all connected order-n graphs with beta = n - 3, built
/// from the structure templates. Sorted, no duplicates. 4 <= n <= cap.
std::vector<CanonicalForm> enumerate_n_minus_3(int n, int cap = kCanonicalCap);

/// One representative per isomorphism class of order-n graphs, relabelled
/// to canonical form and sorted by it. Built by adding a vertex in every
/// possible way to each order-(n-1) graph.
std::vector<Graph> all_graphs(int n, int cap = kEnumerationCap);
std::vector<Graph> connected_graphs(int n, int cap = kEnumerationCap);

struct Fixture {
  std::string name;
  StructureId structure;
  Graph graph;
  int expected_beta;
};

/// Small witnesses for every n-3 structure, blown-up classes at size 2.
std::vector<Fixture> sufficiency_fixtures();

}  // namespace metdim
