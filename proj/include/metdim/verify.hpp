#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "metdim/characterize.hpp"
#include "metdim/graph.hpp"
#include "metdim/resolving.hpp"

namespace metdim {

struct VerifyOptions {
  unsigned jobs = 1;
  int cap = kDefaultPrunedCap;
  /// Also run the unpruned search and compare.
  bool cross_check = false;
};

/// Oracle-versus-characterisation outcome for one connected graph.
struct GraphVerdict {
  std::string graph6;
  int n = 0;
  int diameter = 0;
  BasisResult oracle;
  Classification classification;
  bool bounds_ok = true;
  bool cross_check_ok = true;
  /// Families whose recogniser disagrees with the oracle.
  std::vector<Family> mismatched;

  bool ok() const {
    return mismatched.empty() && classification.consistent && bounds_ok && cross_check_ok;
  }
};

/// Whether a family's characterisation covers graphs of order n.
bool family_applies(Family f, int n);

GraphVerdict evaluate(const Graph& g, const VerifyOptions& options = {});

struct HitKey {
  int n;
  Family family;
  StructureId structure;
  friend auto operator<=>(const HitKey&, const HitKey&) = default;
};

struct VerifyReport {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::size_t inconsistent = 0;
  std::size_t bound_violations = 0;
  std::size_t cross_check_failures = 0;
  /// Graphs whose oracle value agrees with the structure that matched them.
  std::map<HitKey, std::size_t> hits;
  /// Every verdict with ok() == false, in input order.
  std::vector<GraphVerdict> failures;

  bool ok() const { return failures.empty(); }
};

/// Evaluates every graph (all must be connected, n >= 2) and aggregates.
VerifyReport verify_graphs(std::span<const Graph> graphs, const VerifyOptions& options = {});

}  // namespace metdim
