#include "metdim/verify.hpp"

#include "metdim/distance.hpp"
#include "metdim/errors.hpp"
#include "metdim/graph6.hpp"
#include "metdim/parallel.hpp"

namespace metdim {

bool family_applies(Family f, int n) {
  switch (f) {
    case Family::Path:
    case Family::Complete: return n >= 2;
    case Family::NMinus2:
    case Family::NMinus3: return n >= 4;
  }
  return false;
}

GraphVerdict evaluate(const Graph& g, const VerifyOptions& options) {
  GraphVerdict v;
  v.graph6 = to_graph6(g);
  v.n = g.order();
  v.diameter = diameter(g);
  v.oracle = metric_dimension(g, options.cap);
  v.classification = classify(g);
  v.bounds_ok = verify_bounds(g, v.oracle);
  if (options.cross_check) {
    v.cross_check_ok = metric_dimension_naive(g, options.cap).beta == v.oracle.beta;
  }
  for (Family f : {Family::Path, Family::Complete, Family::NMinus2, Family::NMinus3}) {
    if (!family_applies(f, v.n)) continue;
    const bool predicted = v.classification.contains(f);
    const bool actual = v.oracle.beta == predicted_beta(f, v.n);
    if (predicted != actual) v.mismatched.push_back(f);
  }
  return v;
}

VerifyReport verify_graphs(std::span<const Graph> graphs, const VerifyOptions& options) {
  std::vector<GraphVerdict> verdicts(graphs.size());
  parallel_for(graphs.size(), options.jobs,
               [&](std::size_t i) { verdicts[i] = evaluate(graphs[i], options); });

  VerifyReport report;
  for (auto& v : verdicts) {
    ++report.checked;
    if (!v.mismatched.empty()) ++report.mismatches;
    if (!v.classification.consistent) ++report.inconsistent;
    if (!v.bounds_ok) ++report.bound_violations;
    if (!v.cross_check_ok) ++report.cross_check_failures;
    for (const auto& p : v.classification.predicted) {
      if (p.beta == v.oracle.beta) ++report.hits[HitKey{v.n, family_of(p.id), p.id}];
    }
    if (!v.ok()) report.failures.push_back(std::move(v));
  }
  return report;
}

}  // namespace metdim
