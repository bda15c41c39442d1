// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes. Ground truth is built by labelled enumeration of
// all 2^C(n,2) graphs per order, filtered to connected ones and reduced to
// one representative per canonical form.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "metdim/builders.hpp"
#include "metdim/characterize.hpp"
#include "metdim/distance.hpp"
#include "metdim/generate.hpp"
#include "metdim/graph6.hpp"
#include "metdim/resolving.hpp"
#include "metdim/twin.hpp"

using namespace metdim;

namespace {

struct Entry {
  Graph graph;
  CanonicalForm form;
  int beta;
};

std::map<int, std::vector<Entry>> g_truth;

void build_truth(int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    const int m = n * (n - 1) / 2;
    std::map<CanonicalForm, Graph> reps;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      Graph g(n);
      int k = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
          if (bits >> k & 1) g.add_edge(i, j);
      if (!is_connected(g)) continue;
      reps.try_emplace(canonical_form(g), std::move(g));
    }
    auto& level = g_truth[n];
    for (auto& [form, g] : reps) {
      const int beta = metric_dimension_naive(g).beta;
      level.push_back(Entry{std::move(g), form, beta});
    }
  }
}

int g_failed = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failed;
}

std::string counts_of(int lo, int hi) {
  std::string s;
  for (int n = lo; n <= hi; ++n) {
    if (!s.empty()) s += ' ';
    s += "n=" + std::to_string(n) + ":" + std::to_string(g_truth[n].size());
  }
  return s;
}

void criterion_n_minus_3() {
  std::size_t mismatches = 0, hits = 0;
  for (int n = 4; n <= 7; ++n)
    for (const auto& e : g_truth[n]) {
      const auto c = classify(e.graph);
      const bool predicted = c.contains(Family::NMinus3);
      const bool actual = e.beta == n - 3;
      if (predicted != actual || !c.consistent) {
        ++mismatches;
        std::printf("  counterexample %s beta=%d\n", to_graph6(e.graph).c_str(), e.beta);
      }
      hits += actual;
    }
  const bool counts_ok = g_truth[4].size() == 6 && g_truth[5].size() == 21 &&
                         g_truth[6].size() == 112 && g_truth[7].size() == 853;
  report(1, mismatches == 0 && counts_ok, "n-3 characterisation over all connected graphs, n=4..7",
         counts_of(4, 7) + ", beta=n-3 graphs " + std::to_string(hits) + ", mismatches " +
             std::to_string(mismatches));
}

void criterion_families() {
  std::size_t mismatches = 0, checked = 0;
  for (int n = 2; n <= 7; ++n)
    for (const auto& e : g_truth[n]) {
      const auto c = classify(e.graph);
      ++checked;
      bool ok = c.contains(Family::Path) == (e.beta == 1) &&
                c.contains(Family::Complete) == (e.beta == n - 1);
      if (n >= 4) ok = ok && c.contains(Family::NMinus2) == (e.beta == n - 2);
      if (!ok) {
        ++mismatches;
        std::printf("  counterexample %s beta=%d\n", to_graph6(e.graph).c_str(), e.beta);
      }
    }
  report(2, mismatches == 0, "path, complete and n-2 families",
         std::to_string(checked) + " graphs, mismatches " + std::to_string(mismatches));
}

void criterion_point_values() {
  std::vector<std::string> bad;
  auto expect = [&](const std::string& name, const Graph& g, int want) {
    const int got = metric_dimension(g).beta;
    const int naive = metric_dimension_naive(g).beta;
    if (got != want || naive != want) bad.push_back(name + "=" + std::to_string(got));
  };
  int checked = 0;
  expect("C5", make::cycle(5), 2), ++checked;
  for (int n = 2; n <= 8; ++n) expect("K" + std::to_string(n), make::complete(n), n - 1), ++checked;
  for (int n = 2; n <= 10; ++n) expect("P" + std::to_string(n), make::path(n), 1), ++checked;
  for (int s = 1; s <= 4; ++s)
    for (int t = s; t <= 4; ++t)
      if (s + t >= 4) {
        expect("K" + std::to_string(s) + "," + std::to_string(t), make::complete_bipartite(s, t), s + t - 2);
        ++checked;
      }
  std::string detail = std::to_string(checked) + " values";
  for (const auto& b : bad) detail += ", wrong " + b;
  report(3, bad.empty(), "point values C5, K_n, P_n, K_{s,t}", detail);
}

void criterion_bounds() {
  std::size_t violations = 0, checked = 0;
  for (int n = 2; n <= 7; ++n)
    for (const auto& e : g_truth[n]) {
      const int classes = twin_decomposition(e.graph).class_count();
      const int diam = diameter(e.graph);
      BasisResult r;
      r.beta = e.beta;
      const bool ok = n - classes <= e.beta && e.beta <= n - diam && verify_bounds(e.graph, r);
      violations += !ok;
      ++checked;
    }
  report(4, violations == 0, "n - n(G*) <= beta <= n - diam for n<=7",
         std::to_string(checked) + " graphs, violations " + std::to_string(violations));
}

void criterion_quotient_metric() {
  std::size_t violations = 0, checked = 0;
  for (int n = 2; n <= 6; ++n)
    for (const auto& e : g_truth[n]) {
      const auto td = twin_decomposition(e.graph);
      const DistanceMatrix dg(e.graph);
      const DistanceMatrix dq(td.quotient);
      bool ok = quotient_distance_check(e.graph, td) && diameter(dq) <= diameter(dg);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (td.class_of[u] != td.class_of[v])
            ok = ok && dq.at(td.class_of[u], td.class_of[v]) == dg.at(u, v);
      violations += !ok;
      ++checked;
    }
  report(5, violations == 0, "diam(G*) <= diam(G) and non-twin distances preserved, n<=6",
         std::to_string(checked) + " graphs, violations " + std::to_string(violations));
}

void criterion_oracle_agreement() {
  std::size_t mismatches = 0, checked = 0;
  for (int n = 2; n <= 6; ++n)
    for (const auto& e : g_truth[n]) {
      const auto pruned = metric_dimension(e.graph);
      const auto naive = metric_dimension_naive(e.graph);
      mismatches += pruned.beta != naive.beta ||
                    !is_resolving_set(DistanceMatrix(e.graph), pruned.basis);
      ++checked;
    }
  report(6, mismatches == 0, "pruned search equals exhaustive search, n<=6",
         std::to_string(checked) + " graphs, mismatches " + std::to_string(mismatches));
}

void criterion_enumeration() {
  std::string detail;
  bool ok = true;
  for (int n = 4; n <= 7; ++n) {
    std::set<CanonicalForm> want;
    for (const auto& e : g_truth[n])
      if (e.beta == n - 3) want.insert(e.form);
    const auto got_list = enumerate_n_minus_3(n);
    const std::set<CanonicalForm> got(got_list.begin(), got_list.end());
    std::size_t diff = 0;
    for (const auto& f : want) diff += !got.count(f);
    for (const auto& f : got) diff += !want.count(f);
    ok = ok && diff == 0 && got.size() == got_list.size();
    if (!detail.empty()) detail += ' ';
    detail += "n=" + std::to_string(n) + ":" + std::to_string(got.size()) + "/" + std::to_string(want.size()) +
              " diff " + std::to_string(diff);
  }
  report(7, ok, "enumerated n-3 graphs equal the filtered exhaustive list, n=4..7", detail);
}

void criterion_round_trips() {
  std::mt19937_64 rng(20240601);
  std::size_t graph6_bad = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const int density = 1 + static_cast<int>(rng() % 9);
    Graph g(n);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (static_cast<int>(rng() % 10) < density) g.add_edge(i, j);
    const std::string s = to_graph6(g);
    graph6_bad += !(parse_graph6(s) == g && to_graph6(parse_graph6(s)) == s);
  }
  std::size_t templates = 0, template_bad = 0;
  for (StructureId id : n_minus_3_structures()) {
    for (int n = structure_template(id).order(); n <= 8; ++n) {
      for (const auto& t : enumerate_templates(id, n)) {
        ++templates;
        const auto td = twin_decomposition(expand(t));
        bool ok = validate_template(t) && td.types == t.types && td.quotient == structure_template(id).graph();
        for (int c = 0; ok && c < td.class_count(); ++c) ok = td.class_size(c) == t.sizes[c];
        template_bad += !ok;
      }
    }
  }
  report(8, graph6_bad == 0 && template_bad == 0 && templates > 0, "graph6 and template round trips",
         "10000 random graphs, " + std::to_string(graph6_bad) + " failures; " + std::to_string(templates) +
             " templates, " + std::to_string(template_bad) + " failures");
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  build_truth(7);
  criterion_n_minus_3();
  criterion_families();
  criterion_point_values();
  criterion_bounds();
  criterion_quotient_metric();
  criterion_oracle_agreement();
  criterion_enumeration();
  criterion_round_trips();
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 8 criteria failed, %.1f s\n", g_failed, secs);
  return g_failed == 0 ? 0 : 1;
}
