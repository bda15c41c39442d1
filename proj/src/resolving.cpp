#include "metdim/resolving.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "metdim/errors.hpp"
#include "metdim/twin.hpp"

namespace metdim {
namespace {

void check_vertices(const DistanceMatrix& dm, std::span<const Vertex> vs) {
  for (Vertex v : vs) {
    if (v < 0 || v >= dm.order()) {
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    }
  }
}

// Sort-and-compare collision test over the non-landmark vertices.
bool resolves(const DistanceMatrix& dm, std::span<const Vertex> landmarks) {
  const int n = dm.order();
  const std::size_t k = landmarks.size();
  const VertexMask in_set = to_mask(landmarks);

  std::vector<std::int8_t> rows;
  std::vector<std::size_t> order;
  rows.reserve(static_cast<std::size_t>(n) * k);
  for (Vertex v = 0; v < n; ++v) {
    if (in_set & vertex_bit(v)) continue;
    order.push_back(order.size());
    for (Vertex w : landmarks) rows.push_back(static_cast<std::int8_t>(dm.at(v, w)));
  }
  if (order.size() < 2) return true;
  if (k == 0) return false;

  auto row = [&](std::size_t i) { return rows.data() + i * k; };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return std::memcmp(row(a), row(b), k) < 0; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (std::memcmp(row(order[i - 1]), row(order[i]), k) == 0) return false;
  }
  return true;
}

// Advances `idx` (strictly increasing indices into a pool of size m) to the
// next k-combination in lexicographic order.
bool next_combination(std::vector<int>& idx, int m) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == m - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

// Smallest (size, lexicographic) subset S of `pool` with fixed ∪ S resolving.
BasisResult search(const DistanceMatrix& dm, const std::vector<Vertex>& fixed,
                   const std::vector<Vertex>& pool) {
  BasisResult result;
  const int m = static_cast<int>(pool.size());
  std::vector<Vertex> candidate;
  for (int k = 0; k <= m; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    do {
      candidate = fixed;
      for (int i : idx) candidate.push_back(pool[i]);
      ++result.explored;
      if (resolves(dm, candidate)) {
        std::sort(candidate.begin(), candidate.end());
        result.beta = static_cast<int>(candidate.size());
        result.basis = std::move(candidate);
        return result;
      }
    } while (next_combination(idx, m));
  }
  // The whole vertex set always resolves; unreachable for valid input.
  throw Error("metric dimension search exhausted without a resolving set");
}

DistanceMatrix connected_distances(const Graph& g, const char* who) {
  DistanceMatrix dm(g);
  if (!dm.connected()) throw ConnectivityError(std::string(who) + " requires a connected graph");
  return dm;
}

void check_cap(const Graph& g, int cap, const char* who) {
  if (g.order() > cap) {
    throw CapExceeded(std::string(who) + ": order " + std::to_string(g.order()) +
                      " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

Representation representation(const DistanceMatrix& dm, Vertex v,
                              std::span<const Vertex> landmarks) {
  check_vertices(dm, landmarks);
  check_vertices(dm, std::span<const Vertex>(&v, 1));
  Representation r;
  r.reserve(landmarks.size());
  for (Vertex w : landmarks) r.push_back(dm.at(v, w));
  return r;
}

bool is_resolving_set(const DistanceMatrix& dm, std::span<const Vertex> landmarks) {
  if (!dm.connected()) throw ConnectivityError("is_resolving_set requires a connected graph");
  check_vertices(dm, landmarks);
  return resolves(dm, landmarks);
}

BasisResult metric_dimension_naive(const Graph& g, int cap) {
  check_cap(g, cap, "metric_dimension_naive");
  const DistanceMatrix dm = connected_distances(g, "metric_dimension_naive");
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  return search(dm, {}, all);
}

BasisResult metric_dimension(const Graph& g, int cap) {
  check_cap(g, cap, "metric_dimension");
  const DistanceMatrix dm = connected_distances(g, "metric_dimension");
  const TwinDecomposition td = twin_decomposition(g);
  std::vector<Vertex> mandatory;
  std::vector<Vertex> representatives;
  for (const auto& cls : td.classes) {
    representatives.push_back(cls.front());
    mandatory.insert(mandatory.end(), cls.begin() + 1, cls.end());
  }
  return search(dm, mandatory, representatives);
}

bool verify_bounds(const Graph& g, const BasisResult& result) {
  const int n = g.order();
  if (n < 2) return false;
  const int lower = n - twin_decomposition(g).class_count();
  const int upper = n - diameter(g);
  return lower <= result.beta && result.beta <= upper && 1 <= result.beta && result.beta <= n - 1;
}

}  // namespace metdim
