#include <array>
#include <cstdint>
#include <string>

#include "metdim/errors.hpp"
#include "metdim/generate.hpp"
#include "metdim/graph6.hpp"

namespace metdim {
namespace {

// Branch and bound over vertex orders. Placing vertex v at position p fixes
// the graph6 bits of column p, so every partial order determines a prefix
// of the bit string; a prefix larger than the best string's prefix of the
// same length cannot lead to a smaller string.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), bits_(n_ * (n_ - 1) / 2) {}

  std::string run() {
    descend(0, 0, 0);
    Graph best(n_);
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i)
        if (g_.adjacent(best_order_[i], best_order_[j])) best.add_edge(i, j);
    return to_graph6(best);
  }

 private:
  void descend(int pos, VertexMask used, std::uint64_t prefix) {
    if (pos == n_) {
      if (!found_ || prefix < best_) {
        best_ = prefix;
        best_order_ = order_;
        found_ = true;
      }
      return;
    }
    const int length = pos * (pos + 1) / 2;
    for (Vertex v = 0; v < n_; ++v) {
      if (used & vertex_bit(v)) continue;
      const VertexMask nbrs = g_.neighbors(v);
      std::uint64_t p = prefix;
      for (int i = 0; i < pos; ++i) p = (p << 1) | ((nbrs >> order_[i]) & 1);
      if (found_ && p > (best_ >> (bits_ - length))) continue;
      order_[pos] = v;
      descend(pos + 1, used | vertex_bit(v), p);
    }
  }

  const Graph& g_;
  int n_;
  int bits_;
  std::array<Vertex, kCanonicalCap> order_{};
  std::array<Vertex, kCanonicalCap> best_order_{};
  std::uint64_t best_ = 0;
  bool found_ = false;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, int cap) {
  if (cap > kCanonicalCap) cap = kCanonicalCap;
  if (g.order() > cap) {
    throw CapExceeded("canonical_form: order " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(cap));
  }
  return CanonicalForm(CanonicalSearch(g).run());
}

}  // namespace metdim
