#pragma once

// Independence polynomial I(G,z) = sum_k (-1)^k a_k z^k where a_k counts the
// independent sets of size k. Computed by the vertex-deletion recursion
//   I(G) = I(G - u) - z * I(G - N[u])
// applied per connected component, memoized on the component's vertex mask.

#include "indgap/graph.hpp"
#include "indgap/intpoly.hpp"

#include <cstdint>
#include <unordered_map>

namespace indgap {

class IndPolyEngine {
  public:
    explicit IndPolyEngine(const Graph& g) : g_(g) {}

    // Induced subgraph on the given vertex subset.
    const IntPoly& on_mask(std::uint64_t mask);
    IntPoly full() { return on_mask(full_mask(g_.n)); }

    const Graph& graph() const { return g_; }
    size_t memo_size() const { return memo_.size(); }

    // Pivot rule shared with the analytic decomposition: highest degree inside
    // the mask, ties to the smallest index.
    int pivot(std::uint64_t mask) const;

  private:
    const Graph& g_;
    std::unordered_map<std::uint64_t, IntPoly> memo_;
};

IntPoly independence_poly(const Graph& g);

// I'(G,z) computed as -sum_u I(G - N[u], z), without differentiating.
IntPoly neighborhood_derivative(const Graph& g);

// Largest independent set size (degree of I).
int independence_number(const Graph& g);

} // namespace indgap
