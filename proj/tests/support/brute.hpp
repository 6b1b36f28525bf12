#pragma once

// Independent oracles for tests: everything here is deliberately naive and
// shares no code path with the library implementations it checks.

#include "indgap/graph.hpp"
#include "indgap/intpoly.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace brute {

inline bool is_independent(const indgap::Graph& g, std::uint64_t s) {
    for (std::uint64_t m = s; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (g.adj[v] & s) return false;
    }
    return true;
}

// 2^n subset sweep.
inline indgap::IntPoly independence_poly(const indgap::Graph& g) {
    std::vector<indgap::Int> counts(g.n + 1, indgap::Int(0));
    std::uint64_t all = indgap::full_mask(g.n);
    for (std::uint64_t s = 0;; ++s) {
        if (is_independent(g, s)) counts[std::popcount(s)] += 1;
        if (s == all) break;
    }
    std::vector<indgap::Int> c;
    for (size_t k = 0; k < counts.size(); ++k)
        c.push_back(k % 2 == 0 ? counts[k] : indgap::Int(-counts[k]));
    return indgap::IntPoly(std::move(c));
}

inline int independence_number(const indgap::Graph& g) {
    return brute::independence_poly(g).degree();
}

} // namespace brute
