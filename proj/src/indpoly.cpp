#include "indgap/indpoly.hpp"

#include <bit>

namespace indgap {

int IndPolyEngine::pivot(std::uint64_t mask) const {
    int best = -1, bestdeg = -1;
    for (std::uint64_t m = mask; m; m &= m - 1) {
        int v = std::countr_zero(m);
        int d = std::popcount(g_.adj[v] & mask);
        if (d > bestdeg) {
            bestdeg = d;
            best = v;
        }
    }
    return best;
}

const IntPoly& IndPolyEngine::on_mask(std::uint64_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;

    IntPoly result;
    int count = std::popcount(mask);
    if (count == 0) {
        result = IntPoly::constant(1);
    } else if (count == 1) {
        result = IntPoly({Int(1), Int(-1)});
    } else {
        auto comps = components(g_, mask);
        if (comps.size() > 1) {
            result = IntPoly::constant(1);
            for (std::uint64_t c : comps) result = result * on_mask(c);
        } else {
            int u = pivot(mask);
            // unordered_map keeps element references stable across inserts.
            const IntPoly& without_u = on_mask(mask & ~bit(u));
            const IntPoly& without_nbhd = on_mask(mask & ~g_.closed_nbhd(u));
            result = without_u - shift_up(without_nbhd, 1);
        }
    }
    return memo_.emplace(mask, std::move(result)).first->second;
}

IntPoly independence_poly(const Graph& g) {
    IndPolyEngine eng(g);
    return eng.full();
}

IntPoly neighborhood_derivative(const Graph& g) {
    IndPolyEngine eng(g);
    IntPoly sum;
    for (int u = 0; u < g.n; ++u)
        sum = sum - eng.on_mask(full_mask(g.n) & ~g.closed_nbhd(u));
    return sum;
}

int independence_number(const Graph& g) {
    return independence_poly(g).degree();
}

} // namespace indgap
