#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "indgap/indpoly.hpp"
#include "indgap/numeric.hpp"
#include "support/brute.hpp"

using namespace indgap;

namespace {
IntPoly ip(std::initializer_list<long> coeffs) {
    std::vector<Int> c;
    for (long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}
} // namespace

TEST_CASE("closed forms for tiny graphs") {
    CHECK(independence_poly(make_path(1)) == ip({1, -1}));
    CHECK(independence_poly(make_path(2)) == ip({1, -2}));
    CHECK(independence_poly(make_path(3)) == ip({1, -3, 1}));
    CHECK(independence_poly(make_path(4)) == ip({1, -4, 3}));
    CHECK(independence_poly(make_cycle(5)) == ip({1, -5, 5}));
    CHECK(independence_poly(make_complete(7)) == ip({1, -7}));
    // star on k leaves: (1-z)^k - z
    CHECK(independence_poly(make_star(3)) == ip({1, -4, 3, -1}));
    // complete bipartite n x n: 2(1-z)^n - 1
    CHECK(independence_poly(make_complete_bipartite(2, 2)) == ip({1, -4, 2}));
    // empty graph on 3 vertices: (1-z)^3
    CHECK(independence_poly(Graph(3)) == ip({1, -3, 3, -1}));
    CHECK(independence_poly(Graph(0)) == ip({1}));
}

TEST_CASE("engine agrees with subset brute force") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, false))
            CHECK(independence_poly(g) == brute::independence_poly(g));
}

TEST_CASE("multiplicativity over components") {
    Graph g(7, "p3+p3+k1");
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    IntPoly p3 = independence_poly(make_path(3));
    IntPoly k1 = independence_poly(make_path(1));
    CHECK(independence_poly(g) == p3 * p3 * k1);
}

TEST_CASE("alternating signs and unit constant term") {
    for (const Graph& g : enumerate_graphs(6, true)) {
        IntPoly p = independence_poly(g);
        REQUIRE(!p.is_zero());
        CHECK(p.c[0] == 1);
        CHECK(p.c[1] == -g.n);
        for (int k = 0; k <= p.degree(); ++k)
            CHECK(sign(p.c[k]) == (k % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("independence number matches brute force") {
    CHECK(independence_number(make_path(8)) == 4);
    CHECK(independence_number(make_cycle(9)) == 4);
    CHECK(independence_number(make_star(6)) == 6);
    for (const Graph& g : enumerate_graphs(6, true))
        CHECK(independence_number(g) == brute::independence_number(g));
}

TEST_CASE("memo is keyed per component") {
    Graph g = make_path(12);
    IndPolyEngine eng(g);
    eng.full();
    CHECK(eng.memo_size() > 0);
    // A second engine on the same graph must rebuild from scratch.
    IndPolyEngine eng2(g);
    CHECK(eng2.memo_size() == 0);
    CHECK(eng2.full() == eng.full());
}

TEST_CASE("pivot prefers high degree then low index") {
    Graph s = make_star(4);
    IndPolyEngine eng(s);
    CHECK(eng.pivot(full_mask(s.n)) == 0);
    // Restricted to the leaves only, all degrees are zero: lowest index wins.
    CHECK(eng.pivot(full_mask(s.n) & ~bit(0)) == 1);
}

TEST_CASE("low-order coefficients count vertices and non-edges") {
    for (const Graph& g : enumerate_graphs(6, false)) {
        IntPoly p = independence_poly(g);
        CHECK(p.coeff(0) == 1);
        CHECK(p.coeff(1) == -g.n);
        Int nonedges = Int(g.n) * (g.n - 1) / 2 - g.edge_count();
        CHECK(p.coeff(2) == nonedges);
    }
}

TEST_CASE("deletion recursion holds for every vertex, not just the pivot") {
    for (const Graph& g : enumerate_graphs(5, true)) {
        IntPoly whole = independence_poly(g);
        for (int u = 0; u < g.n; ++u) {
            IntPoly without_u = independence_poly(delete_vertices(g, bit(u)));
            IntPoly without_nbhd = independence_poly(delete_vertices(g, g.closed_nbhd(u)));
            CHECK(whole == without_u - shift_up(without_nbhd, 1));
        }
    }
}

TEST_CASE("neighborhood sum reproduces the derivative") {
    CHECK(neighborhood_derivative(make_complete(2)) == IntPoly({Int(-2)}));
    CHECK(neighborhood_derivative(make_path(3)) == IntPoly({Int(-3), Int(2)}));
    Graph k1(1);
    CHECK(neighborhood_derivative(k1) == IntPoly({Int(-1)}));
    for (const Graph& g : enumerate_graphs(6, false)) {
        if (g.n == 0) continue;
        CHECK(neighborhood_derivative(g) == derivative(independence_poly(g), 1));
    }
}

TEST_CASE("complex evaluation lands near known roots") {
    PrecisionGuard prec(128);
    Cplx z{Real("0.3177"), Real(0)};
    CHECK(eval_cplx(independence_poly(make_star(3)), z).abs() < Real("1e-3"));
    Real at = Real(1) - Real(1) / sqrt(Real(2));
    CHECK(eval_cplx(independence_poly(make_cycle(4)), Cplx{at, Real(0)}).abs() < Real("1e-30"));
}
