#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "indgap/errors.hpp"
#include "indgap/indpoly.hpp"
#include "indgap/roots.hpp"

#include <random>

using namespace indgap;

namespace {
IntPoly ip(std::initializer_list<long> coeffs) {
    std::vector<Int> c;
    for (long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}

Graph random_connected(int n, double p, std::uint64_t seed) {
    for (std::uint64_t s = seed;; ++s) {
        Graph g = make_gnp(n, p, s);
        if (is_connected(g)) return g;
    }
}
} // namespace

TEST_CASE("degree-based lower bound values") {
    CHECK(shearer_bound(1) == 1);
    CHECK(shearer_bound(2) == Rat(1, 4));
    CHECK(shearer_bound(3) == Rat(4, 27));
    CHECK(shearer_bound(5) == Rat(256, 3125));
    for (int d = 1; d < 12; ++d) CHECK(shearer_bound(d) > shearer_bound(d + 1));
    CHECK_THROWS_AS(shearer_bound(0), std::invalid_argument);
}

TEST_CASE("sturm chain counts distinct real roots") {
    auto c5 = sturm_chain(independence_poly(make_cycle(5)));
    CHECK(sturm_count(c5, Rat(0), Rat(1)) == 2); // (5 +- sqrt 5)/10
    CHECK(sturm_count(c5, Rat(0), Rat(3, 10)) == 1);
    CHECK(sturm_count(c5, Rat(3, 10), Rat(1)) == 1);

    auto p4 = sturm_chain(independence_poly(make_path(4)));
    CHECK(sturm_count(p4, Rat(0), Rat(1)) == 2); // 1/3 and 1
    CHECK(sturm_count(p4, Rat(1, 4), Rat(1, 3)) == 1); // endpoint root counted

    // (1-z)^2 (1-2z): multiplicity does not inflate the count.
    IntPoly sq = ip({1, -2, 1}) * ip({1, -2});
    CHECK(sturm_count(sturm_chain(sq), Rat(0), Rat(1)) == 2);

    CHECK_THROWS_AS(sturm_chain(IntPoly()), std::invalid_argument);
}

TEST_CASE("beta bracket finds exact rational roots") {
    Rat tol = rat_pow(Rat(1, 10), 12);

    BetaEnclosure k1 = beta_bracket(make_complete(1), tol);
    CHECK(k1.exact_hi);
    CHECK(k1.hi == 1);

    BetaEnclosure k2 = beta_bracket(make_complete(2), tol);
    CHECK(k2.exact_hi);
    CHECK(k2.hi == Rat(1, 2));

    BetaEnclosure k5 = beta_bracket(make_complete(5), tol);
    CHECK(k5.exact_hi);
    CHECK(k5.hi == Rat(1, 5));

    BetaEnclosure p4 = beta_bracket(make_path(4), tol);
    CHECK(p4.exact_hi);
    CHECK(p4.hi == Rat(1, 3));

    for (const BetaEnclosure* e : {&k1, &k2, &k5, &p4}) {
        CHECK(e->lo > 0);
        CHECK(e->lo < e->hi);
        CHECK(e->width() <= tol);
    }
}

TEST_CASE("beta bracket isolates irrational roots to the requested width") {
    Rat tol = rat_pow(Rat(1, 10), 12);

    // Star with three leaves: root of (1-z)^3 = z near 0.3177.
    BetaEnclosure s3 = beta_bracket(make_star(3), tol);
    CHECK(!s3.exact_hi);
    CHECK(s3.width() <= tol);
    Rat lo3177(3177, 10000), hi3178(3178, 10000);
    CHECK(s3.lo > lo3177 - Rat(1, 10000));
    CHECK(s3.hi < hi3178);

    // C_5 has I(1) = 1 > 0, so plain endpoint bisection has no sign change;
    // the chain-based isolation must kick in.
    BetaEnclosure c5 = beta_bracket(make_cycle(5), tol);
    IntPoly ic5 = independence_poly(make_cycle(5));
    CHECK(eval_rat(ic5, c5.lo) > 0);
    CHECK(eval_rat(ic5, c5.hi) < 0);
    // beta(C_5) = (5 - sqrt 5)/10 = 0.2763932...
    CHECK(c5.lo > Rat(2763, 10000));
    CHECK(c5.hi < Rat(2764, 10000));

    BetaEnclosure tight = beta_bracket(make_star(3), rat_pow(Rat(1, 10), 20));
    CHECK(tight.width() <= rat_pow(Rat(1, 10), 20));
    CHECK(tight.lo >= s3.lo - rat_pow(Rat(1, 10), 12));
    CHECK(tight.hi <= s3.hi + rat_pow(Rat(1, 10), 12));
}

TEST_CASE("beta bracket respects the seed lower bounds on every small graph") {
    Rat tol = rat_pow(Rat(1, 10), 9);
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n, true)) {
            BetaEnclosure e = beta_bracket(g, tol);
            CHECK(e.lo > 0);
            CHECK(e.hi <= 1);
            CHECK(e.width() <= tol);
            CHECK(e.hi >= Rat(1, n));
            if (g.max_degree() >= 2) CHECK(e.hi >= shearer_bound(g.max_degree()));
        }
    CHECK_THROWS_AS(beta_bracket(Graph(3), rat_pow(Rat(1, 10), 6)), std::invalid_argument);
}

TEST_CASE("enclosure refinement tightens around the same root") {
    IntPoly I = independence_poly(make_star(3));
    BetaEnclosure e = beta_bracket(make_star(3), Rat(1, 100));
    Rat lo0 = e.lo, hi0 = e.hi;
    refine_enclosure(I, e, rat_pow(Rat(1, 10), 25));
    CHECK(e.width() <= rat_pow(Rat(1, 10), 25));
    CHECK(e.lo >= lo0);
    CHECK(e.hi <= hi0);
    CHECK(eval_rat(I, e.lo) > 0);
    CHECK(eval_rat(I, e.hi) < 0);
}

TEST_CASE("numeric roots of quadratics hit the closed forms") {
    PrecisionGuard guard(256);
    Real eps("1e-40");

    RootSet p4 = all_roots(independence_poly(make_path(4)), 256);
    REQUIRE(p4.roots.size() == 2);
    CHECK(abs(p4.roots[0].re - Real(1) / 3) < eps);
    CHECK(abs(p4.roots[0].im) < eps);
    CHECK(abs(p4.roots[1].re - 1) < eps);

    RootSet c4 = all_roots(independence_poly(make_cycle(4)), 256);
    REQUIRE(c4.roots.size() == 2);
    Real s = 1 / sqrt(Real(2));
    CHECK(abs(c4.roots[0].re - (1 - s)) < eps);
    CHECK(abs(c4.roots[1].re - (1 + s)) < eps);

    for (const Real& r : p4.residuals) CHECK(r < Real("1e-60"));
}

TEST_CASE("bipartite roots lie on the shifted circle") {
    PrecisionGuard guard(256);
    for (int n : {2, 3, 5}) {
        RootSet rs = all_roots(independence_poly(make_complete_bipartite(n, n)), 256);
        REQUIRE(static_cast<int>(rs.roots.size()) == n);
        Real want = pow(Real(2), Real(-1) / n);
        for (const Cplx& z : rs.roots) {
            Cplx shifted = Cplx(1l) - z;
            CHECK(abs(shifted.abs() - want) < Real("1e-40"));
        }
    }
}

TEST_CASE("residuals stay tiny for families up to twenty vertices") {
    for (const char* spec : {"path:20", "cycle:20", "kbip:10x10", "star:19"}) {
        IntPoly I = independence_poly(parse_graph_spec(spec));
        RootSet rs = all_roots(I, 256);
        PrecisionGuard guard(256);
        int withmult = 0;
        for (size_t i = 0; i < rs.roots.size(); ++i) withmult += rs.multiplicity[i];
        CHECK(withmult == I.degree());
        for (const Real& r : rs.residuals) CHECK(r < Real("1e-25"));
    }
}

TEST_CASE("multiplicities come from the squarefree decomposition") {
    IntPoly p = ip({1, -1}) * ip({1, -1}) * ip({1, -1}) * independence_poly(make_path(3));
    auto factors = squarefree_decomposition(p);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].second == 1);
    CHECK(factors[0].first == independence_poly(make_path(3)));
    CHECK(factors[1].second == 3);
    CHECK(factors[1].first == ip({-1, 1})); // primitive with positive lead
    RootSet rs = all_roots(p, 256);
    int withmult = 0;
    bool saw_triple = false;
    for (size_t i = 0; i < rs.roots.size(); ++i) {
        withmult += rs.multiplicity[i];
        if (rs.multiplicity[i] == 3) {
            saw_triple = true;
            PrecisionGuard guard(256);
            CHECK(abs(rs.roots[i].re - 1) < Real("1e-40"));
        }
    }
    CHECK(withmult == p.degree());
    CHECK(saw_triple);
}

TEST_CASE("near-coincident roots are flagged, not merged") {
    // (1-z)(E - (E+1)z) with E = 10^12: roots 1 and 1 - 1/(E+1).
    Int e = rat_pow(Rat(10), 12).get_num();
    std::vector<Int> c = {e, -(2 * e + 1), e + 1};
    RootSet rs = all_roots(IntPoly(std::move(c)), 256);
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.clustered[0]);
    CHECK(rs.clustered[1]);
    RootSet apart = all_roots(independence_poly(make_path(4)), 256);
    CHECK(!apart.clustered[0]);
    CHECK(!apart.clustered[1]);
}

TEST_CASE("second smallest modulus and empirical gap") {
    PrecisionGuard guard(256);
    Rat tol = rat_pow(Rat(1, 10), 12);

    RootSet p4 = all_roots(independence_poly(make_path(4)), 256);
    BetaEnclosure e4 = beta_bracket(make_path(4), tol);
    CHECK(abs(second_smallest_modulus(p4, e4) - 1) < Real("1e-40"));

    RootSet c4 = all_roots(independence_poly(make_cycle(4)), 256);
    BetaEnclosure ec4 = beta_bracket(make_cycle(4), tol);
    Real s = 1 / sqrt(Real(2));
    CHECK(abs(second_smallest_modulus(c4, ec4) - (1 + s)) < Real("1e-40"));
    // Ratio for the balanced bipartite family at n = 2.
    Real ratio = second_smallest_modulus(c4, ec4) / to_real(ec4.mid());
    CHECK(abs(ratio - (1 + s) / (1 - s)) < Real("1e-9"));

    // Shifted enclosure matches nothing.
    BetaEnclosure wrong{Rat(9, 100), Rat(1, 10), false};
    CHECK_THROWS_AS(second_smallest_modulus(p4, wrong), ConvergenceError);

    // Two roots inside one enclosure must be rejected.
    BetaEnclosure wide{Rat(1, 4), Rat(1), false};
    CHECK_THROWS_AS(second_smallest_modulus(p4, wide), ConvergenceError);

    Real g3 = empirical_gap(make_path(3));
    CHECK(abs(g3 - sqrt(Real(5))) < Real("1e-10"));
    CHECK(boost::multiprecision::isinf(empirical_gap(make_complete(1))));
    CHECK(boost::multiprecision::isinf(empirical_gap(make_complete(2))));
    CHECK(empirical_gap(make_star(3)) > 0);
}

TEST_CASE("enclosures hold exactly one simple real root on every graph") {
    Rat tol = rat_pow(Rat(1, 10), 10);
    std::vector<Graph> pool;
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n, true)) pool.push_back(g);
    std::mt19937 rng(5);
    for (int t = 0; t < 40; ++t) {
        int n = 9 + static_cast<int>(rng() % 6);
        double p = (t % 3 == 0) ? 0.2 : (t % 3 == 1) ? 0.35 : 0.5;
        pool.push_back(random_connected(n, p, 1000 + t));
    }

    for (const Graph& g : pool) {
        IntPoly I = independence_poly(g);
        BetaEnclosure e = beta_bracket(g, tol);
        if (I.degree() < 1) continue;
        RootSet rs = all_roots(I, 256);
        PrecisionGuard guard(256);
        Real lo = to_real(e.lo), hi = to_real(e.hi), slack("1e-25");

        int inside = 0;
        size_t beta_idx = 0;
        for (size_t i = 0; i < rs.roots.size(); ++i) {
            const Cplx& z = rs.roots[i];
            if (abs(z.im) <= slack && z.re >= lo - slack && z.re <= hi + slack) {
                ++inside;
                beta_idx = i;
            }
        }
        REQUIRE(inside == 1);
        CHECK(rs.multiplicity[beta_idx] == 1);
        CHECK(abs(rs.roots[beta_idx].im) < Real("1e-40"));

        // Simplicity with quantitative margin: |I'(beta)| > n * beta^dia / 2.
        Rat m = e.mid();
        Rat deriv = rat_abs(eval_rat(derivative(I, 1), m));
        CHECK(deriv > Rat(g.n) * rat_pow(m, static_cast<unsigned>(diameter(g))) / 2);

        for (size_t i = 0; i < rs.roots.size(); ++i) {
            if (i == beta_idx) continue;
            CHECK(rs.roots[i].abs() > hi);
        }
    }
}

TEST_CASE("root sets serialize with residuals and precision") {
    RootSet rs = all_roots(independence_poly(make_star(3)), 128);
    std::string j = rootset_to_json(rs);
    CHECK(j.find("\"precision\":128") != std::string::npos);
    CHECK(j.find("\"re\"") != std::string::npos);
    CHECK(j.find("\"residual\"") != std::string::npos);
    CHECK(j.find("\"multiplicity\"") != std::string::npos);
}
