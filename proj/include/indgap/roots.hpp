#pragma once

// Root machinery: exact rational bracketing of the smallest positive root of
// I(G,z) through a Sturm chain plus sign bisection, and a numeric all-roots
// solver used as an empirical oracle (never as a certificate).

#include "indgap/graph.hpp"
#include "indgap/intpoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace indgap {

// Smallest-root lower bound (d-1)^(d-1) / d^d as a function of max degree.
Rat shearer_bound(int d); // pre: d >= 1

struct BetaEnclosure {
    Rat lo, hi;
    bool exact_hi = false; // hi is the root itself

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
};

// Sturm chain over rationals. sturm_count gives the number of distinct real
// roots in the half-open interval (a, b].
std::vector<RatPoly> sturm_chain(const IntPoly& p);
int sturm_count(const std::vector<RatPoly>& chain, const Rat& a, const Rat& b);

// Bracket the smallest positive root of I(G,z) to the requested width with
// exact rational sign tests only. Rational roots are detected exactly.
BetaEnclosure beta_bracket(const Graph& g, const Rat& tol);
void refine_enclosure(const IntPoly& p, BetaEnclosure& e, const Rat& tol);

struct RootSet {
    std::vector<Cplx> roots; // sorted by modulus, then re, then im
    std::vector<Real> residuals;
    std::vector<int> multiplicity;
    std::vector<char> clustered; // within 1e-10 * Cauchy bound of another root
    unsigned precision_bits = 0;
};

// Factors (squarefree, multiplicity), multiplicities ascending.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

RootSet all_roots(const IntPoly& p, unsigned precision_bits);

// Smallest modulus among roots other than the one matching the enclosure.
Real second_smallest_modulus(const RootSet& rs, const BetaEnclosure& enc);

// Distance from beta to the next root modulus; +infinity for linear I.
Real empirical_gap(const Graph& g);

// {"roots": [{"re","im","residual","multiplicity","clustered"}], "precision"}
std::string rootset_to_json(const RootSet& rs);

} // namespace indgap
