#pragma once

// Analytic kernel around the vertex ratio
//   f_u(z) = z * I(G - N[u], z) / I(G - u, z) = 1 - I(G, z) / I(G - u, z).
// The smallest root beta of I(G) is the point where f_u reaches 1. The
// nested-ratio decomposition rewrites f_u as
//   z / ((1 - z)^power * prod_j (1 - g_j))
// with each g_j a vertex ratio of a smaller context, and the majorant
// replaces z by r and each factor by its worst case on the circle |z| = r,
// giving a function of theta alone that dominates |f_u(r e^{i theta})|.

#include "indgap/graph.hpp"
#include "indgap/intpoly.hpp"
#include "indgap/numeric.hpp"
#include "indgap/series.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace indgap {

// Numerator z * I(G - N[u]) and denominator I(G - u), restricted to the
// connected component of u (other components cancel in the ratio).
struct FuRatio {
    IntPoly num;
    IntPoly den;
};

FuRatio f_u_ratio(const Graph& g, int u);

// pre: |den(z)| > 1e-30, otherwise throws std::domain_error.
Cplx f_u_eval(const FuRatio& f, const Cplx& z);
Cplx f_u_eval(const Graph& g, int u, const Cplx& z);

// Exact Maclaurin coefficients of f_u; integral because den(0) = 1.
// Entry 0 is 0 and entry 1 is 1.
IntSeries f_u_series(const Graph& g, int u, int K);

// One node of the decomposition: within the induced subgraph on `context`
// (the component of `pivot`), f_pivot factors as
//   z / ((1 - z)^power * prod (1 - child)).
// `power` counts the pivot's neighbors that are isolated by the time they
// are processed (their own ratio is exactly z); the remaining neighbors
// recurse, in ascending vertex order, each in the context left after
// removing the pivot and the earlier neighbors.
struct NestedRatio {
    std::uint64_t context = 0;
    int pivot = -1;
    int power = 0;
    std::vector<NestedRatio> children;
};

NestedRatio decompose_f_u(const Graph& g, int u);
int depth(const NestedRatio& t); // leaf = 1
Cplx nested_eval(const NestedRatio& t, const Cplx& z);

// Majorant tree: same shape as the decomposition, no graph data needed.
// Node value at radius r and angle theta is
//   r / ((1 - r cos theta)^power * prod (1 - child)).
struct MajorantNode {
    int power = 0;
    std::vector<MajorantNode> children;
};

MajorantNode majorant_tree(const NestedRatio& t);

// pre: 0 < r < 1; throws std::domain_error naming the offending subtree if
// a factor 1 - child or 1 - r cos theta is not positive.
Real majorant_eval(const MajorantNode& m, const Real& r, const Real& theta);

// Exact value at theta = 0; equals f_u(r) identically.
Rat majorant_at_zero(const MajorantNode& m, const Rat& r);

// Taylor expansion in theta around 0 to order K. Odd coefficients vanish up
// to rounding; coefficient 0 equals f_u(r).
FloatSeries majorant_theta_series(const MajorantNode& m, const Real& r, int K,
                                  unsigned precision_bits);

// Derivative-growth estimate: max over k > j of
//   |j! p^(k)(c) / (k! p^(j)(c))| ^ (1/(k-j)),
// the reciprocal of a lower bound on the injectivity scale of p around c.
struct GammaEstimate {
    Real value;
    int truncation_order = 0; // highest derivative order inspected
    Real certified_upper;     // a-priori bound when one applies, else +inf
    Real decay_ratio;         // last / previous root-normalized term, 0 if n/a
};

// pre: p^(j)(c) != 0. A polynomial of degree j gives value 0 (empty max).
GammaEstimate gamma_poly(const IntPoly& p, int j, const Rat& c);
GammaEstimate gamma_poly(const IntPoly& p, int j, const Real& c);

// Same quantity for f_u at beta_hat with j = 0, truncated at derivative
// order K (f_u is not a polynomial, so the max is a lower estimate; the
// certified_upper field carries the proven bound 2n / beta_hat^diameter).
// Derivatives come from exact Taylor shifts of num and den followed by
// rational series division. pre: K >= 2, g connected, den(beta_hat) > 0.
GammaEstimate gamma_f_u_truncated(const Graph& g, int u, const Rat& beta_hat,
                                  int K);

// Exact value of f_v'(beta_hat) computed as -I'(G,beta_hat) / I(G-v,beta_hat)
// (the quotient-rule form of d/dz [1 - I/I_{G-v}] with the I*I'_{G-v} term
// dropped; both agree at the exact root). pre: g connected, I(G-v,beta_hat) > 0.
Rat f_prime_at_beta(const Graph& g, int v, const Rat& beta_hat);

// One inequality evaluated at beta_hat with its exact margin
// (bound - value for upper bounds, value - bound for lower bounds;
// pass means margin >= 0). Non-gating checks are reported but do not
// decide gating_pass.
struct BoundCheck {
    std::string name;
    bool pass = false;
    bool gating = true;
    Rat margin;
};

struct DerivativeBoundsReport {
    std::vector<BoundCheck> checks;
    bool gating_pass = true;
};

// Evaluates, all exactly at rational beta_hat:
//   |I^(k)| / k! <= C(n,k)        (gating)
//   |I^(k)|      <= n^k           (gating)
//   |I^(k)|      <= C(n,k)        (reported only; false for some graphs)
//   I(G - v)     >= beta_hat^diam (gating, every v)
//   |I'|         >= n * beta_hat^diam (gating)
DerivativeBoundsReport derivative_bounds_check(const Graph& g,
                                               const Rat& beta_hat);

// CSV "theta,abs_f_u,majorant" on a uniform grid of `points` angles in
// [0, pi]. pre: points >= 2.
std::string majorant_grid_csv(const Graph& g, int u, const Real& r, int points);

} // namespace indgap
