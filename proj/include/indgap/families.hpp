#pragma once

// Closed-form ground truth for three graph families, independent of the
// deletion-recursion engine:
//   paths      I(P_n) = I(P_{n-1}) - z I(P_{n-2}),   roots 1/(4cos^2(k pi/(n+2)))
//   cycles     I(C_n) = I(P_{n-1}) - z I(P_{n-3}),   roots 1/(4cos^2((2k+1) pi/2n))
//   K_{n x n}  I = 2(1-z)^n - 1,                     roots 1 - 2^{-1/n} e^{2 pi i k/n}
// plus the Fibonacci lift z^{n+1} I(P_n, -1/z^2) = F_{n+2}(z) and the Chebyshev
// form I(C_n, z) = 2 z^{n/2} T_n(1/(2 sqrt z)).

#include "indgap/intpoly.hpp"
#include "indgap/numeric.hpp"

#include <string>
#include <vector>

namespace indgap {

enum class FamilyKind { path, cycle, bipartite };

struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    int n = 0;
};

// path n >= 1, cycle n >= 3, bipartite n >= 1
bool family_spec_valid(const FamilySpec& s);

FamilyKind parse_family_kind(const std::string& s);
std::string family_kind_name(FamilyKind k);

// Recurrence/closed-form polynomials (never touch the graph engine).
IntPoly path_poly(int n);      // pre: n >= 0 (P_0 is the empty graph, I = 1)
IntPoly cycle_poly(int n);     // pre: n >= 3
IntPoly bipartite_poly(int n); // pre: n >= 1

// All roots at working precision, sorted by modulus then re then im. The
// count is checked against the family polynomial's degree.
std::vector<Cplx> closed_form_roots(const FamilySpec& spec);

// F_1 = 1, F_2 = z, F_{n+1} = z F_n + F_{n-1}. pre: n >= 1.
IntPoly fibonacci_poly(int n);

// Verifies I(C_n, z) = 2 z^{n/2} T_n(1/(2 sqrt z)) at 20 deterministic sample
// points z in (0, 1/4), absolute tolerance 1e-20. The second form checks an
// arbitrary candidate polynomial (negative controls). pre: n >= 3.
bool chebyshev_identity_check(int n);
bool chebyshev_identity_check(int n, const IntPoly& candidate);

struct AsymptoticRatio {
    Real ratio;         // |second root| / |smallest root|, from closed forms
    Real leading_term; // leading-order prediction for the same quantity
};

// pre: the family has at least two roots (path n >= 3, cycle n >= 4,
// bipartite n >= 2); throws std::invalid_argument otherwise.
AsymptoticRatio asymptotic_ratio(const FamilySpec& spec);

// "n,beta,alpha_modulus,ratio,paper_leading_term" rows for the given sizes.
std::string family_report_csv(FamilyKind kind, const std::vector<int>& ns);

} // namespace indgap
