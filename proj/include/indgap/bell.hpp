#pragma once

// Set-partition combinatorics behind the derivative bounds: Stirling and
// (ordered) Bell numbers, partial Bell polynomials, composition counts, and
// the higher-derivative chain rule expansion.

#include "indgap/numeric.hpp"

#include <vector>

namespace indgap {

Int factorial(int n);
Int binomial(int n, int k); // 0 outside 0 <= k <= n
Int stirling2(int N, int K);
Int bell_number(int N);
Int ordered_bell(int N);

// All tuples (i_1, ..., i_{N-K+1}) with i_1 + i_2 + ... = K and
// i_1 + 2 i_2 + 3 i_3 + ... = N; the index domain shared by the partial
// Bell polynomial and the composition identity.
std::vector<std::vector<int>> index_tuples(int N, int K);

// Exact partial exponential Bell polynomial B_{N,K}(x_1, ..., x_{N-K+1}).
Rat partial_bell(int N, int K, const std::vector<Rat>& x);

// Enumerates sum over tuples of K!/(i_1! i_2! ...) and compares it with
// C(N-1, K-1), the number of compositions of N into K parts.
bool composition_count_check(int N, int K);

// One term of the N-th derivative of f(g(x)):
//   multiplier * f^(K)(g(x)) * prod_m (g^(m)(x))^(i_m)
// with multiplier = N! / prod_m (i_m! * (m!)^(i_m)).
struct ChainRuleTerm {
    int K = 0;
    std::vector<int> counts; // i_1..i_N
    Int multiplier;
};
std::vector<ChainRuleTerm> faa_di_bruno_coeffs(int N);

} // namespace indgap
