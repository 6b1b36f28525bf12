#include "indgap/bell.hpp"

#include <algorithm>
#include <stdexcept>

namespace indgap {

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial needs n >= 0");
    if (k < 0 || k > n) return Int(0);
    Int b(1);
    for (int i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

Int stirling2(int N, int K) {
    if (N < 0 || K < 0) throw std::invalid_argument("stirling2 needs N, K >= 0");
    if (K > N) return Int(0);
    std::vector<Int> row(K + 1, Int(0));
    row[0] = 1; // S(0,0)
    for (int n = 1; n <= N; ++n) {
        for (int k = std::min(n, K); k >= 1; --k) row[k] = k * row[k] + row[k - 1];
        row[0] = 0; // S(n,0) = 0 once n >= 1
    }
    return row[K];
}

Int bell_number(int N) {
    Int b(0);
    for (int k = 0; k <= N; ++k) b += stirling2(N, k);
    return b;
}

Int ordered_bell(int N) {
    Int b(0);
    for (int k = 0; k <= N; ++k) b += factorial(k) * stirling2(N, k);
    return b;
}

namespace {
void tuples_rec(int m, int L, int want_sum, int want_weight,
                std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (m > L) {
        if (want_sum == 0 && want_weight == 0) out.push_back(cur);
        return;
    }
    int cap = std::min(want_sum, want_weight / m);
    for (int i = 0; i <= cap; ++i) {
        cur[m - 1] = i;
        tuples_rec(m + 1, L, want_sum - i, want_weight - m * i, cur, out);
    }
    cur[m - 1] = 0;
}
} // namespace

std::vector<std::vector<int>> index_tuples(int N, int K) {
    if (K < 0 || K > N) throw std::invalid_argument("index_tuples needs 0 <= K <= N");
    int L = N - K + 1;
    std::vector<int> cur(L, 0);
    std::vector<std::vector<int>> out;
    tuples_rec(1, L, K, N, cur, out);
    return out;
}

Rat partial_bell(int N, int K, const std::vector<Rat>& x) {
    if (K < 0 || K > N) throw std::invalid_argument("partial_bell needs 0 <= K <= N");
    int L = N - K + 1;
    if (static_cast<int>(x.size()) < L)
        throw std::invalid_argument("partial_bell needs at least N-K+1 arguments");
    Rat sum(0);
    Int nfact = factorial(N);
    for (const auto& t : index_tuples(N, K)) {
        Rat term(nfact);
        for (int m = 1; m <= L; ++m) {
            if (t[m - 1] == 0) continue;
            term /= factorial(t[m - 1]);
            for (int e = 0; e < t[m - 1]; ++e) term *= x[m - 1] / factorial(m);
        }
        sum += term;
    }
    return sum;
}

bool composition_count_check(int N, int K) {
    if (K < 1 || K > N) throw std::invalid_argument("composition check needs 1 <= K <= N");
    Rat sum(0);
    Int kfact = factorial(K);
    for (const auto& t : index_tuples(N, K)) {
        Rat term(kfact);
        for (int i : t)
            if (i > 0) term /= factorial(i);
        sum += term;
    }
    return sum == Rat(binomial(N - 1, K - 1));
}

std::vector<ChainRuleTerm> faa_di_bruno_coeffs(int N) {
    if (N < 1) throw std::invalid_argument("chain rule expansion needs N >= 1");
    std::vector<ChainRuleTerm> out;
    Int nfact = factorial(N);
    for (int K = 1; K <= N; ++K) {
        for (const auto& t : index_tuples(N, K)) {
            ChainRuleTerm term;
            term.K = K;
            term.counts.assign(N, 0);
            std::copy(t.begin(), t.end(), term.counts.begin());
            Int denom(1);
            for (int m = 1; m <= static_cast<int>(t.size()); ++m) {
                if (t[m - 1] == 0) continue;
                denom *= factorial(t[m - 1]);
                Int mf = factorial(m);
                for (int e = 0; e < t[m - 1]; ++e) denom *= mf;
            }
            term.multiplier = nfact / denom;
            out.push_back(std::move(term));
        }
    }
    return out;
}

} // namespace indgap
