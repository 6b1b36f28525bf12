#include "indgap/families.hpp"

#include "indgap/graph.hpp"
#include "indgap/indpoly.hpp"

#include <algorithm>
#include <ios>
#include <random>
#include <sstream>
#include <stdexcept>

namespace indgap {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::cos;
using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

void sort_by_modulus(std::vector<Cplx>& v) {
    std::sort(v.begin(), v.end(), [](const Cplx& a, const Cplx& b) {
        Real ma = a.abs(), mb = b.abs();
        if (ma != mb) return ma < mb;
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
}

} // namespace

bool family_spec_valid(const FamilySpec& s) {
    switch (s.kind) {
    case FamilyKind::path: return s.n >= 1;
    case FamilyKind::cycle: return s.n >= 3;
    case FamilyKind::bipartite: return s.n >= 1;
    }
    return false;
}

FamilyKind parse_family_kind(const std::string& s) {
    if (s == "path") return FamilyKind::path;
    if (s == "cycle") return FamilyKind::cycle;
    if (s == "bipartite") return FamilyKind::bipartite;
    throw std::invalid_argument("unknown family kind: " + s);
}

std::string family_kind_name(FamilyKind k) {
    switch (k) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::bipartite: return "bipartite";
    }
    return "?";
}

IntPoly path_poly(int n) {
    if (n < 0) throw std::invalid_argument("path_poly needs n >= 0");
    IntPoly prev2 = IntPoly::constant(1);                  // P_0
    IntPoly prev = IntPoly(std::vector<Int>{Int(1), Int(-1)}); // P_1
    if (n == 0) return prev2;
    if (n == 1) return prev;
    for (int k = 2; k <= n; ++k) {
        IntPoly cur = prev - shift_up(prev2, 1);
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

IntPoly cycle_poly(int n) {
    if (n < 3) throw std::invalid_argument("cycle_poly needs n >= 3");
    return path_poly(n - 1) - shift_up(path_poly(n - 3), 1);
}

IntPoly bipartite_poly(int n) {
    if (n < 1) throw std::invalid_argument("bipartite_poly needs n >= 1");
    IntPoly one_minus_z(std::vector<Int>{Int(1), Int(-1)});
    IntPoly p = IntPoly::constant(2);
    for (int k = 0; k < n; ++k) p = p * one_minus_z;
    return p - IntPoly::constant(1);
}

std::vector<Cplx> closed_form_roots(const FamilySpec& spec) {
    if (!family_spec_valid(spec))
        throw std::invalid_argument("invalid family spec");
    const int n = spec.n;
    Real pi = real_pi();
    std::vector<Cplx> roots;
    int expected = 0;

    switch (spec.kind) {
    case FamilyKind::path: {
        expected = path_poly(n).degree();
        for (int k = 1; k <= (n + 1) / 2; ++k) {
            Real c = cos(pi * k / (n + 2));
            roots.emplace_back(Real(1 / (4 * c * c)), Real(0));
        }
        break;
    }
    case FamilyKind::cycle: {
        expected = cycle_poly(n).degree();
        for (int k = 0; 2 * k + 1 <= n; ++k) {
            if (2 * k + 1 == n) continue; // cos(pi/2) = 0 is not a root
            Real c = cos(pi * (2 * k + 1) / (2 * n));
            roots.emplace_back(Real(1 / (4 * c * c)), Real(0));
        }
        break;
    }
    case FamilyKind::bipartite: {
        expected = bipartite_poly(n).degree();
        Real radius = exp(-log(Real(2)) / n); // 2^{-1/n}
        for (int k = 0; k < n; ++k) {
            Cplx w = cis(Real(2 * pi * k / n)) * radius;
            roots.push_back(Cplx(Real(1), Real(0)) - w);
        }
        break;
    }
    }
    if (static_cast<int>(roots.size()) != expected)
        throw std::logic_error("closed-form root count disagrees with the degree");
    sort_by_modulus(roots);
    return roots;
}

IntPoly fibonacci_poly(int n) {
    if (n < 1) throw std::invalid_argument("fibonacci_poly needs n >= 1");
    IntPoly prev = IntPoly::constant(1);               // F_1
    IntPoly cur(std::vector<Int>{Int(0), Int(1)});     // F_2
    if (n == 1) return prev;
    for (int k = 3; k <= n; ++k) {
        IntPoly next = shift_up(cur, 1) + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool chebyshev_identity_check(int n, const IntPoly& candidate) {
    if (n < 3) throw std::invalid_argument("chebyshev_identity_check needs n >= 3");
    PrecisionGuard pg(256);
    std::mt19937_64 rng(0xc4eb511feULL + static_cast<unsigned>(n));
    std::uniform_real_distribution<double> uni(0.02, 0.98);
    const Real tol("1e-20");
    for (int s = 0; s < 20; ++s) {
        Real z = Real(uni(rng)) / 4;
        Real x = 1 / (2 * sqrt(z));
        Real t_prev(1), t_cur = x; // T_0, T_1 at x
        for (int k = 2; k <= n; ++k) {
            Real t_next = 2 * x * t_cur - t_prev;
            t_prev = t_cur;
            t_cur = t_next;
        }
        Real rhs = 2 * pow(sqrt(z), n) * t_cur;
        if (abs(eval_real(candidate, z) - rhs) > tol) return false;
    }
    return true;
}

bool chebyshev_identity_check(int n) {
    if (n < 3) throw std::invalid_argument("chebyshev_identity_check needs n >= 3");
    return chebyshev_identity_check(n, independence_poly(make_cycle(n)));
}

AsymptoticRatio asymptotic_ratio(const FamilySpec& spec) {
    std::vector<Cplx> roots = closed_form_roots(spec);
    if (roots.size() < 2)
        throw std::invalid_argument("asymptotic_ratio needs at least two roots");
    AsymptoticRatio out{roots[1].abs() / roots[0].abs(), Real(0)};
    Real pi = real_pi();
    const int n = spec.n;
    switch (spec.kind) {
    case FamilyKind::path: {
        Real m(n + 2);
        out.leading_term = 1 + 3 * pi * pi / (m * m);
        break;
    }
    case FamilyKind::cycle: {
        Real nn(n);
        out.leading_term =
            1 + 2 * pi * pi / (nn * nn) + 17 * pi * pi * pi * pi / (6 * nn * nn * nn * nn);
        break;
    }
    case FamilyKind::bipartite: {
        Real b = log(Real(2));
        out.leading_term = sqrt(1 + 4 * pi * pi / (b * b));
        break;
    }
    }
    return out;
}

std::string family_report_csv(FamilyKind kind, const std::vector<int>& ns) {
    std::ostringstream os;
    os << "n,beta,alpha_modulus,ratio,paper_leading_term\n";
    for (int n : ns) {
        FamilySpec s{kind, n};
        std::vector<Cplx> roots = closed_form_roots(s);
        AsymptoticRatio ar = asymptotic_ratio(s);
        os << n << "," << roots[0].abs().str(12, std::ios_base::scientific) << ","
           << roots[1].abs().str(12, std::ios_base::scientific) << ","
           << ar.ratio.str(12, std::ios_base::scientific) << ","
           << ar.leading_term.str(12, std::ios_base::scientific) << "\n";
    }
    return os.str();
}

} // namespace indgap
