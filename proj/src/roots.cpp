#include "indgap/roots.hpp"

#include "indgap/errors.hpp"
#include "indgap/indpoly.hpp"
#include "json.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace indgap {

Rat shearer_bound(int d) {
    if (d < 1) throw std::invalid_argument("shearer_bound needs d >= 1");
    Int num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), d - 1, d - 1); // 0^0 = 1 by GMP convention
    mpz_ui_pow_ui(den.get_mpz_t(), d, d);
    return make_rat(num, den);
}

namespace {

RatPoly rp_from(const IntPoly& p) {
    RatPoly r;
    r.reserve(p.c.size());
    for (const Int& a : p.c) r.emplace_back(a);
    return r;
}

void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rp_derivative(const RatPoly& p) {
    RatPoly d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(Rat(static_cast<long>(k)) * p[k]);
    return d;
}

RatPoly rp_rem(RatPoly a, const RatPoly& b) {
    rp_trim(a);
    while (a.size() >= b.size()) {
        Rat q = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i + 1 < b.size(); ++i) a[off + i] -= q * b[i];
        a.pop_back(); // leading term cancels exactly
        rp_trim(a);
    }
    return a;
}

RatPoly rp_divexact(RatPoly a, const RatPoly& b) {
    rp_trim(a);
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw std::logic_error("inexact polynomial division");
    RatPoly q(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size()) {
        Rat c = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t i = 0; i + 1 < b.size(); ++i) a[off + i] -= c * b[i];
        a.pop_back();
        rp_trim(a);
    }
    if (!a.empty()) throw std::logic_error("inexact polynomial division");
    return q;
}

RatPoly rp_gcd(RatPoly a, RatPoly b) {
    rp_trim(a);
    rp_trim(b);
    while (!b.empty()) {
        RatPoly r = rp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;
    }
    return a;
}

IntPoly rp_to_primitive(const RatPoly& p) {
    if (p.empty()) return IntPoly();
    Int l(1);
    for (const Rat& c : p)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> v;
    v.reserve(p.size());
    for (const Rat& c : p) v.push_back(Rat(c * Rat(l)).get_num());
    Int g(0);
    for (const Int& a : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g > 1)
        for (Int& a : v) a /= g;
    if (v.back() < 0)
        for (Int& a : v) a = -a;
    return IntPoly(std::move(v));
}

int variations(const std::vector<RatPoly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const RatPoly& q : chain) {
        int s = sign(eval_rat(q, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Evaluation by explicit power sums; deliberately a different code path than
// the Horner evaluation used while bisecting.
Rat eval_powersum(const IntPoly& p, const Rat& x) {
    Rat s(0);
    for (size_t k = 0; k < p.c.size(); ++k)
        if (p.c[k] != 0) s += Rat(p.c[k]) * rat_pow(x, static_cast<unsigned>(k));
    return s;
}

} // namespace

std::vector<RatPoly> sturm_chain(const IntPoly& p) {
    RatPoly p0 = rp_from(p);
    rp_trim(p0);
    if (p0.empty()) throw std::invalid_argument("sturm chain of zero polynomial");
    std::vector<RatPoly> chain;
    chain.push_back(std::move(p0));
    RatPoly next = rp_derivative(chain.back());
    rp_trim(next);
    while (!next.empty()) {
        chain.push_back(std::move(next));
        RatPoly r = rp_rem(chain[chain.size() - 2], chain.back());
        for (Rat& c : r) c = -c;
        next = std::move(r);
    }
    return chain;
}

int sturm_count(const std::vector<RatPoly>& chain, const Rat& a, const Rat& b) {
    if (a > b) throw std::invalid_argument("sturm_count needs a <= b");
    return variations(chain, a) - variations(chain, b);
}

void refine_enclosure(const IntPoly& p, BetaEnclosure& e, const Rat& tol) {
    if (tol <= 0) throw std::invalid_argument("refine_enclosure needs tol > 0");
    if (e.exact_hi) {
        while (e.hi - e.lo > tol) e.lo = (e.lo + e.hi) / 2;
        return;
    }
    while (e.hi - e.lo > tol) {
        Rat m = e.mid();
        int s = sign(eval_rat(p, m));
        if (s == 0) {
            e.hi = m;
            e.exact_hi = true;
            while (e.hi - e.lo > tol) e.lo = (e.lo + e.hi) / 2;
            return;
        }
        (s > 0 ? e.lo : e.hi) = m;
    }
}

BetaEnclosure beta_bracket(const Graph& g, const Rat& tol) {
    if (!is_connected(g)) throw std::invalid_argument("beta_bracket needs a connected graph");
    if (tol <= 0) throw std::invalid_argument("beta_bracket needs tol > 0");
    IntPoly I = independence_poly(g);
    int n = g.n;
    int d = g.max_degree();

    Rat seed(1, n);
    if (d >= 2) seed = std::max(seed, shearer_bound(d));

    auto verified = [&I](BetaEnclosure e) {
        if (!(e.lo > 0 && e.lo < e.hi && e.hi <= 1))
            throw ConvergenceError("enclosure escaped (0,1]");
        if (eval_powersum(I, e.lo) <= 0)
            throw ConvergenceError("enclosure lower sign check failed");
        Rat vb = eval_powersum(I, e.hi);
        if (e.exact_hi ? vb != 0 : vb >= 0)
            throw ConvergenceError("enclosure upper sign check failed");
        return e;
    };

    auto exact_at = [&](const Rat& beta) {
        BetaEnclosure e;
        e.hi = beta;
        e.lo = beta - std::min(tol, Rat(beta / 2));
        e.exact_hi = true;
        return verified(e);
    };

    if (eval_rat(I, seed) == 0) return exact_at(seed);
    if (eval_rat(I, seed) < 0)
        throw ConvergenceError("independence polynomial negative at the seed bound");

    // Any rational root is 1/q with q dividing the leading coefficient, and
    // the smallest root is at least 1/n, so q ranges over [1, n].
    Rat best(0);
    for (int q = 1; q <= n; ++q) {
        if (!mpz_divisible_ui_p(I.c.back().get_mpz_t(), static_cast<unsigned long>(q)))
            continue;
        Rat cand(1, q);
        if (cand < seed) break;
        if (eval_rat(I, cand) == 0) best = cand;
    }

    std::vector<RatPoly> chain = sturm_chain(I);
    if (best != 0 && sturm_count(chain, seed, best) == 1) return exact_at(best);

    Rat a = seed, b(1);
    if (sturm_count(chain, a, b) < 1)
        throw ConvergenceError("no root of the independence polynomial in (seed, 1]");
    while (sturm_count(chain, a, b) > 1) {
        Rat m = (a + b) / 2;
        if (sturm_count(chain, a, m) >= 1) b = m;
        else a = m;
    }

    if (eval_rat(I, b) == 0) return exact_at(b);
    if (eval_rat(I, b) > 0)
        throw ConvergenceError("smallest real root is not a sign crossing");

    BetaEnclosure e;
    e.lo = a;
    e.hi = b;
    refine_enclosure(I, e, tol);
    return verified(e);
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<std::pair<IntPoly, int>> out;
    RatPoly f = rp_from(p);
    rp_trim(f);
    if (f.size() <= 1) return out;
    RatPoly u = rp_gcd(f, rp_derivative(f));
    RatPoly v = rp_divexact(f, u);
    RatPoly w = rp_divexact(rp_derivative(f), u);
    for (int i = 1; v.size() > 1; ++i) {
        if (i > p.degree()) throw std::logic_error("squarefree decomposition ran away");
        RatPoly vp = rp_derivative(v);
        RatPoly h = w;
        if (h.size() < vp.size()) h.resize(vp.size(), Rat(0));
        for (size_t k = 0; k < vp.size(); ++k) h[k] -= vp[k];
        rp_trim(h);
        RatPoly a = rp_gcd(v, h);
        if (a.size() > 1) out.emplace_back(rp_to_primitive(a), i);
        v = rp_divexact(v, a);
        w = rp_divexact(h, a);
    }
    return out;
}

namespace {

Real cauchy_bound(const IntPoly& p) {
    Real lead = abs(to_real(p.c.back()));
    Real m(0);
    for (size_t k = 0; k + 1 < p.c.size(); ++k) {
        Real r = abs(to_real(p.c[k])) / lead;
        if (r > m) m = r;
    }
    return Real(1 + m);
}

std::vector<Cplx> solve_squarefree(const IntPoly& f, unsigned precision_bits) {
    int d = f.degree();
    std::vector<Cplx> z(d);
    if (d == 1) {
        z[0] = Cplx(make_rat(-f.c[0], f.c[1]));
        return z;
    }
    IntPoly fp = derivative(f, 1);
    Real radius = cauchy_bound(f);
    Real tau = Real(2 * real_pi());
    for (int k = 0; k < d; ++k) {
        Real ang = Real(tau * k / d + Real("0.4"));
        z[k] = cis(ang) * radius;
    }
    Real target = Real(pow(Real(10), -static_cast<long>(precision_bits / 4)));
    const int cap = 400;
    Real maxstep(0);
    for (int iter = 0; iter < cap; ++iter) {
        maxstep = 0;
        for (int i = 0; i < d; ++i) {
            Cplx dv = eval_cplx(fp, z[i]);
            if (dv.abs() == 0) {
                z[i].re += Real(radius * Real("1e-3"));
                maxstep = 1;
                continue;
            }
            Cplx w = eval_cplx(f, z[i]) / dv;
            Cplx s(0l);
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                Cplx diff = z[i] - z[j];
                if (diff.abs() == 0) diff.re += Real(radius * Real("1e-20"));
                s += Cplx(1l) / diff;
            }
            Cplx denom = Cplx(1l) - w * s;
            Cplx corr = denom.abs() == 0 ? w : w / denom;
            z[i] -= corr;
            Real scale = z[i].abs();
            if (scale < 1) scale = 1;
            Real rel = Real(corr.abs() / scale);
            if (rel > maxstep) maxstep = rel;
        }
        if (maxstep < target) {
            for (int i = 0; i < d; ++i)
                for (int t = 0; t < 4; ++t) {
                    Cplx dv = eval_cplx(fp, z[i]);
                    if (dv.abs() == 0) break;
                    z[i] -= eval_cplx(f, z[i]) / dv;
                }
            return z;
        }
    }
    std::ostringstream msg;
    msg << "root iteration stalled after " << cap << " rounds (degree " << d
        << ", last relative step " << maxstep << ")";
    throw ConvergenceError(msg.str());
}

} // namespace

RootSet all_roots(const IntPoly& p, unsigned precision_bits) {
    if (p.degree() < 1) throw std::invalid_argument("all_roots needs degree >= 1");
    PrecisionGuard guard(precision_bits);
    RootSet rs;
    rs.precision_bits = precision_bits;

    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        for (const Cplx& z : solve_squarefree(factor, precision_bits)) {
            rs.roots.push_back(z);
            rs.multiplicity.push_back(mult);
        }
    }

    std::vector<size_t> order(rs.roots.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
        Real mi = rs.roots[i].abs(), mj = rs.roots[j].abs();
        if (mi != mj) return mi < mj;
        if (rs.roots[i].re != rs.roots[j].re) return rs.roots[i].re < rs.roots[j].re;
        return rs.roots[i].im < rs.roots[j].im;
    });
    RootSet sorted;
    sorted.precision_bits = precision_bits;
    for (size_t i : order) {
        sorted.roots.push_back(rs.roots[i]);
        sorted.multiplicity.push_back(rs.multiplicity[i]);
    }
    rs = std::move(sorted);

    for (const Cplx& z : rs.roots) rs.residuals.push_back(eval_cplx(p, z).abs());

    Real near = Real(cauchy_bound(p) * Real("1e-10"));
    rs.clustered.assign(rs.roots.size(), 0);
    for (size_t i = 0; i < rs.roots.size(); ++i)
        for (size_t j = i + 1; j < rs.roots.size(); ++j)
            if ((rs.roots[i] - rs.roots[j]).abs() < near) {
                rs.clustered[i] = rs.clustered[j] = 1;
            }
    return rs;
}

Real second_smallest_modulus(const RootSet& rs, const BetaEnclosure& enc) {
    PrecisionGuard guard(rs.precision_bits);
    Real lo = to_real(enc.lo), hi = to_real(enc.hi);
    Real slack = Real(to_real(enc.width()) +
                      pow(Real(10), -static_cast<long>(rs.precision_bits / 8)));
    std::vector<size_t> inside;
    for (size_t i = 0; i < rs.roots.size(); ++i) {
        const Cplx& z = rs.roots[i];
        if (abs(z.im) <= slack && z.re >= lo - slack && z.re <= hi + slack)
            inside.push_back(i);
    }
    if (inside.empty())
        throw ConvergenceError("no numeric root matches the beta enclosure");
    if (inside.size() > 1 || rs.multiplicity[inside[0]] > 1)
        throw ConvergenceError("beta enclosure matched by multiple roots; expected a simple root");
    Real best(0);
    bool have = false;
    for (size_t i = 0; i < rs.roots.size(); ++i) {
        if (i == inside[0]) continue;
        Real m = rs.roots[i].abs();
        if (!have || m < best) {
            best = m;
            have = true;
        }
    }
    if (!have) throw LimitError("no root besides beta");
    return best;
}

Real empirical_gap(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("empirical_gap needs a connected graph");
    IntPoly I = independence_poly(g);
    BetaEnclosure enc = beta_bracket(g, rat_pow(Rat(1, 10), 12));
    if (I.degree() == 1) return Real(std::numeric_limits<double>::infinity());
    RootSet rs = all_roots(I, 256);
    PrecisionGuard guard(256);
    return Real(second_smallest_modulus(rs, enc) - to_real(enc.mid()));
}

std::string rootset_to_json(const RootSet& rs) {
    PrecisionGuard guard(rs.precision_bits);
    nlohmann::json j;
    j["precision"] = rs.precision_bits;
    j["roots"] = nlohmann::json::array();
    for (size_t i = 0; i < rs.roots.size(); ++i) {
        nlohmann::json r;
        r["re"] = rs.roots[i].re.str(30);
        r["im"] = rs.roots[i].im.str(30);
        r["residual"] = rs.residuals[i].str(8);
        r["multiplicity"] = rs.multiplicity[i];
        r["clustered"] = static_cast<bool>(rs.clustered[i]);
        j["roots"].push_back(std::move(r));
    }
    return j.dump();
}

} // namespace indgap
