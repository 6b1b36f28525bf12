#include "indgap/analytic.hpp"

#include "indgap/bell.hpp"
#include "indgap/indpoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace indgap {

namespace {

void check_vertex(const Graph& g, int u, const char* who) {
    if (u < 0 || u >= g.n)
        throw std::invalid_argument(std::string(who) + ": vertex out of range");
}

void check_connected(const Graph& g, const char* who) {
    if (g.n == 0 || !is_connected(g))
        throw std::invalid_argument(std::string(who) + ": needs a connected graph");
}

} // namespace

FuRatio f_u_ratio(const Graph& g, int u) {
    check_vertex(g, u, "f_u_ratio");
    IndPolyEngine eng(g);
    std::uint64_t comp = component_of(g, full_mask(g.n), u);
    FuRatio f;
    f.num = shift_up(eng.on_mask(comp & ~g.closed_nbhd(u)), 1);
    f.den = eng.on_mask(comp & ~bit(u));
    return f;
}

Cplx f_u_eval(const FuRatio& f, const Cplx& z) {
    Cplx den = eval_cplx(f.den, z);
    if (den.abs() < Real(1e-30))
        throw std::domain_error("f_u_eval: denominator vanishes at this point");
    return eval_cplx(f.num, z) / den;
}

Cplx f_u_eval(const Graph& g, int u, const Cplx& z) {
    return f_u_eval(f_u_ratio(g, u), z);
}

IntSeries f_u_series(const Graph& g, int u, int K) {
    FuRatio f = f_u_ratio(g, u);
    return series_div(f.num, f.den, K);
}

namespace {

NestedRatio decompose_rec(const Graph& g, int u, std::uint64_t ctx) {
    NestedRatio node;
    node.context = component_of(g, ctx, u);
    node.pivot = u;
    std::uint64_t cur = node.context & ~bit(u);
    std::uint64_t nb = g.adj[u] & node.context;
    for (int v = 0; v < g.n; ++v) {
        if (!(nb >> v & 1)) continue;
        if ((g.adj[v] & cur) == 0)
            ++node.power; // ratio of an isolated vertex is exactly z
        else
            node.children.push_back(decompose_rec(g, v, cur));
        cur &= ~bit(v);
    }
    return node;
}

} // namespace

NestedRatio decompose_f_u(const Graph& g, int u) {
    check_vertex(g, u, "decompose_f_u");
    return decompose_rec(g, u, full_mask(g.n));
}

int depth(const NestedRatio& t) {
    int d = 0;
    for (const NestedRatio& c : t.children) d = std::max(d, depth(c));
    return d + 1;
}

Cplx nested_eval(const NestedRatio& t, const Cplx& z) {
    Cplx one(1);
    Cplx denom(1);
    Cplx base = one - z;
    for (int i = 0; i < t.power; ++i) denom = denom * base;
    for (const NestedRatio& c : t.children) denom = denom * (one - nested_eval(c, z));
    if (denom.abs() < Real(1e-30))
        throw std::domain_error("nested_eval: denominator vanishes at this point");
    return z / denom;
}

MajorantNode majorant_tree(const NestedRatio& t) {
    MajorantNode m;
    m.power = t.power;
    m.children.reserve(t.children.size());
    for (const NestedRatio& c : t.children) m.children.push_back(majorant_tree(c));
    return m;
}

namespace {

Real majorant_eval_rec(const MajorantNode& m, const Real& r, const Real& c,
                       const std::string& path) {
    using boost::multiprecision::pow;
    Real base = 1 - r * c;
    if (base <= 0)
        throw std::domain_error("majorant_eval: 1 - r cos(theta) <= 0 at " + path);
    Real denom = pow(base, m.power);
    for (size_t j = 0; j < m.children.size(); ++j) {
        std::string sub = path + "." + std::to_string(j + 1);
        Real child = majorant_eval_rec(m.children[j], r, c, sub);
        if (child >= 1)
            throw std::domain_error("majorant_eval: factor 1 - g <= 0 at " + sub);
        denom *= 1 - child;
    }
    return r / denom;
}

Rat majorant_zero_rec(const MajorantNode& m, const Rat& r, const std::string& path) {
    Rat base = Rat(1) - r;
    if (sign(base) <= 0)
        throw std::domain_error("majorant_at_zero: 1 - r <= 0 at " + path);
    Rat denom = rat_pow(base, static_cast<unsigned>(m.power));
    for (size_t j = 0; j < m.children.size(); ++j) {
        std::string sub = path + "." + std::to_string(j + 1);
        Rat child = majorant_zero_rec(m.children[j], r, sub);
        if (child >= 1)
            throw std::domain_error("majorant_at_zero: factor 1 - g <= 0 at " + sub);
        denom *= Rat(1) - child;
    }
    return r / denom;
}

FloatSeries majorant_series_rec(const MajorantNode& m, const Real& r,
                                const FloatSeries& base_recip, int K, unsigned bits,
                                const std::string& path) {
    FloatSeries acc{std::vector<Real>(K + 1, Real(0)), bits};
    acc.c[0] = r;
    if (m.power > 0) acc = float_mul(acc, float_pow(base_recip, m.power, K), K);
    for (size_t j = 0; j < m.children.size(); ++j) {
        std::string sub = path + "." + std::to_string(j + 1);
        FloatSeries child = majorant_series_rec(m.children[j], r, base_recip, K, bits, sub);
        for (Real& x : child.c) x = -x;
        child.c[0] += 1;
        if (child.c[0] <= 0)
            throw std::domain_error("majorant_theta_series: factor 1 - g <= 0 at " + sub);
        acc = float_mul(acc, float_reciprocal(child, K), K);
    }
    return acc;
}

} // namespace

Real majorant_eval(const MajorantNode& m, const Real& r, const Real& theta) {
    using boost::multiprecision::cos;
    if (r <= 0) throw std::domain_error("majorant_eval: needs r > 0");
    Real c = cos(theta);
    return majorant_eval_rec(m, r, c, "root");
}

Rat majorant_at_zero(const MajorantNode& m, const Rat& r) {
    if (sign(r) <= 0) throw std::domain_error("majorant_at_zero: needs r > 0");
    return majorant_zero_rec(m, r, "root");
}

FloatSeries majorant_theta_series(const MajorantNode& m, const Real& r, int K,
                                  unsigned precision_bits) {
    if (K < 0) throw std::invalid_argument("majorant_theta_series: order must be >= 0");
    PrecisionGuard guard(precision_bits);
    FloatSeries base = cos_series(K, precision_bits);
    for (Real& x : base.c) x = -r * x;
    base.c[0] += 1; // 1 - r cos(theta)
    FloatSeries recip = float_reciprocal(base, K);
    return majorant_series_rec(m, r, recip, K, precision_bits, "root");
}

namespace {

GammaEstimate gamma_empty(int truncation) {
    GammaEstimate est;
    est.value = 0;
    est.truncation_order = truncation;
    est.certified_upper = std::numeric_limits<Real>::infinity();
    est.decay_ratio = 0;
    return est;
}

} // namespace

GammaEstimate gamma_poly(const IntPoly& p, int j, const Rat& c) {
    using boost::multiprecision::pow;
    if (j < 0) throw std::invalid_argument("gamma_poly: negative derivative order");
    int d = p.degree();
    RatPoly s = taylor_shift(p, c);
    if (j > d || s[j] == 0)
        throw std::domain_error("gamma_poly: j-th derivative vanishes at the center");
    GammaEstimate est = gamma_empty(d);
    for (int k = j + 1; k <= d; ++k) {
        if (s[k] == 0) continue;
        Real term = Real(pow(to_real(rat_abs(s[k] / s[j])), Real(1) / (k - j)));
        est.value = std::max(est.value, term);
    }
    return est;
}

GammaEstimate gamma_poly(const IntPoly& p, int j, const Real& c) {
    using boost::multiprecision::abs;
    using boost::multiprecision::pow;
    if (j < 0) throw std::invalid_argument("gamma_poly: negative derivative order");
    int d = p.degree();
    std::vector<Real> s = float_taylor_shift(p, c);
    if (j > d || s[j] == 0)
        throw std::domain_error("gamma_poly: j-th derivative vanishes at the center");
    GammaEstimate est = gamma_empty(d);
    for (int k = j + 1; k <= d; ++k) {
        if (s[k] == 0) continue;
        Real term = Real(pow(Real(abs(s[k] / s[j])), Real(1) / (k - j)));
        est.value = std::max(est.value, term);
    }
    return est;
}

GammaEstimate gamma_f_u_truncated(const Graph& g, int u, const Rat& beta_hat, int K) {
    using boost::multiprecision::pow;
    if (K < 2) throw std::invalid_argument("gamma_f_u_truncated: needs K >= 2");
    check_connected(g, "gamma_f_u_truncated");
    check_vertex(g, u, "gamma_f_u_truncated");
    FuRatio f = f_u_ratio(g, u);
    RatPoly a = taylor_shift(f.num, beta_hat);
    RatPoly b = taylor_shift(f.den, beta_hat);
    if (sign(b[0]) <= 0)
        throw std::domain_error("gamma_f_u_truncated: denominator not positive at beta_hat");

    // t[k] = f_u^(k)(beta_hat) / k! by rational series division.
    std::vector<Rat> t(K + 1);
    for (int k = 0; k <= K; ++k) {
        Rat acc = k < static_cast<int>(a.size()) ? a[k] : Rat(0);
        int imax = std::min(k, static_cast<int>(b.size()) - 1);
        for (int i = 1; i <= imax; ++i) acc -= b[i] * t[k - i];
        t[k] = acc / b[0];
    }
    if (sign(t[0]) <= 0)
        throw std::domain_error("gamma_f_u_truncated: f_u(beta_hat) not positive");

    GammaEstimate est = gamma_empty(K);
    est.certified_upper =
        to_real(Rat(2 * g.n) / rat_pow(beta_hat, static_cast<unsigned>(diameter(g))));
    Real prev(0), last(0);
    for (int k = 1; k <= K; ++k) {
        Real term = t[k] == 0
                        ? Real(0)
                        : Real(pow(to_real(rat_abs(t[k] / t[0])), Real(1) / k));
        est.value = std::max(est.value, term);
        prev = last;
        last = term;
    }
    if (prev > 0) est.decay_ratio = last / prev;
    return est;
}

Rat f_prime_at_beta(const Graph& g, int v, const Rat& beta_hat) {
    check_connected(g, "f_prime_at_beta");
    check_vertex(g, v, "f_prime_at_beta");
    IndPolyEngine eng(g);
    Rat den = eval_rat(eng.on_mask(full_mask(g.n) & ~bit(v)), beta_hat);
    if (sign(den) <= 0)
        throw std::domain_error("f_prime_at_beta: I(G - v) not positive at beta_hat");
    return -eval_rat(derivative(eng.full()), beta_hat) / den;
}

DerivativeBoundsReport derivative_bounds_check(const Graph& g, const Rat& beta_hat) {
    check_connected(g, "derivative_bounds_check");
    DerivativeBoundsReport rep;
    IndPolyEngine eng(g);
    IntPoly I = eng.full();
    int n = g.n;
    int d = I.degree();
    int dia = diameter(g);
    RatPoly s = taylor_shift(I, beta_hat); // s[k] = I^(k)(beta_hat) / k!

    auto add = [&rep](std::string name, bool gating, Rat margin) {
        BoundCheck c;
        c.name = std::move(name);
        c.gating = gating;
        c.pass = sign(margin) >= 0;
        c.margin = std::move(margin);
        if (c.gating && !c.pass) rep.gating_pass = false;
        rep.checks.push_back(std::move(c));
    };

    Rat m_norm, m_pow, m_lit;
    bool first = true;
    Int kfact(1);
    Int npow(1);
    for (int k = 1; k <= d; ++k) {
        kfact *= k;
        npow *= n;
        Rat scaled = rat_abs(s[k]);      // |I^(k)| / k!
        Rat raw = scaled * Rat(kfact);   // |I^(k)|
        Rat bin(binomial(n, k));
        Rat v_norm = bin - scaled;
        Rat v_pow = Rat(npow) - raw;
        Rat v_lit = bin - raw;
        if (first || v_norm < m_norm) m_norm = v_norm;
        if (first || v_pow < m_pow) m_pow = v_pow;
        if (first || v_lit < m_lit) m_lit = v_lit;
        first = false;
    }
    add("derivative-binomial-normalized", true, m_norm);
    add("derivative-power", true, m_pow);
    add("derivative-binomial-literal", false, m_lit);

    Rat floor = rat_pow(beta_hat, static_cast<unsigned>(dia));
    Rat m_del;
    first = true;
    for (int v = 0; v < n; ++v) {
        Rat val = eval_rat(eng.on_mask(full_mask(n) & ~bit(v)), beta_hat) - floor;
        if (first || val < m_del) m_del = val;
        first = false;
    }
    add("deleted-vertex-floor", true, m_del);

    Rat dmag = rat_abs(eval_rat(derivative(I), beta_hat));
    add("derivative-magnitude-floor", true, dmag - Rat(n) * floor);
    return rep;
}

std::string majorant_grid_csv(const Graph& g, int u, const Real& r, int points) {
    if (points < 2) throw std::invalid_argument("majorant_grid_csv: needs >= 2 points");
    FuRatio f = f_u_ratio(g, u);
    MajorantNode m = majorant_tree(decompose_f_u(g, u));
    Real pi = real_pi();
    std::ostringstream out;
    out << "theta,abs_f_u,majorant\n";
    for (int i = 0; i < points; ++i) {
        Real theta = pi * i / (points - 1);
        Real abs_f = f_u_eval(f, cis(theta) * r).abs();
        Real maj = majorant_eval(m, r, theta);
        out << theta.str(20) << "," << abs_f.str(20) << "," << maj.str(20) << "\n";
    }
    return out.str();
}

} // namespace indgap
