#include "indgap/certify.hpp"

#include "indgap/errors.hpp"
#include "indgap/indpoly.hpp"

#include "json.hpp"

#include <algorithm>
#include <ios>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace indgap {

namespace {

using boost::multiprecision::log;
using boost::multiprecision::sqrt;

Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }

Int pow10(unsigned k) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
    return p;
}

// approx -log2(q) for 0 < q < 1, used to size the working precision
int rat_mag_bits(const Rat& q) {
    if (sign(q) <= 0) return 0;
    auto nb = mpz_sizeinbase(q.get_num().get_mpz_t(), 2);
    auto db = mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
    return db > nb ? static_cast<int>(db - nb) : 0;
}

std::string describe_graph(const Graph& g) {
    if (!g.label.empty()) return g.label;
    std::string s = "n" + std::to_string(g.n) + ":";
    bool first = true;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.adj[u] >> v & 1) {
                if (!first) s += ",";
                s += std::to_string(u) + "-" + std::to_string(v);
                first = false;
            }
    return s;
}

std::string rat_sci(const Rat& q) {
    if (sign(q) == 0) return "0";
    PrecisionGuard pg(128);
    return to_real(q).str(6, std::ios_base::scientific);
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0 || sign(Rat(q.get_den())) <= 0)
        throw ParseError("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

// Real -> exact dyadic rational already lives in numeric.hpp; this is the
// inverse at enough precision that the round trip is lossless.
Real rat_to_real_exact(const Rat& q) {
    auto nb = mpz_sizeinbase(q.get_num().get_mpz_t(), 2);
    auto db = mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
    unsigned bits = static_cast<unsigned>(std::min<std::size_t>(nb + db + 64, (1u << 20) - 1));
    PrecisionGuard pg(std::max(128u, bits));
    return to_real(q);
}

// sup of |I'(z)| / |I'(beta_hat)| over 200 pseudorandom points of
// D(beta_hat, radius); deterministic seed so certificates are reproducible.
Real iprime_doubling_ratio(const IntPoly& dip, const Rat& bh, const Rat& radius) {
    Real base = to_real(rat_abs(eval_rat(dip, bh)));
    if (base == 0) throw ConvergenceError("I' vanishes at beta_hat");
    std::mt19937_64 rng(0x51a7ed00c0ffeeULL);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    Real two_pi = 2 * real_pi();
    Cplx center(to_real(bh));
    Real worst(0);
    for (int i = 0; i < 200; ++i) {
        Real rr = to_real(radius) * sqrt(Real(uni(rng)));
        Cplx z = center + cis(two_pi * Real(uni(rng))) * rr;
        Real ratio = eval_cplx(dip, z).abs() / base;
        if (ratio > worst) worst = ratio;
    }
    return worst;
}

void push_check(std::vector<BoundCheck>& cs, std::string name, bool pass,
                const Rat& margin, bool gating = true) {
    cs.push_back({std::move(name), pass, gating, margin});
}

} // namespace

Rat beta_lower(int n) {
    if (n < 1) throw std::invalid_argument("beta_lower needs n >= 1");
    return make_rat(1, n);
}

Rat compute_r_g(int n, int dia, const Rat& beta_hat) {
    if (n < 1 || dia < 0) throw std::invalid_argument("compute_r_g: bad n or dia");
    return rat_pow(beta_hat, static_cast<unsigned>(dia)) / (2 * n);
}

Rat compute_theta_g(int n, int dia, const Rat& beta_hat) {
    if (n < 1 || dia < 0) throw std::invalid_argument("compute_theta_g: bad n or dia");
    return rat_pow(beta_hat / (4 * n), static_cast<unsigned>(dia));
}

Rat compute_r_g(const Graph& g, const Rat& beta_hat) {
    return compute_r_g(g.n, diameter(g), beta_hat);
}

Rat compute_theta_g(const Graph& g, const Rat& beta_hat) {
    return compute_theta_g(g.n, diameter(g), beta_hat);
}

Rat injectivity_radius(const Graph& g, const BetaEnclosure& enc) {
    if (!is_connected(g))
        throw std::invalid_argument("injectivity_radius: graph must be connected");
    int dia = diameter(g);
    Rat bh = enc.exact_hi ? enc.hi : enc.mid();
    Rat r_lo = compute_r_g(g.n, dia, enc.exact_hi ? enc.hi : enc.lo);
    Rat r_hi = compute_r_g(g.n, dia, enc.hi);

    IntPoly dip = derivative(independence_poly(g));
    if (eval_rat(dip, bh) == 0)
        throw ConvergenceError("injectivity_radius: I' vanishes at beta_hat");

    PrecisionGuard pg(256);
    GammaEstimate ga = gamma_poly(dip, 0, bh);
    if (ga.value > to_real(Rat(Rat(1) / r_hi)))
        throw ConvergenceError("injectivity_radius: gamma bound for I' exceeds 1/r_G");
    Real worst = iprime_doubling_ratio(dip, bh, r_lo);
    if (worst > 2)
        throw ConvergenceError("injectivity_radius: |I'| more than doubles on D(beta_hat, r_G)");
    return r_lo / 2;
}

Real zero_free_radius_at(const Graph& g, int u, const Rat& beta_hat,
                         const Real& theta) {
    Rat r = compute_r_g(g, beta_hat);
    Cplx z = cis(theta) * to_real(beta_hat);
    Real a = f_u_eval(g, u, z).abs();
    if (a >= 1) return Real(0);
    return to_real(r) * (1 - a) / (2 - a);
}

Rat corollary_disc_radius(const Graph& g, const BetaEnclosure& enc,
                          const Real& theta) {
    int dia = diameter(g);
    Rat blo = enc.exact_hi ? enc.hi : enc.lo;
    Rat t_lo = compute_theta_g(g.n, dia, blo);
    if (theta < to_real(t_lo))
        throw std::invalid_argument("corollary_disc_radius: theta below theta_G");
    Rat r_lo = compute_r_g(g.n, dia, blo);
    return r_lo * rat_pow(blo * t_lo, 2) / 8;
}

GapCertificate certified_gap(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("certified_gap: graph must be connected");
    if (g.n < 2)
        throw std::invalid_argument("certified_gap: need at least two vertices");
    return certified_gap(g, beta_bracket(g, make_rat(1, pow10(12))), true);
}

GapCertificate certified_gap(const Graph& g, BetaEnclosure enc, bool refine) {
    if (!is_connected(g))
        throw std::invalid_argument("certified_gap: graph must be connected");
    if (g.n < 2)
        throw std::invalid_argument("certified_gap: need at least two vertices");

    const int n = g.n;
    const int dia = diameter(g);
    const int d = g.max_degree();
    const IntPoly ip = independence_poly(g);
    const IntPoly dip = derivative(ip);

    GapCertificate c;
    c.graph = describe_graph(g);
    c.n = n;
    c.dia = dia;
    c.pivot = center_vertex(g);
    NestedRatio tree = decompose_f_u(g, c.pivot);
    c.depth_at_pivot = depth(tree);
    MajorantNode mtree = majorant_tree(tree);

    // Signed slack of the parabola inequality F(theta) <= 1 - (beta*theta)^2/4
    // that the corollary disc rests on, rounded adversely (majorant radius at
    // beta_hi, right side at beta_lo) and charged an extra eps so evaluation
    // noise cannot turn a failure into a pass.
    auto parabola_margin_at = [&mtree](const Rat& rad, const Rat& th, const Rat& b_lo) {
        Rat scale = rat_pow(b_lo * th, 2) / 4;
        unsigned pb = std::min<unsigned>(
            1u << 16, 256u + 3u * static_cast<unsigned>(rat_mag_bits(scale)));
        PrecisionGuard pg(pb);
        try {
            Real lhs = majorant_eval(mtree, to_real(rad), to_real(th));
            Real eps = ldexp(Real(1), -static_cast<int>(pb / 2));
            Real m = Real(1 - to_real(scale) - lhs - eps);
            return real_to_rat(m);
        } catch (const std::domain_error&) {
            return Rat(-1);
        }
    };

    // Gap formula with adverse rounding, re-derived after each refinement.
    // The parabola slack at a width-w enclosure is roughly f'(beta)*w below
    // its true value because F(0) = f(beta_hi) overshoots 1, so the enclosure
    // is tightened toward gap_candidate/100, which restores the curvature
    // margin and can only grow the gap; a couple of passes settle it. When
    // the bracket pins beta exactly there is no slack to pay, which keeps
    // equality-tight cases (K_n) from failing spuriously.
    Rat blo, r_lo, r_hi, t_lo, t_hi, hyp_rhs, rho(0), gap_candidate(0), gap(0);
    Rat para_margin(-1);
    bool hyp_ok = false, arc_ok = false, para_ok = false;
    for (int pass = 0;; ++pass) {
        blo = enc.exact_hi ? enc.hi : enc.lo;
        r_lo = compute_r_g(n, dia, blo);
        r_hi = compute_r_g(n, dia, enc.hi);
        t_lo = compute_theta_g(n, dia, blo);
        t_hi = compute_theta_g(n, dia, enc.hi);
        hyp_rhs = rat_pow(blo / (2 * d), 2u * static_cast<unsigned>(c.depth_at_pivot));
        hyp_ok = t_lo <= hyp_rhs;
        rho = r_lo * rat_pow(blo * t_lo, 2) / 8;
        gap_candidate = rat_min(r_lo / 4, rho);
        arc_ok = (enc.hi + gap_candidate) * t_hi + gap_candidate <= r_lo / 2;
        para_margin = parabola_margin_at(enc.hi, t_lo, blo);
        para_ok = sign(para_margin) >= 0;
        gap = (para_ok && arc_ok) ? gap_candidate : Rat(0);
        if (!refine || pass >= 6) break;
        Rat target = gap_candidate / 100;
        if (enc.width() <= target) break;
        refine_enclosure(ip, enc, target);
    }
    c.beta = enc;
    c.r_g = r_lo;
    c.theta_g = t_lo;
    c.injectivity_radius = r_lo / 2;
    c.certified_gap = gap;
    c.paper_gap_quarter_variant = (para_ok && arc_ok) ? rat_min(r_lo / 4, 2 * rho) : Rat(0);

    const Rat bh = enc.exact_hi ? enc.hi : enc.mid();
    const unsigned bits = std::min<unsigned>(
        1u << 16, 256u + 3u * static_cast<unsigned>(rat_mag_bits(sign(rho) > 0 ? rho : r_lo)));
    PrecisionGuard pg(bits);
    const Real eps = ldexp(Real(1), -static_cast<int>(bits / 2));
    auto& cs = c.checks;

    // 1. the enclosure really brackets a sign change (or pins an exact root)
    {
        Rat at_lo = eval_rat(ip, enc.lo);
        Rat at_hi = eval_rat(ip, enc.hi);
        bool ok = sign(at_lo) > 0 && (enc.exact_hi ? sign(at_hi) == 0 : sign(at_hi) < 0);
        push_check(cs, "enclosure-sign", ok,
                   enc.exact_hi ? at_lo : rat_min(at_lo, -at_hi));
    }

    // 2. enclosure tight enough for the stated gap
    {
        Rat target = sign(gap) > 0 ? Rat(gap / 100) : make_rat(1, pow10(12));
        push_check(cs, "enclosure-width-target", enc.width() <= target,
                   target - enc.width());
    }

    // 3. universal lower bounds on beta (blo is beta itself when pinned, so
    // K_n's exact equality with 1/n still passes)
    {
        Rat floor = beta_lower(n);
        if (d >= 2) floor = std::max(floor, shearer_bound(d));
        push_check(cs, "beta-floor", blo >= floor, blo - floor);
    }

    // 4./5. root-spread estimate for I' against 1/r_G and against n/beta^dia
    {
        c.gamma_iprime = gamma_poly(dip, 0, bh);
        Rat inv_r = Rat(1) / r_hi;
        Rat dia_ub = Rat(n) / rat_pow(bh, static_cast<unsigned>(dia));
        c.gamma_iprime.certified_upper = to_real(dia_ub);
        Rat gv = real_to_rat(c.gamma_iprime.value);
        push_check(cs, "gamma-injectivity", gv <= inv_r, inv_r - gv);
        push_check(cs, "gamma-beta-dia-bound", gv <= dia_ub, dia_ub - gv);
    }

    // 6. |I'| stays within a factor 2 on the injectivity disc (sampled)
    {
        Real worst = iprime_doubling_ratio(dip, bh, r_lo);
        Rat m = real_to_rat(2 - worst);
        push_check(cs, "iprime-doubling-sample", sign(m) >= 0, m);
    }

    // 7./8. numeric cross-checks against the full root set
    {
        RootSet rs = all_roots(ip, 256);
        Cplx center(to_real(bh));
        Real half_r = to_real(Rat(r_lo / 2));
        int inside = 0;
        Real others = to_real(Rat(1) + r_lo);
        std::size_t nearest = 0;
        Real best_dist = -1;
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
            Real dist = (rs.roots[i] - center).abs();
            if (best_dist < 0 || dist < best_dist) {
                best_dist = dist;
                nearest = i;
            }
        }
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
            Real dist = (rs.roots[i] - center).abs();
            if (dist < half_r) inside += rs.multiplicity[i];
            if (i != nearest && dist - half_r < others) others = dist - half_r;
        }
        bool iso = inside == 1 && rs.multiplicity[nearest] == 1;
        push_check(cs, "root-isolation-numeric", iso && others > 0,
                   rat_min(Rat(1), real_to_rat(others)));

        Rat m(1);
        bool ok = true;
        try {
            Real second = second_smallest_modulus(rs, enc);
            m = rat_min(Rat(1), real_to_rat(second - to_real(Rat(enc.hi + gap))));
            ok = sign(m) > 0;
        } catch (const LimitError&) {
            // no root besides beta, nothing to collide with
        }
        push_check(cs, "numeric-gap-cross-check", ok, m);
    }

    // 9./10. majorant really dominates |f_u| on the beta_lo circle, and agrees
    // with f_u exactly at theta = 0
    {
        Real pi = real_pi();
        Real r = to_real(blo);
        Real worst;
        bool first = true, ok = true;
        try {
            for (int k = 0; k < 64; ++k) {
                Real th = pi * k / 63;
                Real fm = majorant_eval(mtree, r, th) -
                          f_u_eval(g, c.pivot, cis(th) * r).abs();
                if (first || fm < worst) worst = fm;
                first = false;
            }
            ok = worst >= -eps;
        } catch (const std::domain_error&) {
            ok = false;
            worst = -1;
        }
        push_check(cs, "majorant-domination-grid", ok, real_to_rat(worst));

        FuRatio fr = f_u_ratio(g, c.pivot);
        Rat fu_exact = eval_rat(fr.num, bh) / eval_rat(fr.den, bh);
        push_check(cs, "majorant-contact-exact", majorant_at_zero(mtree, bh) == fu_exact,
                   Rat(0));
    }

    // 11. closed-form angle condition that would imply the parabola bound;
    // far too coarse for deep decompositions (K_8, C_6), so advisory only
    push_check(cs, "corollary-hypothesis", hyp_ok, hyp_rhs - t_lo, false);

    // 12. the parabola bound itself at the threshold angle; this is what a
    // positive gap rests on, so it gates whenever one is claimed
    push_check(cs, "parabola-at-threshold", para_ok, para_margin, sign(gap) > 0);

    // 13. roots at angles below theta_G land inside the injectivity disc
    push_check(cs, "arc-consistency", arc_ok,
               r_lo / 2 - ((enc.hi + gap_candidate) * t_hi + gap_candidate), false);

    // 14. composed gap never exceeds the injectivity radius
    push_check(cs, "gap-within-injectivity", gap <= c.injectivity_radius,
               c.injectivity_radius - gap);

    // 15. the injectivity disc subtends an angle >= beta^dia/(4n) >= theta_G
    // at the origin (arcsin(x) >= x, so comparing sines suffices)
    {
        Rat sin_sub = compute_r_g(n, dia, bh) / (2 * bh);
        Rat mid_angle = rat_pow(bh, static_cast<unsigned>(dia)) / (4 * n);
        Rat tg = compute_theta_g(n, dia, bh);
        bool ok = sin_sub >= mid_angle && mid_angle >= tg;
        push_check(cs, "subtended-angle", ok,
                   rat_min(sin_sub - mid_angle, mid_angle - tg));
    }

    // 16..20. exact derivative bounds at beta_hat
    for (auto& bc : derivative_bounds_check(g, bh).checks) cs.push_back(bc);

    // 21. window for f'_u(beta_hat): strictly above 1/beta, at most n/beta^dia
    {
        Rat fp = f_prime_at_beta(g, c.pivot, bh);
        Rat lo_b = Rat(1) / bh;
        Rat hi_b = Rat(n) / rat_pow(bh, static_cast<unsigned>(dia));
        push_check(cs, "fprime-window", fp > lo_b && fp <= hi_b,
                   rat_min(fp - lo_b, hi_b - fp));
    }

    c.valid = true;
    for (const auto& bc : cs)
        if (bc.gating && !bc.pass) c.valid = false;

    c.diagnostics.emplace_back("max_degree", std::to_string(d));
    c.diagnostics.emplace_back("hypothesis_rhs", rat_sci(hyp_rhs));
    c.diagnostics.emplace_back("parabola_margin", rat_sci(para_margin));
    c.diagnostics.emplace_back("corollary_disc_radius", rat_sci(rho));
    c.diagnostics.emplace_back("gap_cap", rat_sci(Rat(r_lo / 4)));
    c.diagnostics.emplace_back("beta_hat", rat_sci(bh));
    c.diagnostics.emplace_back("precision_bits", std::to_string(bits));
    if (sign(gap) > 0) {
        Real expo = log(to_real(Rat(gap * n / bh))) / log(to_real(Rat(bh / n)));
        c.diagnostics.emplace_back("equivalent_exponent", expo.str(6, std::ios_base::fixed));
    }
    return c;
}

std::string certificate_to_json(const GapCertificate& c) {
    using ojson = nlohmann::ordered_json;
    ojson j;
    j["graph"] = c.graph;
    j["n"] = c.n;
    j["dia"] = c.dia;
    j["beta"] = ojson{{"lo", c.beta.lo.get_str()},
                      {"hi", c.beta.hi.get_str()},
                      {"exact_hi", c.beta.exact_hi}};
    j["r_G"] = c.r_g.get_str();
    j["theta_G"] = c.theta_g.get_str();
    j["injectivity_radius"] = c.injectivity_radius.get_str();
    j["certified_gap"] = c.certified_gap.get_str();
    j["paper_gap_quarter_variant"] = c.paper_gap_quarter_variant.get_str();
    j["gamma_Iprime"] = ojson{
        {"value", real_to_rat(c.gamma_iprime.value).get_str()},
        {"truncation_order", c.gamma_iprime.truncation_order},
        {"certified_upper", real_to_rat(c.gamma_iprime.certified_upper).get_str()},
        {"decay_ratio", real_to_rat(c.gamma_iprime.decay_ratio).get_str()}};
    j["pivot"] = c.pivot;
    j["depth_at_pivot"] = c.depth_at_pivot;
    j["valid"] = c.valid;
    j["checks"] = ojson::array();
    for (const auto& bc : c.checks)
        j["checks"].push_back(ojson{{"name", bc.name},
                                    {"pass", bc.pass},
                                    {"gating", bc.gating},
                                    {"margin", bc.margin.get_str()}});
    ojson diag = ojson::object();
    for (const auto& [k, v] : c.diagnostics) diag[k] = v;
    j["diagnostics"] = diag;
    return j.dump(2);
}

GapCertificate certificate_from_json(const std::string& text) {
    using ojson = nlohmann::ordered_json;
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate JSON: ") + e.what());
    }
    try {
        GapCertificate c;
        c.graph = j.at("graph").get<std::string>();
        c.n = j.at("n").get<int>();
        c.dia = j.at("dia").get<int>();
        c.beta.lo = rat_from_string(j.at("beta").at("lo").get<std::string>());
        c.beta.hi = rat_from_string(j.at("beta").at("hi").get<std::string>());
        c.beta.exact_hi = j.at("beta").at("exact_hi").get<bool>();
        c.r_g = rat_from_string(j.at("r_G").get<std::string>());
        c.theta_g = rat_from_string(j.at("theta_G").get<std::string>());
        c.injectivity_radius = rat_from_string(j.at("injectivity_radius").get<std::string>());
        c.certified_gap = rat_from_string(j.at("certified_gap").get<std::string>());
        c.paper_gap_quarter_variant =
            rat_from_string(j.at("paper_gap_quarter_variant").get<std::string>());
        const auto& ga = j.at("gamma_Iprime");
        c.gamma_iprime.value = rat_to_real_exact(rat_from_string(ga.at("value").get<std::string>()));
        c.gamma_iprime.truncation_order = ga.at("truncation_order").get<int>();
        c.gamma_iprime.certified_upper =
            rat_to_real_exact(rat_from_string(ga.at("certified_upper").get<std::string>()));
        c.gamma_iprime.decay_ratio =
            rat_to_real_exact(rat_from_string(ga.at("decay_ratio").get<std::string>()));
        c.pivot = j.at("pivot").get<int>();
        c.depth_at_pivot = j.at("depth_at_pivot").get<int>();
        c.valid = j.at("valid").get<bool>();
        for (const auto& e : j.at("checks"))
            c.checks.push_back({e.at("name").get<std::string>(), e.at("pass").get<bool>(),
                                e.at("gating").get<bool>(),
                                rat_from_string(e.at("margin").get<std::string>())});
        for (const auto& [k, v] : j.at("diagnostics").items())
            c.diagnostics.emplace_back(k, v.get<std::string>());
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate JSON: ") + e.what());
    }
}

std::string certificate_text(const GapCertificate& c) {
    std::ostringstream os;
    os << "zero-free gap certificate\n";
    os << "  graph: " << c.graph << "  (n=" << c.n << ", dia=" << c.dia
       << ", pivot=" << c.pivot << ", depth=" << c.depth_at_pivot << ")\n";
    os << "  beta in [" << rat_sci(c.beta.lo) << ", " << rat_sci(c.beta.hi) << "]"
       << (c.beta.exact_hi ? "  (hi exact)" : "") << "  width=" << rat_sci(c.beta.width())
       << "\n";
    os << "  r_G=" << rat_sci(c.r_g) << "  theta_G=" << rat_sci(c.theta_g)
       << "  injectivity_radius=" << rat_sci(c.injectivity_radius) << "\n";
    os << "  certified_gap=" << rat_sci(c.certified_gap)
       << "  (quarter variant: " << rat_sci(c.paper_gap_quarter_variant) << ")\n";
    os << "  disc radius rule: r_G*(1-F)/2 with 1-F >= (beta*theta_G)^2/4, i.e. gap "
          "constant 1/8; the 1/4 variant above drops the final halving\n";
    os << "  pointwise radius rule: r_G*(1-|f|)/(2-|f|); the plain r_G*(1-|f|)/2 "
          "variant is never larger\n";
    for (const auto& [k, v] : c.diagnostics)
        if (k == "equivalent_exponent")
            os << "  equivalent exponent: gap ~ beta*(beta/n)^" << v << " /n\n";
    int passed = 0;
    for (const auto& bc : c.checks) passed += bc.pass;
    os << "  checks: " << passed << "/" << c.checks.size() << " pass -> "
       << (c.valid ? "VALID" : "INVALID") << "\n";
    for (const auto& bc : c.checks)
        os << "    [" << (bc.pass ? " ok " : "FAIL") << "] " << bc.name
           << (bc.gating ? "" : " (advisory)") << "  margin=" << rat_sci(bc.margin) << "\n";
    return os.str();
}

} // namespace indgap
