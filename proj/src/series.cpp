#include "indgap/series.hpp"

#include "indgap/errors.hpp"
#include "json.hpp"

#include <algorithm>
#include <stdexcept>

namespace indgap {

namespace {
void check_order(int K) {
    if (K < 0) throw std::invalid_argument("truncation order must be >= 0");
}
} // namespace

IntSeries series_from_poly(const IntPoly& p, int K) {
    check_order(K);
    IntSeries s(K + 1, Int(0));
    for (int k = 0; k <= K && k < static_cast<int>(p.c.size()); ++k) s[k] = p.c[k];
    return s;
}

IntSeries series_mul(const IntSeries& a, const IntSeries& b, int K) {
    check_order(K);
    IntSeries s(K + 1, Int(0));
    for (int i = 0; i <= K && i < static_cast<int>(a.size()); ++i) {
        if (a[i] == 0) continue;
        int jmax = std::min(K - i, static_cast<int>(b.size()) - 1);
        for (int j = 0; j <= jmax; ++j) s[i + j] += a[i] * b[j];
    }
    return s;
}

IntSeries series_inverse(const IntPoly& p, int K) {
    check_order(K);
    if (p.coeff(0) != 1)
        throw std::invalid_argument("series_inverse needs constant term 1");
    IntSeries q(K + 1, Int(0));
    q[0] = 1;
    for (int k = 1; k <= K; ++k) {
        Int acc(0);
        int imax = std::min(k, p.degree());
        for (int i = 1; i <= imax; ++i) acc += p.c[i] * q[k - i];
        q[k] = -acc;
    }
    return q;
}

IntSeries series_div(const IntPoly& a, const IntPoly& b, int K) {
    check_order(K);
    if (b.coeff(0) != 1)
        throw std::invalid_argument("series_div needs divisor constant term 1");
    IntSeries q(K + 1, Int(0));
    for (int k = 0; k <= K; ++k) {
        Int acc = a.coeff(k);
        int imax = std::min(k, b.degree());
        for (int i = 1; i <= imax; ++i) acc -= b.c[i] * q[k - i];
        q[k] = acc;
    }
    return q;
}

RatPoly taylor_shift(const IntPoly& p, const Rat& c) {
    RatPoly s;
    s.reserve(p.c.size());
    for (const Int& a : p.c) s.emplace_back(a);
    int d = static_cast<int>(s.size()) - 1;
    for (int m = 0; m <= d; ++m)
        for (int i = d - 1; i >= m; --i) s[i] += c * s[i + 1];
    return s;
}

std::string series_to_json(const IntSeries& s) {
    nlohmann::json j;
    j["coeffs"] = nlohmann::json::array();
    for (const Int& a : s) j["coeffs"].push_back(a.get_str());
    j["order"] = static_cast<long>(s.size()) - 1;
    return j.dump();
}

IntSeries series_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw ParseError("series JSON needs a 'coeffs' array");
    IntSeries s;
    for (const auto& item : j["coeffs"]) {
        if (!item.is_string()) throw ParseError("series coefficients must be strings");
        try {
            s.emplace_back(item.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError("bad integer literal: '" + item.get<std::string>() + "'");
        }
    }
    if (j.contains("order") && j["order"].get<long>() != static_cast<long>(s.size()) - 1)
        throw ParseError("series order does not match coefficient count");
    return s;
}

FloatSeries float_series(std::vector<Real> coeffs, unsigned precision_bits) {
    return FloatSeries{std::move(coeffs), precision_bits};
}

FloatSeries float_from_poly(const IntPoly& p, int K, unsigned precision_bits) {
    check_order(K);
    PrecisionGuard guard(precision_bits);
    std::vector<Real> c(K + 1, Real(0));
    for (int k = 0; k <= K && k < static_cast<int>(p.c.size()); ++k)
        c[k] = to_real(p.c[k]);
    return FloatSeries{std::move(c), precision_bits};
}

FloatSeries float_mul(const FloatSeries& a, const FloatSeries& b, int K) {
    check_order(K);
    unsigned bits = std::min(a.precision_bits, b.precision_bits);
    PrecisionGuard guard(bits);
    std::vector<Real> s(K + 1, Real(0));
    for (int i = 0; i <= K && i < static_cast<int>(a.c.size()); ++i) {
        int jmax = std::min(K - i, static_cast<int>(b.c.size()) - 1);
        for (int j = 0; j <= jmax; ++j) s[i + j] += a.c[i] * b.c[j];
    }
    return FloatSeries{std::move(s), bits};
}

FloatSeries float_pow(const FloatSeries& a, int e, int K) {
    check_order(K);
    if (e < 0) throw std::invalid_argument("float_pow needs exponent >= 0");
    PrecisionGuard guard(a.precision_bits);
    FloatSeries acc{std::vector<Real>(K + 1, Real(0)), a.precision_bits};
    acc.c[0] = 1;
    FloatSeries base{a.c, a.precision_bits};
    while (e > 0) {
        if (e & 1) acc = float_mul(acc, base, K);
        e >>= 1;
        if (e) base = float_mul(base, base, K);
    }
    return acc;
}

FloatSeries float_reciprocal(const FloatSeries& a, int K) {
    check_order(K);
    if (a.c.empty() || a.c[0] == 0)
        throw std::invalid_argument("float_reciprocal needs nonzero constant term");
    PrecisionGuard guard(a.precision_bits);
    std::vector<Real> q(K + 1, Real(0));
    q[0] = Real(1) / a.c[0];
    for (int k = 1; k <= K; ++k) {
        Real acc(0);
        int imax = std::min(k, static_cast<int>(a.c.size()) - 1);
        for (int i = 1; i <= imax; ++i) acc += a.c[i] * q[k - i];
        q[k] = -acc / a.c[0];
    }
    return FloatSeries{std::move(q), a.precision_bits};
}

FloatSeries float_compose(const FloatSeries& outer, const FloatSeries& inner, int K) {
    check_order(K);
    if (!inner.c.empty() && inner.c[0] != 0)
        throw std::invalid_argument("float_compose needs inner constant term 0");
    unsigned bits = std::min(outer.precision_bits, inner.precision_bits);
    PrecisionGuard guard(bits);
    FloatSeries acc{std::vector<Real>(K + 1, Real(0)), bits};
    FloatSeries in{inner.c, bits};
    for (int k = static_cast<int>(outer.c.size()) - 1; k >= 0; --k) {
        acc = float_mul(acc, in, K);
        acc.c[0] += outer.c[k];
    }
    return acc;
}

FloatSeries cos_series(int K, unsigned precision_bits) {
    check_order(K);
    PrecisionGuard guard(precision_bits);
    std::vector<Real> c(K + 1, Real(0));
    Int fact(1);
    for (int k = 0; k <= K; ++k) {
        if (k > 0) fact *= k;
        if (k % 2 == 0) c[k] = Real(k % 4 == 0 ? 1 : -1) / to_real(fact);
    }
    return FloatSeries{std::move(c), precision_bits};
}

Real float_eval(const FloatSeries& s, const Real& x) {
    PrecisionGuard guard(s.precision_bits);
    Real acc(0);
    for (int k = static_cast<int>(s.c.size()) - 1; k >= 0; --k) acc = acc * x + s.c[k];
    return acc;
}

std::vector<Real> float_taylor_shift(const IntPoly& p, const Real& c) {
    std::vector<Real> s;
    s.reserve(p.c.size());
    for (const Int& a : p.c) s.push_back(to_real(a));
    int d = static_cast<int>(s.size()) - 1;
    for (int m = 0; m <= d; ++m)
        for (int i = d - 1; i >= m; --i) s[i] += c * s[i + 1];
    return s;
}

} // namespace indgap
