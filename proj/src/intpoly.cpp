#include "indgap/intpoly.hpp"

#include "indgap/errors.hpp"
#include "json.hpp"

#include <sstream>

namespace indgap {

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(c));
}

IntPoly shift_up(const IntPoly& a, int k) {
    if (a.is_zero()) return a;
    std::vector<Int> c(a.c.size() + k, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i + k] = a.c[i];
    return IntPoly(std::move(c));
}

IntPoly derivative(const IntPoly& p, int order) {
    IntPoly d = p;
    for (int r = 0; r < order; ++r) {
        if (d.c.size() <= 1) return IntPoly();
        std::vector<Int> c(d.c.size() - 1);
        for (size_t k = 1; k < d.c.size(); ++k) c[k - 1] = d.c[k] * Int(static_cast<long>(k));
        d = IntPoly(std::move(c));
    }
    return d;
}

Rat eval_rat(const IntPoly& p, const Rat& x) {
    Rat acc(0);
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

Real eval_real(const IntPoly& p, const Real& x) {
    Real acc(0);
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + to_real(*it);
    return acc;
}

Cplx eval_cplx(const IntPoly& p, const Cplx& z) {
    Cplx acc;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        acc = acc * z;
        acc.re += to_real(*it);
    }
    return acc;
}

Rat eval_rat(const RatPoly& p, const Rat& x) {
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < p.c.size(); ++k) {
        if (p.c[k] == 0) continue;
        if (!first) os << (p.c[k] > 0 ? " + " : " - ");
        else if (p.c[k] < 0) os << "-";
        first = false;
        Int a = abs(p.c[k]);
        if (k == 0 || a != 1) os << a.get_str();
        if (k >= 1) os << "z";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

std::string poly_to_json(const IntPoly& p) {
    nlohmann::json j;
    j["coeffs"] = nlohmann::json::array();
    if (p.is_zero()) j["coeffs"].push_back("0");
    for (const Int& a : p.c) j["coeffs"].push_back(a.get_str());
    return j.dump();
}

IntPoly poly_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw ParseError("polynomial JSON needs a 'coeffs' array");
    std::vector<Int> c;
    for (const auto& item : j["coeffs"]) {
        if (!item.is_string()) throw ParseError("polynomial coefficients must be strings");
        try {
            c.emplace_back(item.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError("bad integer literal: '" + item.get<std::string>() + "'");
        }
    }
    return IntPoly(std::move(c));
}

} // namespace indgap
