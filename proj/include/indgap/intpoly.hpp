#pragma once

// Dense univariate polynomials with exact integer coefficients, plus the
// handful of ring operations the rest of the library needs. Coefficient k
// is the coefficient of z^k.

#include "indgap/numeric.hpp"

#include <string>
#include <vector>

namespace indgap {

struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }
    static IntPoly constant(long v) { return IntPoly(std::vector<Int>{Int(v)}); }

    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero poly
    bool is_zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    const Int& coeff(int k) const {
        static const Int zero(0);
        return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : zero;
    }

    bool operator==(const IntPoly& o) const { return c == o.c; }
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly shift_up(const IntPoly& a, int k); // multiply by z^k

IntPoly derivative(const IntPoly& p, int order = 1);

Rat eval_rat(const IntPoly& p, const Rat& x);
Real eval_real(const IntPoly& p, const Real& x);
Cplx eval_cplx(const IntPoly& p, const Cplx& z);

// Rational-coefficient variants back the Sturm chain and Taylor shifts.
using RatPoly = std::vector<Rat>;
Rat eval_rat(const RatPoly& p, const Rat& x);

std::string to_string(const IntPoly& p);

// JSON round-trip: {"coeffs": ["1", "-4", "3", "-1"]} with base-10 strings.
std::string poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const std::string& text);

} // namespace indgap
