#pragma once

// Truncated power-series arithmetic. Integer series stay exact (used for
// 1/I and the f_u expansion at the origin, whose coefficients are integral
// when the denominator has constant term 1). Float series carry a declared
// precision and back the theta-expansions of the majorant.

#include "indgap/intpoly.hpp"
#include "indgap/numeric.hpp"

#include <string>
#include <vector>

namespace indgap {

// Exact integer series truncated at order K: length is always K+1.
using IntSeries = std::vector<Int>;

IntSeries series_from_poly(const IntPoly& p, int K);
IntSeries series_mul(const IntSeries& a, const IntSeries& b, int K);
IntSeries series_inverse(const IntPoly& p, int K); // pre: p(0) = 1
IntSeries series_div(const IntPoly& a, const IntPoly& b, int K); // pre: b(0) = 1

// Exact coefficients of p(z + c); entry k is p^(k)(c)/k!.
RatPoly taylor_shift(const IntPoly& p, const Rat& c);

// {"coeffs": [base-10 strings], "order": K}
std::string series_to_json(const IntSeries& s);
IntSeries series_from_json(const std::string& text);

// Real-coefficient series at a declared bit precision. Operations run at the
// smaller precision of their operands and record it in the result.
struct FloatSeries {
    std::vector<Real> c;
    unsigned precision_bits = 0;

    int order() const { return static_cast<int>(c.size()) - 1; }
};

FloatSeries float_series(std::vector<Real> coeffs, unsigned precision_bits);
FloatSeries float_from_poly(const IntPoly& p, int K, unsigned precision_bits);
FloatSeries float_mul(const FloatSeries& a, const FloatSeries& b, int K);
FloatSeries float_pow(const FloatSeries& a, int e, int K); // pre: e >= 0
FloatSeries float_reciprocal(const FloatSeries& a, int K); // pre: a.c[0] != 0
FloatSeries float_compose(const FloatSeries& outer, const FloatSeries& inner,
                          int K); // pre: inner.c[0] == 0
FloatSeries cos_series(int K, unsigned precision_bits);
Real float_eval(const FloatSeries& s, const Real& x);

// Coefficients of p(z + c) in floating point (entry k is p^(k)(c)/k!).
std::vector<Real> float_taylor_shift(const IntPoly& p, const Real& c);

} // namespace indgap
