#pragma once

// Shared arithmetic types: exact integers/rationals (GMP) and variable-precision
// reals (MPFR via boost). Complex numbers over Real are hand-rolled because the
// toolchain has no libmpc; we only ever need +,-,*,/ and modulus.

#include <gmpxx.h>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace indgap {

using Int = mpz_class;
using Rat = mpq_class;
using Real = boost::multiprecision::mpfr_float;

// boost's mpfr_float counts precision in decimal digits.
inline unsigned bits_to_digits10(unsigned bits) {
    // digits10 = floor(bits * log10(2)) + guard
    return static_cast<unsigned>(bits * 0.30103) + 3;
}

inline void set_precision_bits(unsigned bits) {
    if (bits < 24 || bits > 1u << 20)
        throw std::invalid_argument("precision bits out of range: " + std::to_string(bits));
    Real::default_precision(bits_to_digits10(bits));
}

inline unsigned current_precision_digits() { return Real::default_precision(); }

// RAII: temporarily switch working precision.
struct PrecisionGuard {
    unsigned saved;
    explicit PrecisionGuard(unsigned bits) : saved(Real::default_precision()) {
        set_precision_bits(bits);
    }
    ~PrecisionGuard() { Real::default_precision(saved); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;
};

inline Real to_real(const Int& z) { return Real(z.get_mpz_t()); }
inline Real to_real(const Rat& q) { return Real(q.get_mpq_t()); }

inline int sign(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }
inline int sign(const Int& z) { return mpz_sgn(z.get_mpz_t()); }

inline Rat rat_pow(Rat base, unsigned e) {
    Rat r(1);
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat rat_abs(const Rat& q) { return sign(q) < 0 ? Rat(-q) : q; }

// mpq_class(num, den) keeps the fraction unreduced, which breaks comparisons;
// every quotient of integers must go through here.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Real real_pi() {
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

// Every finite float is a dyadic rational; recover it exactly.
inline Rat real_to_rat(const Real& x) {
    if (!mpfr_number_p(x.backend().data()))
        throw std::invalid_argument("real_to_rat: value is not finite");
    if (mpfr_zero_p(x.backend().data())) return Rat(0);
    Int m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.backend().data());
    Int scale(1);
    if (e >= 0) {
        mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        return Rat(m * scale);
    }
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return make_rat(m, scale);
}

struct Cplx {
    Real re, im;

    Cplx() : re(0), im(0) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Cplx(Real r) : re(std::move(r)), im(0) {}
    explicit Cplx(const Rat& q) : re(to_real(q)), im(0) {}
    explicit Cplx(const Int& z) : re(to_real(z)), im(0) {}
    explicit Cplx(long v) : re(v), im(0) {}

    Cplx operator-() const { return {-re, -im}; }
    Cplx operator+(const Cplx& o) const { return {re + o.re, im + o.im}; }
    Cplx operator-(const Cplx& o) const { return {re - o.re, im - o.im}; }
    Cplx operator*(const Cplx& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Cplx operator*(const Real& s) const { return {re * s, im * s}; }
    Cplx operator/(const Cplx& o) const {
        Real d = o.re * o.re + o.im * o.im;
        if (d == 0) throw std::domain_error("complex division by zero");
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    Cplx& operator+=(const Cplx& o) { re += o.re; im += o.im; return *this; }
    Cplx& operator-=(const Cplx& o) { re -= o.re; im -= o.im; return *this; }

    Real norm() const { return re * re + im * im; }
    Real abs() const { using boost::multiprecision::sqrt; return sqrt(norm()); }
    Cplx conj() const { return {re, -im}; }
};

// e^{i*theta}
inline Cplx cis(const Real& theta) {
    using boost::multiprecision::cos;
    using boost::multiprecision::sin;
    return {cos(theta), sin(theta)};
}

} // namespace indgap
