#ifndef SPH_SCALAR_HPP
#define SPH_SCALAR_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sph {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator, zero as 0/1), which is exactly the invariant we need.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Element of Q(i). Field arithmetic; conjugation negates im.
struct GaussRational {
    Rational re, im;

    GaussRational() : re(0), im(0) {}
    GaussRational(const Rational& r) : re(r), im(0) {}
    GaussRational(long r) : re(r), im(0) {}
    GaussRational(const Rational& r, const Rational& i) : re(r), im(i) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    GaussRational conj() const { return {re, -im}; }

    GaussRational operator-() const { return {-re, -im}; }
    GaussRational operator+(const GaussRational& o) const { return {re + o.re, im + o.im}; }
    GaussRational operator-(const GaussRational& o) const { return {re - o.re, im - o.im}; }
    GaussRational operator*(const GaussRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRational operator/(const GaussRational& o) const {
        Rational n = o.re * o.re + o.im * o.im;
        if (sgn(n) == 0) throw std::domain_error("GaussRational: division by zero");
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    GaussRational& operator+=(const GaussRational& o) { *this = *this + o; return *this; }
    GaussRational& operator-=(const GaussRational& o) { *this = *this - o; return *this; }
    GaussRational& operator*=(const GaussRational& o) { *this = *this * o; return *this; }
    bool operator==(const GaussRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRational& o) const { return !(*this == o); }

    std::string str() const {
        if (is_real()) return re.get_str();
        if (sgn(re) == 0) return im.get_str() + "i";
        return re.get_str() + (sgn(im) > 0 ? "+" : "") + im.get_str() + "i";
    }
};

inline GaussRational gauss_i() { return {Rational(0), Rational(1)}; }

} // namespace sph

#endif
