#pragma once

#include <gmpxx.h>

#include <string>

#include "tdcad/errors.hpp"

namespace tdcad {

// Exact rational arithmetic. mpq_class keeps values reduced with a positive
// denominator, which is exactly the canonical-form invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw MathError("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign_of(const Rational& q) { return sgn(q); }

inline Rational rational_abs(const Rational& q) { return abs(q); }

// Largest integer strictly less than q.
inline Rational floor_below(const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    Rational r(fl);
    if (r == q) r -= 1;
    return r;
}

// Smallest integer strictly greater than q.
inline Rational ceil_above(const Rational& q) {
    Integer cl;
    mpz_cdiv_q(cl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    Rational r(cl);
    if (r == q) r += 1;
    return r;
}

// Closed interval with exact rational endpoints. A point interval has
// lo == hi. All interval arithmetic below is outward-exact: results always
// contain the true range, with no rounding anywhere.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw MathError("interval endpoints out of order");
    }
    static Interval point(const Rational& v) { return Interval(v, v); }

    bool is_point() const { return lo == hi; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }

    // Sign of every value in the interval: +1, -1, or 0 when undetermined
    // (the interval straddles or touches zero).
    int determined_sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        return 0;
    }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return Interval(a.lo + b.lo, a.hi + b.hi);
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return Interval(a.lo - b.hi, a.hi - b.lo);
    }
    friend Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }
    friend Interval operator*(const Interval& a, const Interval& b) {
        Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        Rational lo = p1, hi = p1;
        for (const Rational* p : {&p2, &p3, &p4}) {
            if (*p < lo) lo = *p;
            if (*p > hi) hi = *p;
        }
        return Interval(lo, hi);
    }
    friend Interval operator*(const Rational& c, const Interval& a) {
        return sgn(c) >= 0 ? Interval(c * a.lo, c * a.hi) : Interval(c * a.hi, c * a.lo);
    }

    // Tight power: even exponents fold the sign away.
    Interval pow(unsigned k) const {
        if (k == 0) return Interval(1, 1);
        if (k % 2 == 1 || sgn(lo) >= 0) {
            Rational l = lo, h = hi;
            Rational rl = l, rh = h;
            for (unsigned i = 1; i < k; ++i) { rl *= l; rh *= h; }
            return Interval(rl, rh);
        }
        // even power of an interval reaching below zero
        Rational al = rational_abs(lo), ah = rational_abs(hi);
        Rational big = al > ah ? al : ah;
        Rational small = contains_zero() ? Rational(0) : (al < ah ? al : ah);
        Rational rl(1), rh(1);
        for (unsigned i = 0; i < k; ++i) { rl *= small; rh *= big; }
        return Interval(rl, rh);
    }

    // Halve the width around the midpoint, clamped to stay inside.
    Interval left_half() const { return Interval(lo, mid()); }
    Interval right_half() const { return Interval(mid(), hi); }

    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

inline bool disjoint(const Interval& a, const Interval& b) {
    return a.hi < b.lo || b.hi < a.lo;
}

}  // namespace tdcad
