#pragma once

// Independent test oracles. Everything here is deliberately naive and kept
// separate from the library's computational paths: resultants come from
// dense Sylvester determinants, root counts from Sturm sequences, and rank
// comparison from brute-force enumeration.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "tdcad/poly_ops.hpp"
#include "tdcad/polynomial.hpp"

namespace oracle {

using tdcad::Interval;
using tdcad::Polynomial;
using tdcad::Rational;
using tdcad::Var;

// Determinant of a square matrix of polynomials by cofactor expansion.
inline Polynomial det(std::vector<std::vector<Polynomial>> m) {
    size_t n = m.size();
    if (n == 0) throw tdcad::MathError("empty matrix");
    if (n == 1) return m[0][0];
    Polynomial acc(m[0][0].order());
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * det(std::move(minor));
        acc = j % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

// Sylvester-determinant resultant of p, q w.r.t. v. Requires positive degree
// in at least one argument.
inline Polynomial sylvester_resultant(const Polynomial& p, const Polynomial& q, Var v) {
    int dp = p.degree(v), dq = q.degree(v);
    auto order = p.order() ? p.order() : q.order();
    if (dp == 0 && dq == 0) throw tdcad::MathError("no variable");
    if (dp == 0) return p.pow((unsigned)dq);
    if (dq == 0) return q.pow((unsigned)dp);
    size_t n = (size_t)(dp + dq);
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(order)));
    auto pc = p.coeffs_in(v);
    auto qc = q.coeffs_in(v);
    for (int r = 0; r < dq; ++r)
        for (int k = 0; k <= dp; ++k) m[(size_t)r][(size_t)(r + dp - k)] = pc[(size_t)k];
    for (int r = 0; r < dp; ++r)
        for (int k = 0; k <= dq; ++k) m[(size_t)(dq + r)][(size_t)(r + dq - k)] = qc[(size_t)k];
    return det(std::move(m));
}

// --- univariate helpers over Q (variable v) --------------------------------

inline Polynomial uni_rem(Polynomial a, const Polynomial& b, Var v) {
    int db = b.degree(v);
    Rational lb = b.coeff_of(v, db).constant_value();
    while (!a.is_zero() && a.degree(v) >= db) {
        int da = a.degree(v);
        Rational la = a.coeff_of(v, da).constant_value();
        Polynomial t =
            Polynomial(a.order(), la / lb) * Polynomial::variable(a.order(), v).pow((unsigned)(da - db));
        a = a - t * b;
    }
    return a;
}

inline Polynomial uni_gcd(Polynomial a, Polynomial b, Var v) {
    while (!b.is_zero()) {
        Polynomial r = b.degree(v) == 0 ? Polynomial(a.order()) : uni_rem(a, b, v);
        if (b.degree(v) == 0) r = Polynomial(a.order());
        a = b;
        b = r;
    }
    return a.canonical();
}

// Sturm sequence root counting: number of real roots of squarefree f in (a, b].
inline int sturm_count(const Polynomial& f, Var v, const Rational& a, const Rational& b) {
    std::vector<Polynomial> seq{f, f.derivative(v)};
    while (!seq.back().is_zero() && seq.back().degree(v) > 0) {
        Polynomial r = uni_rem(seq[seq.size() - 2], seq.back(), v);
        seq.push_back(-r);
    }
    if (seq.back().is_zero()) seq.pop_back();
    auto variations = [&](const Rational& x) {
        int count = 0, prev = 0;
        for (const Polynomial& s : seq) {
            int sg = tdcad::sign_of(s.specialize({{v, x}}).constant_value());
            if (sg == 0) continue;
            if (prev != 0 && sg != prev) ++count;
            prev = sg;
        }
        return count;
    };
    return variations(a) - variations(b);
}

// Cauchy root bound for univariate f.
inline Rational cauchy_bound(const Polynomial& f, Var v) {
    int d = f.degree(v);
    Rational lead = tdcad::rational_abs(f.coeff_of(v, d).constant_value());
    Rational mx(0);
    for (int k = 0; k < d; ++k) {
        Rational c = tdcad::rational_abs(f.coeff_of(v, k).constant_value());
        if (c > mx) mx = c;
    }
    return Rational(1) + mx / lead;
}

// Isolate the real roots of a squarefree univariate polynomial with a Sturm
// bisection. Returns sorted disjoint open intervals, one root each.
inline std::vector<Interval> sturm_isolate(const Polynomial& f, Var v) {
    Polynomial sf = f.canonical();
    Rational bound = cauchy_bound(sf, v);
    std::vector<Interval> roots;
    std::vector<Interval> work{Interval(-bound, bound)};
    auto value_at = [&](const Rational& x) {
        return sf.specialize({{v, x}}).constant_value();
    };
    while (!work.empty()) {
        Interval cur = work.back();
        work.pop_back();
        int count = sturm_count(sf, v, cur.lo, cur.hi);
        if (tdcad::sign_of(value_at(cur.lo)) == 0)
            throw tdcad::MathError("oracle: endpoint hits root");
        if (count == 0) continue;
        if (count == 1) {
            roots.push_back(cur);
            continue;
        }
        Rational m = cur.mid();
        if (tdcad::sign_of(value_at(m)) == 0) {
            // exact rational root at the midpoint
            roots.push_back(Interval::point(m));
            Rational eps = cur.width() / 4;
            while (sturm_count(sf, v, m - eps, m + eps) > 1) eps /= 2;
            work.push_back(Interval(cur.lo, m - eps));
            work.push_back(Interval(m + eps, cur.hi));
        } else {
            work.push_back(Interval(cur.lo, m));
            work.push_back(Interval(m, cur.hi));
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return roots;
}

// --- random generation -------------------------------------------------------

inline Rational random_rational(std::mt19937_64& rng, int num_range = 10, int den_range = 4) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Polynomial random_poly(std::mt19937_64& rng, const tdcad::VarOrderPtr& order,
                              const std::vector<Var>& vars, int max_deg, int terms) {
    Polynomial p(order);
    std::uniform_int_distribution<int> deg(0, max_deg);
    for (int t = 0; t < terms; ++t) {
        tdcad::Monomial m;
        for (Var v : vars) {
            unsigned k = (unsigned)deg(rng);
            if (k > 0) {
                if ((int)m.e.size() < v) m.e.resize((size_t)v, 0);
                m.e[(size_t)v - 1] = k;
            }
        }
        m.trim();
        Rational c = random_rational(rng);
        p = p + Polynomial::from_terms(order, {{m, c}});
    }
    return p;
}

}  // namespace oracle
