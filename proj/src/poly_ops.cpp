#include "tdcad/poly_ops.hpp"

#include <algorithm>

#include "tdcad/budget.hpp"

namespace tdcad {

PseudoDiv pseudo_divide(const Polynomial& a, const Polynomial& b, Var v) {
    int da = a.degree(v), db = b.degree(v);
    if (b.is_zero()) throw MathError("pseudo-division by zero");
    if (db == 0) {
        // multiplier b^(da+1); remainder 0
        Polynomial m = b.pow((unsigned)da);
        return {a * m, Polynomial(a.order())};
    }
    Polynomial lcb = b.coeff_of(v, db);
    Polynomial r = a, q(a.order());
    int steps_left = da - db + 1;
    while (!r.is_zero() && r.degree(v) >= db) {
        int dr = r.degree(v);
        Polynomial t = r.coeff_of(v, dr) * Polynomial::variable(a.order(), v).pow((unsigned)(dr - db));
        q = q * lcb + t;
        r = r * lcb - t * b;
        --steps_left;
    }
    // pad so the multiplier is exactly lcb^(da-db+1)
    while (steps_left-- > 0) {
        q = q * lcb;
        r = r * lcb;
    }
    return {q, r};
}

Polynomial prem(const Polynomial& a, const Polynomial& b, Var v) {
    return pseudo_divide(a, b, v).rem;
}

Polynomial pquo(const Polynomial& a, const Polynomial& b, Var v) {
    return pseudo_divide(a, b, v).quo;
}

Polynomial div_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw InternalError("exact division by zero");
    Polynomial r = a, q(a.order() ? a.order() : b.order());
    const auto& blead = *b.terms().rbegin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().rbegin();
        if (!rlead.first.divisible_by(blead.first))
            throw InternalError("inexact polynomial division");
        Monomial m = rlead.first / blead.first;
        Rational c = rlead.second / blead.second;
        Polynomial t = Polynomial::from_terms(q.order(), {{m, c}});
        q = q + t;
        r = r - t * b;
    }
    return q;
}

// ---------------------------------------------------------------------------
// Subresultant chain (Ducos' exact-division scheme).

namespace {

// Core loop for deg(p,v) > deg(q,v) >= 1.
std::vector<Polynomial> ducos_chain(const Polynomial& p, const Polynomial& q, Var v) {
    int dp = p.degree(v), dq = q.degree(v);
    std::vector<Polynomial> S((size_t)dq + 1, Polynomial(p.order()));
    Polynomial lcq = q.coeff_of(v, dq);
    S[(size_t)dq] = dp - dq - 1 >= 1 ? lcq.pow((unsigned)(dp - dq - 1)) * q : q;
    Polynomial s = lcq.pow((unsigned)(dp - dq));
    Polynomial A = q;
    Polynomial B = prem(p, -q, v);
    while (true) {
        check_budget();
        if (B.is_zero()) break;
        int dA = A.degree(v), dB = B.degree(v);
        S[(size_t)(dA - 1)] = B;
        int delta = dA - dB;
        Polynomial C;
        if (delta > 1) {
            C = div_exact(B.coeff_of(v, dB).pow((unsigned)(delta - 1)) * B,
                          s.pow((unsigned)(delta - 1)));
            S[(size_t)dB] = C;
        } else {
            C = B;
        }
        if (dB == 0) break;
        Polynomial nxt =
            div_exact(prem(A, -B, v), s.pow((unsigned)delta) * A.coeff_of(v, dA));
        A = C;
        s = A.coeff_of(v, dB);
        B = nxt;
    }
    return S;
}

}  // namespace

std::vector<Polynomial> subresultant_chain(const Polynomial& p, const Polynomial& q, Var v) {
    int dp = p.degree(v), dq = q.degree(v);
    if (dp < 1 || dp < dq) throw MathError("subresultant chain: degree precondition violated");
    if (dq == 0) {
        if (q.is_zero()) return {Polynomial(p.order())};
        return {q.pow((unsigned)dp)};
    }
    if (dp > dq) return ducos_chain(p, q, v);

    // Equal degrees: one pseudo-division step reduces to (q, r). Entries of
    // index < dq agree with the true chain up to a power of init(q,v); the
    // bottom entry is rescaled to the exact determinant value.
    Polynomial lcq = q.coeff_of(v, dq);
    Polynomial r = prem(p, q, v);
    std::vector<Polynomial> S((size_t)dq + 1, Polynomial(p.order()));
    S[(size_t)dq] = q;
    if (r.is_zero()) return S;
    int dr = r.degree(v);
    std::vector<Polynomial> inner = dr >= 1 ? subresultant_chain(q, r, v)
                                            : std::vector<Polynomial>{r.pow((unsigned)dq)};
    for (int j = 0; j < (int)inner.size() && j < dq; ++j) S[(size_t)j] = inner[(size_t)j];
    // res(p,q) = (-1)^dq * res(q,r) / lcq^dr
    Polynomial res0 = div_exact(S[0], lcq.pow((unsigned)dr));
    if (dq % 2 == 1) res0 = -res0;
    S[0] = res0;
    return S;
}

Polynomial principal_coeff(const Polynomial& s, Var v, int j) { return s.coeff_of(v, j); }

Polynomial resultant(const Polynomial& p, const Polynomial& q, Var v) {
    int dp = p.degree(v), dq = q.degree(v);
    if (dp == 0 && dq == 0) throw MathError("resultant: variable occurs in neither argument");
    if (dp < dq) {
        Polynomial r = resultant(q, p, v);
        return (dp * dq) % 2 == 1 ? -r : r;
    }
    if (q.is_zero()) return Polynomial(p.order());
    return subresultant_chain(p, q, v)[0];
}

// ---------------------------------------------------------------------------
// gcd / squarefree

Polynomial content_in(const Polynomial& p, Var v) {
    Polynomial c(p.order());
    for (const Polynomial& coeff : p.coeffs_in(v)) {
        if (coeff.is_zero()) continue;
        c = poly_gcd(c, coeff);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

Polynomial primitive_part_in(const Polynomial& p, Var v) {
    if (p.is_zero()) return p;
    Polynomial c = content_in(p, v);
    if (c.is_constant()) return p.canonical();
    return div_exact(p, c).canonical();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    check_budget();
    if (a.is_zero()) return b.canonical();
    if (b.is_zero()) return a.canonical();
    if (a.is_constant() || b.is_constant())
        return Polynomial(a.order() ? a.order() : b.order(), Rational(1));
    Var v = std::max(a.mvar(), b.mvar());
    if (a.degree(v) == 0) return poly_gcd(a, content_in(b, v));
    if (b.degree(v) == 0) return poly_gcd(content_in(a, v), b);
    Polynomial ca = content_in(a, v), cb = content_in(b, v);
    Polynomial pa = div_exact(a, ca), pb = div_exact(b, cb);
    Polynomial cg = poly_gcd(ca, cb);
    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        check_budget();
        Polynomial r = prem(pa, pb, v);
        pa = pb;
        pb = r.is_zero() ? r : primitive_part_in(r.canonical(), v);
        if (!pb.is_zero() && pb.degree(v) == 0) {
            // coprime in v
            pa = Polynomial(a.order(), Rational(1));
            break;
        }
    }
    Polynomial g = pa.is_constant() ? pa : primitive_part_in(pa, v);
    return (cg * g).canonical();
}

Polynomial squarefree_part(const Polynomial& p, Var v) {
    if (p.degree(v) < 1) throw MathError("squarefree part: polynomial constant in variable");
    Polynomial g = poly_gcd(p, p.derivative(v));
    if (g.is_constant()) return p.canonical();
    return div_exact(p.canonical(), g).canonical();
}

std::vector<Polynomial> gcd_free_basis(const std::vector<Polynomial>& fs) {
    std::vector<Polynomial> basis;
    for (const Polynomial& f : fs) {
        if (f.is_zero()) throw MathError("zero polynomial in gcd-free basis input");
        if (f.is_constant()) continue;
        basis.push_back(squarefree_part(f, f.mvar()));
    }
    // split until pairwise coprime
    bool changed = true;
    while (changed) {
        check_budget();
        changed = false;
        for (size_t i = 0; !changed && i < basis.size(); ++i) {
            for (size_t j = i + 1; !changed && j < basis.size(); ++j) {
                if (basis[i] == basis[j]) {
                    basis.erase(basis.begin() + (long)j);
                    changed = true;
                    break;
                }
                Polynomial h = poly_gcd(basis[i], basis[j]);
                if (h.is_constant()) continue;
                Polynomial fi = div_exact(basis[i], h).canonical();
                Polynomial fj = div_exact(basis[j], h).canonical();
                basis.erase(basis.begin() + (long)j);
                basis.erase(basis.begin() + (long)i);
                basis.push_back(h);
                if (!fi.is_constant()) basis.push_back(fi);
                if (!fj.is_constant()) basis.push_back(fj);
                changed = true;
            }
        }
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

// ---------------------------------------------------------------------------
// interval evaluation

Interval eval_interval(const Polynomial& p, const std::map<Var, Interval>& box) {
    Interval acc(0, 0);
    for (const auto& [m, c] : p.terms()) {
        Interval t(c, c);
        for (int i = 0; i < m.level(); ++i) {
            if (m.e[i] == 0) continue;
            auto it = box.find(i + 1);
            if (it == box.end()) throw MathError("interval evaluation: unbound variable");
            t = t * it->second.pow(m.e[i]);
        }
        acc = acc + t;
    }
    return acc;
}

std::vector<Interval> interval_coeffs(const Polynomial& p, Var v,
                                      const std::map<Var, Interval>& box) {
    std::vector<Interval> out;
    for (const Polynomial& c : p.coeffs_in(v)) out.push_back(eval_interval(c, box));
    return out;
}

}  // namespace tdcad
