#pragma once

#include <map>
#include <vector>

#include "tdcad/polynomial.hpp"

namespace tdcad {

// --- pseudo-division ------------------------------------------------------

struct PseudoDiv {
    Polynomial quo;
    Polynomial rem;
};

// init(b,v)^(deg(a,v)-deg(b,v)+1) * a = quo*b + rem, with deg(rem,v) < deg(b,v).
PseudoDiv pseudo_divide(const Polynomial& a, const Polynomial& b, Var v);
Polynomial prem(const Polynomial& a, const Polynomial& b, Var v);
Polynomial pquo(const Polynomial& a, const Polynomial& b, Var v);

// Exact division; throws InternalError when b does not divide a.
Polynomial div_exact(const Polynomial& a, const Polynomial& b);

// --- resultants -----------------------------------------------------------

// Resultant of p and q w.r.t. v, equal to the Sylvester-matrix determinant.
// Accepts any degrees >= 0 as long as v occurs in at least one argument.
Polynomial resultant(const Polynomial& p, const Polynomial& q, Var v);

// Subresultant chain S[0..deg(q,v)] of p and q w.r.t. v, computed by the
// Ducos exact-division scheme. Convention (documented in the README):
//   - S[0] equals resultant(p,q,v) exactly (Sylvester determinant value);
//   - S[deg q] = init(q,v)^(deg p - deg q - 1) * q when deg p > deg q + 1,
//     and q itself otherwise;
//   - for deg p = deg q the entries of index < deg q are the subresultants
//     of (q, prem(p, q, v)), which coincide with those of (p, q) up to a
//     factor that is a power of init(q,v); S[0] is corrected to the exact
//     determinant value.
// Requires deg(p,v) >= deg(q,v) >= 0 and deg(p,v) >= 1.
std::vector<Polynomial> subresultant_chain(const Polynomial& p, const Polynomial& q, Var v);

// Coefficient of v^j in S[j] (principal subresultant coefficient).
Polynomial principal_coeff(const Polynomial& s, Var v, int j);

// --- gcd / squarefree machinery --------------------------------------------

// Multivariate gcd over Q via primitive subresultant PRS; result is canonical.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Content and primitive part of p viewed as a univariate polynomial in v
// with polynomial coefficients.
Polynomial content_in(const Polynomial& p, Var v);
Polynomial primitive_part_in(const Polynomial& p, Var v);

// p / gcd(p, dp/dv), made canonical. Requires deg(p,v) >= 1.
Polynomial squarefree_part(const Polynomial& p, Var v);

// Pairwise-coprime squarefree polynomials whose products recover each input
// up to constants and perfect-power multiplicities. Inputs univariate.
std::vector<Polynomial> gcd_free_basis(const std::vector<Polynomial>& fs);

// --- interval evaluation ----------------------------------------------------

// Sound enclosure of p over the box; every variable of p must be bound.
Interval eval_interval(const Polynomial& p, const std::map<Var, Interval>& box);

// Coefficients of p w.r.t. v as enclosures over a box binding the remaining
// variables of p. Used by root isolation over algebraic points.
std::vector<Interval> interval_coeffs(const Polynomial& p, Var v,
                                      const std::map<Var, Interval>& box);

}  // namespace tdcad
