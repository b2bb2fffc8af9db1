#pragma once

#include <utility>
#include <vector>

#include "tdcad/constructible.hpp"

namespace tdcad {

// p regular modulo sat(T), decided by the iterated resultant. Errors on the
// zero polynomial.
bool is_regular(const Polynomial& p, const RegularChain& rc);

// Gcds of p and q w.r.t. v over refinements of rc: pairs (g_i, rc_i) where
// the rc_i partition a dense subset of W(rc) along the vanishing pattern of
// the subresultant coefficients of (p, q), and g_i is a gcd of p, q above
// each point of the corresponding branch. Requires mvar(p) = mvar(q) = v,
// v free w.r.t. rc, and init(p), init(q) regular modulo sat(rc).
std::vector<std::pair<Polynomial, RegularChain>> regular_gcd(const Polynomial& p,
                                                             const Polynomial& q, Var v,
                                                             const RegularChain& rc);

// V(p) ∩ Z(rs) as squarefree regular systems of strictly smaller rank.
// Errors when p is not regular w.r.t. sat(T) or rs is not squarefree.
std::vector<RegularSystem> intersect(const Polynomial& p, const RegularSystem& rs);

// Same union, pairwise disjoint zero sets.
std::vector<RegularSystem> mpd(const std::vector<RegularSystem>& systems);

// Intersection-free basis with bookkeeping: which inputs contain each piece.
// Every piece is contained in each listed input and disjoint from the rest.
struct SmpdPiece {
    ConstructibleSet set;
    std::vector<int> inputs;
};
std::vector<SmpdPiece> smpd_with_provenance(const std::vector<ConstructibleSet>& sets);
std::vector<ConstructibleSet> smpd(const std::vector<ConstructibleSet>& sets);

}  // namespace tdcad
