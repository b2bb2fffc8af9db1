#include "tdcad/regular_ops.hpp"

#include <algorithm>

#include "tdcad/budget.hpp"

namespace tdcad {

bool is_regular(const Polynomial& p, const RegularChain& rc) {
    if (p.is_zero()) throw MathError("zero polynomial");
    return !iterated_resultant(p, rc.set()).is_zero();
}

std::vector<std::pair<Polynomial, RegularChain>> regular_gcd(const Polynomial& p,
                                                             const Polynomial& q, Var v,
                                                             const RegularChain& rc) {
    if (p.is_constant() || q.is_constant() || p.mvar() != v || q.mvar() != v)
        throw MathError("regular gcd: arguments must share the main variable");
    if (rc.set().is_algebraic(v)) throw MathError("regular gcd: variable algebraic in chain");
    if (!is_regular(p.init(), rc) || !is_regular(q.init(), rc))
        throw MathError("regular gcd: initial is a zerodivisor");

    if (p == q) {
        // idempotence shortcut
        return {{p, rc}};
    }
    const Polynomial *hi = &p, *lo = &q;
    if (hi->degree(v) < lo->degree(v)) std::swap(hi, lo);
    if (hi->degree(v) == lo->degree(v)) {
        // one pseudo-division step; gcd is unchanged above points where
        // init(lo) is nonzero, which is dense by the regularity precondition
        Polynomial r = prem(*hi, *lo, v).canonical();
        if (r.is_zero()) return {{*lo, rc}};
        if (r.degree(v) == 0 || r.level() < v) {
            // coprime on a dense subset
            std::vector<std::pair<Polynomial, RegularChain>> out;
            out.emplace_back(Polynomial(p.order(), Rational(1)), rc);
            return out;
        }
        return regular_gcd(*lo, r, v, rc);
    }

    auto chain = subresultant_chain(*hi, *lo, v);
    int e = lo->degree(v);
    std::vector<std::pair<Polynomial, RegularChain>> out;
    std::vector<Polynomial> conds;
    auto base_ineqs = [&](const Polynomial& extra) {
        std::vector<Polynomial> ineqs;
        Polynomial h = rc.set().initial_product();
        if (!h.is_constant()) ineqs.push_back(h);
        if (!extra.is_constant()) ineqs.push_back(extra);
        return ineqs;
    };
    auto branch_chains = [&](const std::vector<Polynomial>& case_eqs,
                             const Polynomial& nonzero) {
        std::vector<Polynomial> eqs = rc.set().as_vector();
        for (const Polynomial& c : case_eqs) eqs.push_back(c);
        std::vector<RegularChain> chains;
        for (const RegularSystem& cell :
             solve_system(p.order(), std::move(eqs), base_ineqs(nonzero)))
            chains.push_back(cell.chain());
        return chains;
    };
    for (int j = 0; j <= e; ++j) {
        check_budget();
        Polynomial sj = j == e ? lo->init() : principal_coeff(chain[(size_t)j], v, j);
        if (!sj.is_zero()) {
            Polynomial g = j == 0 ? Polynomial(p.order(), Rational(1))
                                  : (j == e ? *lo : chain[(size_t)j].canonical());
            for (const RegularChain& c : branch_chains(conds, sj)) out.emplace_back(g, c);
            conds.push_back(sj);
        }
    }
    return out;
}

std::vector<RegularSystem> intersect(const Polynomial& p, const RegularSystem& rs) {
    if (!rs.is_squarefree()) throw MathError("intersect: system not squarefree");
    if (p.is_zero() || (!p.is_constant() && iterated_resultant(p, rs.set()).is_zero()))
        throw MathError("zerodivisor input");
    std::vector<Polynomial> eqs = rs.equations();
    eqs.push_back(p);
    auto out = solve_system(rs.order(), std::move(eqs), rs.nonvanishing());
    for (const RegularSystem& o : out) {
        if (rank_compare(o, rs) != RankOrdering::Less)
            throw InternalError("intersect: output rank did not decrease");
    }
    return out;
}

std::vector<RegularSystem> mpd(const std::vector<RegularSystem>& systems) {
    std::vector<RegularSystem> out;
    std::vector<const RegularSystem*> done;
    for (const RegularSystem& rs : systems) {
        check_budget();
        std::vector<RegularSystem> pieces{rs};
        for (const RegularSystem* prev : done) {
            std::vector<RegularSystem> next;
            for (const RegularSystem& piece : pieces) {
                auto d = cell_difference(piece, *prev);
                next.insert(next.end(), d.begin(), d.end());
            }
            pieces = std::move(next);
            if (pieces.empty()) break;
        }
        out.insert(out.end(), pieces.begin(), pieces.end());
        done.push_back(&rs);
    }
    sort_systems(out);
    return out;
}

std::vector<SmpdPiece> smpd_with_provenance(const std::vector<ConstructibleSet>& sets) {
    if (sets.empty()) return {};
    for (size_t i = 1; i < sets.size(); ++i)
        if (sets[i].ambient_level() != sets[0].ambient_level())
            throw MathError("SMPD inputs live at different ambient levels");
    std::vector<SmpdPiece> pieces;
    for (int idx = 0; idx < (int)sets.size(); ++idx) {
        check_budget();
        const ConstructibleSet& c = sets[(size_t)idx];
        if (c.is_empty()) continue;
        ConstructibleSet rest = c;
        std::vector<SmpdPiece> next;
        for (SmpdPiece& piece : pieces) {
            if (rest.is_empty()) {
                next.push_back(std::move(piece));
                continue;
            }
            ConstructibleSet common = cs_intersection(piece.set, c);
            if (common.is_empty()) {
                next.push_back(std::move(piece));
                continue;
            }
            SmpdPiece inside{std::move(common), piece.inputs};
            inside.inputs.push_back(idx);
            ConstructibleSet outside = cs_difference(piece.set, c);
            rest = cs_difference(rest, piece.set);
            next.push_back(std::move(inside));
            if (!outside.is_empty()) next.push_back(SmpdPiece{std::move(outside), piece.inputs});
        }
        if (!rest.is_empty()) next.push_back(SmpdPiece{std::move(rest), {idx}});
        pieces = std::move(next);
    }
    return pieces;
}

std::vector<ConstructibleSet> smpd(const std::vector<ConstructibleSet>& sets) {
    std::vector<ConstructibleSet> out;
    for (SmpdPiece& p : smpd_with_provenance(sets)) out.push_back(std::move(p.set));
    return out;
}

}  // namespace tdcad
