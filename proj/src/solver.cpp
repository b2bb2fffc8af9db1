#include "tdcad/solver.hpp"

#include <algorithm>
#include <deque>

#include "tdcad/budget.hpp"

// The solver eliminates the top-level equation cluster by branching on
// initials, then extends the recursively solved base with the remaining
// top-level polynomial. All case splits are on complementary conditions, so
// disjointness of the output is structural. Chain validity (iterated
// resultants of initials, inequations and separants nonzero) comes out of
// two facts: an inequation factor of a valid cell is regular modulo the
// saturated ideal of its chain, and pointwise nonvanishing on a nonempty
// cell implies regularity. The RegularSystem constructor re-checks all of
// it anyway.

namespace tdcad {

namespace {

struct PolyLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const {
        return Polynomial::compare(a, b) < 0;
    }
};

void sorted_insert(std::vector<Polynomial>& v, const Polynomial& p) {
    auto it = std::lower_bound(v.begin(), v.end(), p, PolyLess{});
    if (it == v.end() || !(*it == p)) v.insert(it, p);
}

std::vector<Polynomial> without(const std::vector<Polynomial>& v, size_t idx) {
    std::vector<Polynomial> out;
    out.reserve(v.size() - 1);
    for (size_t i = 0; i < v.size(); ++i)
        if (i != idx) out.push_back(v[i]);
    return out;
}

std::vector<RegularSystem> solve_impl(const VarOrderPtr& order, std::vector<Polynomial> eqs,
                                      std::vector<Polynomial> ineqs);

// Re-solve a cell's defining conditions together with extra constraints.
std::vector<RegularSystem> refine_cell(const RegularSystem& cell,
                                       const std::vector<Polynomial>& extra_eqs,
                                       const std::vector<Polynomial>& extra_ineqs) {
    std::vector<Polynomial> eqs = cell.equations();
    for (const Polynomial& e : extra_eqs) eqs.push_back(e);
    std::vector<Polynomial> ineqs = cell.nonvanishing();
    for (const Polynomial& n : extra_ineqs) ineqs.push_back(n);
    return solve_impl(cell.order(), std::move(eqs), std::move(ineqs));
}

struct Attach {
    const VarOrderPtr& order;
    Var v;

    std::vector<RegularSystem> run(const RegularSystem& cell, Polynomial p,
                                   std::deque<Polynomial> pending, bool pointwise_sqf) {
        check_budget();
        const TriangularSet& t = cell.set();
        p = primitive_part_in(t.reduce(p), v).canonical();
        if (p.is_zero() || p.level() != v || p.degree(v) < 1)
            throw InternalError("solver: top polynomial degenerated during reduction");
        int d = p.degree(v);

        if (!pointwise_sqf) {
            Polynomial sigma = resultant(p, p.separant(), v);
            if (sigma.is_zero()) return sqf_split(cell, p, pending, false);
            if (iterated_resultant(sigma, t).is_zero()) return sqf_split(cell, p, pending, true);
            // generically squarefree over this chain; keep going lazily
        }

        std::vector<Polynomial> accepted;  // level-v inequations proven regular
        std::vector<Polynomial> post;      // inequations above level v, applied after emit
        auto requeue = [&](std::deque<Polynomial> rest) {
            for (const Polynomial& h : accepted) rest.push_back(h);
            for (const Polynomial& h : post) rest.push_back(h);
            return rest;
        };

        while (!pending.empty()) {
            Polynomial n = pending.front();
            pending.pop_front();
            n = t.reduce(n).canonical();
            if (n.degree(v) >= d) n = t.reduce(prem(n, p, v)).canonical();
            if (n.is_zero()) return {};  // the inequation dies on all of the set
            if (n.is_constant()) continue;
            int lvl = n.level();
            if (lvl > v) {
                post.push_back(n);
                continue;
            }
            if (lvl < v) {
                std::deque<Polynomial> rest = requeue(pending);
                std::vector<RegularSystem> out;
                for (const RegularSystem& sc : restrict_nonzero(cell, n)) {
                    auto sub = run(sc, p, rest, pointwise_sqf);
                    out.insert(out.end(), sub.begin(), sub.end());
                }
                return out;
            }
            // level v: try to keep it as a plain inequation
            Polynomial tau = resultant(p, n, v);
            if (!tau.is_zero() && !iterated_resultant(tau, t).is_zero()) {
                accepted.push_back(n);
                continue;
            }
            // needs a gcd split; certify pointwise squarefreeness first
            std::deque<Polynomial> rest = requeue(pending);
            if (!pointwise_sqf) {
                rest.push_front(n);
                Polynomial sigma = resultant(p, p.separant(), v);
                std::vector<RegularSystem> out;
                for (const RegularSystem& sc : restrict_nonzero(cell, sigma)) {
                    auto sub = run(sc, p, rest, true);
                    out.insert(out.end(), sub.begin(), sub.end());
                }
                for (const RegularSystem& sc : refine_cell(cell, {sigma}, {})) {
                    auto sub = sqf_split_cases(sc, p, rest);
                    out.insert(out.end(), sub.begin(), sub.end());
                }
                return out;
            }
            return ineq_split(cell, p, n, rest);
        }

        RegularSystem out(RegularChain(t.with(p)), merge_ineqs(cell.ineq_factors(), accepted));
        if (post.empty()) return {out};
        std::vector<RegularSystem> cells{out};
        for (const Polynomial& n : post) {
            std::vector<RegularSystem> next;
            for (const RegularSystem& c : cells) {
                auto sub = restrict_nonzero(c, n);
                next.insert(next.end(), sub.begin(), sub.end());
            }
            cells = std::move(next);
        }
        return cells;
    }

    static std::vector<Polynomial> merge_ineqs(std::vector<Polynomial> base,
                                               const std::vector<Polynomial>& extra) {
        for (const Polynomial& h : extra) base.push_back(h);
        return base;
    }

    // Split along the vanishing pattern of the subresultant coefficients of
    // (p, sep p): over the pattern "s_0..s_{j-1} = 0, s_j != 0" the j-th
    // subresultant is gcd(p, p') and pquo(p, S_j) is the squarefree part,
    // with the same roots as p above every point of the branch.
    std::vector<RegularSystem> sqf_split(const RegularSystem& cell, const Polynomial& p,
                                         const std::deque<Polynomial>& pending, bool with_j0) {
        Polynomial sigma = resultant(p, p.separant(), v);
        std::vector<RegularSystem> out;
        if (with_j0) {
            for (const RegularSystem& sc : restrict_nonzero(cell, sigma)) {
                auto sub = run(sc, p, pending, true);
                out.insert(out.end(), sub.begin(), sub.end());
            }
            for (const RegularSystem& sc : refine_cell(cell, {sigma}, {})) {
                auto sub = sqf_split_cases(sc, p, pending);
                out.insert(out.end(), sub.begin(), sub.end());
            }
        } else {
            auto sub = sqf_split_cases(cell, p, pending);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    }

    // The j >= 1 cases; cell is contained in {res(p, sep p) = 0}.
    std::vector<RegularSystem> sqf_split_cases(const RegularSystem& cell, const Polynomial& p,
                                               const std::deque<Polynomial>& pending) {
        int d = p.degree(v);
        if (d < 2) throw InternalError("solver: non-squarefree linear polynomial");
        auto chain = subresultant_chain(p, p.separant(), v);
        std::vector<RegularSystem> out;
        std::vector<Polynomial> conds;  // s_0..s_{j-1} = 0, accumulated as j grows
        for (int j = 1; j <= d - 1; ++j) {
            Polynomial sprev = principal_coeff(chain[(size_t)j - 1], v, j - 1);
            if (!sprev.is_zero()) conds.push_back(sprev);
            Polynomial sj = principal_coeff(chain[(size_t)j], v, j);
            if (sj.is_zero()) continue;
            Polynomial pj = pquo(p, chain[(size_t)j], v);
            for (const RegularSystem& sc : refine_cell(cell, conds, {sj})) {
                auto sub = run(sc, pj, pending, true);
                out.insert(out.end(), sub.begin(), sub.end());
            }
        }
        return out;
    }

    // Split Z(cell) ∩ {p = 0, n != 0} along the gcd structure of (p, n);
    // requires p pointwise squarefree above the cell. In the branch where
    // the gcd is S_j, the surviving roots of p are exactly the roots of
    // pquo(p, S_j) and they avoid V(n), so n is consumed by the split.
    std::vector<RegularSystem> ineq_split(const RegularSystem& cell, const Polynomial& p,
                                          const Polynomial& n, const std::deque<Polynomial>& pending) {
        int e = n.degree(v);
        auto chain = subresultant_chain(p, n, v);
        std::vector<RegularSystem> out;
        // j = 0: coprime fibers, n holds automatically on the roots of p
        if (!chain[0].is_zero()) {
            for (const RegularSystem& sc : restrict_nonzero(cell, chain[0])) {
                auto sub = run(sc, p, pending, true);
                out.insert(out.end(), sub.begin(), sub.end());
            }
        }
        std::vector<Polynomial> conds;
        if (!chain[0].is_zero()) conds.push_back(chain[0]);
        for (int j = 1; j <= e - 1; ++j) {
            Polynomial sj = principal_coeff(chain[(size_t)j], v, j);
            if (!sj.is_zero()) {
                Polynomial pj = pquo(p, chain[(size_t)j], v);
                for (const RegularSystem& sc : refine_cell(cell, conds, {sj})) {
                    auto sub = run(sc, pj, pending, true);
                    out.insert(out.end(), sub.begin(), sub.end());
                }
            }
            if (!sj.is_zero()) conds.push_back(sj);
        }
        // gcd = n itself
        Polynomial lcn = n.coeff_of(v, e);
        {
            Polynomial pe = pquo(p, n, v);
            std::vector<Polynomial> extra_ineq;
            if (!lcn.is_constant()) extra_ineq.push_back(lcn);
            for (const RegularSystem& sc : refine_cell(cell, conds, extra_ineq)) {
                auto sub = run(sc, pe, pending, true);
                out.insert(out.end(), sub.begin(), sub.end());
            }
        }
        // leading coefficient of n degenerates: retry against its tail
        if (!lcn.is_constant()) {
            Polynomial tail = n - lcn * Polynomial::variable(order, v).pow((unsigned)e);
            if (!tail.is_zero()) {
                std::vector<Polynomial> conds2 = conds;
                conds2.push_back(lcn);
                std::deque<Polynomial> rest = pending;
                rest.push_front(tail);
                for (const RegularSystem& sc : refine_cell(cell, conds2, {})) {
                    auto sub = run(sc, p, rest, true);
                    out.insert(out.end(), sub.begin(), sub.end());
                }
            }
        }
        return out;
    }
};

// Normalizes in place; returns false when the system is trivially empty.
bool normalize(std::vector<Polynomial>& eqs, std::vector<Polynomial>& ineqs) {
    std::vector<Polynomial> e2;
    for (const Polynomial& e : eqs) {
        if (e.is_zero()) continue;
        if (e.is_constant()) return false;
        sorted_insert(e2, e.canonical());
    }
    std::vector<Polynomial> n2;
    for (const Polynomial& n : ineqs) {
        if (n.is_zero()) return false;
        if (n.is_constant()) continue;
        sorted_insert(n2, n.canonical());
    }
    eqs = std::move(e2);
    ineqs = std::move(n2);
    return true;
}

std::vector<RegularSystem> solve_impl(const VarOrderPtr& order, std::vector<Polynomial> eqs,
                                      std::vector<Polynomial> ineqs) {
    check_budget();
    if (!normalize(eqs, ineqs)) return {};
    if (eqs.empty()) return {RegularSystem(RegularChain(order), std::move(ineqs))};

    Var v = 0;
    for (const Polynomial& e : eqs) v = std::max(v, (Var)e.level());
    std::vector<size_t> top;
    for (size_t i = 0; i < eqs.size(); ++i)
        if (eqs[i].level() == v) top.push_back(i);

    // several equations at the top level: reduce one against another
    if (top.size() >= 2) {
        size_t pi = top[0];
        for (size_t i : top)
            if (eqs[i].mdeg() < eqs[pi].mdeg()) pi = i;
        size_t qi = pi == top[0] ? top[1] : top[0];
        for (size_t i : top)
            if (i != pi && eqs[i].mdeg() < eqs[qi].mdeg()) qi = i;
        const Polynomial p = eqs[pi];
        const Polynomial q = eqs[qi];
        Polynomial c = p.init();
        std::vector<RegularSystem> out;
        {
            std::vector<Polynomial> eqs2 = without(eqs, qi);
            sorted_insert(eqs2, prem(q, p, v));
            std::vector<Polynomial> in2 = ineqs;
            if (!c.is_constant()) sorted_insert(in2, c.canonical());
            auto sub = solve_impl(order, std::move(eqs2), std::move(in2));
            out.insert(out.end(), sub.begin(), sub.end());
        }
        if (!c.is_constant()) {
            std::vector<Polynomial> eqs3 = without(eqs, pi);
            sorted_insert(eqs3, c);
            Polynomial tl = p.tail();
            if (!tl.is_zero()) sorted_insert(eqs3, tl);
            auto sub = solve_impl(order, std::move(eqs3), ineqs);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    }

    // single top equation
    const Polynomial p = eqs[top[0]];
    Polynomial c = p.init();
    std::vector<RegularSystem> out;
    if (!c.is_constant()) {  // branch c = 0
        std::vector<Polynomial> eqs2 = without(eqs, top[0]);
        sorted_insert(eqs2, c);
        Polynomial tl = p.tail();
        if (!tl.is_zero()) sorted_insert(eqs2, tl);
        auto sub = solve_impl(order, std::move(eqs2), ineqs);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    // branch c != 0
    std::vector<Polynomial> base_eqs = without(eqs, top[0]);
    std::vector<Polynomial> low;
    std::deque<Polynomial> pending;
    if (!c.is_constant()) low.push_back(c.canonical());
    bool branch_dead = false;
    for (const Polynomial& n0 : ineqs) {
        Polynomial n = n0;
        if (n.degree(v) >= p.degree(v)) n = prem(n, p, v).canonical();
        if (n.is_zero()) {
            branch_dead = true;  // every point of {p=0, c!=0, ...} violates n != 0
            break;
        }
        if (n.is_constant()) continue;
        if (n.level() < v)
            low.push_back(n);
        else
            pending.push_back(n);
    }
    if (!branch_dead) {
        Attach attach{order, v};
        for (const RegularSystem& cell : solve_impl(order, base_eqs, low)) {
            auto sub = attach.run(cell, p, pending, false);
            out.insert(out.end(), sub.begin(), sub.end());
        }
    }
    return out;
}

}  // namespace

std::vector<RegularSystem> solve_system(const VarOrderPtr& order, std::vector<Polynomial> eqs,
                                        std::vector<Polynomial> ineqs) {
    auto out = solve_impl(order, std::move(eqs), std::move(ineqs));
    sort_systems(out);
    return out;
}

std::vector<RegularSystem> restrict_nonzero(const RegularSystem& cell, const Polynomial& n0) {
    check_budget();
    const TriangularSet& t = cell.set();
    Polynomial n = t.reduce(n0).canonical();
    if (n.is_zero()) return {};
    if (n.is_constant()) return {cell};
    n = squarefree_part(n, n.mvar());
    if (!iterated_resultant(n, t).is_zero()) {
        std::vector<Polynomial> h = cell.ineq_factors();
        h.push_back(n);
        return {RegularSystem(cell.chain(), std::move(h))};
    }
    std::vector<Polynomial> ineqs = cell.nonvanishing();
    ineqs.push_back(n);
    return solve_impl(cell.order(), cell.equations(), std::move(ineqs));
}

std::vector<RegularSystem> restrict_zero(const RegularSystem& cell, const Polynomial& f) {
    std::vector<Polynomial> eqs = cell.equations();
    eqs.push_back(f);
    return solve_impl(cell.order(), std::move(eqs), cell.nonvanishing());
}

std::vector<RegularSystem> cell_difference(const RegularSystem& a, const RegularSystem& b) {
    // Complement of {S = 0, g != 0} as disjoint pieces: one piece per
    // equation of b that fails first, then the piece where some
    // nonvanishing factor of b vanishes.
    std::vector<RegularSystem> out;
    std::vector<Polynomial> b_eqs = b.equations();
    std::vector<Polynomial> eqs = a.equations();
    std::vector<Polynomial> ineqs = a.nonvanishing();
    for (size_t i = 0; i < b_eqs.size(); ++i) {
        std::vector<Polynomial> e2 = eqs;
        for (size_t k = 0; k < i; ++k) e2.push_back(b_eqs[k]);
        std::vector<Polynomial> n2 = ineqs;
        n2.push_back(b_eqs[i]);
        auto sub = solve_impl(a.order(), std::move(e2), std::move(n2));
        out.insert(out.end(), sub.begin(), sub.end());
    }
    std::vector<Polynomial> b_nonvan = b.nonvanishing();
    for (size_t i = 0; i < b_nonvan.size(); ++i) {
        std::vector<Polynomial> e2 = eqs;
        for (const Polynomial& e : b_eqs) e2.push_back(e);
        e2.push_back(b_nonvan[i]);
        std::vector<Polynomial> n2 = ineqs;
        for (size_t k = 0; k < i; ++k) n2.push_back(b_nonvan[k]);
        auto sub = solve_impl(a.order(), std::move(e2), std::move(n2));
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

bool system_less(const RegularSystem& a, const RegularSystem& b) {
    auto ta = a.set().as_vector(), tb = b.set().as_vector();
    if (ta.size() != tb.size()) return ta.size() < tb.size();
    for (size_t i = 0; i < ta.size(); ++i) {
        int c = Polynomial::compare(ta[i], tb[i]);
        if (c != 0) return c < 0;
    }
    const auto& ha = a.ineq_factors();
    const auto& hb = b.ineq_factors();
    if (ha.size() != hb.size()) return ha.size() < hb.size();
    for (size_t i = 0; i < ha.size(); ++i) {
        int c = Polynomial::compare(ha[i], hb[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

void sort_systems(std::vector<RegularSystem>& v) { std::sort(v.begin(), v.end(), system_less); }

}  // namespace tdcad
