#include "tdcad/chains.hpp"

#include <algorithm>
#include <sstream>

namespace tdcad {

TriangularSet TriangularSet::of(VarOrderPtr order, const std::vector<Polynomial>& polys) {
    TriangularSet t(std::move(order));
    for (const Polynomial& p : polys) t.insert(p);
    return t;
}

void TriangularSet::insert(const Polynomial& p) {
    if (p.is_constant()) throw MathError("triangular set member must be non-constant");
    if (!order_) order_ = p.order();
    Var v = p.mvar();
    auto [it, fresh] = polys_.emplace(v, p.canonical());
    if (!fresh) throw MathError("duplicate main variable in triangular set");
}

TriangularSet TriangularSet::below(Var v) const {
    TriangularSet t(order_);
    for (const auto& [w, p] : polys_)
        if (w < v) t.polys_.emplace(w, p);
    return t;
}

TriangularSet TriangularSet::without(Var v) const {
    TriangularSet t(order_);
    for (const auto& [w, p] : polys_)
        if (w != v) t.polys_.emplace(w, p);
    return t;
}

TriangularSet TriangularSet::with(const Polynomial& p) const {
    TriangularSet t = *this;
    t.insert(p);
    return t;
}

Polynomial TriangularSet::initial_product() const {
    Polynomial h(order_, Rational(1));
    for (const auto& [v, p] : polys_) h = h * p.init();
    return h;
}

Polynomial TriangularSet::separant_product() const {
    Polynomial h(order_, Rational(1));
    for (const auto& [v, p] : polys_) h = h * p.separant();
    return h;
}

std::vector<Polynomial> TriangularSet::as_vector() const {
    std::vector<Polynomial> out;
    for (const auto& [v, p] : polys_) out.push_back(p);
    return out;
}

Polynomial TriangularSet::reduce(const Polynomial& f) const {
    Polynomial r = f;
    for (auto it = polys_.rbegin(); it != polys_.rend(); ++it) {
        if (r.is_zero() || r.level() < it->first) continue;
        if (r.degree(it->first) >= it->second.degree(it->first))
            r = prem(r, it->second, it->first);
    }
    return r;
}

Polynomial iterated_resultant(const Polynomial& h, const TriangularSet& t) {
    Polynomial r = h;
    while (!r.is_zero() && !r.is_constant()) {
        Var v = 0;
        for (Var w : r.vars_used())
            if (t.is_algebraic(w)) v = std::max(v, w);
        if (v == 0) break;
        r = resultant(r, *t.poly_for(v), v);
    }
    return r;
}

bool rank_less(const Polynomial& p, const Polynomial& q) {
    if (p.is_constant() || q.is_constant()) throw MathError("rank of a constant");
    if (p.mvar() != q.mvar()) return p.mvar() < q.mvar();
    return p.mdeg() < q.mdeg();
}

RegularChain::RegularChain(TriangularSet t) : set_(std::move(t)) {
    if (set_.empty()) return;
    if (iterated_resultant(set_.initial_product(), set_).is_zero())
        throw MathError("not a regular chain: iterated resultant of initials vanishes");
}

RegularChain RegularChain::unchecked(TriangularSet t) {
    RegularChain rc;
    rc.set_ = std::move(t);
    return rc;
}

std::vector<Monomial> RegularChain::rank_set() const {
    std::vector<Monomial> out;
    for (const auto& [v, p] : set_.polys()) out.push_back(p.rank());
    return out;
}

RegularSystem::RegularSystem(RegularChain chain, std::vector<Polynomial> ineq_factors)
    : chain_(std::move(chain)) {
    for (const Polynomial& h : ineq_factors) {
        if (h.is_zero()) throw MathError("zero inequation in regular system");
        if (h.is_constant()) continue;
        Polynomial c = h.canonical();
        if (std::find(ineq_.begin(), ineq_.end(), c) == ineq_.end()) ineq_.push_back(c);
    }
    std::sort(ineq_.begin(), ineq_.end());
    const TriangularSet& t = chain_.set();
    if (!t.empty()) {
        for (const Polynomial& h : ineq_)
            if (iterated_resultant(h, t).is_zero())
                throw MathError("not a regular system: inequation is a zerodivisor");
        squarefree_ = !iterated_resultant(t.separant_product(), t).is_zero();
    } else {
        squarefree_ = true;
    }
}

Polynomial RegularSystem::ineq() const {
    Polynomial h(order(), Rational(1));
    for (const Polynomial& f : ineq_) h = h * f;
    return h;
}

bool RegularSystem::contains(const std::vector<Rational>& point) const {
    for (const auto& [v, p] : set().polys())
        if (sgn(p.eval(point)) != 0) return false;
    for (const auto& [v, p] : set().polys())
        if (sgn(p.init().eval(point)) == 0) return false;
    for (const Polynomial& h : ineq_)
        if (sgn(h.eval(point)) == 0) return false;
    return true;
}

std::vector<Polynomial> RegularSystem::nonvanishing() const {
    std::vector<Polynomial> out;
    for (const auto& [v, p] : set().polys()) {
        Polynomial c = p.init();
        if (!c.is_constant()) out.push_back(c.canonical());
    }
    for (const Polynomial& h : ineq_) out.push_back(h);
    return out;
}

std::string RegularSystem::debug_string() const {
    std::ostringstream os;
    os << "[T:";
    bool first = true;
    for (const auto& [v, p] : set().polys()) {
        os << (first ? " " : ", ") << p.to_string();
        first = false;
    }
    if (first) os << " ";
    os << "; h:";
    first = true;
    for (const Polynomial& h : ineq_) {
        os << (first ? " " : ", ") << h.to_string();
        first = false;
    }
    if (first) os << " 1";
    os << "]";
    return os.str();
}

RankOrdering rank_compare_sets(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
    auto mono_rank_less = [](const Monomial& x, const Monomial& y) {
        if (x.level() != y.level()) return x.level() < y.level();
        return x.exp(x.level()) < y.exp(y.level());
    };
    std::optional<Monomial> best;
    bool best_in_a = false;
    auto consider = [&](const Monomial& m, bool in_a) {
        if (!best || mono_rank_less(m, *best)) {
            best = m;
            best_in_a = in_a;
        }
    };
    for (const Monomial& m : a)
        if (std::find(b.begin(), b.end(), m) == b.end()) consider(m, true);
    for (const Monomial& m : b)
        if (std::find(a.begin(), a.end(), m) == a.end()) consider(m, false);
    if (!best) return RankOrdering::Equal;
    return best_in_a ? RankOrdering::Less : RankOrdering::Greater;
}

RankOrdering rank_compare(const RegularSystem& a, const RegularSystem& b) {
    return rank_compare_sets(a.chain().rank_set(), b.chain().rank_set());
}

}  // namespace tdcad
