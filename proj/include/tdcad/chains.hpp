#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tdcad/poly_ops.hpp"
#include "tdcad/polynomial.hpp"

namespace tdcad {

// Non-constant polynomials with pairwise distinct main variables, keyed by
// their main variable. Stored polynomials are canonical.
class TriangularSet {
public:
    TriangularSet() = default;
    explicit TriangularSet(VarOrderPtr order) : order_(std::move(order)) {}

    static TriangularSet of(VarOrderPtr order, const std::vector<Polynomial>& polys);

    void insert(const Polynomial& p);  // error on constants / duplicate mvar

    bool empty() const { return polys_.empty(); }
    size_t size() const { return polys_.size(); }
    const std::map<Var, Polynomial>& polys() const { return polys_; }
    const VarOrderPtr& order() const { return order_; }

    bool is_algebraic(Var v) const { return polys_.count(v) > 0; }
    const Polynomial* poly_for(Var v) const {
        auto it = polys_.find(v);
        return it == polys_.end() ? nullptr : &it->second;
    }
    int top_level() const { return polys_.empty() ? 0 : polys_.rbegin()->first; }

    TriangularSet below(Var v) const;  // elements with mvar < v
    TriangularSet without(Var v) const;
    TriangularSet with(const Polynomial& p) const;

    Polynomial initial_product() const;  // h_T; 1 for the empty set
    Polynomial separant_product() const;

    std::vector<Polynomial> as_vector() const;  // ascending by mvar

    // Full pseudo-reduction of f by the chain, top variable down. On any
    // point where no initial of the chain vanishes, the result is zero iff
    // f is.
    Polynomial reduce(const Polynomial& f) const;

    bool operator==(const TriangularSet& o) const { return polys_ == o.polys_; }

private:
    VarOrderPtr order_;
    std::map<Var, Polynomial> polys_;
};

// ires(h, T): eliminate the algebraic variables of h through the chain,
// largest first. Nonzero iff h is regular modulo sat(T).
Polynomial iterated_resultant(const Polynomial& h, const TriangularSet& t);

// Rank order on non-constant polynomials: by main variable, then by main
// degree.
bool rank_less(const Polynomial& p, const Polynomial& q);

class RegularChain {
public:
    explicit RegularChain(VarOrderPtr order) : set_(std::move(order)) {}
    // Checked: ires(h_T, T) must be nonzero.
    explicit RegularChain(TriangularSet t);
    // For sample-point chains built by stack generation, where validity is
    // guaranteed locally by construction rather than by the global test.
    static RegularChain unchecked(TriangularSet t);

    const TriangularSet& set() const { return set_; }
    const VarOrderPtr& order() const { return set_.order(); }
    bool empty() const { return set_.empty(); }

    std::vector<Monomial> rank_set() const;

    bool operator==(const RegularChain& o) const { return set_ == o.set_; }

private:
    RegularChain() = default;
    TriangularSet set_;
};

// Pair [T, h]. The inequation is kept factored; h is the product of the
// stored factors (1 when there are none). Z(T,h) = V(T) \ V(h_T * h).
class RegularSystem {
public:
    RegularSystem(RegularChain chain, std::vector<Polynomial> ineq_factors);
    static RegularSystem whole_space(const VarOrderPtr& order) {
        return RegularSystem(RegularChain(order), {});
    }

    const RegularChain& chain() const { return chain_; }
    const TriangularSet& set() const { return chain_.set(); }
    const VarOrderPtr& order() const { return chain_.order(); }
    const std::vector<Polynomial>& ineq_factors() const { return ineq_; }
    Polynomial ineq() const;  // product of the factors

    bool is_squarefree() const { return squarefree_; }

    // Exact membership of a rational point (coordinates for vars 1..k).
    bool contains(const std::vector<Rational>& point) const;

    // Defining conditions in raw form: equations = chain polynomials,
    // nonvanishing = initials + inequation factors.
    std::vector<Polynomial> equations() const { return set().as_vector(); }
    std::vector<Polynomial> nonvanishing() const;

    bool operator==(const RegularSystem& o) const {
        return chain_ == o.chain_ && ineq_ == o.ineq_;
    }

    // Text form `[T: p1, p2, ...; h: q1, q2, ...]` used by golden tests.
    std::string debug_string() const;

private:
    RegularChain chain_;
    std::vector<Polynomial> ineq_;
    bool squarefree_ = false;
};

// Ordering on regular systems by the rank sets of their chains: compare the
// minimal element of the symmetric difference. Equal rank sets are equal.
enum class RankOrdering { Less, Equal, Greater };
RankOrdering rank_compare(const RegularSystem& a, const RegularSystem& b);
RankOrdering rank_compare_sets(const std::vector<Monomial>& a, const std::vector<Monomial>& b);

}  // namespace tdcad
