#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tdcad/rational.hpp"
#include "tdcad/varorder.hpp"

namespace tdcad {

// Exponent vector, trimmed so the back entry is nonzero. level() is then the
// main variable of the monomial (0 for the constant monomial).
struct Monomial {
    std::vector<unsigned> e;

    Monomial() = default;
    static Monomial var(Var v, unsigned k = 1) {
        Monomial m;
        if (k > 0) {
            m.e.assign(v, 0);
            m.e[v - 1] = k;
        }
        return m;
    }

    int level() const { return (int)e.size(); }
    unsigned exp(Var v) const { return v >= 1 && v <= (int)e.size() ? e[v - 1] : 0; }
    bool is_constant() const { return e.empty(); }
    unsigned total_degree() const {
        unsigned t = 0;
        for (unsigned x : e) t += x;
        return t;
    }
    void trim() {
        while (!e.empty() && e.back() == 0) e.pop_back();
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.e.assign(std::max(e.size(), o.e.size()), 0);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += e[i];
        for (size_t i = 0; i < o.e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    // Exact division; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        for (size_t i = 0; i < o.e.size(); ++i) r.e[i] -= o.e[i];
        r.trim();
        return r;
    }
    bool divisible_by(const Monomial& o) const {
        if (o.e.size() > e.size()) return false;
        for (size_t i = 0; i < o.e.size(); ++i)
            if (e[i] < o.e[i]) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Pure lexicographic order, greatest variable most significant. The leading
// term of a polynomial is the maximal monomial under this order.
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int la = a.level(), lb = b.level();
        if (la != lb) return la < lb;
        for (int i = la - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
};

// Sparse multivariate polynomial over Q under a fixed variable order.
// Invariant: no zero coefficients are stored; the zero polynomial has an
// empty term map. Values are immutable in spirit: all operations return new
// polynomials.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, MonoLess>;

    Polynomial() = default;
    explicit Polynomial(VarOrderPtr order) : order_(std::move(order)) {}
    Polynomial(VarOrderPtr order, const Rational& c) : order_(std::move(order)) {
        if (sgn(c) != 0) {
            Rational q = c;
            q.canonicalize();
            terms_[Monomial()] = q;
        }
    }
    static Polynomial variable(VarOrderPtr order, Var v);
    static Polynomial from_terms(VarOrderPtr order, Terms terms);

    const VarOrderPtr& order() const { return order_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }
    // Constant term (the whole value when is_constant()).
    Rational constant_value() const;

    // level = index of the main variable; 0 for constants.
    int level() const { return terms_.empty() ? 0 : terms_.rbegin()->first.level(); }
    Var mvar() const;                       // error on constants
    int degree(Var v) const;                // 0 when v absent
    int mdeg() const;                       // degree in mvar; error on constants
    Polynomial init() const;                // leading coefficient w.r.t. mvar
    Monomial rank() const;                  // mvar^mdeg
    Polynomial separant() const;            // d/d(mvar)
    Polynomial tail() const;                // p - init * mvar^mdeg
    Polynomial derivative(Var v) const;
    Polynomial coeff_of(Var v, int k) const;             // coefficient of v^k
    std::vector<Polynomial> coeffs_in(Var v) const;      // index = power of v
    std::vector<Var> vars_used() const;
    bool uses_var(Var v) const { return degree(v) > 0; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(unsigned k) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Scale to integer coefficients with content 1 and a positive leading
    // coefficient. Zero sets are insensitive to this, so chains, inequation
    // factors, and set representations always store canonical polynomials.
    Polynomial canonical() const;
    bool is_canonical() const;

    // Exact substitution of rationals for a subset of the variables.
    Polynomial specialize(const std::map<Var, Rational>& bindings) const;
    Rational eval(const std::vector<Rational>& point) const;  // point[i] = value of var i+1

    // Deterministic total order (used for stable sets and tie-breaking).
    static int compare(const Polynomial& a, const Polynomial& b);
    bool operator<(const Polynomial& o) const { return compare(*this, o) < 0; }

    std::string to_string() const;

private:
    void insert_term(const Monomial& m, const Rational& c);

    VarOrderPtr order_;
    Terms terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace tdcad
