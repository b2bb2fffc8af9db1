#include "tdcad/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace tdcad {

Polynomial Polynomial::variable(VarOrderPtr order, Var v) {
    if (v < 1 || v > order->size()) throw MathError("variable out of range");
    Polynomial p(order);
    p.terms_[Monomial::var(v)] = 1;
    return p;
}

Polynomial Polynomial::from_terms(VarOrderPtr order, Terms terms) {
    Polynomial p(std::move(order));
    for (auto& [m, c] : terms) {
        if (sgn(c) == 0) continue;
        Rational q = c;
        q.canonicalize();
        p.terms_.emplace(m, q);
    }
    return p;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational(0) : it->second;
}

Var Polynomial::mvar() const {
    if (is_constant()) throw MathError("no main variable");
    return terms_.rbegin()->first.level();
}

int Polynomial::degree(Var v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, (int)m.exp(v));
    return d;
}

int Polynomial::mdeg() const { return (int)terms_.rbegin()->first.exp(mvar()); }

Polynomial Polynomial::init() const { return coeff_of(mvar(), mdeg()); }

Monomial Polynomial::rank() const { return Monomial::var(mvar(), (unsigned)mdeg()); }

Polynomial Polynomial::separant() const { return derivative(mvar()); }

Polynomial Polynomial::tail() const {
    Var v = mvar();
    int d = mdeg();
    Polynomial r(order_);
    for (const auto& [m, c] : terms_)
        if ((int)m.exp(v) != d) r.terms_.emplace(m, c);
    return r;
}

Polynomial Polynomial::derivative(Var v) const {
    Polynomial r(order_);
    for (const auto& [m, c] : terms_) {
        unsigned k = m.exp(v);
        if (k == 0) continue;
        Monomial m2 = m;
        m2.e[v - 1] -= 1;
        m2.trim();
        r.insert_term(m2, c * (long)k);
    }
    return r;
}

Polynomial Polynomial::coeff_of(Var v, int k) const {
    Polynomial r(order_);
    for (const auto& [m, c] : terms_) {
        if ((int)m.exp(v) != k) continue;
        Monomial m2 = m;
        if (k > 0) {
            m2.e[v - 1] = 0;
            m2.trim();
        }
        r.terms_.emplace(m2, c);
    }
    return r;
}

std::vector<Polynomial> Polynomial::coeffs_in(Var v) const {
    std::vector<Polynomial> out((size_t)degree(v) + 1, Polynomial(order_));
    for (const auto& [m, c] : terms_) {
        unsigned k = m.exp(v);
        Monomial m2 = m;
        if (k > 0) {
            m2.e[v - 1] = 0;
            m2.trim();
        }
        out[k].insert_term(m2, c);
    }
    return out;
}

std::vector<Var> Polynomial::vars_used() const {
    std::vector<char> seen((size_t)level() + 1, 0);
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < m.level(); ++i)
            if (m.e[i]) seen[i + 1] = 1;
    std::vector<Var> out;
    for (Var v = 1; v < (Var)seen.size(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

void Polynomial::insert_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (sgn(c) != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(order_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    if (!r.order_) r.order_ = o.order_;
    for (const auto& [m, c] : o.terms_) r.insert_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    if (!r.order_) r.order_ = o.order_;
    for (const auto& [m, c] : o.terms_) r.insert_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(order_ ? order_ : o.order_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.insert_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(order_);
    if (sgn(c) == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r(order_, Rational(1));
    Polynomial base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = k > 1 ? base * base : base;
        k >>= 1;
    }
    return r;
}

Polynomial Polynomial::canonical() const {
    if (terms_.empty()) return *this;
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(terms_.rbegin()->second) < 0) scale = -scale;
    return *this * scale;
}

bool Polynomial::is_canonical() const {
    if (terms_.empty()) return true;
    Integer num_gcd(0);
    for (const auto& [m, c] : terms_) {
        if (c.get_den() != 1) return false;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    return num_gcd == 1 && sgn(terms_.rbegin()->second) > 0;
}

Polynomial Polynomial::specialize(const std::map<Var, Rational>& bindings) const {
    for (const auto& [v, val] : bindings)
        if (v < 1 || !order_ || v > order_->size())
            throw MathError("binding a variable not in the order");
    Polynomial r(order_);
    for (const auto& [m, c] : terms_) {
        Rational factor = c;
        Monomial m2 = m;
        for (const auto& [v, val] : bindings) {
            unsigned k = m.exp(v);
            if (k == 0) continue;
            Rational pw(1);
            for (unsigned i = 0; i < k; ++i) pw *= val;
            factor *= pw;
            m2.e[v - 1] = 0;
        }
        m2.trim();
        r.insert_term(m2, factor);
    }
    return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        if (m.level() > (int)point.size()) throw MathError("point dimension too small");
        Rational t = c;
        for (int i = 0; i < m.level(); ++i)
            for (unsigned k = 0; k < m.e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    int la = a.level(), lb = b.level();
    if (la != lb) return la < lb ? -1 : 1;
    if (la > 0) {
        int da = a.mdeg(), db = b.mdeg();
        if (da != db) return da < db ? -1 : 1;
    }
    auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
    MonoLess less;
    for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return -1;
        if (less(ib->first, ia->first)) return 1;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c;
    }
    if (ia != a.terms_.rend()) return 1;
    if (ib != b.terms_.rend()) return -1;
    return 0;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        const Monomial& m = it->first;
        bool printed_coeff = false;
        if (m.is_constant() || c != 1) {
            os << c.get_str();
            printed_coeff = true;
        }
        for (int i = 0; i < m.level(); ++i) {
            if (m.e[i] == 0) continue;
            if (printed_coeff) os << "*";
            printed_coeff = true;
            os << order_->name(i + 1);
            if (m.e[i] > 1) os << "^" << m.e[i];
        }
    }
    return os.str();
}

}  // namespace tdcad
