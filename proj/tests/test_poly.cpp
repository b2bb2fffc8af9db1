#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tdcad/parse.hpp"
#include "tdcad/poly_ops.hpp"

using namespace tdcad;

namespace {

VarOrderPtr ord_y() { return make_order({"y1", "y2", "y3"}); }
VarOrderPtr ord_abcx() { return make_order({"a", "b", "c", "x"}); }
VarOrderPtr ord_x() { return make_order({"x"}); }

Polynomial P(const VarOrderPtr& o, const std::string& s) { return parse_polynomial(s, o); }

}  // namespace

TEST_CASE("monomial order and leading terms") {
    auto o = ord_y();
    Polynomial p = P(o, "y2^2 + y1 - 1");
    CHECK(p.level() == 2);
    CHECK(p.mvar() == 2);
    CHECK(p.mdeg() == 2);
    CHECK(p.init() == P(o, "1"));
    Polynomial q = P(o, "y1*y3^2 - 1");
    CHECK(q.mvar() == 3);
    CHECK(q.init() == P(o, "y1"));
    CHECK(q.separant() == P(o, "2*y1*y3"));
    CHECK(q.rank() == Monomial::var(3, 2));
}

TEST_CASE("mvar examples") {
    auto o = ord_y();
    CHECK(P(o, "y2^2 + y1 - 1").mvar() == 2);
    CHECK(P(o, "y1").mvar() == 1);
    CHECK(P(o, "y1*y3^2 - 1").mvar() == 3);
    CHECK_THROWS_AS(P(o, "5").mvar(), MathError);
}

TEST_CASE("init / sep / rank / mdeg examples") {
    auto o = ord_y();
    Polynomial p1 = P(o, "y2^2 + y1 - 1");
    CHECK(p1.init() == P(o, "1"));
    CHECK(p1.separant() == P(o, "2*y2"));
    CHECK(p1.rank() == Monomial::var(2, 2));
    Polynomial p = P(o, "5*y3");
    CHECK(p.init() == P(o, "5"));
    CHECK(p.separant() == P(o, "5"));
    CHECK(p.mdeg() == 1);
}

TEST_CASE("ring laws on random polynomials") {
    auto o = ord_y();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 60; ++i) {
        Polynomial p = oracle::random_poly(rng, o, {1, 2, 3}, 3, 4);
        Polynomial q = oracle::random_poly(rng, o, {1, 2, 3}, 3, 4);
        Polynomial r = oracle::random_poly(rng, o, {1, 2, 3}, 3, 4);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
        CHECK(p - p == Polynomial(o));
    }
}

TEST_CASE("canonical form") {
    auto o = ord_x();
    Polynomial p = P(o, "4*x^2 - 2");
    CHECK(p.canonical() == P(o, "2*x^2 - 1"));
    Polynomial q = -P(o, "x") * Rational(1, 3);
    CHECK(q.canonical() == P(o, "x"));
    CHECK(P(o, "0").canonical().is_zero());
    CHECK(p.canonical().is_canonical());
}

TEST_CASE("pseudo division relation") {
    auto o = ord_abcx();
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        Polynomial a = oracle::random_poly(rng, o, {1, 2, 4}, 3, 4);
        Polynomial b = oracle::random_poly(rng, o, {1, 2, 4}, 2, 3);
        if (b.degree(4) < 1 || a.degree(4) < b.degree(4)) continue;
        auto [q, r] = pseudo_divide(a, b, 4);
        Polynomial lhs = b.coeff_of(4, b.degree(4)).pow((unsigned)(a.degree(4) - b.degree(4) + 1)) * a;
        CHECK(lhs == q * b + r);
        CHECK(r.degree(4) < b.degree(4));
    }
}

TEST_CASE("resultant examples against Sylvester determinant") {
    auto o = ord_abcx();
    Polynomial f = P(o, "a*x^2 + b*x + c");
    Polynomial g = P(o, "2*a*x + b");
    Polynomial expected = P(o, "a*(4*a*c - b^2)");
    CHECK(oracle::sylvester_resultant(f, g, 4) == expected);
    CHECK(resultant(f, g, 4) == expected);

    auto ox = ord_x();
    Polynomial h = P(ox, "x^2 - 1");
    CHECK(resultant(h, h, 1).is_zero());

    auto oy = ord_y();
    CHECK(resultant(P(oy, "y2^2 + y1 - 1"), P(oy, "y2"), 2) == P(oy, "y1 - 1"));

    CHECK_THROWS_AS(resultant(P(ox, "1"), P(ox, "2"), 1), MathError);
}

TEST_CASE("resultant agrees with determinant oracle on random bivariate pairs") {
    auto o = make_order({"u", "x"});
    std::mt19937_64 rng(13);
    int done = 0;
    while (done < 100) {
        Polynomial p = oracle::random_poly(rng, o, {1, 2}, 3, 4);
        Polynomial q = oracle::random_poly(rng, o, {1, 2}, 2, 3);
        if (p.degree(2) < 1 && q.degree(2) < 1) continue;
        CHECK(resultant(p, q, 2) == oracle::sylvester_resultant(p, q, 2));
        ++done;
    }
}

TEST_CASE("resultant vanishing tracks specialized gcd") {
    // res(p,q,x) vanishes under u -> value iff the specialized univariate
    // pair has a common factor, excluding degenerate leading coefficients.
    auto o = make_order({"u", "x"});
    std::mt19937_64 rng(17);
    int done = 0;
    while (done < 100) {
        Polynomial p = oracle::random_poly(rng, o, {1, 2}, 3, 3);
        Polynomial q = oracle::random_poly(rng, o, {1, 2}, 3, 3);
        if (p.degree(2) < 1 || q.degree(2) < 1) continue;
        Polynomial res = resultant(p, q, 2);
        if (res.is_zero()) continue;
        Rational u0 = oracle::random_rational(rng);
        Polynomial ps = p.specialize({{1, u0}});
        Polynomial qs = q.specialize({{1, u0}});
        if (p.init().specialize({{1, u0}}).is_zero()) continue;
        if (q.init().specialize({{1, u0}}).is_zero()) continue;
        Polynomial g = oracle::uni_gcd(ps, qs, 2);
        bool res_zero = res.specialize({{1, u0}}).is_zero();
        bool gcd_nontrivial = !g.is_constant();
        CHECK(res_zero == gcd_nontrivial);
        ++done;
    }
}

TEST_CASE("subresultant chain examples") {
    auto ox = ord_x();
    auto chain = subresultant_chain(P(ox, "x^2 - 1"), P(ox, "2*x"), 1);
    REQUIRE(chain.size() == 2);
    CHECK(chain[0] == P(ox, "-4"));

    auto chain2 = subresultant_chain(P(ox, "x^3"), P(ox, "x"), 1);
    CHECK(chain2[0].is_zero());

    auto o = ord_abcx();
    auto chain3 = subresultant_chain(P(o, "a*x^2 + b*x + c"), P(o, "2*a*x + b"), 4);
    CHECK(chain3[0] == P(o, "a*(4*a*c - b^2)"));

    CHECK_THROWS_AS(subresultant_chain(P(ox, "x"), P(ox, "x^2"), 1), MathError);
}

TEST_CASE("subresultant principal coefficients track gcd degree under specialization") {
    auto o = make_order({"u", "x"});
    std::mt19937_64 rng(23);
    int done = 0;
    while (done < 120) {
        Polynomial p = oracle::random_poly(rng, o, {1, 2}, 3, 3);
        Polynomial q = oracle::random_poly(rng, o, {1, 2}, 3, 3);
        int dp = p.degree(2), dq = q.degree(2);
        if (dp < 1 || dq < 1 || dp < dq) continue;
        auto chain = subresultant_chain(p, q, 2);
        Rational u0 = oracle::random_rational(rng);
        if (p.coeff_of(2, dp).specialize({{1, u0}}).is_zero()) continue;
        if (q.coeff_of(2, dq).specialize({{1, u0}}).is_zero()) continue;
        Polynomial g = oracle::uni_gcd(p.specialize({{1, u0}}), q.specialize({{1, u0}}), 2);
        int expected_deg = g.is_constant() ? 0 : g.degree(2);
        int j = 0;
        while (j <= dq) {
            Polynomial sj = j == dq ? q.coeff_of(2, dq) : principal_coeff(chain[(size_t)j], 2, j);
            if (!sj.specialize({{1, u0}}).is_zero()) break;
            ++j;
        }
        CHECK(j == expected_deg);
        ++done;
    }
}

TEST_CASE("squarefree part") {
    auto ox = ord_x();
    Polynomial p = P(ox, "(x - 1)^2 * (x + 2)");
    Polynomial sf = squarefree_part(p, 1);
    CHECK(sf == P(ox, "(x - 1)*(x + 2)").canonical());
    CHECK_THROWS_AS(squarefree_part(P(ox, "3"), 1), MathError);

    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 100) {
        Polynomial f = oracle::random_poly(rng, ox, {1}, 5, 4);
        if (f.degree(1) < 1) continue;
        Polynomial g = poly_gcd(f, f.derivative(1));
        // squarefree_part(f) * gcd(f, f') = c * f
        Polynomial prod = squarefree_part(f, 1) * g;
        CHECK(prod.canonical() == f.canonical());
        ++done;
    }
}

TEST_CASE("gcd-free basis") {
    auto ox = ord_x();
    auto basis = gcd_free_basis({P(ox, "x^2 - 1"), P(ox, "x - 1")});
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == P(ox, "x - 1"));
    CHECK(basis[1] == P(ox, "x + 1"));

    auto single = gcd_free_basis({P(ox, "x")});
    REQUIRE(single.size() == 1);
    CHECK(single[0] == P(ox, "x"));

    // pairwise coprime + each input divides a product of powers of the basis
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> inputs;
        for (int i = 0; i < 3; ++i) {
            Polynomial f = oracle::random_poly(rng, ox, {1}, 4, 3);
            if (f.degree(1) >= 1) inputs.push_back(f);
        }
        if (inputs.empty()) continue;
        auto b = gcd_free_basis(inputs);
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j)
                CHECK(poly_gcd(b[i], b[j]).is_constant());
        for (const Polynomial& f : inputs) {
            // the squarefree part of f is the product of the basis elements
            // dividing it
            Polynomial prod(ox, Rational(1));
            for (const Polynomial& g : b) {
                Polynomial rem = oracle::uni_rem(f, g, 1);
                if (rem.is_zero()) prod = prod * g;
            }
            CHECK(prod.canonical() == squarefree_part(f, 1).canonical());
        }
    }
}

TEST_CASE("specialize") {
    auto o = ord_abcx();
    Polynomial f = P(o, "a*x^2 + b*x + c");
    CHECK(f.specialize({{1, Rational(1)}, {2, Rational(0)}, {3, Rational(-1)}}) ==
          P(o, "x^2 - 1"));
    Polynomial disc = P(o, "4*a*c - b^2");
    CHECK(disc.specialize({{1, Rational(1)}, {2, Rational(2)}, {3, Rational(1)}}).is_zero());
    CHECK_THROWS_AS(f.specialize({{9, Rational(1)}}), MathError);
}

TEST_CASE("interval evaluation soundness") {
    auto ox = ord_x();
    Interval r = eval_interval(P(ox, "x^2"), {{1, Interval(Rational(-2), Rational(1))}});
    CHECK(r.lo <= 0);
    CHECK(r.hi >= 4);

    auto o = ord_abcx();
    std::mt19937_64 rng(41);
    for (int i = 0; i < 1000; ++i) {
        Polynomial p = oracle::random_poly(rng, o, {1, 2, 4}, 3, 4);
        std::map<Var, Interval> box;
        std::vector<Rational> point(4, Rational(0));
        for (Var v : {1, 2, 3, 4}) {
            Rational a = oracle::random_rational(rng), b = oracle::random_rational(rng);
            if (a > b) std::swap(a, b);
            box.emplace(v, Interval(a, b));
            // random rational point inside the box
            Rational t(std::uniform_int_distribution<int>(0, 8)(rng), 8);
            t.canonicalize();
            point[(size_t)v - 1] = a + t * (b - a);
        }
        Interval enc = eval_interval(p, box);
        Rational val = p.eval(point);
        CHECK(enc.contains(val));
    }
}

TEST_CASE("parser basics and errors") {
    auto o = ord_abcx();
    CHECK(P(o, "a*x^2+b*x+c") == P(o, "c + x*(b + a*x)"));
    CHECK(P(o, "17/16*x") == Polynomial::variable(o, 4) * Rational(17, 16));
    CHECK_THROWS_AS(P(o, "x^^2"), ParseError);
    CHECK_THROWS_AS(P(o, "2x"), ParseError);
    CHECK_THROWS_AS(P(o, "z + 1"), ParseError);
    // round trip
    Polynomial f = P(o, "(x - a)^2 + 3/2*b - 1");
    CHECK(parse_polynomial(f.to_string(), o) == f);
}

TEST_CASE("interval pow tightness") {
    Interval i(Rational(-2), Rational(1));
    Interval sq = i.pow(2);
    CHECK(sq.lo == 0);
    CHECK(sq.hi == 4);
    Interval cu = i.pow(3);
    CHECK(cu.lo == -8);
    CHECK(cu.hi == 1);
}
