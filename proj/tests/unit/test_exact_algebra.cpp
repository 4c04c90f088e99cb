#include "doctest.h"

#include "dsb/error.hpp"
#include "dsb/exact/binary_form.hpp"
#include "dsb/exact/bivariate.hpp"
#include "dsb/exact/factor.hpp"
#include "dsb/exact/matrix.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace dsb::exact;

namespace {

BinaryForm F(std::vector<long> c) {
    std::vector<Rational> v(c.begin(), c.end());
    return BinaryForm(static_cast<int>(c.size()) - 1, v);
}

UPoly P(std::vector<long> c) {
    std::vector<Rational> v(c.begin(), c.end());
    return UPoly(v);
}

bool proportional(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

} // namespace

TEST_CASE("rational normalization and text round trip") {
    Rational q(mpz_class(6), mpz_class(-4));
    CHECK(q.str() == "-3/2");
    CHECK(q.den() > 0);
    CHECK(Rational::parse("10/4") == Rational(5) / Rational(2));
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK_THROWS_AS(Rational::parse("1/0"), dsb::InvalidInput);
    CHECK_THROWS_AS(Rational::parse("1/-2"), dsb::InvalidInput);
    CHECK_THROWS_AS(Rational::parse("abc"), dsb::InvalidInput);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> u(-1000, 1000);
    for (int i = 0; i < 200; ++i) {
        long n = u(rng), d = u(rng);
        if (d == 0) continue;
        Rational r{mpz_class(n), mpz_class(d)};
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
        CHECK(g == 1);
        CHECK(r.den() > 0);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("kernel_basis examples") {
    auto k = kernel_basis(ExactMatrix::from_rows({{1, 0, -1}, {0, 1, -1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vector{1, 1, 1});

    auto k2 = kernel_basis(ExactMatrix::from_rows({{1, 1}}));
    REQUIRE(k2.size() == 1);
    CHECK(proportional(k2[0], Vector{1, -1}));

    CHECK(kernel_basis(ExactMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).empty());
    CHECK_THROWS_AS(ExactMatrix(0, 3), dsb::InvalidInput);
}

TEST_CASE("rank plus kernel dimension equals column count on random matrices") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dim(1, 6), val(-2, 2);
    for (int trial = 0; trial < 200; ++trial) {
        const int R = dim(rng), C = dim(rng);
        std::vector<Vector> rows(R, Vector(C));
        for (auto& row : rows)
            for (auto& x : row) x = val(rng);
        ExactMatrix m = ExactMatrix::from_rows(rows);
        auto ker = kernel_basis(m);
        CHECK(rank(m) == oracle::naive_rank(rows));
        CHECK(rank(m) + ker.size() == static_cast<std::size_t>(C));
        for (auto& v : ker) {
            for (auto& x : m.apply(v)) CHECK(x.is_zero());
        }
        if (ker.size() >= 1) CHECK(oracle::naive_rank(ker) == ker.size());
        if (R == C) {
            Rational det = determinant(m);
            CHECK((det.is_zero()) == (rank(m) < static_cast<std::size_t>(R)));
        }
    }
}

TEST_CASE("determinant agrees with cofactor expansion") {
    ExactMatrix m = ExactMatrix::from_rows({{2, -1, 3}, {Rational(1) / 2, 4, 0}, {1, 1, 1}});
    Rational expect = Rational(2) * (4 * 1 - 0 * 1) - Rational(-1) * (Rational(1) / 2 - 0) + Rational(3) * (Rational(1) / 2 - 4);
    CHECK(determinant(m) == expect);
}

TEST_CASE("form_gcd examples") {
    // x^2 - y^2 and x^2 - 2xy + y^2
    CHECK(form_gcd(F({1, 0, -1}), F({1, -2, 1})) == F({1, -1}));
    // x^2 y and x y^2
    CHECK(form_gcd(F({0, 1, 0, 0}), F({0, 0, 1, 0})) == F({0, 1, 0}));
    // x^5 and y^5
    CHECK(form_gcd(F({1, 0, 0, 0, 0, 0}), F({0, 0, 0, 0, 0, 1})) == F({1}));
    try {
        form_gcd(BinaryForm::zero(3), BinaryForm::zero(2));
        FAIL("expected error");
    } catch (const dsb::InvalidInput& e) {
        CHECK(std::string(e.what()) == "undefined gcd");
    }
}

TEST_CASE("form_gcd divides both inputs and absorbs common factors") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        BinaryForm c = oracle::random_form(rng, 1 + trial % 3, -3, 3);
        if (c.is_zero()) continue;
        BinaryForm a = oracle::random_form(rng, 2, -3, 3) * c;
        BinaryForm b = oracle::random_form(rng, 3, -3, 3) * c;
        if (a.is_zero() || b.is_zero()) continue;
        BinaryForm g = form_gcd(a, b);
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        CHECK(divides(c.normalized(), g));
        CHECK(g.coeff(g.y_valuation()) == 1);
    }
}

TEST_CASE("squarefree_and_factor examples") {
    auto irr = squarefree_and_factor(F({1, 0, 0, 0, 1}));
    REQUIRE(irr.size() == 1);
    CHECK(irr[0].form == F({1, 0, 0, 0, 1}));
    CHECK(irr[0].multiplicity == 1);

    auto cube = squarefree_and_factor(F({1, -3, 3, -1}));
    REQUIRE(cube.size() == 1);
    CHECK(cube[0].form == F({1, -1}));
    CHECK(cube[0].multiplicity == 3);

    CHECK_THROWS_AS(squarefree_and_factor(BinaryForm::zero(4)), dsb::InvalidInput);

    // x^2 y^2 (x - y): y-factor handled separately from the dehomogenized part
    auto mixed = squarefree_and_factor(F({0, 0, 1, -1, 0, 0}));
    CHECK(mixed.size() == 3);
}

TEST_CASE("x^4 + y^4 has no factorization over Q (independent search)") {
    // Any monic factor of s^4 + 1 in Z[s] has a rational root (+-1) or is
    // quadratic s^2 + a s + b with b in {1, -1} and |a| <= 2.
    UPoly f = P({1, 0, 0, 0, 1});
    CHECK(!f.eval(1).is_zero());
    CHECK(!f.eval(-1).is_zero());
    for (int a = -2; a <= 2; ++a)
        for (int b : {-1, 1}) CHECK(!(f % P({b, a, 1})).is_zero());
    CHECK(factor(f).size() == 1);
}

TEST_CASE("factor reassembles random products into irreducibles") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> cd(-4, 4), deg(1, 4), cnt(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        UPoly prod(1);
        int pieces = cnt(rng);
        for (int k = 0; k < pieces; ++k) {
            std::vector<Rational> v;
            int dg = deg(rng);
            for (int i = 0; i < dg; ++i) v.emplace_back(cd(rng));
            v.emplace_back(1 + std::abs(cd(rng)));
            prod = prod * UPoly(v);
        }
        auto facs = factor(prod);
        UPoly back(1);
        int total = 0;
        for (auto& f : facs) {
            CHECK(f.poly.lead() == 1);
            for (int i = 0; i < f.multiplicity; ++i) back = back * f.poly;
            total += f.multiplicity;
            // irreducible factors have no rational roots unless linear
            if (f.poly.degree() > 1) {
                for (auto& fi : facs) CHECK(fi.poly.degree() >= 1);
            }
        }
        CHECK(back == prod.monic());
        CHECK(total >= 1);
    }
}

TEST_CASE("factor splits a polynomial with many modular factors") {
    // (s^2 - 2)(s^2 - 3)(s^2 - 5)(s^2 - 6)(s - 7): factors that split mod many primes
    UPoly f = P({-2, 0, 1}) * P({-3, 0, 1}) * P({-5, 0, 1}) * P({-6, 0, 1}) * P({-7, 1});
    auto facs = factor(f);
    CHECK(facs.size() == 5);
    CHECK(rational_roots(f) == std::vector<Rational>{7});
    // s^4 - 10 s^2 + 1 is irreducible but splits modulo every prime
    CHECK(factor(P({1, 0, -10, 0, 1})).size() == 1);
}

TEST_CASE("squarefree decomposition and rational roots") {
    UPoly f = P({-1, 1}) * P({-1, 1}) * P({2, 1}) * P({1, 0, 1});
    auto dec = squarefree_decomposition(f);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].second == 1);
    CHECK(dec[1].second == 2);
    CHECK(dec[1].first == P({-1, 1}));
    CHECK(!is_squarefree(f));
    CHECK(is_squarefree(squarefree_part(f)));
    CHECK(rational_roots(f) == std::vector<Rational>{-2, 1});
    UPoly g = P({-1, 3}) * P({2, 5});
    CHECK(rational_roots(g) == std::vector<Rational>{Rational(-2) / 5, Rational(1) / 3});
}

TEST_CASE("interpolation reproduces a polynomial") {
    UPoly f = P({3, -1, 0, 2, 7});
    std::vector<Rational> xs, ys;
    for (int i = 0; i < 5; ++i) {
        xs.emplace_back(i - 2);
        ys.push_back(f.eval(i - 2));
    }
    CHECK(interpolate(xs, ys) == f);
}

TEST_CASE("bivariate_gcd examples") {
    auto s = BivariatePoly::s(), t = BivariatePoly::t();
    BivariatePoly common = s - t;
    BivariatePoly a = common * (s + t + BivariatePoly(1));
    BivariatePoly b = common * (s * t + BivariatePoly(1));
    CHECK(bivariate_gcd(a, b) == (s - t).normalized());
    CHECK_THROWS_AS(bivariate_gcd(BivariatePoly(), BivariatePoly()), dsb::InvalidInput);
    CHECK(bivariate_gcd(a, BivariatePoly()) == a.normalized());
}

TEST_CASE("bivariate_gcd divides its inputs on random products") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> c(-3, 3);
    auto rnd = [&](int ds, int dt) {
        BivariatePoly p;
        for (int i = 0; i <= ds; ++i)
            for (int j = 0; j <= dt; ++j) p += BivariatePoly::term(c(rng), i, j);
        return p;
    };
    for (int trial = 0; trial < 25; ++trial) {
        BivariatePoly g = rnd(1, 1), a = rnd(2, 1) * g, b = rnd(1, 2) * g;
        if (a.is_zero() || b.is_zero() || g.is_zero()) continue;
        BivariatePoly h = bivariate_gcd(a, b);
        CHECK(divides(h, a));
        CHECK(divides(h, b));
        CHECK(divides(g, h));
    }
}
