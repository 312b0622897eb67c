#include <doctest.h>

#include <random>

#include "quadfunc/poly.hpp"

using namespace quadfunc;

namespace {

Poly2 from_text_terms(std::initializer_list<std::tuple<int, int, long long, long long>> terms) {
    Poly2 p;
    for (const auto& [a, b, num, den] : terms) p.set(a, b, BigRat(num, den));
    return p;
}

Poly2 random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 3), nterm(1, 5);
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 5);
    Poly2 p;
    const int n = nterm(rng);
    for (int i = 0; i < n; ++i) {
        const int a = deg(rng), b = deg(rng);
        p.set(a, b, p.coeff(a, b) + BigRat(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("BigRat stays reduced with positive denominator") {
    BigRat r(6, -4);
    CHECK(r.numerator() == BigInt(-3));
    CHECK(r.denominator() == BigInt(2));
    CHECK(BigRat(0, 7).denominator() == BigInt(1));
    CHECK(BigRat(2, 3) + BigRat(1, 6) == BigRat(5, 6));
    CHECK(BigRat(1, 3) * BigRat(3, 1) == BigRat(1));
    CHECK_THROWS_AS(BigRat(1, 0), DomainError);
    CHECK_THROWS_AS(BigRat(1) / BigRat(0), DomainError);
    CHECK(BigRat::parse("-17/15").str() == "-17/15");
    CHECK(BigRat::parse("42").str() == "42");
    BigRat root;
    CHECK(BigRat(1, 9).square_root(root));
    CHECK(root == BigRat(1, 3));
    CHECK_FALSE(BigRat(4, 15).square_root(root));
}

TEST_CASE("BigRat arithmetic is exact on denominator blowups") {
    // sum_{i=1}^{40} 1/i computed two ways
    BigRat forward(0), backward(0);
    for (long long i = 1; i <= 40; ++i) forward += BigRat(1, i);
    for (long long i = 40; i >= 1; --i) backward += BigRat(1, i);
    CHECK(forward == backward);
    CHECK(forward.denominator() > BigInt(1000000));
}

TEST_CASE("Poly2 product reproduces the squared seed expression") {
    // (beta + 2*alpha)^2 = beta^2 + 4*alpha*beta + 4*alpha^2
    Poly2 s = Poly2::beta() + Poly2::alpha().scaled(BigRat(2));
    Poly2 sq = s * s;
    Poly2 expected = from_text_terms({{0, 2, 1, 1}, {1, 1, 4, 1}, {2, 0, 4, 1}});
    CHECK(sq == expected);
    CHECK(sq.str() == "4*alpha^2 + 4*alpha*beta + beta^2");
}

TEST_CASE("Poly2 additive identities") {
    Poly2 p = from_text_terms({{2, 0, 9, 1}});
    CHECK((p - p).is_zero());
    CHECK(p + Poly2() == p);
}

TEST_CASE("Poly2 evaluation") {
    // 36*alpha^2 - 4*alpha + beta at (1, 4)
    Poly2 f6 = from_text_terms({{2, 0, 36, 1}, {1, 0, -4, 1}, {0, 1, 1, 1}});
    CHECK(f6.eval(BigRat(1), BigRat(4)) == BigRat(36));

    // (beta + 2 alpha)^2 - (36 alpha^2 - 4 alpha + beta) vanishes at the
    // candidate that was built to satisfy it
    Poly2 s = Poly2::beta() + Poly2::alpha().scaled(BigRat(2));
    Poly2 c = s * s - f6;
    CHECK(c.eval(BigRat(4, 15), BigRat(-17, 15)) == BigRat(0));

    CHECK(Poly2().eval(BigRat(7, 3), BigRat(-2)) == BigRat(0));
}

TEST_CASE("Poly2 ring axioms on random triples") {
    std::mt19937_64 rng(20260810);
    for (int i = 0; i < 60; ++i) {
        Poly2 a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("solve_linear_in_beta on the already-solved form") {
    Poly2 p = Poly2::beta() - Poly2::alpha().scaled(BigRat(5));
    BetaSolution sol = solve_linear_in_beta(p);
    CHECK(sol.num.str() == "5*alpha");
    CHECK(sol.den.str() == "1");
    CHECK(sol.excluded_alphas.empty());
}

TEST_CASE("solve_linear_in_beta requires degree one") {
    Poly2 sq = Poly2::beta() * Poly2::beta();
    CHECK_THROWS_AS(solve_linear_in_beta(sq), DegreeError);
    CHECK_THROWS_AS(solve_linear_in_beta(Poly2::alpha()), DegreeError);
}

TEST_CASE("solve_linear_in_beta reports denominator roots") {
    // beta*(12 alpha - 4) - (39 alpha^2 - 7 alpha)
    Poly2 p = Poly2::beta() * from_text_terms({{1, 0, 12, 1}, {0, 0, -4, 1}}) -
              from_text_terms({{2, 0, 39, 1}, {1, 0, -7, 1}});
    BetaSolution sol = solve_linear_in_beta(p);
    CHECK(sol.num.str() == "39*alpha^2 - 7*alpha");
    CHECK(sol.den.str() == "12*alpha - 4");
    REQUIRE(sol.excluded_alphas.size() == 1);
    CHECK(sol.excluded_alphas[0] == BigRat(1, 3));
    // on the curve, the source constraint vanishes for non-excluded alphas
    for (long long i = -5; i <= 5; ++i) {
        BigRat a0(i, 7);
        BigRat d = sol.den.eval(a0);
        REQUIRE(!d.is_zero());
        CHECK(p.eval(a0, sol.num.eval(a0) / d).is_zero());
    }
}

TEST_CASE("substitute_beta clears denominators and normalizes") {
    // p independent of beta passes through up to primitive normalization
    Poly2 p = from_text_terms({{2, 0, 4, 1}, {1, 0, 2, 1}});
    BetaSolution beta{Poly1::from_coefficients({BigRat(0), BigRat(5)}), Poly1::constant(BigRat(1)), {}};
    CHECK(substitute_beta(p, beta).str() == "2*alpha^2 + alpha");
}

TEST_CASE("rational_roots finds the full factorization") {
    // alpha (alpha - 1) (9 alpha - 1) (15 alpha - 4), expanded
    Poly1 quartic = Poly1::monomial(1, BigRat(1)) *
                    (Poly1::variable() - Poly1::constant(BigRat(1))) *
                    (Poly1::variable().scaled(BigRat(9)) - Poly1::constant(BigRat(1))) *
                    (Poly1::variable().scaled(BigRat(15)) - Poly1::constant(BigRat(4)));
    RootReport report = rational_roots(quartic);
    REQUIRE(report.roots.size() == 4);
    CHECK(report.roots[0] == std::pair{BigRat(0), 1});
    CHECK(report.roots[1] == std::pair{BigRat(1, 9), 1});
    CHECK(report.roots[2] == std::pair{BigRat(4, 15), 1});
    CHECK(report.roots[3] == std::pair{BigRat(1), 1});
    CHECK(report.residual.is_constant());
}

TEST_CASE("rational_roots leaves irrational factors as residual") {
    Poly1 p = Poly1::monomial(2, BigRat(1)) + Poly1::constant(BigRat(1));
    RootReport report = rational_roots(p);
    CHECK(report.roots.empty());
    CHECK(report.residual == p);
    CHECK_THROWS_AS(rational_roots(Poly1()), ZeroPolynomialError);
}

TEST_CASE("rational_roots reconstructs the input up to scalar") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long long> num(-6, 6);
    std::uniform_int_distribution<long long> den(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        // product of random linear factors (q x - p) and a rootless tail
        Poly1 p = Poly1::constant(BigRat(1));
        const int nlin = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < nlin; ++i)
            p = p * (Poly1::monomial(1, BigRat(den(rng))) - Poly1::constant(BigRat(num(rng))));
        if (rng() % 2) p = p * (Poly1::monomial(2, BigRat(1)) + Poly1::constant(BigRat(3)));
        RootReport report = rational_roots(p);
        Poly1 rebuilt = report.residual;
        for (const auto& [root, mult] : report.roots) {
            Poly1 factor = Poly1::monomial(1, BigRat(root.denominator())) -
                           Poly1::constant(BigRat(root.numerator()));
            for (int m = 0; m < mult; ++m) rebuilt = rebuilt * factor;
        }
        CHECK(rebuilt.primitive() == p.primitive());
    }
}

TEST_CASE("rational_roots reports multiplicity") {
    // (2x - 1)^3 (x + 2)
    Poly1 lin = Poly1::monomial(1, BigRat(2)) - Poly1::constant(BigRat(1));
    Poly1 p = lin * lin * lin * (Poly1::variable() + Poly1::constant(BigRat(2)));
    RootReport report = rational_roots(p);
    REQUIRE(report.roots.size() == 2);
    CHECK(report.roots[0] == std::pair{BigRat(-2), 1});
    CHECK(report.roots[1] == std::pair{BigRat(1, 2), 3});
}

TEST_CASE("canonical text rendering") {
    Poly2 p = from_text_terms({{2, 0, 36, 1}, {1, 0, -4, 1}, {0, 1, 1, 1}});
    CHECK(p.str() == "36*alpha^2 - 4*alpha + beta");
    Poly2 q = from_text_terms({{2, 0, 27, 2}, {1, 0, -3, 2}, {0, 1, 1, 1}});
    CHECK(q.str() == "27/2*alpha^2 - 3/2*alpha + beta");
    CHECK(Poly2().str() == "0");
    CHECK(Poly1::from_coefficients({BigRat(-7, 1), BigRat(0), BigRat(3)}).str("l") ==
          "3*l^2 - 7");
}
