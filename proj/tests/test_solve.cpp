#include <doctest.h>

#include <algorithm>
#include <set>

#include "quadfunc/induction.hpp"
#include "quadfunc/solve.hpp"

using namespace quadfunc;

namespace {

// expands c * prod (q_i x - p_i) for the expected alpha polynomials
Poly1 product_of_factors(std::initializer_list<std::pair<long long, long long>> factors) {
    Poly1 p = Poly1::constant(BigRat(1));
    for (const auto& [q, c] : factors)
        p = p * (Poly1::monomial(1, BigRat(q)) + Poly1::constant(BigRat(c)));
    return p.primitive();
}

bool has_candidate(const std::vector<Candidate>& list, const BigRat& a, const BigRat& b) {
    return std::any_of(list.begin(), list.end(),
                       [&](const Candidate& c) { return c.alpha == a && c.beta == b; });
}

}  // namespace

TEST_CASE("k=2 base solution") {
    SolutionReport r = solve_base(FormK(2));
    CHECK(r.complete());

    CHECK(r.beta_solution.num.str() == "39*alpha^2 - 7*alpha");
    CHECK(r.beta_solution.den.str() == "12*alpha - 4");
    REQUIRE(r.excluded_alphas_checked.size() == 1);
    CHECK(r.excluded_alphas_checked[0] == BigRat(1, 3));

    // alpha (alpha - 1) (9 alpha - 1) (15 alpha - 4), up to sign/scalar
    Poly1 expected = (Poly1::variable() * product_of_factors({{1, -1}, {9, -1}, {15, -4}}));
    CHECK(r.alpha_polynomial.primitive() == expected.primitive());

    REQUIRE(r.admissible.size() == 3);
    CHECK(has_candidate(r.admissible, BigRat(0), BigRat(0)));
    CHECK(has_candidate(r.admissible, BigRat(1), BigRat(4)));
    CHECK(has_candidate(r.admissible, BigRat(1, 9), BigRat(1, 9)));

    std::set<std::string> f1(r.f1_values.begin(), r.f1_values.end());
    CHECK(f1 == std::set<std::string>{"0", "+-1", "+-1/3"});

    REQUIRE(r.rejected.size() == 1);
    CHECK(r.rejected[0].candidate.alpha == BigRat(4, 15));
    CHECK(r.rejected[0].candidate.beta == BigRat(-17, 15));
    CHECK(!r.rejected[0].witness.value.is_zero());
    CHECK(r.rejected[0].witness.constraint.eval(BigRat(4, 15), BigRat(-17, 15)) ==
          r.rejected[0].witness.value);

    // the denominator-root branch is explored and refutes its candidates
    REQUIRE(r.excluded_branches.size() == 1);
    CHECK(r.excluded_branches[0].alpha == BigRat(1, 3));
    CHECK(r.excluded_branches[0].admitted.empty());
}

TEST_CASE("k=3 base solution") {
    SolutionReport r = solve_base(FormK(3));
    CHECK(r.complete());
    CHECK(r.beta_solution.num.str() == "16*alpha^2 + 4*alpha");
    CHECK(r.beta_solution.den.str() == "5");
    CHECK(r.excluded_alphas_checked.empty());

    Poly1 expected = Poly1::variable() * product_of_factors({{1, -1}, {16, -1}, {16, 25}});
    CHECK(r.alpha_polynomial.primitive() == expected.primitive());

    std::set<std::string> f1(r.f1_values.begin(), r.f1_values.end());
    CHECK(f1 == std::set<std::string>{"0", "+-1", "+-1/4"});

    REQUIRE(r.rejected.size() == 1);
    CHECK(r.rejected[0].candidate.alpha == BigRat(-25, 16));
    CHECK(r.rejected[0].candidate.beta == BigRat(105, 16));
}

TEST_CASE("k=4 base solution") {
    SolutionReport r = solve_base(FormK(4));
    CHECK(r.complete());
    CHECK(r.beta_solution.num.str() == "25*alpha^2 + 7*alpha");
    CHECK(r.beta_solution.den.str() == "8");

    Poly1 expected = Poly1::variable() * product_of_factors({{1, -1}, {25, -1}, {5, 8}});
    CHECK(r.alpha_polynomial.primitive() == expected.primitive());

    std::set<std::string> f1(r.f1_values.begin(), r.f1_values.end());
    CHECK(f1 == std::set<std::string>{"0", "+-1", "+-1/5"});

    REQUIRE(r.rejected.size() == 1);
    CHECK(r.rejected[0].candidate.alpha == BigRat(-8, 5));
    CHECK(r.rejected[0].candidate.beta == BigRat(33, 5));
}

TEST_CASE("k=5 base solution") {
    SolutionReport r = solve_base(FormK(5));
    CHECK(r.complete());
    CHECK(r.beta_solution.num.str() == "108*alpha^2 + 32*alpha");
    CHECK(r.beta_solution.den.str() == "35");

    Poly1 expected = Poly1::variable() * product_of_factors({{1, -1}, {36, -1}, {36, 175}});
    CHECK(r.alpha_polynomial.primitive() == expected.primitive());

    std::set<std::string> f1(r.f1_values.begin(), r.f1_values.end());
    CHECK(f1 == std::set<std::string>{"0", "+-1", "+-1/6"});

    REQUIRE(r.rejected.size() == 1);
    CHECK(r.rejected[0].candidate.alpha == BigRat(-175, 36));
    CHECK(r.rejected[0].candidate.beta == BigRat(2465, 36));
}

TEST_CASE("admissible candidates satisfy every derived constraint") {
    for (long long k : {2, 3, 4, 5}) {
        const long long target = std::max(threshold_A(FormK(k)) + 2, 4 * k + 4);
        DeriveResult derived = derive_expressions(FormK(k), target);
        SolutionReport r = solve_base(FormK(k), derived);
        for (const Candidate& cand : r.admissible)
            for (const Constraint& c : derived.constraints)
                CHECK(c.poly.eval(cand.alpha, cand.beta).is_zero());
    }
}

TEST_CASE("reject_candidate on the known spurious and genuine points") {
    DeriveResult derived = derive_expressions(FormK(3), 16);
    // the spurious candidate is refuted with an exact nonzero value
    auto witness = reject_candidate({BigRat(-25, 16), BigRat(105, 16)}, FormK(3), derived);
    REQUIRE(witness.has_value());
    CHECK(!witness->value.is_zero());
    // the squared-seed constraint at n=7 refutes it too
    Poly2 c7 = (Poly2::beta() + Poly2::alpha().scaled(BigRat(3))).squared() -
               derived.table.exprs.at(7);
    CHECK(!c7.eval(BigRat(-25, 16), BigRat(105, 16)).is_zero());

    // the genuine family points have no witness anywhere
    CHECK(!reject_candidate({BigRat(1), BigRat(4)}, FormK(3), derived).has_value());
    CHECK(!reject_candidate({BigRat(0), BigRat(0)}, FormK(3), derived).has_value());
    CHECK(!reject_candidate({BigRat(1, 16), BigRat(1, 16)}, FormK(3), derived).has_value());
}

TEST_CASE("insufficient constraints are reported as such") {
    DeriveResult starved = derive_expressions(FormK(2), 3, {4, 8});
    CHECK_THROWS_AS(solve_base(FormK(2), starved), InsufficientConstraints);
}

TEST_CASE("f1 descriptors") {
    CHECK(f1_descriptor(BigRat(0)) == "0");
    CHECK(f1_descriptor(BigRat(1)) == "+-1");
    CHECK(f1_descriptor(BigRat(1, 9)) == "+-1/3");
    CHECK(f1_descriptor(BigRat(4, 15)) == "+-sqrt(4/15)");
    CHECK(f1_descriptor(BigRat(-25, 16)) == "+-i*sqrt(25/16)");
}

TEST_CASE("k=6 and k=7 solve without crashing and report honestly") {
    for (long long k : {6, 7}) {
        SolutionReport r = solve_base(FormK(k));
        // structural checks only: either fully resolved or honestly unresolved
        if (r.complete()) {
            CHECK(has_candidate(r.admissible, BigRat(0), BigRat(0)));
            CHECK(has_candidate(r.admissible, BigRat(1), BigRat(4)));
            CHECK(has_candidate(r.admissible, BigRat(1, (k + 1) * (k + 1)),
                                BigRat(1, (k + 1) * (k + 1))));
        } else {
            CHECK(!r.unresolved_factors.empty());
        }
        for (const RejectedCandidate& rc : r.rejected) CHECK(!rc.witness.value.is_zero());
    }
}
