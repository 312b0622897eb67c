#include <doctest.h>

#include <set>

#include "quadfunc/induction.hpp"

using namespace quadfunc;

TEST_CASE("threshold values") {
    CHECK(threshold_A(FormK(2)) == 6);
    CHECK(threshold_A(FormK(3)) == 7);
    CHECK(threshold_A(FormK(9)) == 18);
    CHECK_THROWS_AS(threshold_A(FormK(1)), DomainError);
}

TEST_CASE("recurrence instances at small n") {
    RecurrenceInstance r = recurrence_for(FormK(3), 9);
    CHECK(r.parity_case == ParityCase::OddKOddN);
    CHECK(r.l == 4);
    CHECK(r.args == std::array<long long, 3>{3, 5, 1});
    CHECK(9 * 9 == 3 * 3 + 3 * 25 - 3 * 1);

    RecurrenceInstance r8 = recurrence_for(FormK(2), 8);
    CHECK(r8.parity_case == ParityCase::EvenKEvenN);
    CHECK(r8.args == std::array<long long, 3>{4, 5, 1});
    CHECK(8 * 8 == 4 * 4 + 2 * 25 - 2 * 1);

    CHECK_THROWS_AS(recurrence_for(FormK(2), 6), SideConditionError);  // n = A, not > A
}

TEST_CASE("symbolic residuals vanish for a k sweep") {
    for (long long k = 2; k <= 50; ++k) {
        RecurrenceAudit audit = audit_recurrences(FormK(k));
        CHECK(audit.passed);
        REQUIRE(audit.cases.size() == 2);
        for (const CaseAudit& c : audit.cases) {
            CHECK(c.residual.is_zero());
            CHECK(c.side_conditions_ok);
            CHECK(c.spot_check_ok);
        }
    }
}

TEST_CASE("a wrong argument triple leaves a nonzero residual") {
    // args (2l-2k, l, l-1) do not satisfy the identity for k=3
    Poly1 n_of_l = Poly1::from_coefficients({BigRat(1), BigRat(2)});  // 2l+1
    std::array<Poly1, 3> bad = {Poly1::from_coefficients({BigRat(-6), BigRat(2)}),
                                Poly1::variable(),
                                Poly1::from_coefficients({BigRat(-1), BigRat(1)})};
    CHECK(!recurrence_residual(3, n_of_l, bad).is_zero());
}

TEST_CASE("numeric spot checks deep past the threshold") {
    for (long long k = 2; k <= 20; ++k) {
        const long long A = threshold_A(FormK(k));
        for (long long n = A + 1; n <= A + 500; ++n) {
            RecurrenceInstance r = recurrence_for(FormK(k), n);
            CHECK(n * n == r.args[0] * r.args[0] + k * (r.args[1] * r.args[1]) -
                               k * (r.args[2] * r.args[2]));
            for (long long arg : r.args) {
                CHECK(arg >= 1);
                CHECK(arg < n);
            }
        }
    }
}

TEST_CASE("certificates for the resolved cases") {
    for (long long k : {2, 3, 4, 5}) {
        const long long target = std::max(threshold_A(FormK(k)) + 2, 4 * k + 4);
        DeriveResult derived = derive_expressions(FormK(k), target);
        SolutionReport solution = solve_base(FormK(k), derived);
        Certificate cert = certify(FormK(k), solution, derived);
        CHECK(cert.certified);
        CHECK(cert.failure_reasons.empty());
        std::set<FamilyKind> kinds;
        for (const BaseClassification& bc : cert.base) {
            REQUIRE(bc.kind.has_value());
            kinds.insert(*bc.kind);
        }
        CHECK(kinds ==
              std::set<FamilyKind>{FamilyKind::Zero, FamilyKind::Linear, FamilyKind::Reciprocal});
        for (const FamilyClosureCheck& fc : cert.family_closure) CHECK(fc.holds);
    }
}

TEST_CASE("certification degrades gracefully on starved budgets") {
    DeriveResult starved = derive_expressions(FormK(2), 12, {16, 8});
    SolutionReport solution;
    try {
        solution = solve_base(FormK(2), starved);
    } catch (const InsufficientConstraints&) {
        solution.k = 2;  // empty report; certify must still not crash
    }
    Certificate cert = certify(FormK(2), solution, starved);
    CHECK(!cert.certified);
    CHECK(!cert.failure_reasons.empty());
}
