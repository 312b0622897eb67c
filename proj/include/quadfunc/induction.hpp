#pragma once

#include <array>
#include <string>
#include <vector>

#include "quadfunc/families.hpp"
#include "quadfunc/poly.hpp"
#include "quadfunc/quadform.hpp"
#include "quadfunc/solve.hpp"

namespace quadfunc {

/// Base-case bound: 6 for k=2, 7 for k=3, 2k for k>=4.
long long threshold_A(FormK k);

enum class ParityCase { OddKOddN, OddKEvenN, EvenKOddN, EvenKEvenN };

std::string to_string(ParityCase c);

/// F(n) = F(args[0]) + k F(args[1]) - k F(args[2]) with all args >= 1 and
/// < n. l is the half parameter: n = 2l+1 (odd n) or n = 2l (even n).
struct RecurrenceInstance {
    ParityCase parity_case;
    long long k, n, l;
    std::array<long long, 3> args;
};

/// Selects the case by parity of k and n, computes l and the argument
/// triple, and verifies positivity plus args < n. Requires n > A(k).
RecurrenceInstance recurrence_for(FormK k, long long n);

/// Symbolic description of one case: each argument as a linear polynomial in
/// l, the minimal l implied by n > A, and the audit outcome.
struct CaseAudit {
    ParityCase parity_case;
    Poly1 n_of_l;                  // 2l+1 or 2l
    std::array<Poly1, 3> args_of_l;
    Poly1 residual;                // n(l)^2 - (a1^2 + k a2^2 - k a3^2), must be 0
    long long l_min = 0;
    bool residual_zero = false;
    bool side_conditions_ok = false;
    bool spot_check_ok = false;
    std::vector<std::string> notes;
};

struct RecurrenceAudit {
    long long k = 0;
    std::vector<CaseAudit> cases;  // the two cases matching k's parity
    bool passed = false;
};

/// Residual of n(l)^2 - (args[0]^2 + k args[1]^2 - k args[2]^2) for an
/// arbitrary argument triple; the audit and the deliberately-broken tests
/// share this.
Poly1 recurrence_residual(long long k, const Poly1& n_of_l, const std::array<Poly1, 3>& args);

/// Audits both parity cases for this k: zero symbolic residual, side
/// conditions proven from the minimal l (all argument bounds are linear and
/// increasing in l), and a numeric spot check for A < n <= A+200. Throws
/// AuditFailure if a residual is nonzero.
RecurrenceAudit audit_recurrences(FormK k);

struct BaseClassification {
    Candidate candidate;
    std::optional<FamilyKind> kind;
    std::vector<std::string> values;  // F(1..A) at the candidate, as text
};

struct FamilyClosureCheck {
    ParityCase parity_case;
    FamilyKind family;
    std::string identity;
    bool holds = false;
};

struct Certificate {
    static constexpr int schema_version = 1;
    long long k = 0;
    long long A = 0;
    std::vector<BaseClassification> base;
    RecurrenceAudit recurrence_audit;
    std::vector<FamilyClosureCheck> family_closure;
    bool certified = false;
    bool budget_exhausted = false;  // distinguishes "ran out" from "refuted"
    std::vector<std::string> failure_reasons;
    std::vector<std::string> notes;
};

/// Certified iff every admissible candidate classifies into one of the three
/// families on 1..A, nothing is unresolved, the recurrence audit passes, and
/// the family closure identities hold. Failures land in the verdict, they do
/// not throw.
Certificate certify(FormK k, const SolutionReport& solution, const DeriveResult& derived);

}  // namespace quadfunc
