#include "quadfunc/induction.hpp"

#include <sstream>

namespace quadfunc {

namespace {

bool odd(long long x) { return (x % 2) != 0; }

// linear polynomial c1*l + c0
Poly1 linear(const BigRat& c1, const BigRat& c0) {
    Poly1 p;
    p.set(1, c1);
    p.set(0, c0);
    return p;
}

struct CaseShape {
    ParityCase parity_case;
    Poly1 n_of_l;
    std::array<Poly1, 3> args;
    long long l_min;
};

// The four recurrence shapes. Arguments are linear in l; the minimal l is
// what n > A forces for the given k.
CaseShape case_shape(long long k, bool n_odd) {
    const BigRat K(k);
    if (odd(k)) {
        if (n_odd) {
            const BigRat off = BigRat(k - 1, 2);
            return {ParityCase::OddKOddN,
                    linear(2, 1),
                    {linear(2, BigRat(1 - 2 * k)), linear(1, BigRat(2) - off),
                     linear(1, BigRat(-2) - off)},
                    k == 3 ? 4 : k};
        }
        return {ParityCase::OddKEvenN,
                linear(2, 0),
                {linear(2, BigRat(-2 * k)), linear(2, BigRat(1 - k)), linear(2, BigRat(-1 - k))},
                k + 1};
    }
    if (n_odd) {
        return {ParityCase::EvenKOddN,
                linear(2, 1),
                {linear(2, BigRat(1 - 2 * k)), linear(2, BigRat(2 - k)), linear(2, BigRat(-k))},
                k == 2 ? 3 : k};
    }
    const BigRat half = BigRat(k, 2);
    return {ParityCase::EvenKEvenN,
            linear(2, 0),
            {linear(2, BigRat(-2 * k)), linear(1, BigRat(2) - half), linear(1, BigRat(-2) - half)},
            k == 2 ? 4 : k + 1};
}

}  // namespace

long long threshold_A(FormK k) {
    if (k.k < 2) throw DomainError("threshold_A: defined for k >= 2 only");
    if (k.k == 2) return 6;
    if (k.k == 3) return 7;
    return 2 * k.k;
}

std::string to_string(ParityCase c) {
    switch (c) {
        case ParityCase::OddKOddN: return "odd-k-odd-n";
        case ParityCase::OddKEvenN: return "odd-k-even-n";
        case ParityCase::EvenKOddN: return "even-k-odd-n";
        case ParityCase::EvenKEvenN: return "even-k-even-n";
    }
    return "?";
}

RecurrenceInstance recurrence_for(FormK k, long long n) {
    const long long A = threshold_A(k);
    if (n <= A)
        throw SideConditionError("recurrence_for: n = " + std::to_string(n) +
                                 " is not above the threshold A = " + std::to_string(A));
    const long long l = n / 2;  // n = 2l+1 or n = 2l
    const CaseShape shape = case_shape(k.k, odd(n));

    RecurrenceInstance inst{shape.parity_case, k.k, n, l, {}};
    for (int i = 0; i < 3; ++i) {
        const BigRat value = shape.args[static_cast<std::size_t>(i)].eval(BigRat(l));
        if (!value.is_integer())
            throw SideConditionError("recurrence_for: non-integer argument");
        inst.args[static_cast<std::size_t>(i)] = static_cast<long long>(value.numerator());
    }
    for (long long arg : inst.args) {
        if (arg < 1)
            throw SideConditionError("recurrence_for: argument " + std::to_string(arg) +
                                     " below 1 at n = " + std::to_string(n));
        if (arg >= n)
            throw SideConditionError("recurrence_for: argument not smaller than n");
    }
    // the integer identity behind the recurrence
    const long long lhs = n * n;
    const long long rhs = inst.args[0] * inst.args[0] + k.k * inst.args[1] * inst.args[1] -
                          k.k * inst.args[2] * inst.args[2];
    if (lhs != rhs) throw SideConditionError("recurrence_for: integer identity failed");
    return inst;
}

Poly1 recurrence_residual(long long k, const Poly1& n_of_l, const std::array<Poly1, 3>& args) {
    const BigRat K(k);
    return n_of_l * n_of_l - args[0] * args[0] - (args[1] * args[1]).scaled(K) +
           (args[2] * args[2]).scaled(K);
}

RecurrenceAudit audit_recurrences(FormK k) {
    const long long A = threshold_A(k);
    RecurrenceAudit audit;
    audit.k = k.k;
    audit.passed = true;

    for (bool n_odd : {true, false}) {
        const CaseShape shape = case_shape(k.k, n_odd);
        CaseAudit ca;
        ca.parity_case = shape.parity_case;
        ca.n_of_l = shape.n_of_l;
        ca.args_of_l = shape.args;
        ca.l_min = shape.l_min;

        ca.residual = recurrence_residual(k.k, shape.n_of_l, shape.args);
        ca.residual_zero = ca.residual.is_zero();

        // side conditions: every argument is linear in l with positive slope,
        // is >= 1 at l_min, and stays below n for all l >= l_min
        ca.side_conditions_ok = true;
        const BigRat lmin(shape.l_min);
        for (std::size_t i = 0; i < 3; ++i) {
            const Poly1& arg = shape.args[i];
            const bool increasing = arg.coeff(1) > BigRat(0);
            const BigRat at_min = arg.eval(lmin);
            const Poly1 gap = shape.n_of_l - arg;
            const bool below_n = gap.coeff(1) >= BigRat(0) && gap.eval(lmin) > BigRat(0);
            std::ostringstream note;
            note << "arg" << (i + 1) << " = " << arg.str("l") << ": slope " << arg.coeff(1).str()
                 << " > 0, value " << at_min.str() << " >= 1 at l=" << shape.l_min
                 << ", n - arg stays positive: " << (below_n ? "yes" : "NO");
            ca.notes.push_back(note.str());
            if (!increasing || at_min < BigRat(1) || !below_n) ca.side_conditions_ok = false;
        }
        if (shape.parity_case == ParityCase::OddKOddN) {
            // l - (k-1)/2 must be an integer >= 3 so that a = l-(k-1)/2, b=2
            // keeps ad - bc positive
            const BigRat a_min = BigRat(shape.l_min) - BigRat(k.k - 1, 2);
            const bool ok = a_min.is_integer() && a_min >= BigRat(3);
            ca.notes.push_back("l - (k-1)/2 integral and >= 3 at l_min: " + std::string(ok ? "yes" : "NO"));
            if (!ok) ca.side_conditions_ok = false;
        }
        if (shape.parity_case == ParityCase::EvenKEvenN) {
            const BigRat a_min = BigRat(shape.l_min) - BigRat(k.k, 2);
            const bool ok = a_min.is_integer() && a_min >= BigRat(3);
            ca.notes.push_back("l - k/2 integral and >= 3 at l_min: " + std::string(ok ? "yes" : "NO"));
            if (!ok) ca.side_conditions_ok = false;
        }

        // numeric spot check just above the threshold
        ca.spot_check_ok = true;
        for (long long n = A + 1; n <= A + 200; ++n) {
            if (odd(n) != n_odd) continue;
            try {
                recurrence_for(k, n);
            } catch (const SideConditionError&) {
                ca.spot_check_ok = false;
                break;
            }
        }

        if (!ca.residual_zero)
            throw AuditFailure("audit_recurrences: nonzero residual for case " +
                               to_string(ca.parity_case) + " at k = " + std::to_string(k.k) +
                               ": " + ca.residual.str("l"));
        if (!ca.side_conditions_ok || !ca.spot_check_ok) audit.passed = false;
        audit.cases.push_back(std::move(ca));
    }
    return audit;
}

Certificate certify(FormK k, const SolutionReport& solution, const DeriveResult& derived) {
    Certificate cert;
    cert.k = k.k;
    cert.A = threshold_A(k);
    cert.notes.push_back(
        "family labels refer to the value shapes 0, +-n, +-1/(k+1); they are "
        "classification labels, independent of derivation order");

    // (i) each admissible candidate must classify on 1..A
    bool table_complete = true;
    for (long long n = 1; n <= cert.A; ++n)
        if (!derived.table.exprs.count(n)) {
            table_complete = false;
            cert.failure_reasons.push_back("no expression for F(" + std::to_string(n) + ")");
        }
    if (table_complete) {
        for (const Candidate& cand : solution.admissible) {
            BaseClassification bc;
            bc.candidate = cand;
            std::map<long long, BigRat> values;
            for (long long n = 1; n <= cert.A; ++n) {
                values[n] = derived.table.exprs.at(n).eval(cand.alpha, cand.beta);
                bc.values.push_back(values[n].str());
            }
            bc.kind = classify_base(values, k);
            if (!bc.kind)
                cert.failure_reasons.push_back("candidate (" + cand.alpha.str() + ", " +
                                               cand.beta.str() + ") matches no family on 1..A");
            cert.base.push_back(std::move(bc));
        }
    }

    // (ii) nothing unresolved
    if (!solution.complete())
        cert.failure_reasons.push_back("unresolved factors remain in the base solution");
    if (!derived.missing.empty())
        cert.failure_reasons.push_back("derivation budget exhausted below the target");
    cert.budget_exhausted = !solution.complete() || !derived.missing.empty();

    // (iii) recurrence audit
    try {
        cert.recurrence_audit = audit_recurrences(k);
        if (!cert.recurrence_audit.passed)
            cert.failure_reasons.push_back("recurrence side conditions failed");
    } catch (const AuditFailure& e) {
        cert.failure_reasons.push_back(e.what());
    }

    // (iv) family closure identities per case
    for (const CaseAudit& ca : cert.recurrence_audit.cases) {
        // zero family: 0 = 0 + k*0 - k*0
        FamilyClosureCheck zero{ca.parity_case, FamilyKind::Zero, "0 = 0 + k*0 - k*0", true};
        const BigRat z = BigRat(0) + BigRat(k.k) * BigRat(0) - BigRat(k.k) * BigRat(0);
        zero.holds = z.is_zero();
        cert.family_closure.push_back(zero);

        // linear family: the squared recurrence identity in l
        FamilyClosureCheck lin{ca.parity_case, FamilyKind::Linear,
                               "n(l)^2 = arg1(l)^2 + k*arg2(l)^2 - k*arg3(l)^2", false};
        lin.holds = recurrence_residual(k.k, ca.n_of_l, ca.args_of_l).is_zero();
        cert.family_closure.push_back(lin);

        // reciprocal family: c = c + k*c - k*c with c = 1/(k+1)^2
        const BigRat c = BigRat(1, (k.k + 1) * (k.k + 1));
        FamilyClosureCheck rec{ca.parity_case, FamilyKind::Reciprocal,
                               "c = c + k*c - k*c, c = 1/(k+1)^2", false};
        rec.holds = (c + BigRat(k.k) * c - BigRat(k.k) * c) == c;
        cert.family_closure.push_back(rec);
    }
    for (const FamilyClosureCheck& fc : cert.family_closure)
        if (!fc.holds)
            cert.failure_reasons.push_back("family closure identity failed: " + fc.identity);

    cert.certified = cert.failure_reasons.empty();
    return cert;
}

}  // namespace quadfunc
