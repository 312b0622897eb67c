#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadfunc/poly.hpp"
#include "quadfunc/quadform.hpp"

namespace quadfunc {

struct DerivationBudget {
    long long scan = 2000;  // largest integer mined for collisions
    int degree_cap = 8;     // combined degree bound in (alpha, beta)
};

/// How an entry F(n) was obtained. Definition squares f(n) = F(u) + k F(v);
/// Collision solves the linear identity tying two representations; System
/// marks an unknown pinned by eliminating a set of collision equations.
struct Relation {
    enum class Kind { Seed, Definition, Collision, System };
    Kind kind = Kind::Seed;
    long long n = 0;  // the integer whose relation this is
    Representation rep1{};
    Representation rep2{};                     // Collision/System pivot pair
    std::vector<long long> system_collisions;  // System: contributing collision n's
    std::string describe() const;
};

/// A polynomial required to vanish, produced when two derivations of the
/// same quantity disagree. Stored primitive with positive leading term.
struct Constraint {
    Poly2 poly;
    std::string origin;
    // definition-vs-table clashes keep their defining representation so the
    // solver can locate its elimination anchors
    bool from_definition = false;
    long long n = 0;
    long long u = 0;
    long long v = 0;
};

/// n -> F(n) = f^2(n) as a polynomial in alpha = f^2(1), beta = f^2(2).
struct ExprTable {
    long long k = 0;
    std::map<long long, Poly2> exprs;
    std::map<long long, Relation> provenance;
};

struct DeriveResult {
    ExprTable table;
    std::vector<Constraint> constraints;  // canonically sorted, deduplicated
    std::vector<long long> missing;       // n <= target left unexpressed
    long long window_used = 0;            // collision scan reach
    long long target = 0;
    DerivationBudget budget;
};

/// Deterministic closure: mines collisions, solves the linear layer by
/// single-unknown propagation plus exact Gaussian elimination, widens the
/// scan window (x2 up to budget.scan) while entries below `target` remain
/// unknown, and only then falls back to squaring definitions. A non-empty
/// `missing` means the budget ran out; that is reported, not thrown.
DeriveResult derive_expressions(FormK k, long long target, DerivationBudget budget = {});

struct Violation {
    long long n;
    BigRat alpha, beta;
    BigRat expected, actual;
};

/// Evaluates every stored F(n) at the claimed solution points; a point
/// (alpha0, beta0) claims F(n) = value implied by the matching family.
std::vector<Violation> audit_table(const ExprTable& table,
                                   const std::vector<std::pair<BigRat, BigRat>>& solutions);

}  // namespace quadfunc
