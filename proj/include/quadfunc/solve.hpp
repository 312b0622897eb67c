#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadfunc/derive.hpp"
#include "quadfunc/poly.hpp"
#include "quadfunc/quadform.hpp"

namespace quadfunc {

/// A candidate pair (alpha, beta) = (f(1)^2, f(2)^2). Negative entries are
/// legal; they encode purely imaginary f(1) or f(2).
struct Candidate {
    BigRat alpha;
    BigRat beta;
    friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct Witness {
    Poly2 constraint;
    std::string origin;
    BigRat value;  // nonzero evaluation at the refuted candidate
};

struct RejectedCandidate {
    Candidate candidate;
    Witness witness;
};

/// Bookkeeping for a denominator root of the beta elimination: the branch is
/// re-entered with alpha fixed, and every rational beta root found there is
/// either admitted or refuted.
struct ExcludedBranch {
    BigRat alpha;
    std::vector<Candidate> admitted;
    std::vector<RejectedCandidate> refuted;
    bool no_consistent_beta = false;
};

struct SolveBudget {
    DerivationBudget derivation{};
    long long rejection_scan = 2000;  // extra integers mined hunting witnesses
    long long rejection_block = 200;
};

struct SolutionReport {
    long long k = 0;
    std::vector<Candidate> admissible;
    std::vector<std::string> f1_values;  // "0", "+-1", "+-1/3", "+-sqrt(p/q)", ...
    std::vector<RejectedCandidate> rejected;
    std::vector<Poly1> unresolved_factors;  // residuals with no rational roots
    std::vector<BigRat> excluded_alphas_checked;
    std::vector<ExcludedBranch> excluded_branches;

    // the elimination trace, for reports and the paper-shape checks
    BetaSolution beta_solution;
    std::string beta_source_origin;
    Poly1 alpha_polynomial;  // primitive numerator handed to rational_roots
    std::string alpha_source_origin;

    bool complete() const { return unresolved_factors.empty(); }
};

/// Base-case pipeline: derive constraints, eliminate beta, extract rational
/// alpha roots, back-substitute, branch on excluded alphas, then filter every
/// candidate against the whole constraint set. Throws InsufficientConstraints
/// when fewer than two independent constraints exist.
SolutionReport solve_base(FormK k, const SolveBudget& budget = {});

/// Same pipeline on an already derived closure (shared by certify/cache).
SolutionReport solve_base(FormK k, const DeriveResult& derived, const SolveBudget& budget = {});

/// Searches the derived constraint set, then freshly mined collisions, for a
/// constraint that does not vanish at the candidate. Absence of a witness is
/// a legitimate outcome.
std::optional<Witness> reject_candidate(const Candidate& c, FormK k, const DeriveResult& derived,
                                        const SolveBudget& budget = {});

/// "0" for alpha = 0, "+-p/q" when alpha is a perfect rational square,
/// otherwise a symbolic "+-sqrt(p/q)" (with i* for negative alpha).
std::string f1_descriptor(const BigRat& alpha);

}  // namespace quadfunc
