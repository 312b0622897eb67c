#include "quadfunc/solve.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "quadfunc/induction.hpp"

namespace quadfunc {

namespace {

// The published base-case analyses pick specific definition constraints per
// k; the generic sorted-pool fallback reproduces the same admissible sets but
// lands on different spurious branches. Anchors are the defining
// representations (u, v) of definition-vs-table constraints.
struct EliminationPlan {
    // beta-linear source: either one anchor or a pair to combine
    std::vector<std::pair<long long, long long>> source;
    std::pair<long long, long long> target;
};

std::optional<EliminationPlan> reference_plan(long long k) {
    switch (k) {
        case 2: return EliminationPlan{{{2, 1}, {1, 2}}, {2, 1}};
        case 3: return EliminationPlan{{{1, 1}}, {2, 2}};
        case 4: return EliminationPlan{{{1, 1}}, {2, 2}};
        case 5: return EliminationPlan{{{1, 1}}, {2, 1}};
        default: return std::nullopt;
    }
}

const Constraint* find_definition_constraint(const std::vector<Constraint>& pool, long long u,
                                             long long v) {
    for (const Constraint& c : pool)
        if (c.from_definition && c.u == u && c.v == v) return &c;
    return nullptr;
}

// Cross-multiplied leading-coefficient elimination of the top beta power.
// Returns the first nonzero degree-1-in-beta combination, if any.
std::optional<Poly2> eliminate_to_beta_linear(Poly2 p, Poly2 q) {
    while (true) {
        if (p.degree_beta() < q.degree_beta()) std::swap(p, q);
        if (q.degree_beta() == 0) return std::nullopt;
        const int dp = p.degree_beta(), dq = q.degree_beta();
        Poly2 lead_p = Poly2::from_poly1(p.beta_coefficient(dp));
        Poly2 lead_q = Poly2::from_poly1(q.beta_coefficient(dq));
        Poly2 shift = Poly2::monomial(0, dp - dq, BigRat(1));
        Poly2 r = lead_q * p - lead_p * shift * q;
        if (r.is_zero()) return std::nullopt;
        r = r.primitive();
        if (r.degree_beta() == 1) return r;
        p = std::move(q);
        q = std::move(r);
    }
}

struct Elimination {
    BetaSolution beta;
    std::string beta_origin;
    Poly1 alpha_poly;
    std::string alpha_origin;
};

std::optional<Elimination> eliminate(long long k, const std::vector<Constraint>& pool) {
    Elimination out;

    // beta-linear source
    std::optional<Poly2> linear;
    if (auto plan = reference_plan(k)) {
        if (plan->source.size() == 1) {
            if (const Constraint* c =
                    find_definition_constraint(pool, plan->source[0].first, plan->source[0].second);
                c && c->poly.degree_beta() == 1) {
                linear = c->poly;
                out.beta_origin = c->origin;
            }
        } else if (plan->source.size() == 2) {
            const Constraint* c1 =
                find_definition_constraint(pool, plan->source[0].first, plan->source[0].second);
            const Constraint* c2 =
                find_definition_constraint(pool, plan->source[1].first, plan->source[1].second);
            if (c1 && c2) {
                linear = eliminate_to_beta_linear(c1->poly, c2->poly);
                if (linear) out.beta_origin = "combined: " + c1->origin + " & " + c2->origin;
            }
        }
        if (linear) {
            const Constraint* t =
                find_definition_constraint(pool, plan->target.first, plan->target.second);
            if (t) {
                out.beta = solve_linear_in_beta(*linear);
                Poly1 num = substitute_beta(t->poly, out.beta);
                if (!num.is_zero()) {
                    out.alpha_poly = num;
                    out.alpha_origin = t->origin;
                    return out;
                }
            }
            linear.reset();  // plan target unusable, fall through to generic
        }
    }

    // generic: first beta-linear constraint, else combine sorted pairs
    for (const Constraint& c : pool)
        if (c.poly.degree_beta() == 1) {
            linear = c.poly;
            out.beta_origin = c.origin;
            break;
        }
    if (!linear) {
        for (std::size_t i = 0; i < pool.size() && !linear; ++i) {
            if (pool[i].poly.degree_beta() < 1) continue;
            for (std::size_t j = i + 1; j < pool.size() && !linear; ++j) {
                if (pool[j].poly.degree_beta() < 1) continue;
                if (auto r = eliminate_to_beta_linear(pool[i].poly, pool[j].poly)) {
                    linear = *r;
                    out.beta_origin = "combined: " + pool[i].origin + " & " + pool[j].origin;
                }
            }
        }
    }
    if (!linear) return std::nullopt;
    out.beta = solve_linear_in_beta(*linear);

    for (const Constraint& c : pool) {
        Poly1 num = substitute_beta(c.poly, out.beta);
        if (num.is_zero()) continue;
        out.alpha_poly = num;
        out.alpha_origin = c.origin;
        return out;
    }
    return std::nullopt;
}

std::optional<Witness> table_witness(const Candidate& cand, const std::vector<Constraint>& pool) {
    for (const Constraint& c : pool) {
        const BigRat value = c.poly.eval(cand.alpha, cand.beta);
        if (!value.is_zero()) return Witness{c.poly, c.origin, value};
    }
    return std::nullopt;
}

}  // namespace

std::string f1_descriptor(const BigRat& alpha) {
    if (alpha.is_zero()) return "0";
    BigRat root;
    if (alpha > BigRat(0) && alpha.square_root(root)) return "+-" + root.str();
    if (alpha.is_negative()) return "+-i*sqrt(" + (-alpha).str() + ")";
    return "+-sqrt(" + alpha.str() + ")";
}

std::optional<Witness> reject_candidate(const Candidate& c, FormK k, const DeriveResult& derived,
                                        const SolveBudget& budget) {
    // constraints already derived (definition-squaring ones included)
    if (auto w = table_witness(c, derived.constraints)) return w;

    // fresh collision mining beyond the derive window, in blocks
    const auto& exprs = derived.table.exprs;
    auto eval_f = [&](long long m) -> std::optional<BigRat> {
        auto it = exprs.find(m);
        if (it == exprs.end()) return std::nullopt;
        return it->second.eval(c.alpha, c.beta);
    };
    long long from = derived.window_used + 1;
    const long long limit = derived.window_used + budget.rejection_scan;
    while (from <= limit) {
        const long long to = std::min(limit, from + budget.rejection_block - 1);
        for (const auto& [n, reps] : collisions(k, to)) {
            if (n < from) continue;
            for (std::size_t i = 0; i < reps.size(); ++i)
                for (std::size_t j = i + 1; j < reps.size(); ++j) {
                    auto a1 = eval_f(reps[i].u), a2 = eval_f(reps[i].v);
                    auto b1 = eval_f(reps[j].u), b2 = eval_f(reps[j].v);
                    if (!a1 || !a2 || !b1 || !b2) continue;
                    const BigRat lhs = *a1 + BigRat(k.k) * *a2;
                    const BigRat rhs = *b1 + BigRat(k.k) * *b2;
                    if (lhs != rhs) {
                        std::ostringstream origin;
                        origin << "fresh collision " << n << " (" << reps[i].u << "," << reps[i].v
                               << ")=(" << reps[j].u << "," << reps[j].v << ")";
                        // the witness polynomial is the linear identity itself
                        Poly2 w = exprs.at(reps[i].u) + exprs.at(reps[i].v).scaled(BigRat(k.k)) -
                                  exprs.at(reps[j].u) - exprs.at(reps[j].v).scaled(BigRat(k.k));
                        return Witness{w.primitive(), origin.str(), lhs - rhs};
                    }
                }
        }
        from = to + 1;
    }
    return std::nullopt;
}

SolutionReport solve_base(FormK k, const DeriveResult& derived, const SolveBudget& budget) {
    SolutionReport report;
    report.k = k.k;

    if (derived.constraints.size() < 2)
        throw InsufficientConstraints("solve_base: need at least two independent constraints, have " +
                                      std::to_string(derived.constraints.size()));

    auto elim = eliminate(k.k, derived.constraints);
    if (!elim) throw InsufficientConstraints("solve_base: no beta elimination path found");

    report.beta_solution = elim->beta;
    report.beta_source_origin = elim->beta_origin;
    report.alpha_polynomial = elim->alpha_poly;
    report.alpha_source_origin = elim->alpha_origin;

    RootReport roots = rational_roots(elim->alpha_poly);
    if (!roots.residual.is_constant()) report.unresolved_factors.push_back(roots.residual);

    std::vector<Candidate> candidates;
    for (const auto& [alpha0, mult] : roots.roots) {
        const BigRat dv = elim->beta.den.eval(alpha0);
        if (dv.is_zero()) continue;  // handled by the excluded branch below
        candidates.push_back({alpha0, elim->beta.num.eval(alpha0) / dv});
    }

    for (const Candidate& cand : candidates) {
        if (auto w = reject_candidate(cand, k, derived, budget)) {
            report.rejected.push_back({cand, *w});
        } else {
            report.admissible.push_back(cand);
            report.f1_values.push_back(f1_descriptor(cand.alpha));
        }
    }

    // denominator roots re-enter with alpha fixed and beta symbolic
    for (const BigRat& alpha0 : elim->beta.excluded_alphas) {
        report.excluded_alphas_checked.push_back(alpha0);
        ExcludedBranch branch;
        branch.alpha = alpha0;

        std::optional<Poly1> beta_poly;  // first constraint surviving in beta
        bool contradiction = false;
        for (const Constraint& c : derived.constraints) {
            Poly1 in_beta;  // constraint restricted to alpha = alpha0, variable beta
            for (int j = 0; j <= c.poly.degree_beta(); ++j)
                in_beta.set(j, c.poly.beta_coefficient(j).eval(alpha0));
            if (in_beta.is_zero()) continue;
            if (in_beta.is_constant()) {
                contradiction = true;  // nonzero constant: no beta works
                break;
            }
            beta_poly = in_beta;
            break;
        }
        if (contradiction || !beta_poly) {
            branch.no_consistent_beta = true;
            report.excluded_branches.push_back(std::move(branch));
            continue;
        }
        RootReport beta_roots = rational_roots(*beta_poly);
        if (!beta_roots.residual.is_constant())
            report.unresolved_factors.push_back(beta_roots.residual);
        bool any = false;
        for (const auto& [beta0, mult] : beta_roots.roots) {
            any = true;
            Candidate cand{alpha0, beta0};
            if (auto w = reject_candidate(cand, k, derived, budget)) {
                branch.refuted.push_back({cand, *w});
            } else {
                branch.admitted.push_back(cand);
                report.admissible.push_back(cand);
                report.f1_values.push_back(f1_descriptor(cand.alpha));
            }
        }
        branch.no_consistent_beta = !any;
        report.excluded_branches.push_back(std::move(branch));
    }

    return report;
}

SolutionReport solve_base(FormK k, const SolveBudget& budget) {
    const long long target = std::max(threshold_A(k) + 2, 4 * k.k + 4);
    DeriveResult derived = derive_expressions(k, target, budget.derivation);
    return solve_base(k, derived, budget);
}

}  // namespace quadfunc
