#include "quadfunc/report.hpp"

#include <sstream>

namespace quadfunc {

namespace {

Json candidate_json(const Candidate& c) {
    Json j;
    j["alpha"] = c.alpha.str();
    j["beta"] = c.beta.str();
    return j;
}

Json witness_json(const Witness& w) {
    Json j;
    j["constraint"] = w.constraint.str();
    j["origin"] = w.origin;
    j["value"] = w.value.str();
    return j;
}

Json rejected_json(const RejectedCandidate& r) {
    Json j = candidate_json(r.candidate);
    j["witness"] = witness_json(r.witness);
    return j;
}

}  // namespace

Json derive_payload(const DeriveResult& result) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["k"] = result.table.k;
    j["target"] = result.target;
    j["scan"] = result.budget.scan;
    j["degree_cap"] = result.budget.degree_cap;
    j["window_used"] = result.window_used;
    j["expressions"] = Json::array();
    for (const auto& [n, expr] : result.table.exprs) {
        if (n < 3 || n > result.target) continue;  // seeds and overshoot stay internal
        Json e;
        e["n"] = n;
        e["poly"] = expr.str();
        auto prov = result.table.provenance.find(n);
        e["provenance"] = prov == result.table.provenance.end() ? "?" : prov->second.describe();
        j["expressions"].push_back(std::move(e));
    }
    j["constraints"] = Json::array();
    for (const Constraint& c : result.constraints) {
        Json e;
        e["poly"] = c.poly.str();
        e["origin"] = c.origin;
        j["constraints"].push_back(std::move(e));
    }
    j["missing"] = result.missing;
    return j;
}

Json solve_payload(const SolutionReport& report) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["k"] = report.k;
    Json beta;
    beta["num"] = report.beta_solution.num.str();
    beta["den"] = report.beta_solution.den.str();
    beta["excluded_alphas"] = Json::array();
    for (const BigRat& a : report.beta_solution.excluded_alphas)
        beta["excluded_alphas"].push_back(a.str());
    beta["source"] = report.beta_source_origin;
    j["beta"] = std::move(beta);
    Json ap;
    ap["poly"] = report.alpha_polynomial.str();
    ap["source"] = report.alpha_source_origin;
    j["alpha_polynomial"] = std::move(ap);
    j["admissible"] = Json::array();
    for (std::size_t i = 0; i < report.admissible.size(); ++i) {
        Json c = candidate_json(report.admissible[i]);
        c["f1"] = report.f1_values[i];
        j["admissible"].push_back(std::move(c));
    }
    j["rejected"] = Json::array();
    for (const RejectedCandidate& r : report.rejected) j["rejected"].push_back(rejected_json(r));
    j["excluded_branches"] = Json::array();
    for (const ExcludedBranch& b : report.excluded_branches) {
        Json e;
        e["alpha"] = b.alpha.str();
        e["no_consistent_beta"] = b.no_consistent_beta;
        e["admitted"] = Json::array();
        for (const Candidate& c : b.admitted) e["admitted"].push_back(candidate_json(c));
        e["refuted"] = Json::array();
        for (const RejectedCandidate& r : b.refuted) e["refuted"].push_back(rejected_json(r));
        j["excluded_branches"].push_back(std::move(e));
    }
    j["unresolved_factors"] = Json::array();
    for (const Poly1& p : report.unresolved_factors) j["unresolved_factors"].push_back(p.str());
    return j;
}

Json verify_payload(long long k, long long umax, const std::vector<VerifyRun>& runs) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["k"] = k;
    j["umax"] = umax;
    bool all = true;
    j["runs"] = Json::array();
    for (const VerifyRun& run : runs) {
        Json r;
        r["family"] = to_string(run.family);
        r["policy"] = run.policy;
        r["pass"] = run.result.pass;
        r["checks"] = run.result.checks;
        if (run.result.first_failure) {
            const GridFailure& f = *run.result.first_failure;
            Json fj;
            fj["u"] = f.u;
            fj["v"] = f.v;
            fj["n"] = f.n;
            fj["lhs"] = f.lhs.str();
            fj["rhs"] = f.rhs.str();
            r["first_failure"] = std::move(fj);
        } else {
            r["first_failure"] = nullptr;
        }
        all = all && run.result.pass;
        j["runs"].push_back(std::move(r));
    }
    j["pass"] = all;
    return j;
}

Json certificate_payload(const Certificate& cert, const SolutionReport& solution) {
    Json j;
    j["schema_version"] = Certificate::schema_version;
    j["k"] = cert.k;
    j["A"] = cert.A;
    j["verdict"] = cert.certified ? "certified" : "failed";
    j["budget_exhausted"] = cert.budget_exhausted;
    j["base"] = Json::array();
    for (const BaseClassification& bc : cert.base) {
        Json e = candidate_json(bc.candidate);
        e["family"] = bc.kind ? to_string(*bc.kind) : "none";
        e["values"] = bc.values;
        j["base"].push_back(std::move(e));
    }
    j["recurrences"] = Json::array();
    for (const CaseAudit& ca : cert.recurrence_audit.cases) {
        Json e;
        e["case"] = to_string(ca.parity_case);
        e["n"] = ca.n_of_l.str("l");
        e["args"] = Json::array();
        for (const Poly1& a : ca.args_of_l) e["args"].push_back(a.str("l"));
        e["residual"] = ca.residual.str("l");
        e["residual_zero"] = ca.residual_zero;
        e["l_min"] = ca.l_min;
        e["side_conditions_ok"] = ca.side_conditions_ok;
        e["side_conditions"] = ca.notes;
        e["spot_check_ok"] = ca.spot_check_ok;
        j["recurrences"].push_back(std::move(e));
    }
    j["family_closure"] = Json::array();
    for (const FamilyClosureCheck& fc : cert.family_closure) {
        Json e;
        e["case"] = to_string(fc.parity_case);
        e["family"] = to_string(fc.family);
        e["identity"] = fc.identity;
        e["holds"] = fc.holds;
        j["family_closure"].push_back(std::move(e));
    }
    j["failure_reasons"] = cert.failure_reasons;
    j["notes"] = cert.notes;
    j["solve"] = solve_payload(solution);
    return j;
}

Json collisions_payload(long long k, long long nmax,
                        const std::vector<std::pair<long long, std::vector<Representation>>>& list) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["k"] = k;
    j["nmax"] = nmax;
    j["collisions"] = Json::array();
    for (const auto& [n, reps] : list) {
        Json e;
        e["n"] = n;
        e["representations"] = Json::array();
        for (const Representation& r : reps) e["representations"].push_back({r.u, r.v});
        j["collisions"].push_back(std::move(e));
    }
    j["count"] = list.size();
    return j;
}

Json cross_k_payload(long long kmin, long long kmax, long long upto,
                     const std::vector<CrossKEntry>& entries) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kmin"] = kmin;
    j["kmax"] = kmax;
    j["upto"] = upto;
    j["entries"] = Json::array();
    long long shared = 0;
    for (const CrossKEntry& e : entries) {
        Json ej;
        ej["n"] = e.n;
        Json fs;
        for (const auto& [k, text] : e.formulas) fs[std::to_string(k)] = text;
        ej["formulas"] = std::move(fs);
        ej["all_equal"] = e.all_equal;
        if (e.all_equal) ++shared;
        j["entries"].push_back(std::move(ej));
    }
    j["shared_count"] = shared;
    return j;
}

namespace {

std::string md_derive(const Json& p) {
    std::ostringstream md;
    md << "# Derived expressions, k = " << p["k"] << "\n\n";
    md << "Scan window used: " << p["window_used"] << " (budget " << p["scan"] << ")\n\n";
    md << "| n | F(n) | provenance |\n|---|------|------------|\n";
    for (const auto& e : p["expressions"])
        md << "| " << e["n"] << " | `" << e["poly"].get<std::string>() << "` | "
           << e["provenance"].get<std::string>() << " |\n";
    md << "\n## Constraints\n\n";
    for (const auto& c : p["constraints"])
        md << "- `" << c["poly"].get<std::string>() << " = 0`  (" << c["origin"].get<std::string>()
           << ")\n";
    if (!p["missing"].empty()) {
        md << "\n## Missing below target\n\n"
           << p["missing"].size() << " value(s): ";
        int shown = 0;
        for (const auto& n : p["missing"]) {
            if (shown++ == 20) {
                md << "...";
                break;
            }
            md << n << " ";
        }
        md << "\n";
    }
    return md.str();
}

std::string md_solve(const Json& p) {
    std::ostringstream md;
    md << "# Base solution, k = " << p["k"] << "\n\n";
    md << "beta = (" << p["beta"]["num"].get<std::string>() << ") / ("
       << p["beta"]["den"].get<std::string>() << ")\n\n";
    md << "- source: " << p["beta"]["source"].get<std::string>() << "\n";
    md << "- excluded alphas: ";
    if (p["beta"]["excluded_alphas"].empty()) md << "none";
    for (const auto& a : p["beta"]["excluded_alphas"]) md << a.get<std::string>() << " ";
    md << "\n\nEliminated alpha polynomial (`" << p["alpha_polynomial"]["source"].get<std::string>()
       << "`):\n\n    " << p["alpha_polynomial"]["poly"].get<std::string>() << " = 0\n";
    md << "\n## Admissible\n\n| alpha | beta | f(1) |\n|-------|------|------|\n";
    for (const auto& c : p["admissible"])
        md << "| " << c["alpha"].get<std::string>() << " | " << c["beta"].get<std::string>()
           << " | " << c["f1"].get<std::string>() << " |\n";
    md << "\n## Rejected\n\n";
    for (const auto& r : p["rejected"])
        md << "- (" << r["alpha"].get<std::string>() << ", " << r["beta"].get<std::string>()
           << "): witness `" << r["witness"]["constraint"].get<std::string>() << "` = "
           << r["witness"]["value"].get<std::string>() << " != 0  ["
           << r["witness"]["origin"].get<std::string>() << "]\n";
    if (p["rejected"].empty()) md << "none\n";
    for (const auto& b : p["excluded_branches"]) {
        md << "\n## Excluded branch alpha = " << b["alpha"].get<std::string>() << "\n\n";
        if (b["no_consistent_beta"].get<bool>()) md << "no consistent beta\n";
        for (const auto& r : b["refuted"])
            md << "- refuted (" << r["alpha"].get<std::string>() << ", "
               << r["beta"].get<std::string>() << ") by `"
               << r["witness"]["constraint"].get<std::string>() << "`\n";
        for (const auto& c : b["admitted"])
            md << "- admitted (" << c["alpha"].get<std::string>() << ", "
               << c["beta"].get<std::string>() << ")\n";
    }
    if (!p["unresolved_factors"].empty()) {
        md << "\n## Unresolved factors\n\n";
        for (const auto& f : p["unresolved_factors"]) md << "- `" << f.get<std::string>() << "`\n";
    }
    return md.str();
}

std::string md_verify(const Json& p) {
    std::ostringstream md;
    md << "# Family verification, k = " << p["k"] << ", umax = " << p["umax"] << "\n\n";
    md << "| family | policy | checks | result |\n|--------|--------|--------|--------|\n";
    for (const auto& r : p["runs"]) {
        md << "| " << r["family"].get<std::string>() << " | " << r["policy"].get<std::string>()
           << " | " << r["checks"] << " | " << (r["pass"].get<bool>() ? "pass" : "FAIL");
        if (!r["first_failure"].is_null())
            md << " at (u,v)=(" << r["first_failure"]["u"] << "," << r["first_failure"]["v"]
               << ")";
        md << " |\n";
    }
    md << "\nOverall: " << (p["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    return md.str();
}

std::string md_certificate(const Json& p) {
    std::ostringstream md;
    md << "# Certificate, k = " << p["k"] << " (A = " << p["A"] << ")\n\n";
    md << "Verdict: **" << p["verdict"].get<std::string>() << "**\n\n";
    md << "## Base classification\n\n| alpha | beta | family |\n|-------|------|--------|\n";
    for (const auto& b : p["base"])
        md << "| " << b["alpha"].get<std::string>() << " | " << b["beta"].get<std::string>()
           << " | " << b["family"].get<std::string>() << " |\n";
    md << "\n## Recurrence audit\n\n";
    for (const auto& r : p["recurrences"]) {
        md << "- " << r["case"].get<std::string>() << ": n = " << r["n"].get<std::string>()
           << ", args ";
        for (const auto& a : r["args"]) md << "`" << a.get<std::string>() << "` ";
        md << ", residual = " << r["residual"].get<std::string>()
           << ", l >= " << r["l_min"] << ", side conditions "
           << (r["side_conditions_ok"].get<bool>() ? "ok" : "FAILED") << ", spot check "
           << (r["spot_check_ok"].get<bool>() ? "ok" : "FAILED") << "\n";
    }
    md << "\n## Family closure\n\n";
    for (const auto& f : p["family_closure"])
        md << "- " << f["case"].get<std::string>() << " / " << f["family"].get<std::string>()
           << ": " << (f["holds"].get<bool>() ? "holds" : "FAILED") << "\n";
    if (!p["failure_reasons"].empty()) {
        md << "\n## Failure reasons\n\n";
        for (const auto& r : p["failure_reasons"]) md << "- " << r.get<std::string>() << "\n";
    }
    return md.str();
}

std::string md_collisions(const Json& p) {
    std::ostringstream md;
    md << "# Collisions, k = " << p["k"] << ", n <= " << p["nmax"] << "\n\n";
    md << "| n | representations |\n|---|----------------|\n";
    for (const auto& e : p["collisions"]) {
        md << "| " << e["n"] << " | ";
        for (const auto& r : e["representations"]) md << "(" << r[0] << "," << r[1] << ") ";
        md << "|\n";
    }
    md << "\nTotal: " << p["count"] << "\n";
    return md.str();
}

std::string md_cross_k(const Json& p) {
    std::ostringstream md;
    md << "# Cross-k formula agreement, k in [" << p["kmin"] << ", " << p["kmax"] << "]\n\n";
    md << "| n | agreement | formulas |\n|---|-----------|----------|\n";
    for (const auto& e : p["entries"]) {
        md << "| " << e["n"] << " | " << (e["all_equal"].get<bool>() ? "shared" : "differs")
           << " | ";
        if (e["all_equal"].get<bool>()) {
            md << "`" << e["formulas"].begin()->get<std::string>() << "`";
        } else {
            for (auto it = e["formulas"].begin(); it != e["formulas"].end(); ++it)
                md << "k=" << it.key() << ": `" << it->get<std::string>() << "` ";
        }
        md << " |\n";
    }
    md << "\nShared formulas: " << p["shared_count"] << " of " << p["entries"].size() << "\n";
    return md.str();
}

}  // namespace

std::string render_markdown(const std::string& command, const Json& payload) {
    if (command == "derive") return md_derive(payload);
    if (command == "solve-base") return md_solve(payload);
    if (command == "verify-families") return md_verify(payload);
    if (command == "certify") return md_certificate(payload);
    if (command == "mine-collisions") return md_collisions(payload);
    if (command == "cross-k") return md_cross_k(payload);
    return payload.dump(2) + "\n";
}

}  // namespace quadfunc
