// quadfunc: exact verification toolkit for arithmetic functions satisfying
// f(u^2 + k v^2) = f^2(u) + k f^2(v).

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quadfunc/derive.hpp"
#include "quadfunc/families.hpp"
#include "quadfunc/induction.hpp"
#include "quadfunc/report.hpp"
#include "quadfunc/solve.hpp"

namespace {

using quadfunc::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;  // a mathematical check found a counterexample
constexpr int kExitBudget = 2;       // budget exhausted / unresolved
constexpr int kExitUsage = 64;

struct Options {
    long long k = 2;
    long long target = -1;  // default depends on k
    long long nmax = 300;
    long long umax = 300;
    long long scan = 2000;
    int degree_cap = 8;
    std::string format = "json";
    std::string cache_dir;
    std::uint64_t seed = 1;
    std::vector<std::string> mutations;
    long long kmin = 3, kmax = 5, upto = 10;
};

std::map<long long, quadfunc::BigRat> parse_mutations(const std::vector<std::string>& specs) {
    std::map<long long, quadfunc::BigRat> out;
    for (const std::string& s : specs) {
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw quadfunc::DomainError("--mutate expects n=value, got '" + s + "'");
        out[std::stoll(s.substr(0, eq))] = quadfunc::BigRat::parse(s.substr(eq + 1));
    }
    return out;
}

class Cache {
public:
    Cache(std::string dir, std::string command, long long k)
        : command_(std::move(command)), k_(k) {
        if (dir.empty()) {
            if (const char* env = std::getenv("QUADFUNC_CACHE_DIR")) dir = env;
        }
        dir_ = std::move(dir);
    }

    std::optional<Json> load(const Json& config) const {
        if (dir_.empty()) return std::nullopt;
        std::ifstream in(path());
        if (!in) return std::nullopt;
        Json j = Json::parse(in, nullptr, false);
        if (j.is_discarded()) return std::nullopt;
        // version or config mismatch: silently ignore
        if (!j.contains("schema_version") ||
            j["schema_version"] != quadfunc::kReportSchemaVersion)
            return std::nullopt;
        if (!j.contains("config") || j["config"] != config) return std::nullopt;
        if (!j.contains("payload")) return std::nullopt;
        return j["payload"];
    }

    void store(const Json& config, const Json& payload) const {
        if (dir_.empty()) return;
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) return;
        Json j;
        j["schema_version"] = quadfunc::kReportSchemaVersion;
        j["command"] = command_;
        j["config"] = config;
        j["payload"] = payload;
        std::ofstream out(path());
        out << j.dump(2) << "\n";
    }

private:
    std::string path() const {
        return (std::filesystem::path(dir_) / (command_ + "-k" + std::to_string(k_) + ".json"))
            .string();
    }
    std::string dir_;
    std::string command_;
    long long k_;
};

void emit(const std::string& command, const Options& opt, const Json& payload,
          const Json& meta = Json::object()) {
    if (opt.format == "markdown") {
        std::cout << quadfunc::render_markdown(command, payload);
        return;
    }
    Json out;
    out["schema_version"] = quadfunc::kReportSchemaVersion;
    out["command"] = command;
    out["payload"] = payload;
    if (!meta.empty()) out["meta"] = meta;
    std::cout << out.dump(2) << "\n";
}

int cmd_derive(const Options& opt) {
    const long long target = opt.target > 0 ? opt.target : quadfunc::threshold_A(quadfunc::FormK(opt.k));
    Json config{{"k", opt.k}, {"target", target}, {"scan", opt.scan}, {"degree_cap", opt.degree_cap}};
    Cache cache(opt.cache_dir, "derive", opt.k);
    if (auto hit = cache.load(config)) {
        emit("derive", opt, *hit);
        return hit->at("missing").empty() ? kExitOk : kExitBudget;
    }
    quadfunc::DeriveResult result = quadfunc::derive_expressions(
        quadfunc::FormK(opt.k), target, {opt.scan, opt.degree_cap});
    Json payload = quadfunc::derive_payload(result);
    cache.store(config, payload);
    emit("derive", opt, payload);
    return result.missing.empty() ? kExitOk : kExitBudget;
}

int cmd_solve_base(const Options& opt) {
    Json config{{"k", opt.k}, {"scan", opt.scan}, {"degree_cap", opt.degree_cap}};
    Cache cache(opt.cache_dir, "solve-base", opt.k);
    if (auto hit = cache.load(config)) {
        emit("solve-base", opt, *hit);
        return hit->at("unresolved_factors").empty() ? kExitOk : kExitBudget;
    }
    quadfunc::SolveBudget budget;
    budget.derivation = {opt.scan, opt.degree_cap};
    quadfunc::SolutionReport report = quadfunc::solve_base(quadfunc::FormK(opt.k), budget);
    Json payload = quadfunc::solve_payload(report);
    cache.store(config, payload);
    emit("solve-base", opt, payload);
    return report.complete() ? kExitOk : kExitBudget;
}

int cmd_verify_families(const Options& opt) {
    auto mutations = parse_mutations(opt.mutations);
    Json config{{"k", opt.k}, {"umax", opt.umax}, {"seed", opt.seed}};
    for (const std::string& m : opt.mutations) config["mutations"].push_back(m);

    std::vector<quadfunc::VerifyRun> runs;
    Json meta_walls = Json::array();
    using quadfunc::FamilyKind;
    for (FamilyKind kind : {FamilyKind::Zero, FamilyKind::Linear, FamilyKind::Reciprocal}) {
        for (const quadfunc::SignPolicy& policy :
             {quadfunc::SignPolicy::all_plus(), quadfunc::SignPolicy::all_minus(),
              quadfunc::SignPolicy::seeded(opt.seed)}) {
            quadfunc::Family family(kind, quadfunc::FormK(opt.k), policy);
            for (const auto& [n, value] : mutations) family.override_value(n, value);
            quadfunc::VerificationResult result = quadfunc::verify_family(family, opt.umax);
            meta_walls.push_back(result.wall_seconds);
            runs.push_back({kind, policy.describe(), std::move(result)});
        }
    }
    Json payload = quadfunc::verify_payload(opt.k, opt.umax, runs);
    Cache cache(opt.cache_dir, "verify-families", opt.k);
    cache.store(config, payload);
    Json meta;
    meta["wall_seconds"] = meta_walls;
    emit("verify-families", opt, payload, meta);
    return payload["pass"].get<bool>() ? kExitOk : kExitCheckFailed;
}

int cmd_certify(const Options& opt) {
    Json config{{"k", opt.k}, {"scan", opt.scan}, {"degree_cap", opt.degree_cap}};
    Cache cache(opt.cache_dir, "certify", opt.k);
    if (auto hit = cache.load(config)) {
        emit("certify", opt, *hit);
        if ((*hit)["verdict"] == "certified") return kExitOk;
        return (*hit)["budget_exhausted"].get<bool>() ? kExitBudget : kExitCheckFailed;
    }
    const quadfunc::FormK k(opt.k);
    const long long target = std::max(quadfunc::threshold_A(k) + 2, 4 * opt.k + 4);
    quadfunc::SolveBudget budget;
    budget.derivation = {opt.scan, opt.degree_cap};
    quadfunc::DeriveResult derived = quadfunc::derive_expressions(k, target, budget.derivation);
    quadfunc::SolutionReport solution = quadfunc::solve_base(k, derived, budget);
    quadfunc::Certificate cert = quadfunc::certify(k, solution, derived);
    Json payload = quadfunc::certificate_payload(cert, solution);
    cache.store(config, payload);
    emit("certify", opt, payload);
    if (cert.certified) return kExitOk;
    return cert.budget_exhausted ? kExitBudget : kExitCheckFailed;
}

int cmd_mine_collisions(const Options& opt) {
    Json config{{"k", opt.k}, {"nmax", opt.nmax}};
    Cache cache(opt.cache_dir, "mine-collisions", opt.k);
    if (auto hit = cache.load(config)) {
        emit("mine-collisions", opt, *hit);
        return kExitOk;
    }
    auto list = quadfunc::collisions(quadfunc::FormK(opt.k), opt.nmax);
    Json payload = quadfunc::collisions_payload(opt.k, opt.nmax, list);
    cache.store(config, payload);
    emit("mine-collisions", opt, payload);
    return kExitOk;
}

int cmd_cross_k(const Options& opt) {
    std::map<long long, quadfunc::DeriveResult> tables;
    bool exhausted = false;
    for (long long k = opt.kmin; k <= opt.kmax; ++k) {
        tables.emplace(k, quadfunc::derive_expressions(quadfunc::FormK(k), opt.upto,
                                                       {opt.scan, opt.degree_cap}));
        exhausted = exhausted || !tables.at(k).missing.empty();
    }
    std::vector<quadfunc::CrossKEntry> entries;
    for (long long n = 3; n <= opt.upto; ++n) {
        quadfunc::CrossKEntry entry{n, {}, true};
        std::optional<quadfunc::Poly2> first;
        for (long long k = opt.kmin; k <= opt.kmax; ++k) {
            auto it = tables.at(k).table.exprs.find(n);
            if (it == tables.at(k).table.exprs.end()) {
                entry.formulas.emplace_back(k, "(missing)");
                entry.all_equal = false;
                continue;
            }
            entry.formulas.emplace_back(k, it->second.str());
            if (!first)
                first = it->second;
            else if (*first != it->second)
                entry.all_equal = false;
        }
        entries.push_back(std::move(entry));
    }
    Json payload = quadfunc::cross_k_payload(opt.kmin, opt.kmax, opt.upto, entries);
    emit("cross-k", opt, payload);
    return exhausted ? kExitBudget : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for f(u^2 + k v^2) = f^2(u) + k f^2(v)"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_k = true) {
        if (with_k) cmd->add_option("--k", opt.k, "form parameter k")->check(CLI::PositiveNumber);
        cmd->add_option("--scan", opt.scan, "collision scan budget")->check(CLI::PositiveNumber);
        cmd->add_option("--degree-cap", opt.degree_cap, "combined degree cap")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "markdown"}));
        cmd->add_option("--cache-dir", opt.cache_dir,
                        "cache directory (QUADFUNC_CACHE_DIR overrides the default)");
    };

    CLI::App* derive = app.add_subcommand("derive", "derive F(n) expressions and constraints");
    add_common(derive);
    derive->add_option("--target", opt.target, "largest n to express");

    CLI::App* solve = app.add_subcommand("solve-base", "admissible f(1) values for the base cases");
    add_common(solve);

    CLI::App* verify =
        app.add_subcommand("verify-families", "grid-check the three solution families");
    add_common(verify);
    verify->add_option("--umax", opt.umax, "grid bound")->check(CLI::PositiveNumber);
    verify->add_option("--seed", opt.seed, "seed for the random sign policy");
    verify->add_option("--mutate", opt.mutations,
                       "override f(n)=value before verification (repeatable, test hook)");

    CLI::App* certify = app.add_subcommand("certify", "emit an induction certificate");
    add_common(certify);

    CLI::App* mine = app.add_subcommand("mine-collisions", "list multi-representation integers");
    add_common(mine);
    mine->add_option("--nmax", opt.nmax, "scan bound")->check(CLI::PositiveNumber);

    CLI::App* cross = app.add_subcommand("cross-k", "compare derived formulas across k");
    add_common(cross, false);
    cross->add_option("--kmin", opt.kmin, "first k")->check(CLI::PositiveNumber);
    cross->add_option("--kmax", opt.kmax, "last k")->check(CLI::PositiveNumber);
    cross->add_option("--upto", opt.upto, "compare F(n) for n up to this bound")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (derive->parsed()) return cmd_derive(opt);
        if (solve->parsed()) return cmd_solve_base(opt);
        if (verify->parsed()) return cmd_verify_families(opt);
        if (certify->parsed()) return cmd_certify(opt);
        if (mine->parsed()) return cmd_mine_collisions(opt);
        if (cross->parsed()) return cmd_cross_k(opt);
    } catch (const quadfunc::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    }
    return kExitUsage;
}
