#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "quadfunc/derive.hpp"
#include "quadfunc/families.hpp"
#include "quadfunc/induction.hpp"
#include "quadfunc/solve.hpp"

namespace quadfunc {

// Payloads are nlohmann ordered_json built in a fixed key order, so the
// serialized bytes are deterministic for a given run configuration. Wall
// times never go into a payload; the CLI keeps them in a separate meta
// object.
using Json = nlohmann::ordered_json;

constexpr int kReportSchemaVersion = 1;

Json derive_payload(const DeriveResult& result);
Json solve_payload(const SolutionReport& report);

struct VerifyRun {
    FamilyKind family;
    std::string policy;
    VerificationResult result;
};
Json verify_payload(long long k, long long umax, const std::vector<VerifyRun>& runs);

Json certificate_payload(const Certificate& cert, const SolutionReport& solution);

Json collisions_payload(long long k, long long nmax,
                        const std::vector<std::pair<long long, std::vector<Representation>>>& list);

struct CrossKEntry {
    long long n;
    std::vector<std::pair<long long, std::string>> formulas;  // k -> F(n) text
    bool all_equal;
};
Json cross_k_payload(long long kmin, long long kmax, long long upto,
                     const std::vector<CrossKEntry>& entries);

std::string render_markdown(const std::string& command, const Json& payload);

}  // namespace quadfunc
