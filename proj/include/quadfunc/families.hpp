#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "quadfunc/bigrat.hpp"
#include "quadfunc/quadform.hpp"

namespace quadfunc {

enum class FamilyKind { Zero, Linear, Reciprocal };

std::string to_string(FamilyKind kind);

/// Sign choice at non-representable arguments. Representable arguments never
/// consult the policy; their sign is forced by the functional equation.
class SignPolicy {
public:
    static SignPolicy all_plus() { return SignPolicy{Mode::AllPlus, 0, {}}; }
    static SignPolicy all_minus() { return SignPolicy{Mode::AllMinus, 0, {}}; }
    static SignPolicy seeded(std::uint64_t seed) { return SignPolicy{Mode::SeededRandom, seed, {}}; }
    static SignPolicy explicit_signs(std::map<long long, int> signs) {
        return SignPolicy{Mode::Explicit, 0, std::move(signs)};
    }

    /// Deterministic in (policy description, n).
    int sign(long long n) const;
    std::string describe() const;

private:
    enum class Mode { AllPlus, AllMinus, SeededRandom, Explicit };
    SignPolicy(Mode m, std::uint64_t s, std::map<long long, int> e)
        : mode_(m), seed_(s), explicit_(std::move(e)) {}
    Mode mode_;
    std::uint64_t seed_;
    std::map<long long, int> explicit_;
};

/// One of the three conjectured solution shapes, with a mutation hook so the
/// verifier can be proven to detect broken functions.
class Family {
public:
    Family(FamilyKind kind, FormK k, SignPolicy policy)
        : kind_(kind), k_(k), policy_(std::move(policy)), cache_(k) {}

    FamilyKind kind() const { return kind_; }
    long long k() const { return k_.k; }
    const SignPolicy& policy() const { return policy_; }

    /// Test hook: force f(n) to a chosen value.
    void override_value(long long n, const BigRat& value) { overrides_[n] = value; }
    const std::map<long long, BigRat>& overrides() const { return overrides_; }

    BigRat value(long long n);

private:
    FamilyKind kind_;
    FormK k_;
    SignPolicy policy_;
    RepresentabilityCache cache_;
    std::map<long long, BigRat> overrides_;
};

struct GridFailure {
    long long u, v, n;
    BigRat lhs, rhs;
};

struct VerificationResult {
    bool pass = true;
    long long k = 0;
    long long umax = 0;
    long long checks = 0;
    std::optional<GridFailure> first_failure;  // lexicographically smallest (u, v)
    double wall_seconds = 0.0;
};

/// Exhaustive exact check of f(u^2 + k v^2) = f^2(u) + k f^2(v) over the
/// full grid u, v in [1, umax].
VerificationResult verify_family(Family& family, long long umax);

/// values_squared must cover exactly 1..A. Returns the family whose squared
/// values match everywhere (0, n^2, or 1/(k+1)^2), none otherwise.
std::optional<FamilyKind> classify_base(const std::map<long long, BigRat>& values_squared,
                                        FormK k);

}  // namespace quadfunc
