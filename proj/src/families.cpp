#include "quadfunc/families.hpp"

#include <chrono>
#include <vector>

namespace quadfunc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Zero: return "zero";
        case FamilyKind::Linear: return "linear";
        case FamilyKind::Reciprocal: return "reciprocal";
    }
    return "?";
}

int SignPolicy::sign(long long n) const {
    switch (mode_) {
        case Mode::AllPlus: return +1;
        case Mode::AllMinus: return -1;
        case Mode::SeededRandom:
            return (splitmix64(seed_ ^ static_cast<std::uint64_t>(n)) & 1u) ? -1 : +1;
        case Mode::Explicit: {
            auto it = explicit_.find(n);
            return it == explicit_.end() ? +1 : it->second;
        }
    }
    return +1;
}

std::string SignPolicy::describe() const {
    switch (mode_) {
        case Mode::AllPlus: return "all-plus";
        case Mode::AllMinus: return "all-minus";
        case Mode::SeededRandom: return "seeded(" + std::to_string(seed_) + ")";
        case Mode::Explicit: return "explicit";
    }
    return "?";
}

BigRat Family::value(long long n) {
    if (auto it = overrides_.find(n); it != overrides_.end()) return it->second;
    if (kind_ == FamilyKind::Zero) return BigRat(0);
    const BigRat base = kind_ == FamilyKind::Linear ? BigRat(n) : BigRat(1, k_.k + 1);
    if (cache_.representable(n)) return base;
    return policy_.sign(n) > 0 ? base : -base;
}

VerificationResult verify_family(Family& family, long long umax) {
    const auto start = std::chrono::steady_clock::now();
    VerificationResult result;
    result.k = family.k();
    result.umax = umax;

    const long long k = family.k();
    std::vector<BigRat> squares(static_cast<std::size_t>(umax) + 1);
    for (long long u = 1; u <= umax; ++u) {
        const BigRat f = family.value(u);
        squares[static_cast<std::size_t>(u)] = f * f;
    }
    for (long long u = 1; u <= umax && result.pass; ++u) {
        for (long long v = 1; v <= umax; ++v) {
            const long long n = u * u + k * v * v;
            const BigRat lhs = family.value(n);
            const BigRat rhs =
                squares[static_cast<std::size_t>(u)] + BigRat(k) * squares[static_cast<std::size_t>(v)];
            ++result.checks;
            if (lhs != rhs) {
                result.pass = false;
                result.first_failure = GridFailure{u, v, n, lhs, rhs};
                break;
            }
        }
    }
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::optional<FamilyKind> classify_base(const std::map<long long, BigRat>& values_squared,
                                        FormK k) {
    const BigRat recip = BigRat(1, (k.k + 1) * (k.k + 1));
    bool zero = true, linear = true, reciprocal = true;
    for (const auto& [n, fsq] : values_squared) {
        zero = zero && fsq.is_zero();
        linear = linear && fsq == BigRat(n) * BigRat(n);
        reciprocal = reciprocal && fsq == recip;
    }
    if (zero) return FamilyKind::Zero;
    if (linear) return FamilyKind::Linear;
    if (reciprocal) return FamilyKind::Reciprocal;
    return std::nullopt;
}

}  // namespace quadfunc
