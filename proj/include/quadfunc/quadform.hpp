#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quadfunc/errors.hpp"

namespace quadfunc {

/// The form parameter k in u^2 + k*v^2.
struct FormK {
    long long k;
    explicit FormK(long long value) : k(value) {
        if (value < 1) throw DomainError("FormK: k must be >= 1");
    }
};

/// One way of writing n = u^2 + k*v^2 with u, v >= 1.
struct Representation {
    long long u = 0;
    long long v = 0;
    long long n = 0;
    friend bool operator==(const Representation&, const Representation&) = default;
};

/// Parameters of the four-square identity
/// (ab+kcd)^2 + k(ad-bc)^2 = (ab-kcd)^2 + k(ad+bc)^2.
struct AbcdQuad {
    long long a, b, c, d;
    long long k;
};

struct AbcdInstance {
    Representation lhs;  // (ab+kcd, ad-bc)
    Representation rhs;  // (ab-kcd, ad+bc), same n
};

/// All (u, v) with u, v >= 1 and u^2 + k v^2 = n, sorted by u ascending.
std::vector<Representation> representations(FormK k, long long n);

/// Ascending list of n <= nmax with at least two representations.
std::vector<std::pair<long long, std::vector<Representation>>> collisions(FormK k, long long nmax);

/// Instantiates the identity; both sides are verified equal before returning.
/// Throws SideConditionError when ab - kcd <= 0 or ad - bc <= 0.
AbcdInstance abcd_instance(const AbcdQuad& q);

/// Memoized representability, sieved per k. verify_family queries this on a
/// dense grid, so lookups are O(1) after the first sieve.
class RepresentabilityCache {
public:
    explicit RepresentabilityCache(FormK k) : k_(k.k) {}
    bool representable(long long n);

private:
    void grow(long long need);
    long long k_;
    std::vector<std::uint8_t> table_;  // 1-based, sieved up to table_.size()-1
};

}  // namespace quadfunc
