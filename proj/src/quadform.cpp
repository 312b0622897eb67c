#include "quadfunc/quadform.hpp"

#include <algorithm>
#include <cmath>

namespace quadfunc {

namespace {

long long isqrt(long long n) {
    if (n < 0) return -1;
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

std::vector<Representation> representations(FormK k, long long n) {
    std::vector<Representation> out;
    if (n < 1) return out;
    for (long long v = 1; k.k * v * v < n; ++v) {
        const long long rest = n - k.k * v * v;
        const long long u = isqrt(rest);
        if (u >= 1 && u * u == rest) out.push_back({u, v, n});
    }
    std::sort(out.begin(), out.end(),
              [](const Representation& x, const Representation& y) { return x.u < y.u; });
    return out;
}

std::vector<std::pair<long long, std::vector<Representation>>> collisions(FormK k, long long nmax) {
    std::vector<std::pair<long long, std::vector<Representation>>> out;
    if (nmax < 1) return out;
    // bucket by n via a (u, v) sweep, then keep the multi-representation ones
    std::vector<std::uint8_t> count(static_cast<std::size_t>(nmax) + 1, 0);
    for (long long u = 1; u * u + k.k < nmax + 1; ++u)
        for (long long v = 1; u * u + k.k * v * v <= nmax; ++v) {
            auto& c = count[static_cast<std::size_t>(u * u + k.k * v * v)];
            if (c < 2) ++c;
        }
    for (long long n = 1; n <= nmax; ++n)
        if (count[static_cast<std::size_t>(n)] >= 2) out.emplace_back(n, representations(k, n));
    return out;
}

AbcdInstance abcd_instance(const AbcdQuad& q) {
    if (q.a < 1 || q.b < 1 || q.c < 1 || q.d < 1) throw SideConditionError("abcd_instance: entries must be positive");
    if (q.k < 1) throw SideConditionError("abcd_instance: k must be positive");
    const long long p1 = q.a * q.b + q.k * q.c * q.d;
    const long long m1 = q.a * q.b - q.k * q.c * q.d;
    const long long p2 = q.a * q.d + q.b * q.c;
    const long long m2 = q.a * q.d - q.b * q.c;
    if (m1 <= 0)
        throw SideConditionError("abcd_instance: ab - kcd = " + std::to_string(m1) + " <= 0");
    if (m2 <= 0)
        throw SideConditionError("abcd_instance: ad - bc = " + std::to_string(m2) + " <= 0");
    const long long n1 = p1 * p1 + q.k * m2 * m2;
    const long long n2 = m1 * m1 + q.k * p2 * p2;
    if (n1 != n2) throw SideConditionError("abcd_instance: identity sums differ");
    return AbcdInstance{Representation{p1, m2, n1}, Representation{m1, p2, n2}};
}

bool RepresentabilityCache::representable(long long n) {
    if (n < 1) return false;
    if (static_cast<std::size_t>(n) >= table_.size()) grow(n);
    return table_[static_cast<std::size_t>(n)] != 0;
}

void RepresentabilityCache::grow(long long need) {
    long long cap = table_.empty() ? 1024 : static_cast<long long>(table_.size() - 1);
    while (cap < need) cap *= 2;
    table_.assign(static_cast<std::size_t>(cap) + 1, 0);
    for (long long u = 1; u * u + k_ <= cap; ++u)
        for (long long v = 1; u * u + k_ * v * v <= cap; ++v)
            table_[static_cast<std::size_t>(u * u + k_ * v * v)] = 1;
}

}  // namespace quadfunc
