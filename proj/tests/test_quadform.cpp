#include <doctest.h>

#include <random>
#include <set>

#include "quadfunc/quadform.hpp"

using namespace quadfunc;

namespace {

// deliberately naive double loop, the oracle for enumeration completeness
std::vector<std::pair<long long, long long>> brute_reps(long long k, long long n) {
    std::vector<std::pair<long long, long long>> out;
    for (long long u = 1; u * u < n; ++u)
        for (long long v = 1; u * u + k * v * v <= n; ++v)
            if (u * u + k * v * v == n) out.emplace_back(u, v);
    return out;
}

}  // namespace

TEST_CASE("representations match the worked examples") {
    auto r27 = representations(FormK(2), 27);
    REQUIRE(r27.size() == 2);
    CHECK(r27[0].u == 3);
    CHECK(r27[0].v == 3);
    CHECK(r27[1].u == 5);
    CHECK(r27[1].v == 1);

    CHECK(representations(FormK(2), 5).empty());

    auto r28 = representations(FormK(3), 28);
    REQUIRE(r28.size() == 3);
    CHECK(r28[0].u == 1);
    CHECK(r28[0].v == 3);
    CHECK(r28[1].u == 4);
    CHECK(r28[1].v == 2);
    CHECK(r28[2].u == 5);
    CHECK(r28[2].v == 1);
}

TEST_CASE("representations agree with the brute-force loop") {
    for (long long k = 1; k <= 6; ++k)
        for (long long n = 1; n <= 2000; ++n) {
            auto fast = representations(FormK(k), n);
            auto slow = brute_reps(k, n);
            REQUIRE(fast.size() == slow.size());
            for (std::size_t i = 0; i < fast.size(); ++i) {
                CHECK(fast[i].u == slow[i].first);
                CHECK(fast[i].v == slow[i].second);
                CHECK(fast[i].u * fast[i].u + k * fast[i].v * fast[i].v == n);
            }
        }
}

TEST_CASE("collision lists contain the known small cases") {
    auto c2 = collisions(FormK(2), 60);
    std::set<long long> ns;
    for (const auto& [n, reps] : c2) ns.insert(n);
    CHECK(ns.count(27));
    CHECK(ns.count(33));
    CHECK(ns.count(54));

    CHECK(collisions(FormK(2), 10).empty());

    std::set<long long> k5;
    for (const auto& [n, reps] : collisions(FormK(5), 130)) k5.insert(n);
    for (long long expected : {21, 54, 69, 81, 84, 126, 129}) CHECK(k5.count(expected));

    std::set<long long> k3;
    for (const auto& [n, reps] : collisions(FormK(3), 310)) k3.insert(n);
    for (long long expected : {112, 208, 304}) CHECK(k3.count(expected));

    std::set<long long> k4;
    for (const auto& [n, reps] : collisions(FormK(4), 300)) k4.insert(n);
    for (long long expected : {100, 104, 125, 200, 265}) CHECK(k4.count(expected));
}

TEST_CASE("collision multiplicities match a recount") {
    for (long long k : {2, 3, 7}) {
        for (const auto& [n, reps] : collisions(FormK(k), 500)) {
            CHECK(reps.size() >= 2);
            CHECK(reps.size() == representations(FormK(k), n).size());
        }
    }
}

TEST_CASE("abcd_instance on the worked example") {
    AbcdInstance inst = abcd_instance({3, 2, 1, 1, 2});
    CHECK(inst.lhs.u == 8);
    CHECK(inst.lhs.v == 1);
    CHECK(inst.rhs.u == 4);
    CHECK(inst.rhs.v == 5);
    CHECK(inst.lhs.n == 66);
    CHECK(inst.rhs.n == 66);
}

TEST_CASE("abcd_instance matches the odd-k recurrence template") {
    // a = l - (k-1)/2, b = 2, c = d = 1 with k = 3, l = 5
    AbcdInstance inst = abcd_instance({4, 2, 1, 1, 3});
    CHECK(inst.lhs.u == 11);  // n = 2l + 1
    CHECK(inst.lhs.v == 2);   // a - 2
    CHECK(inst.rhs.u == 5);   // 2l - 2k + 1
    CHECK(inst.rhs.v == 6);   // a + 2
    CHECK(inst.lhs.n == 133);
}

TEST_CASE("abcd_instance rejects violated side conditions") {
    CHECK_THROWS_AS(abcd_instance({1, 1, 1, 1, 2}), SideConditionError);  // ab - kcd = -1
    CHECK_THROWS_AS(abcd_instance({2, 1, 1, 2, 3}), SideConditionError);  // ad - bc <= 0
}

TEST_CASE("identity holds on random side-condition-satisfying quads") {
    std::mt19937_64 rng(97531);
    std::uniform_int_distribution<long long> entry(1, 50);
    std::uniform_int_distribution<long long> kk(1, 9);
    int accepted = 0;
    while (accepted < 2000) {
        AbcdQuad q{entry(rng), entry(rng), entry(rng), entry(rng), kk(rng)};
        if (q.a * q.b - q.k * q.c * q.d <= 0 || q.a * q.d - q.b * q.c <= 0) continue;
        ++accepted;
        AbcdInstance inst = abcd_instance(q);
        CHECK(inst.lhs.n == inst.rhs.n);
        CHECK(inst.lhs.u * inst.lhs.u + q.k * inst.lhs.v * inst.lhs.v == inst.lhs.n);
        CHECK(inst.rhs.u * inst.rhs.u + q.k * inst.rhs.v * inst.rhs.v == inst.rhs.n);
    }
}

TEST_CASE("representability cache agrees with enumeration") {
    RepresentabilityCache cache(FormK(3));
    for (long long n = 1; n <= 3000; ++n)
        CHECK(cache.representable(n) == !representations(FormK(3), n).empty());
}

TEST_CASE("FormK validates") { CHECK_THROWS_AS(FormK(0), DomainError); }
