#include "intfactor.hpp"

#include <algorithm>
#include <cstdint>

namespace quadfunc::detail {

namespace {

BigInt mulmod(const BigInt& a, const BigInt& b, const BigInt& m) { return a * b % m; }

BigInt powmod(BigInt base, BigInt exp, const BigInt& m) {
    BigInt acc = 1;
    base %= m;
    while (exp > 0) {
        if ((exp & 1) != 0) acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, int r) {
    BigInt x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // composite witness found
}

// xorshift-style deterministic sequence for rho offsets
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

BigInt pollard_rho(const BigInt& n, std::uint64_t& rng) {
    while (true) {
        BigInt x = BigInt(splitmix64(rng)) % n;
        BigInt c = BigInt(splitmix64(rng)) % n + 1;
        BigInt y = x, d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            BigInt diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = boost::multiprecision::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(BigInt n, std::map<BigInt, unsigned>& out, std::uint64_t& rng) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = pollard_rho(n, rng);
    factor_into(d, out, rng);
    factor_into(n / d, out, rng);
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // deterministic base set, valid far beyond coefficient sizes seen here
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(n, a, d, r)) return false;
    }
    return true;
}

std::map<BigInt, unsigned> factorize(BigInt n) {
    if (n < 1) throw DomainError("factorize: argument must be >= 1");
    std::map<BigInt, unsigned> out;
    for (int p : {2, 3, 5, 7, 11, 13}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    std::uint64_t rng = 0x5eed5eed5eed5eedULL;
    factor_into(n, out, rng);
    return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
    auto factors = factorize(n);
    std::vector<BigInt> out{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = out.size();
        BigInt pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace quadfunc::detail
