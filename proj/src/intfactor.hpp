#pragma once

// Integer factorization helpers used by the rational root search.
// Pollard rho with Miller-Rabin, enough for coefficient-sized integers.

#include <map>
#include <vector>

#include "quadfunc/bigrat.hpp"

namespace quadfunc::detail {

bool is_probable_prime(const BigInt& n);

/// Prime factorization of n >= 1 (empty map for 1).
std::map<BigInt, unsigned> factorize(BigInt n);

/// All positive divisors of n >= 1, ascending.
std::vector<BigInt> divisors(const BigInt& n);

}  // namespace quadfunc::detail
