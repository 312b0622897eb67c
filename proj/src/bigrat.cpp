#include "quadfunc/bigrat.hpp"

#include <ostream>
#include <utility>

namespace quadfunc {

BigRat BigRat::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    return BigRat(num, den);
}

BigRat BigRat::pow(unsigned e) const {
    BigRat acc(1);
    BigRat base = *this;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

namespace {

bool perfect_square(const BigInt& n, BigInt& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

}  // namespace

bool BigRat::square_root(BigRat& root) const {
    BigInt rn, rd;
    if (!perfect_square(numerator(), rn)) return false;
    if (!perfect_square(denominator(), rd)) return false;
    root = BigRat(rn, rd);
    return true;
}

std::string BigRat::str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.str(); }

}  // namespace quadfunc
