#include "intfactor.hpp"
#include "quadfunc/poly.hpp"

namespace quadfunc {

RootReport rational_roots(const Poly1& p) {
    if (p.is_zero())
        throw ZeroPolynomialError("rational_roots: zero polynomial, every value is a root");

    RootReport report;
    Poly1 work = p.primitive();

    // x^m factor first
    const int low = work.low_degree();
    if (low > 0) {
        report.roots.emplace_back(BigRat(0), low);
        work = work.shifted_down(low).primitive();
    }

    std::map<BigRat, int> found;
    while (work.degree() >= 1) {
        const BigInt a0 = boost::multiprecision::abs(work.coeff(0).numerator());
        const BigInt alead = boost::multiprecision::abs(work.leading_coeff().numerator());
        bool hit = false;
        for (const BigInt& pd : detail::divisors(a0)) {
            for (const BigInt& qd : detail::divisors(alead)) {
                if (boost::multiprecision::gcd(pd, qd) != 1) continue;
                for (int sign : {+1, -1}) {
                    BigRat cand(sign > 0 ? pd : -pd, qd);
                    if (work.eval(cand).is_zero()) {
                        ++found[cand];
                        work = work.deflated(cand).primitive();
                        hit = true;
                        break;
                    }
                }
                if (hit) break;
            }
            if (hit) break;
        }
        if (!hit) break;
    }

    for (const auto& [root, mult] : found) report.roots.emplace_back(root, mult);
    std::sort(report.roots.begin(), report.roots.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    report.residual = work;
    return report;
}

}  // namespace quadfunc
