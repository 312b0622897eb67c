#include "quadfunc/poly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>

namespace quadfunc {

namespace {

// gcd(numerators)/lcm(denominators) over a coefficient range; sign applied
// by the caller from the leading coefficient.
template <typename It>
BigRat range_content(It first, It last) {
    BigInt g = 0, l = 1;
    for (It it = first; it != last; ++it) {
        const BigRat& c = it->second;
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c.numerator()));
        l = boost::multiprecision::lcm(l, c.denominator());
    }
    if (g == 0) return BigRat(0);
    return BigRat(g, l);
}

void append_term(std::ostringstream& out, bool first, const BigRat& coeff,
                 const std::string& mono) {
    BigRat c = coeff;
    if (first) {
        if (c.is_negative()) {
            out << "-";
            c = -c;
        }
    } else {
        out << (c.is_negative() ? " - " : " + ");
        if (c.is_negative()) c = -c;
    }
    const bool unit = (c == BigRat(1));
    if (mono.empty()) {
        out << c.str();
    } else if (unit) {
        out << mono;
    } else {
        out << c.str() << "*" << mono;
    }
}

std::string power(const std::string& sym, int deg) {
    if (deg == 0) return "";
    if (deg == 1) return sym;
    return sym + "^" + std::to_string(deg);
}

}  // namespace

// ---------------------------------------------------------------- Poly1 ---

Poly1 Poly1::constant(const BigRat& c) {
    Poly1 p;
    p.set(0, c);
    return p;
}

Poly1 Poly1::variable() { return monomial(1, BigRat(1)); }

Poly1 Poly1::monomial(int deg, const BigRat& c) {
    Poly1 p;
    p.set(deg, c);
    return p;
}

Poly1 Poly1::from_coefficients(const std::vector<BigRat>& ascending) {
    Poly1 p;
    for (std::size_t i = 0; i < ascending.size(); ++i) p.set(static_cast<int>(i), ascending[i]);
    return p;
}

BigRat Poly1::coeff(int deg) const {
    auto it = terms_.find(deg);
    return it == terms_.end() ? BigRat(0) : it->second;
}

void Poly1::set(int deg, const BigRat& c) {
    if (c.is_zero()) {
        terms_.erase(deg);
    } else {
        terms_[deg] = c;
    }
}

Poly1 Poly1::operator-() const {
    Poly1 r;
    for (const auto& [d, c] : terms_) r.terms_[d] = -c;
    return r;
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
    Poly1 r = a;
    for (const auto& [d, c] : b.terms_) r.set(d, r.coeff(d) + c);
    return r;
}

Poly1 operator-(const Poly1& a, const Poly1& b) {
    Poly1 r = a;
    for (const auto& [d, c] : b.terms_) r.set(d, r.coeff(d) - c);
    return r;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
    Poly1 r;
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_) r.set(da + db, r.coeff(da + db) + ca * cb);
    return r;
}

Poly1 Poly1::scaled(const BigRat& c) const {
    Poly1 r;
    if (c.is_zero()) return r;
    for (const auto& [d, coeff] : terms_) r.terms_[d] = coeff * c;
    return r;
}

Poly1 Poly1::deflated(const BigRat& root) const {
    // synthetic division, highest degree first
    Poly1 q;
    BigRat carry(0);
    for (int d = degree(); d >= 1; --d) {
        carry = carry * root + coeff(d);
        q.set(d - 1, carry);
    }
    if (carry * root + coeff(0) != BigRat(0))
        throw DomainError("Poly1::deflated: not a root");
    return q;
}

Poly1 Poly1::shifted_down(int k) const {
    Poly1 r;
    for (const auto& [d, c] : terms_) {
        if (d < k) throw DomainError("Poly1::shifted_down: low degree too small");
        r.terms_[d - k] = c;
    }
    return r;
}

BigRat Poly1::eval(const BigRat& x) const {
    // Horner over the sparse support
    BigRat acc(0);
    int prev = -1;
    for (const auto& [d, c] : terms_) {  // descending
        if (prev >= 0) acc *= x.pow(static_cast<unsigned>(prev - d));
        acc += c;
        prev = d;
    }
    if (prev > 0) acc *= x.pow(static_cast<unsigned>(prev));
    return acc;
}

BigRat Poly1::content() const {
    BigRat c = range_content(terms_.begin(), terms_.end());
    if (!c.is_zero() && leading_coeff().is_negative()) c = -c;
    return c;
}

Poly1 Poly1::primitive() const {
    if (is_zero()) return *this;
    return scaled(BigRat(1) / content());
}

std::string Poly1::str(const std::string& symbol) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        append_term(out, first, c, power(symbol, d));
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------- Poly2 ---

Poly2 Poly2::constant(const BigRat& c) {
    Poly2 p;
    p.set(0, 0, c);
    return p;
}

Poly2 Poly2::alpha() { return monomial(1, 0, BigRat(1)); }
Poly2 Poly2::beta() { return monomial(0, 1, BigRat(1)); }

Poly2 Poly2::monomial(int adeg, int bdeg, const BigRat& c) {
    Poly2 p;
    p.set(adeg, bdeg, c);
    return p;
}

Poly2 Poly2::from_poly1(const Poly1& p) {
    Poly2 r;
    for (const auto& [d, c] : p.terms()) r.set(d, 0, c);
    return r;
}

int Poly2::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.a + m.b);
    return d;
}

int Poly2::degree_alpha() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.a);
    return d;
}

int Poly2::degree_beta() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.b);
    return d;
}

BigRat Poly2::coeff(int adeg, int bdeg) const {
    auto it = terms_.find({adeg, bdeg});
    return it == terms_.end() ? BigRat(0) : it->second;
}

void Poly2::set(int adeg, int bdeg, const BigRat& c) {
    Monomial m{adeg, bdeg};
    if (c.is_zero()) {
        terms_.erase(m);
    } else {
        terms_[m] = c;
    }
}

Poly2 Poly2::operator-() const {
    Poly2 r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 r = a;
    for (const auto& [m, c] : b.terms_) r.set(m.a, m.b, r.coeff(m.a, m.b) + c);
    return r;
}

Poly2 operator-(const Poly2& a, const Poly2& b) {
    Poly2 r = a;
    for (const auto& [m, c] : b.terms_) r.set(m.a, m.b, r.coeff(m.a, m.b) - c);
    return r;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            const int da = ma.a + mb.a, db = ma.b + mb.b;
            r.set(da, db, r.coeff(da, db) + ca * cb);
        }
    return r;
}

Poly2 Poly2::scaled(const BigRat& c) const {
    Poly2 r;
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : terms_) r.terms_[m] = coeff * c;
    return r;
}

BigRat Poly2::eval(const BigRat& alpha, const BigRat& beta) const {
    BigRat acc(0);
    for (const auto& [m, c] : terms_)
        acc += c * alpha.pow(static_cast<unsigned>(m.a)) * beta.pow(static_cast<unsigned>(m.b));
    return acc;
}

Poly1 Poly2::beta_coefficient(int j) const {
    Poly1 r;
    for (const auto& [m, c] : terms_)
        if (m.b == j) r.set(m.a, c);
    return r;
}

Poly2 Poly2::substituted_beta(const Poly2& q) const {
    Poly2 r;
    const int db = degree_beta();
    // powers of q up to the beta degree
    std::vector<Poly2> qpow(static_cast<std::size_t>(db) + 1);
    qpow[0] = Poly2::constant(BigRat(1));
    for (int j = 1; j <= db; ++j) qpow[static_cast<std::size_t>(j)] = qpow[static_cast<std::size_t>(j - 1)] * q;
    for (int j = 0; j <= db; ++j) {
        Poly1 cj = beta_coefficient(j);
        if (cj.is_zero()) continue;
        r = r + Poly2::from_poly1(cj) * qpow[static_cast<std::size_t>(j)];
    }
    return r;
}

BigRat Poly2::content() const {
    BigRat c = range_content(terms_.begin(), terms_.end());
    if (!c.is_zero() && terms_.begin()->second.is_negative()) c = -c;
    return c;
}

Poly2 Poly2::primitive() const {
    if (is_zero()) return *this;
    return scaled(BigRat(1) / content());
}

bool Poly2::canonical_less(const Poly2& a, const Poly2& b) {
    auto ita = a.terms_.begin(), itb = b.terms_.begin();
    GrlexDesc before;
    for (; ita != a.terms_.end() && itb != b.terms_.end(); ++ita, ++itb) {
        if (!(ita->first == itb->first)) return before(ita->first, itb->first);
        if (ita->second != itb->second) return ita->second < itb->second;
    }
    return ita == a.terms_.end() && itb != b.terms_.end();
}

std::string Poly2::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono = power("alpha", m.a);
        std::string bpart = power("beta", m.b);
        if (!mono.empty() && !bpart.empty())
            mono += "*" + bpart;
        else if (!bpart.empty())
            mono = bpart;
        append_term(out, first, c, mono);
        first = false;
    }
    return out.str();
}

// ----------------------------------------------------------- operations ---

BetaSolution solve_linear_in_beta(const Poly2& p) {
    if (p.degree_beta() != 1)
        throw DegreeError("solve_linear_in_beta: degree in beta is " +
                          std::to_string(p.degree_beta()) + ", need exactly 1");
    // split the primitive form of p, so num/den read exactly as the source
    // constraint writes them; flip signs to keep den's leading term positive
    const Poly2 q = p.primitive();
    Poly1 den = q.beta_coefficient(1);
    Poly1 num = -q.beta_coefficient(0);
    if (den.leading_coeff().is_negative()) {
        den = -den;
        num = -num;
    }
    BetaSolution sol{num, den, {}};
    if (!den.is_constant()) {
        for (const auto& [root, mult] : rational_roots(den).roots) sol.excluded_alphas.push_back(root);
    }
    return sol;
}

Poly1 substitute_beta(const Poly2& p, const BetaSolution& beta) {
    if (beta.den.is_zero()) throw DomainError("substitute_beta: zero denominator");
    const int db = p.degree_beta();
    std::vector<Poly1> npow(static_cast<std::size_t>(db) + 1), dpow(static_cast<std::size_t>(db) + 1);
    npow[0] = Poly1::constant(BigRat(1));
    dpow[0] = Poly1::constant(BigRat(1));
    for (int j = 1; j <= db; ++j) {
        npow[static_cast<std::size_t>(j)] = npow[static_cast<std::size_t>(j - 1)] * beta.num;
        dpow[static_cast<std::size_t>(j)] = dpow[static_cast<std::size_t>(j - 1)] * beta.den;
    }
    Poly1 out;
    for (int j = 0; j <= db; ++j) {
        Poly1 cj = p.beta_coefficient(j);
        if (cj.is_zero()) continue;
        out = out + cj * npow[static_cast<std::size_t>(j)] * dpow[static_cast<std::size_t>(db - j)];
    }
    return out.is_zero() ? out : out.primitive();
}

}  // namespace quadfunc
