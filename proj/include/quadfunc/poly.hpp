#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quadfunc/bigrat.hpp"

namespace quadfunc {

/// Sparse exact univariate polynomial. The default symbol is `alpha` but the
/// same type carries the induction identities in `l`.
class Poly1 {
public:
    // degree -> coefficient, highest degree first, no zero coefficients
    using Terms = std::map<int, BigRat, std::greater<int>>;

    Poly1() = default;
    static Poly1 constant(const BigRat& c);
    static Poly1 variable();                       // x
    static Poly1 monomial(int deg, const BigRat& c);
    /// c0 + c1*x + c2*x^2 + ...
    static Poly1 from_coefficients(const std::vector<BigRat>& ascending);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || degree() == 0; }
    int degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int low_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    BigRat coeff(int deg) const;
    BigRat leading_coeff() const { return terms_.empty() ? BigRat(0) : terms_.begin()->second; }
    const Terms& terms() const { return terms_; }

    Poly1 operator-() const;
    friend Poly1 operator+(const Poly1& a, const Poly1& b);
    friend Poly1 operator-(const Poly1& a, const Poly1& b);
    friend Poly1 operator*(const Poly1& a, const Poly1& b);
    Poly1 scaled(const BigRat& c) const;
    /// Quotient of division by x - root; remainder must be zero.
    Poly1 deflated(const BigRat& root) const;
    Poly1 shifted_down(int k) const;  // divide by x^k, requires low_degree() >= k

    BigRat eval(const BigRat& x) const;

    /// Content = gcd(numerators)/lcm(denominators), signed by leading term.
    BigRat content() const;
    /// Coprime integer coefficients, positive leading coefficient.
    Poly1 primitive() const;

    friend bool operator==(const Poly1& a, const Poly1& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

    std::string str(const std::string& symbol = "alpha") const;

    void set(int deg, const BigRat& c);

private:
    Terms terms_;
};

/// Sparse exact polynomial in alpha and beta. Terms are kept in descending
/// graded-lexicographic order (alpha before beta), so begin() is the leading
/// term and printing is canonical.
class Poly2 {
public:
    struct Monomial {
        int a;  // degree in alpha
        int b;  // degree in beta
        friend bool operator==(const Monomial&, const Monomial&) = default;
    };
    struct GrlexDesc {
        bool operator()(const Monomial& x, const Monomial& y) const {
            const int gx = x.a + x.b, gy = y.a + y.b;
            if (gx != gy) return gx > gy;
            return x.a > y.a;
        }
    };
    using Terms = std::map<Monomial, BigRat, GrlexDesc>;

    Poly2() = default;
    static Poly2 constant(const BigRat& c);
    static Poly2 alpha();
    static Poly2 beta();
    static Poly2 monomial(int adeg, int bdeg, const BigRat& c);
    static Poly2 from_poly1(const Poly1& p);  // polynomial in alpha

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || total_degree() == 0; }
    int total_degree() const;
    int degree_alpha() const;
    int degree_beta() const;
    BigRat coeff(int adeg, int bdeg) const;
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Poly2 operator-() const;
    friend Poly2 operator+(const Poly2& a, const Poly2& b);
    friend Poly2 operator-(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    Poly2 scaled(const BigRat& c) const;
    Poly2 squared() const { return *this * *this; }

    BigRat eval(const BigRat& alpha, const BigRat& beta) const;
    /// Coefficient of beta^j as a polynomial in alpha.
    Poly1 beta_coefficient(int j) const;
    /// Substitute beta := q (a polynomial), keeping everything exact.
    Poly2 substituted_beta(const Poly2& q) const;

    BigRat content() const;
    Poly2 primitive() const;

    friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }
    /// Total order used for canonical report/constraint sorting.
    static bool canonical_less(const Poly2& a, const Poly2& b);

    std::string str() const;

    void set(int adeg, int bdeg, const BigRat& c);

private:
    Terms terms_;
};

/// beta expressed as num(alpha)/den(alpha) on the locus den != 0, plus the
/// rational roots of den that callers must branch on separately.
struct BetaSolution {
    Poly1 num;
    Poly1 den;
    std::vector<BigRat> excluded_alphas;
};

/// Requires degree exactly 1 in beta; throws DegreeError otherwise.
BetaSolution solve_linear_in_beta(const Poly2& p);

/// Numerator of p after beta := num/den, denominators cleared, primitive
/// normalized. A polynomial without beta passes through (up to normalization).
Poly1 substitute_beta(const Poly2& p, const BetaSolution& beta);

struct RootReport {
    std::vector<std::pair<BigRat, int>> roots;  // ascending, with multiplicity
    Poly1 residual;                             // no rational roots remain
};

/// All rational roots via the rational root theorem on the primitive integer
/// form. Throws ZeroPolynomialError for the zero polynomial.
RootReport rational_roots(const Poly1& p);

}  // namespace quadfunc
