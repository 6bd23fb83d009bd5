#ifndef GEOMGRID_POLY_HPP
#define GEOMGRID_POLY_HPP

#include <string>
#include <vector>

#include "geomgrid/bigint.hpp"

namespace geomgrid {

// Univariate polynomial in x with BigInt coefficients, stored lowest degree
// first with no trailing zero coefficients.
class Poly {
public:
    Poly() = default;
    Poly(BigInt constant);
    explicit Poly(std::vector<BigInt> coeffs);
    static Poly monomial(BigInt c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const BigInt& coeff(int k) const;  // zero beyond degree
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& leading() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // exact quotient; throws if the division leaves a remainder
    static Poly div_exact(const Poly& a, const Poly& b);

    BigInt content() const;      // gcd of coefficients, never negative
    Poly primitive_part() const;
    static Poly gcd(Poly a, Poly b);  // positive leading coefficient

    std::string str() const;  // "c0 + c1*x + c2*x^2", zero terms omitted

private:
    std::vector<BigInt> coeffs_;
    void trim();
};

// Reduced ratio of integer polynomials.  Invariants: denominator has a
// nonzero constant term (kept positive), gcd(num, den) is a unit.
class RationalFunction {
public:
    RationalFunction();  // 0/1
    RationalFunction(Poly num, Poly den);

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }

    // first n_terms Taylor coefficients at 0; throws if any is non-integral
    std::vector<BigInt> series(int n_terms) const;

    std::string str() const;  // "num/(den)", single-term polynomials unparenthesised

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

private:
    Poly num_, den_;
    void reduce();
};

}  // namespace geomgrid

#endif
