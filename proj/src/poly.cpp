#include "geomgrid/poly.hpp"

#include <stdexcept>

namespace geomgrid {

namespace {
const BigInt kZero(0);
}

Poly::Poly(BigInt constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(BigInt c, int degree) {
    if (c.is_zero()) return Poly();
    std::vector<BigInt> v(degree + 1, BigInt(0));
    v[degree] = std::move(c);
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const BigInt& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[k];
}

const BigInt& Poly::leading() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<BigInt> r(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.coeffs_.size()) r[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) r[i] += b.coeffs_[i];
    }
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(r));
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    if (a.is_zero()) return Poly();
    if (a.degree() < b.degree()) throw std::domain_error("Poly: inexact division");
    std::vector<BigInt> rem = a.coeffs_;
    std::vector<BigInt> q(a.degree() - b.degree() + 1, BigInt(0));
    for (int d = a.degree(); d >= b.degree();) {
        if (rem[d].is_zero()) {
            --d;
            continue;
        }
        BigInt c = rem[d] / b.leading();
        if (c * b.leading() != rem[d]) throw std::domain_error("Poly: inexact division");
        int shift = d - b.degree();
        q[shift] = c;
        for (int i = 0; i <= b.degree(); ++i) rem[i + shift] -= c * b.coeffs_[i];
        --d;
    }
    for (const auto& c : rem)
        if (!c.is_zero()) throw std::domain_error("Poly: inexact division");
    return Poly(std::move(q));
}

BigInt Poly::content() const {
    BigInt g(0);
    for (const auto& c : coeffs_) g = BigInt::gcd(g, c);
    return g;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return Poly();
    BigInt g = content();
    std::vector<BigInt> r;
    r.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.push_back(c / g);
    return Poly(std::move(r));
}

// Primitive pseudo-remainder sequence.
Poly Poly::gcd(Poly a, Poly b) {
    if (a.is_zero()) std::swap(a, b);
    if (b.is_zero()) {
        if (a.leading().is_negative()) a = -a;
        return a;
    }
    BigInt cont = BigInt::gcd(a.content(), b.content());
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        Poly r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Poly t = Poly::monomial(r.leading(), r.degree() - b.degree());
            r = Poly(b.leading()) * r - t * b;
        }
        a = std::move(b);
        b = r.is_zero() ? Poly() : r.primitive_part();
    }
    Poly g = Poly(cont) * a;
    if (g.leading().is_negative()) g = -g;
    return g;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= degree(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c.is_zero()) continue;
        BigInt mag = c.abs();
        if (s.empty()) {
            if (c.is_negative()) s += "-";
        } else {
            s += c.is_negative() ? " - " : " + ";
        }
        s += mag.str();
        if (k == 1)
            s += "*x";
        else if (k > 1)
            s += "*x^" + std::to_string(k);
    }
    return s;
}

RationalFunction::RationalFunction() : num_(), den_(BigInt(1)) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero() || den_.coeff(0).is_zero())
        throw std::invalid_argument("RationalFunction: denominator must have nonzero constant term");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(BigInt(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    num_ = Poly::div_exact(num_, g);
    den_ = Poly::div_exact(den_, g);
    BigInt c = BigInt::gcd(num_.content(), den_.content());
    if (!(c == BigInt(1))) {
        num_ = Poly::div_exact(num_, Poly(c));
        den_ = Poly::div_exact(den_, Poly(c));
    }
    if (den_.coeff(0).is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
}

std::vector<BigInt> RationalFunction::series(int n_terms) const {
    std::vector<BigInt> out;
    out.reserve(n_terms);
    const BigInt& d0 = den_.coeff(0);
    for (int n = 0; n < n_terms; ++n) {
        BigInt acc = num_.coeff(n);
        for (int k = 1; k <= std::min(n, den_.degree()); ++k)
            acc -= den_.coeff(k) * out[n - k];
        BigInt c = acc / d0;
        if (c * d0 != acc)
            throw std::domain_error("RationalFunction: series has non-integer coefficient");
        out.push_back(std::move(c));
    }
    return out;
}

std::string RationalFunction::str() const {
    auto wrap = [](const Poly& p) {
        std::string s = p.str();
        int terms = 0;
        for (int k = 0; k <= p.degree(); ++k)
            if (!p.coeff(k).is_zero()) ++terms;
        if (terms > 1) return "(" + s + ")";
        return s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

}  // namespace geomgrid
