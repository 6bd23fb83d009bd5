#include "geomgrid/bigint.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace geomgrid {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? 0ull - static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    while (m > 0) {
        limbs_.push_back(static_cast<uint32_t>(m % kBase));
        m /= kBase;
    }
}

BigInt BigInt::from_string(std::string_view s) {
    size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    if (pos == s.size())
        throw std::invalid_argument("BigInt: empty numeral");
    BigInt out;
    // consume 9 decimal digits per limb, most significant chunk first
    for (size_t i = pos; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("BigInt: bad digit in numeral");
    size_t n = s.size() - pos;
    size_t head = n % 9 == 0 ? 9 : n % 9;
    uint64_t acc = 0;
    size_t taken = 0;
    for (size_t i = pos; i < s.size(); ++i) {
        acc = acc * 10 + static_cast<uint64_t>(s[i] - '0');
        ++taken;
        if (taken == head) {
            out.limbs_.insert(out.limbs_.begin(), static_cast<uint32_t>(acc));
            acc = 0;
            taken = 0;
            head = 9;
        }
    }
    out.sign_ = neg ? -1 : 1;
    out.trim();
    return out;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint32_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<uint32_t>(s % kBase));
        carry = static_cast<uint32_t>(s / kBase);
    }
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (cur < 0) {
            cur += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size() || carry; ++j) {
            uint64_t cur = r[i + j] + carry;
            if (j < b.size()) cur += static_cast<uint64_t>(a[i]) * b[j];
            r[i + j] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D adapted to base 1e9.
void BigInt::divmod_mag(const std::vector<uint32_t>& u_in, const std::vector<uint32_t>& v_in,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.clear();
    r.clear();
    if (v_in.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(u_in, v_in) < 0) {
        r = u_in;
        return;
    }
    if (v_in.size() == 1) {
        uint64_t d = v_in[0];
        q.assign(u_in.size(), 0);
        uint64_t rem = 0;
        for (size_t i = u_in.size(); i-- > 0;) {
            uint64_t cur = rem * kBase + u_in[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    // normalise so the top divisor limb is at least base/2
    uint32_t shift = static_cast<uint32_t>(static_cast<uint64_t>(kBase) / (v_in.back() + 1ull));
    std::vector<uint32_t> u = mul_mag(u_in, {shift});
    std::vector<uint32_t> v = mul_mag(v_in, {shift});
    size_t n = v.size(), m = u.size() - n;
    u.push_back(0);
    q.assign(m + 1, 0);

    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = static_cast<uint64_t>(u[j + n]) * kBase + u[j + n - 1];
        uint64_t qhat = num / v[n - 1];
        uint64_t rhat = num % v[n - 1];
        while (qhat >= kBase ||
               qhat * v[n - 2] > rhat * kBase + u[j + n - 2]) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= kBase) break;
        }
        // multiply-subtract u[j..j+n] -= qhat * v
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p / kBase;
            int64_t cur = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p % kBase) - borrow;
            if (cur < 0) {
                cur += kBase;
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(cur);
        }
        int64_t top = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (top < 0) {
            // qhat was one too large; add v back
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(cur % kBase);
                c2 = cur / kBase;
            }
            top += static_cast<int64_t>(c2);
        }
        u[j + n] = static_cast<uint32_t>(top);
        q[j] = static_cast<uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    u.resize(n);
    while (!u.empty() && u.back() == 0) u.pop_back();
    // undo normalisation of the remainder
    if (!u.empty()) {
        std::vector<uint32_t> rr, junk;
        divmod_mag(u, {shift}, rr, junk);
        r = rr;
    }
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        limbs_ = add_mag(limbs_, o.limbs_);
        return *this;
    }
    int c = cmp_mag(limbs_, o.limbs_);
    if (c == 0) {
        sign_ = 0;
        limbs_.clear();
    } else if (c > 0) {
        limbs_ = sub_mag(limbs_, o.limbs_);
    } else {
        limbs_ = sub_mag(o.limbs_, limbs_);
        sign_ = o.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
    sign_ *= o.sign_;
    limbs_ = mul_mag(limbs_, o.limbs_);
    if (limbs_.empty()) sign_ = 0;
    return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    r.limbs_ = std::move(rm);
    q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
}

BigInt& BigInt::operator/=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    return *this = q;
}

BigInt& BigInt::operator%=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    return *this = r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.limbs_.empty() ? 0 : 1;
    b.sign_ = b.limbs_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::string BigInt::str() const {
    if (sign_ == 0) return "0";
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

long long BigInt::to_ll() const {
    const BigInt lo(std::numeric_limits<long long>::min());
    const BigInt hi(std::numeric_limits<long long>::max());
    if (*this < lo || hi < *this) throw std::overflow_error("BigInt: does not fit in long long");
    unsigned long long v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    if (sign_ < 0) {
        if (v == static_cast<unsigned long long>(std::numeric_limits<long long>::max()) + 1ull)
            return std::numeric_limits<long long>::min();
        return -static_cast<long long>(v);
    }
    return static_cast<long long>(v);
}

}  // namespace geomgrid
