#ifndef GEOMGRID_BIGINT_HPP
#define GEOMGRID_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace geomgrid {

// Arbitrary-precision signed integer, sign-magnitude with base-1e9 limbs
// (little-endian).  Division truncates toward zero, like built-in integers.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_string(std::string_view s);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int signum() const { return sign_; }

    BigInt abs() const;
    BigInt operator-() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    BigInt& operator/=(const BigInt& o);
    BigInt& operator%=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    static BigInt gcd(BigInt a, BigInt b);  // never negative

    // quotient and remainder in one pass; remainder has the dividend's sign
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    std::string str() const;
    // value must fit in long long; throws otherwise (test/CLI convenience)
    long long to_ll() const;

private:
    static constexpr uint32_t kBase = 1000000000u;

    int sign_ = 0;                   // -1, 0, +1; zero iff limbs_ empty
    std::vector<uint32_t> limbs_;

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace geomgrid

#endif
