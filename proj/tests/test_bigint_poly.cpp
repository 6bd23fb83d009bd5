#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "geomgrid/bigint.hpp"
#include "geomgrid/poly.hpp"

using namespace geomgrid;

TEST_CASE("bigint small arithmetic agrees with long long") {
    std::mt19937 gen(12345);
    auto small = [&]() {
        long long v = static_cast<long long>(gen()) % 1000000;
        return gen() % 2 ? v : -v;
    };
    for (int trial = 0; trial < 2000; ++trial) {
        long long a = small(), b = small();
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
            CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("bigint divmod reconstructs the dividend on large operands") {
    std::mt19937 gen(7);
    auto random_big = [&](int limbs) {
        BigInt v(0);
        for (int i = 0; i < limbs; ++i) v = v * BigInt(1000000000) + BigInt(gen() % 1000000000);
        return gen() % 2 ? v : -v;
    };
    for (int trial = 0; trial < 300; ++trial) {
        BigInt a = random_big(1 + static_cast<int>(gen() % 6));
        BigInt b = random_big(1 + static_cast<int>(gen() % 4));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.signum() == a.signum());
    }
}

TEST_CASE("bigint string round trip and factorial growth") {
    BigInt f(1);
    for (int i = 1; i <= 30; ++i) f *= BigInt(i);
    CHECK(f.str() == "265252859812191058636308480000000");
    CHECK(BigInt::from_string(f.str()) == f);
    CHECK(BigInt::from_string("-00042") == BigInt(-42));
    CHECK(BigInt(0).str() == "0");

    // exact division of a product recovers the factor
    BigInt g = BigInt::from_string("987654321987654321987654321");
    CHECK((f * g) / g == f);
}

TEST_CASE("bigint gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(-7)) == BigInt(7));
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    CHECK(BigInt::gcd(a * BigInt(35), a * BigInt(21)) == a * BigInt(7));
}

TEST_CASE("poly arithmetic and exact division") {
    Poly x = Poly::monomial(BigInt(1), 1);
    Poly one(BigInt(1));
    Poly a = (one + x) * (one + x);  // 1 + 2x + x^2
    CHECK(a.degree() == 2);
    CHECK(a.coeff(1) == BigInt(2));
    CHECK(Poly::div_exact(a, one + x) == one + x);
    CHECK_THROWS(Poly::div_exact(a + one, one + x));

    Poly zero;
    CHECK((a - a).is_zero());
    CHECK((zero * a).is_zero());
}

TEST_CASE("poly gcd") {
    Poly x = Poly::monomial(BigInt(1), 1);
    Poly one(BigInt(1));
    Poly p = (one - x) * (one - x) * (Poly(BigInt(2)) + x);
    Poly q = (one - x) * (Poly(BigInt(3)) + x);
    Poly g = Poly::gcd(p, q);
    // gcd is 1 - x up to sign; normalised to positive leading coefficient
    CHECK(g == -(one - x));
    CHECK(Poly::gcd(p, Poly()) == p);  // p already has a positive leading coefficient
}

TEST_CASE("poly printing") {
    Poly x = Poly::monomial(BigInt(1), 1);
    Poly one(BigInt(1));
    CHECK((one - x).str() == "1 - 1*x");
    CHECK(((one - x) * (one - x)).str() == "1 - 2*x + 1*x^2");
    CHECK(Poly().str() == "0");
    CHECK(Poly::monomial(BigInt(-3), 2).str() == "-3*x^2");
}

TEST_CASE("rational function reduction and series") {
    Poly x = Poly::monomial(BigInt(1), 1);
    Poly one(BigInt(1));

    RationalFunction rf((one - x) * Poly(BigInt(2)), (one - x) * (one - x) * Poly(BigInt(2)));
    CHECK(rf == RationalFunction(one, one - x));
    CHECK(rf.str() == "1/(1 - 1*x)");

    auto coeffs = rf.series(5);
    for (int i = 0; i < 5; ++i) CHECK(coeffs[i] == BigInt(1));

    RationalFunction geom2(one, one - Poly(BigInt(2)) * x);
    auto c2 = geom2.series(11);
    CHECK(c2[10] == BigInt(1024));

    RationalFunction zero{};
    CHECK(zero.str() == "0/1");
    CHECK(zero.series(3) == std::vector<BigInt>{BigInt(0), BigInt(0), BigInt(0)});

    // denominator sign is normalised to a positive constant term
    RationalFunction neg(-one, -(one - x));
    CHECK(neg == rf);
}
