#include "doctest.h"

#include <random>

#include "sunit/padic.hpp"

using namespace sunit;

TEST_CASE("valuations") {
    CHECK(nu(2, mpz_class(8)) == 3);
    CHECK(nu(2, mpz_class(9 - 1)) == 3);
    CHECK(nu(3, mpz_class(-27)) == 3);
    CHECK_THROWS_AS(nu(2, mpz_class(0)), std::domain_error);

    // the witness form at t = 509305: nu_3(5 * 2^t - 1) is exactly 15
    mpz_class big = 5;
    mpz_mul_2exp(big.get_mpz_t(), big.get_mpz_t(), 509305);
    big -= 1;
    CHECK(nu(3, big) == 15);
}

TEST_CASE("closed forms match direct valuations") {
    CHECK(nu2_of_3pow_minus1(1) == 1);
    CHECK(nu2_of_3pow_minus1(2) == 3);
    CHECK(nu2_of_3pow_minus1(40) == 5);
    CHECK(nu3_of_2pow_minus1(2) == 1);
    CHECK(nu3_of_2pow_minus1(6) == 2);
    CHECK(nu3_of_2pow_minus1(18) == 3);
    CHECK(nu3_of_2pow_minus1(1) == 0);

    mpz_class p3 = 1, p2 = 1;
    for (uint64_t x = 1; x <= 2000; ++x) {
        p3 *= 3;
        p2 *= 2;
        CHECK(nu2_of_3pow_minus1(x) == nu(2, mpz_class(p3 - 1)));
        if (x % 2 == 0) CHECK(nu3_of_2pow_minus1(x) == nu(3, mpz_class(p2 - 1)));
    }
}

TEST_CASE("multiplicative orders") {
    CHECK(mult_order(3, 2, 5) == 8);
    CHECK(mult_order(2, 3, 2) == 6);
    CHECK(mult_order(3, 2, 2) == 2);
    CHECK_THROWS_AS(mult_order(6, 3, 4), std::domain_error);

    // ord divides p^(k-1)(p-1); g^ord = 1 and g^(ord/q) != 1 for prime q | ord
    for (unsigned long k : {3ul, 8ul, 20ul}) {
        const mpz_class ord = mult_order(3, 2, k);
        mpz_class m = mpz_class(1) << k;
        mpz_class group = mpz_class(1) << (k - 1);
        CHECK(group % ord == 0);
        mpz_class pw;
        mpz_powm(pw.get_mpz_t(), mpz_class(3).get_mpz_t(), ord.get_mpz_t(), m.get_mpz_t());
        CHECK(pw == 1);
        if (ord % 2 == 0) {
            mpz_class half = ord / 2;
            mpz_powm(pw.get_mpz_t(), mpz_class(3).get_mpz_t(), half.get_mpz_t(), m.get_mpz_t());
            CHECK(pw != 1);
        }
    }
}

TEST_CASE("modular log examples") {
    const auto c1 = modular_log(3, 17, 2, 5);
    REQUIRE_FALSE(c1.is_empty);
    CHECK(c1.r == 4);
    CHECK(c1.m == 8);
    CHECK(c1.to_text() == "4 mod 8");

    const auto cls_a = modular_log(3, -5, 2, 40);
    REQUIRE_FALSE(cls_a.is_empty);
    CHECK(cls_a.r == mpz_class("205450132747"));
    CHECK(cls_a.m == (mpz_class(1) << 38));

    const auto cls_b = modular_log(3, mpz_class(-1), mpz_class(5), 2, 40);
    REQUIRE_FALSE(cls_b.is_empty);
    CHECK(cls_b.r == mpz_class("69427774197"));
    CHECK(cls_b.m == (mpz_class(1) << 38));

    CHECK_THROWS_AS(modular_log(2, 3, 2, 5), std::domain_error);
    CHECK(modular_log(3, -1, 2, 3).is_empty);
}

TEST_CASE("3^x = -1 mod 2^y has no solutions for y >= 3") {
    for (unsigned long y = 3; y <= 60; ++y) CHECK(modular_log(3, -1, 2, y).is_empty);
    // and the y = 2 case does: 3 = -1 mod 4
    const auto c = modular_log(3, -1, 2, 2);
    REQUIRE_FALSE(c.is_empty);
    CHECK(c.r == 1);
}

TEST_CASE("large prime-power moduli") {
    // the ad-hoc sieves reach 2^112 and 3^71; lifting must stay exact there
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const mpz_class x = rng() % 1000000000;
        mpz_class m = mpz_class(1) << 112;
        mpz_class t;
        mpz_powm(t.get_mpz_t(), mpz_class(3).get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        const auto cls = modular_log(3, t, 2, 112);
        REQUIRE_FALSE(cls.is_empty);
        CHECK((x - cls.r) % cls.m == 0);
    }
    const mpz_class ord271 = mult_order(2, 3, 71);
    mpz_class g71;
    mpz_ui_pow_ui(g71.get_mpz_t(), 3, 70);
    CHECK(mpz_class(2 * g71) % ord271 == 0);
    mpz_class m71 = g71 * 3, pw;
    mpz_powm(pw.get_mpz_t(), mpz_class(2).get_mpz_t(), ord271.get_mpz_t(), m71.get_mpz_t());
    CHECK(pw == 1);
}

TEST_CASE("returned classes verify; empty classes are exhaustive") {
    // exhaustive verification against a scan for small prime powers
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        const unsigned long k = p == 2 ? 12 : (p == 3 ? 7 : 5);
        mpz_class pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
        const mpz_class g = p == 3 ? 2 : 3;
        const mpz_class ord = mult_order(g, p, k);
        for (mpz_class t = 1; t < pk; t += 1) {
            if (gcd(t, mpz_class(p)) != 1) continue;
            const auto cls = modular_log(g, t, p, k);
            // scan for the true smallest solution
            mpz_class x = 1;
            long found = -1;
            for (long i = 0; i < ord; ++i) {
                if (x == t) {
                    found = i;
                    break;
                }
                x = x * g % pk;
            }
            if (found < 0) {
                CHECK(cls.is_empty);
            } else {
                REQUIRE_FALSE(cls.is_empty);
                CHECK(cls.r == found);
                CHECK(cls.m == ord);
            }
        }
    }
}

TEST_CASE("class intersection") {
    const auto a = CongruenceClass::of(3, 10);
    const auto b = CongruenceClass::of(5, 14);
    const auto c = intersect(a, b);
    REQUIRE_FALSE(c.is_empty);
    CHECK(c.r == 33);
    CHECK(c.m == 70);
    CHECK(intersect(CongruenceClass::of(0, 4), CongruenceClass::of(1, 2)).is_empty);
    CHECK(intersect(CongruenceClass::none(), a).is_empty);
}

TEST_CASE("smallest_exponent") {
    SUBCASE("single trivial form") {
        std::vector<ExponentialForm> forms = {{1, -1}};  // 2^t - 1
        const auto hit = smallest_exponent(forms, 2, 3, 1, 10);
        REQUIRE(hit.has_value());
        CHECK(hit->t == 2);
        CHECK(hit->form_index == 0);
    }
    SUBCASE("absence is a result") {
        std::vector<ExponentialForm> forms = {{1, 1}};  // 2^t + 1 = 0 mod 3^4 -> t = 3^3 odd cls
        const auto hit = smallest_exponent(forms, 2, 3, 4, 5);
        CHECK_FALSE(hit.has_value());  // smallest positive t is 27 > 5
    }
    SUBCASE("coefficient divisible by p is skipped") {
        std::vector<ExponentialForm> forms = {{1, 3}, {1, -1}};
        const auto hit = smallest_exponent(forms, 2, 3, 1, 10);
        REQUIRE(hit.has_value());
        CHECK(hit->form_index == 1);
    }
}

TEST_CASE("serialization") {
    CHECK(CongruenceClass::none().to_text() == "none");
    CHECK(CongruenceClass::none().to_json() == "null");
    CHECK(CongruenceClass::of(-1, 7).to_text() == "6 mod 7");
    CHECK(CongruenceClass::of(2, 5).to_json() == "{\"r\":\"2\",\"m\":\"5\"}");
}
