#include "doctest.h"

#include <random>

#include "sunit/cf.hpp"

using namespace sunit;

namespace {

RealProducer log32() { return log_ratio_producer(3, 2); }

RealProducer rational_producer(const mpq_class& q) {
    return [q](long digits) { return ValidatedReal::from_rational(q, digits_to_bits(digits)); };
}

RealProducer golden_ratio() {
    return [](long digits) {
        const long bits = digits_to_bits(digits);
        return (ValidatedReal::exact(5L, bits).sqrt().add(1)) / ValidatedReal::exact(2L, bits);
    };
}

}  // namespace

TEST_CASE("log_ratio enclosures") {
    const auto one = log_ratio(2, 2, 32);
    CHECK(one.contains(mpq_class(1)));
    CHECK(one.radius_at_most_pow10(-31));

    const auto three = log_ratio(8, 2, 32);
    CHECK(three.contains(mpq_class(3)));

    const auto k = log_ratio(3, 2, 40);
    CHECK(k.radius_at_most_pow10(-39));
    // 30 decimal digits of log3/log2; the enclosure must sit within 1e-29 of it
    const mpq_class approx(mpz_class("1584962500721156181453738943947"),
                           mpz_class("1000000000000000000000000000000"));
    const mpq_class slack(1, mpz_class("100000000000000000000000000000"));
    CHECK(k.certainly_greater(approx - slack));
    CHECK(k.certainly_less(approx + slack));
}

TEST_CASE("golden ratio expands to all ones") {
    const auto e = cf_expand(golden_ratio(), 20);
    REQUIRE(e.convergents.size() == 20);
    CHECK_FALSE(e.terminated);
    for (const auto& c : e.convergents) CHECK(c.a == 1);
    // convergents are Fibonacci ratios
    CHECK(e.convergents[5].p == 13);
    CHECK(e.convergents[5].q == 8);
}

TEST_CASE("first partial quotients of log3/log2") {
    const auto e = cf_expand(log32(), 15);
    std::vector<long> quotients;
    for (const auto& c : e.convergents) quotients.push_back(c.a.get_si());
    CHECK(quotients == std::vector<long>{1, 1, 1, 2, 2, 3, 1, 5, 2, 23, 2, 2, 1, 1, 55});
    CHECK(e.convergents[2].p == 3);
    CHECK(e.convergents[2].q == 2);
    CHECK(e.convergents[4].p == 19);
    CHECK(e.convergents[4].q == 12);
}

TEST_CASE("expansion is stable under doubled precision") {
    const auto e1 = cf_expand(log32(), 300, 64);
    const auto e2 = cf_expand(log32(), 300, 2 * e1.digits_used);
    REQUIRE(e1.convergents.size() == e2.convergents.size());
    for (std::size_t i = 0; i < e1.convergents.size(); ++i) {
        CHECK(e1.convergents[i].a == e2.convergents[i].a);
        CHECK(e1.convergents[i].q == e2.convergents[i].q);
    }
}

TEST_CASE("two-sided convergent inequality for the first 200 convergents") {
    const auto e = cf_expand(log32(), 201);
    const ValidatedReal k = log32()(500);
    for (std::size_t i = 0; i + 1 < e.convergents.size(); ++i) {
        const auto& c = e.convergents[i];
        const mpz_class an = e.convergents[i + 1].a;
        const ValidatedReal diff = (k - ValidatedReal::from_rational(mpq_class(c.p, c.q), k.prec_bits())).abs();
        const mpq_class low(1, (an + 2) * c.q * c.q);
        const mpq_class high(1, an * c.q * c.q);
        CHECK(diff.certainly_greater(low));
        CHECK(diff.certainly_less(high));
    }
}

TEST_CASE("convergent JSON lines") {
    const auto e = cf_expand(log32(), 5);
    CHECK(e.convergents[2].to_json() == "{\"i\":2,\"a\":\"1\",\"p\":\"3\",\"q\":\"2\"}");
    CHECK(e.convergents[4].to_json() == "{\"i\":4,\"a\":\"2\",\"p\":\"19\",\"q\":\"12\"}");
}

TEST_CASE("consecutive convergents are unimodular") {
    const auto e = cf_expand(log32(), 200);
    for (std::size_t i = 1; i < e.convergents.size(); ++i) {
        const auto& a = e.convergents[i - 1];
        const auto& b = e.convergents[i];
        const mpz_class det = b.p * a.q - a.p * b.q;
        CHECK((det == 1 || det == -1));
        CHECK(gcd(b.p, b.q) == 1);
    }
}

TEST_CASE("rational numbers terminate") {
    const auto e = cf_expand(rational_producer(mpq_class(3, 2)), 10);
    CHECK(e.terminated);
    REQUIRE(e.convergents.size() == 2);
    CHECK(e.convergents[0].p == 1);
    CHECK(e.convergents[0].q == 1);
    CHECK(e.convergents[1].p == 3);
    CHECK(e.convergents[1].q == 2);
}

TEST_CASE("is_convergent") {
    CHECK(is_convergent(3, 2, log32()));
    CHECK(is_convergent(2, 1, log32()));
    CHECK(is_convergent(19, 12, log32()));
    CHECK_FALSE(is_convergent(5, 3, log32()));
    CHECK_FALSE(is_convergent(7, 4, log32()));

    CHECK(is_convergent(1, 1, rational_producer(mpq_class(3, 2))));
    CHECK(is_convergent(3, 2, rational_producer(mpq_class(3, 2))));
    CHECK_FALSE(is_convergent(1, 3, rational_producer(mpq_class(3, 2))));

    CHECK_THROWS_AS(is_convergent(2, 4, log32()), std::invalid_argument);
}

TEST_CASE("homogeneous gap") {
    // q = 1: both 1/1 and 2/1 are convergents; the gap uses the nearest
    // integer, so |kappa - 2| = 0.415..., the smaller of the two
    const auto g1 = homogeneous_gap(1, log32());
    CHECK(g1.certainly_greater(mpq_class(41, 100)));
    CHECK(g1.certainly_less(mpq_class(42, 100)));
    const auto g2 = homogeneous_gap(2, log32());
    CHECK(g2.certainly_greater(mpq_class(16, 100)));
    CHECK(g2.certainly_less(mpq_class(18, 100)));
}

TEST_CASE("reduction with an exactly half-integer mu q") {
    // kappa = 2/7 so ||kappa q|| = 0 at q = 7; mu = 1/2 makes ||mu q|| = 1/2
    const long bits = digits_to_bits(40);
    BDInput in(ValidatedReal::from_rational(mpq_class(2, 7), bits),
               ValidatedReal::from_rational(mpq_class(1, 2), bits), 1, 1.0, 2.0, 7);
    const auto out = baker_davenport(in);
    REQUIRE(out.status == BDOutcome::Status::ok);
    CHECK(out.eps.contains(mpq_class(1, 2)));
    // threshold log(7 / 0.5) / log 2 = log2(14)
    CHECK(out.threshold.certainly_greater(mpq_class(38, 10)));
    CHECK(out.threshold.certainly_less(mpq_class(39, 10)));
}

TEST_CASE("input validation") {
    const long bits = 128;
    CHECK_THROWS_AS(BDInput(ValidatedReal::exact(1L, bits), ValidatedReal::exact(1L, bits), 2, 1.0,
                            2.0, 12),
                    std::invalid_argument);  // q <= 6M
    CHECK_THROWS_AS(BDInput(ValidatedReal::exact(1L, bits), ValidatedReal::exact(1L, bits), 1, 1.0,
                            0.5, 7),
                    std::invalid_argument);  // B <= 1
}

TEST_CASE("interval arithmetic is conservative on random rational expressions") {
    // evaluate the same random expression exactly (mpq) and in intervals; the
    // exact value must lie inside the enclosure
    std::mt19937_64 rng(2024);
    const long bits = 96;
    for (int trial = 0; trial < 10000; ++trial) {
        mpq_class exact(static_cast<long>(rng() % 2001) - 1000,
                        static_cast<long>(rng() % 97) + 1);
        ValidatedReal val = ValidatedReal::from_rational(exact, bits);
        for (int step = 0; step < 6; ++step) {
            const mpq_class operand(static_cast<long>(rng() % 399) - 199,
                                    static_cast<long>(rng() % 53) + 1);
            const ValidatedReal o = ValidatedReal::from_rational(operand, bits);
            switch (rng() % 4) {
                case 0:
                    exact += operand;
                    val = val + o;
                    break;
                case 1:
                    exact -= operand;
                    val = val - o;
                    break;
                case 2:
                    exact *= operand;
                    val = val * o;
                    break;
                default:
                    if (operand != 0 && !o.contains(mpq_class(0))) {
                        exact /= operand;
                        val = val / o;
                    }
                    break;
            }
        }
        CHECK(val.contains(exact));
    }
}

TEST_CASE("no threshold contradicts a brute-force scan") {
    // miniature instances: when the reduction reports a threshold, no certified
    // solution of 0 < m kappa - n + mu < A B^-m may exist with threshold <= m <= M
    std::mt19937_64 rng(42);
    const mpz_class M = 100, q = 665;  // q = 665 is a convergent denominator, q > 6M
    const double A = 2.0, B = 1.5;
    int thresholds_seen = 0;
    for (int trial = 0; trial < 25; ++trial) {
        const mpq_class mu(static_cast<long>(rng() % 997) + 1, 997);
        const long digits = 60;
        BDInput in(log_ratio(3, 2, digits),
                   ValidatedReal::from_rational(mu, digits_to_bits(digits)), M, A, B, q);
        const auto out = baker_davenport(in);
        if (out.status != BDOutcome::Status::ok) continue;
        ++thresholds_seen;
        const double thr = out.threshold.upper_double();
        const ValidatedReal kappa = log_ratio(3, 2, digits);
        for (long m = 1; m <= 100; ++m) {
            const ValidatedReal v = kappa.mul(m) + ValidatedReal::from_rational(mu, kappa.prec_bits());
            const auto n = v.floor();
            REQUIRE(n.has_value());
            const ValidatedReal frac = v - ValidatedReal::exact(*n, v.prec_bits());
            const ValidatedReal rhs =
                ValidatedReal::exact(A, v.prec_bits()) * ValidatedReal::exact(B, v.prec_bits()).pow(-double(m));
            const bool certain_solution = frac.sign() > 0 && frac.certainly_less(rhs);
            if (certain_solution) CHECK(double(m) < thr);
        }
    }
    CHECK(thresholds_seen > 10);  // the instances must actually exercise the ok path
}
