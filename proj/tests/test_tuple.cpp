#include "doctest.h"

#include <random>

#include "sunit/tuple.hpp"

using namespace sunit;

TEST_CASE("term values") {
    CHECK(PrimePowerTerm{+1, 0, 0}.value() == 1);
    CHECK(PrimePowerTerm{-1, 3, 0}.value() == -8);
    CHECK(PrimePowerTerm{+1, 0, 12}.value() == 531441);
}

TEST_CASE("normalize_primitive on the listed examples") {
    SUBCASE("gcd scaling") {
        const auto t = normalize_primitive(std::vector<mpq_class>{6, -2, -4});
        CHECK(t.to_text() == "[3,-1,-2]");
    }
    SUBCASE("rational input with symmetric head and tail") {
        const auto t = normalize_primitive(
            std::vector<mpq_class>{mpq_class(1, 3), mpq_class(-1, 3), 2, -2});
        CHECK(t.to_text() == "[6,1,-1,-6]");
    }
    SUBCASE("already primitive") {
        const auto t = normalize_primitive(std::vector<mpq_class>{2, -1, -1});
        CHECK(t.to_text() == "[2,-1,-1]");
    }
    SUBCASE("rejects nonzero sum") {
        CHECK_THROWS_AS(normalize_primitive(std::vector<mpq_class>{1, 2}), std::invalid_argument);
    }
    SUBCASE("rejects empty") {
        CHECK_THROWS_AS(normalize_primitive(std::vector<mpq_class>{}), std::invalid_argument);
    }
    SUBCASE("rejects foreign primes") {
        CHECK_THROWS_AS(normalize_primitive(std::vector<mpq_class>{5, -4, -1}), std::invalid_argument);
    }
}

TEST_CASE("normalization is idempotent and scale invariant") {
    std::mt19937_64 rng(7);
    const std::vector<std::vector<mpq_class>> seeds = {
        {2, -1, -1}, {9, -1, -8}, {3, 1, -2, -2}, {729, -1, -216, -512}};
    for (const auto& seed : seeds) {
        const auto base = normalize_primitive(seed);
        for (int i = 0; i < 50; ++i) {
            const long s2 = static_cast<long>(rng() % 7) - 3;
            const long s3 = static_cast<long>(rng() % 7) - 3;
            mpq_class scale = 1;
            for (long j = 0; j < std::abs(s2); ++j) scale *= (s2 > 0 ? mpq_class(2) : mpq_class(1, 2));
            for (long j = 0; j < std::abs(s3); ++j) scale *= (s3 > 0 ? mpq_class(3) : mpq_class(1, 3));
            std::vector<mpq_class> scaled;
            for (const auto& v : seed) scaled.push_back(v * scale);
            CHECK(normalize_primitive(scaled).to_text() == base.to_text());
        }
        // idempotence: renormalizing the output is the identity
        std::vector<mpq_class> vals;
        for (const auto& v : base.values()) vals.emplace_back(v);
        CHECK(normalize_primitive(vals).to_text() == base.to_text());
    }
}

TEST_CASE("vanishing subsums") {
    const auto t1 = normalize_primitive(std::vector<mpq_class>{3, -1, -2});
    CHECK_FALSE(detect_vanishing_subsum(t1).has_vanishing);

    const std::vector<mpz_class> v2 = {9, 3, -3, -8, -1};
    const auto r2 = detect_vanishing_subsum(v2);
    CHECK(r2.has_vanishing);
    CHECK(r2.witness == std::vector<std::size_t>{1, 2});  // 0-based {2,3} of the statement

    const std::vector<mpz_class> v3 = {9, -1, -8, 4, -1, -3};
    const auto r3 = detect_vanishing_subsum(v3);
    CHECK(r3.has_vanishing);
    CHECK(r3.witness == std::vector<std::size_t>{0, 1, 2});

    const auto p = pairwise_vanishing(normalize_primitive(std::vector<mpq_class>{6, 1, -1, -6}));
    REQUIRE(p.has_value());
    CHECK(p->first == 0);  // the head/tail pair 6, -6 comes first in scan order
    CHECK(p->second == 3);
}

TEST_CASE("heights") {
    CHECK(tuple_height(normalize_primitive(std::vector<mpq_class>{2, -1, -1})) == 2);
    CHECK(tuple_height(normalize_primitive(std::vector<mpq_class>{9, -1, -8})) == 9);
}

TEST_CASE("product formula") {
    CHECK(product_formula_check(mpq_class(1)));
    CHECK(product_formula_check(mpq_class(-8, 9)));
    CHECK_THROWS_AS(product_formula_check(mpq_class(5)), std::domain_error);
    CHECK_THROWS_AS(product_formula_check(mpq_class(0)), std::domain_error);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        SignedMonomial m{rng() % 2 ? 1 : -1, static_cast<int64_t>(rng() % 401) - 200,
                         static_cast<int64_t>(rng() % 401) - 200};
        CHECK(product_formula_check(m.value()));
    }
}

TEST_CASE("matching inequality") {
    CHECK(matching_inequality(5, 1, 3));
    CHECK(matching_inequality(8, 4, 4));
    CHECK_FALSE(matching_inequality(6, 1, 4));
    CHECK_THROWS_AS(matching_inequality(3, 3, 2), std::invalid_argument);
}

TEST_CASE("text round trip") {
    const std::vector<std::string> forms = {"[2,-1,-1]", "[729,-1,-216,-512]",
                                            "[531441,2,-243,-6912,-524288]"};
    for (const auto& f : forms) CHECK(SolutionTuple::from_text(f).to_text() == f);
    CHECK(SolutionTuple::from_text(" [ 9, -1, -8 ] ").to_text() == "[9,-1,-8]");

    for (const char* bad : {"[", "[]", "[1,2", "[1,,2]", "nonsense"})
        CHECK_THROWS_AS(SolutionTuple::from_text(bad), std::invalid_argument);
}
