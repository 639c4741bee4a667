#include "doctest.h"

#include <set>

#include "sunit/enumerate.hpp"
#include "sunit/newman.hpp"
#include "sunit/sieve.hpp"

using namespace sunit;

TEST_CASE("standard moduli recompute the reference values") {
    const auto [n36, n180] = standard_moduli();
    CHECK(n36.m == 23350145);
    CHECK(n36.ord2 == 36);
    CHECK(n36.ord3 == 36);
    CHECK(n180.m == 439564261361225ULL);
    CHECK(n180.ord2 == 180);
    CHECK(n180.ord3 == 180);
    CHECK(n36.m % 2 == 1);
    CHECK(n36.m % 3 != 0);
}

TEST_CASE("generic gcd moduli") {
    const auto m4 = sieve_modulus_for(4);  // gcd(15, 80) = 5
    CHECK(m4.m == 5);
    CHECK(m4.ord2 == 4);
    CHECK(m4.ord3 == 4);
    const auto m12 = sieve_modulus_for(12);  // gcd(4095, 531440) = 455
    CHECK(m12.m == 455);
    CHECK(12 % m12.ord2 == 0);
    CHECK(12 % m12.ord3 == 0);
}

TEST_CASE("soundness: every exact solution projects into the local set") {
    const auto m4 = sieve_modulus_for(4);
    const auto [n36, n180] = standard_moduli();
    for (int id : {1, 7, 14}) {
        const auto& fam = FamilySpec::get(id);
        const auto eq = EquationSpec::from_family(fam);
        const auto exact = solve_family(fam, {19, 12});
        const auto locals4 = local_solutions(eq, m4);
        std::set<ResidueTuple> set4(locals4.begin(), locals4.end());
        for (const auto& t : exact) {
            std::vector<uint32_t> assign(t.begin(), t.end());
            CHECK(set4.count(project_residues(eq, assign, m4)) == 1);
        }
    }
    // the 36-order modulus on one family
    const auto& fam7 = FamilySpec::get(7);
    const auto eq7 = EquationSpec::from_family(fam7);
    const auto locals36 = local_solutions(eq7, n36);
    std::set<ResidueTuple> set36(locals36.begin(), locals36.end());
    for (const auto& t : solve_family(fam7, {19, 12})) {
        std::vector<uint32_t> assign(t.begin(), t.end());
        CHECK(set36.count(project_residues(eq7, assign, n36)) == 1);
    }
}

TEST_CASE("prefiltered lifting equals the direct computation") {
    const auto m4 = sieve_modulus_for(4);
    const auto m12 = sieve_modulus_for(12);
    const auto eq = EquationSpec::from_family(FamilySpec::get(7));
    CHECK(local_solutions_prefiltered(eq, m12, m4) == local_solutions(eq, m12));
    CHECK_THROWS_AS(local_solutions_prefiltered(eq, m4, m12), std::invalid_argument);
}

TEST_CASE("lift and check against direct enumeration on small caps") {
    const auto [n36, n180] = standard_moduli();
    (void)n180;
    for (int id : {1, 7}) {
        const auto& fam = FamilySpec::get(id);
        const auto eq = EquationSpec::from_family(fam);
        const auto locals = local_solutions(eq, n36);
        const auto lifted = lift_and_check(eq, locals, n36, {5, 3});
        const auto direct = solve_family(fam, {5, 3});
        std::vector<ResidueTuple> direct_vec;
        for (const auto& t : direct) direct_vec.emplace_back(t.begin(), t.end());
        CHECK(lifted == direct_vec);
    }
}

TEST_CASE("empty locals lift to nothing") {
    const auto m4 = sieve_modulus_for(4);
    const auto eq = EquationSpec::from_family(FamilySpec::get(1));
    CHECK(lift_and_check(eq, {}, m4, {19, 12}).empty());
}

TEST_CASE("the representation-pair equation routes through the same sieve") {
    const auto eq = EquationSpec::representation_pair();
    const auto m4 = sieve_modulus_for(4);
    const auto locals = local_solutions(eq, m4);
    CHECK(!locals.empty());
    // the two representations of 43 used in the text: 8+8+27 = 12+4+27
    const Representation r1{3, 0, 3, 3}, r2{2, 1, 2, 3};
    std::vector<uint32_t> assign = {r1.a, r1.b, r1.c, r1.d, r2.a, r2.b, r2.c, r2.d};
    CHECK(eq.substitute_sum(assign) == 0);
    std::set<ResidueTuple> s(locals.begin(), locals.end());
    CHECK(s.count(project_residues(eq, assign, m4)) == 1);
}

TEST_CASE("oversized hash sides are rejected") {
    const auto [n36, n180] = standard_moduli();
    (void)n36;
    const auto eq = EquationSpec::representation_pair();
    CHECK_THROWS_AS(local_solutions(eq, n180), std::invalid_argument);
}
