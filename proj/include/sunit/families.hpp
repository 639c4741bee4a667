#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace sunit {

// Exponent variables in the fixed order (a, b, c, d, e, f). Slots a, c, e are
// exponents of 2; slots b, d, f are exponents of 3.
using ExponentTuple = std::array<uint32_t, 6>;
inline constexpr int kVarA = 0, kVarB = 1, kVarC = 2, kVarD = 3, kVarE = 4, kVarF = 5;
inline bool var_is_base2(int v) { return v == kVarA || v == kVarC || v == kVarE; }

struct ExponentBox {
    uint32_t max2 = 19;
    uint32_t max3 = 12;
};

// One of the five monomials of a family equation: sign * 2^(var2) * 3^(var3),
// with -1 marking an absent factor (the constant term has both absent).
struct TermTemplate {
    int sign = 1;
    int var2 = -1;
    int var3 = -1;
};

// The 18 five-term layouts the k = 5 equation splits into, positives on the
// left-hand side of the printed equation, negatives on the right.
struct FamilySpec {
    int id = 0;  // 1..18
    std::array<TermTemplate, 5> terms;

    static const FamilySpec& get(int id);
    static const std::array<FamilySpec, 18>& all();

    int64_t term_value_i64(std::size_t i, const ExponentTuple& assign) const;
    mpz_class term_value(std::size_t i, const ExponentTuple& assign) const;
    // exact residue check helper: substitutes and sums (bignum)
    mpz_class substitute_sum(const ExponentTuple& assign) const;
};

// Generic signed-monomial equation over its own variable list; the sieve works
// on these so that both family equations and the two-representation equation
// route through one mechanism.
struct EquationSpec {
    struct Term {
        int sign = 1;
        int var2 = -1;  // index into vars, each var used once
        int var3 = -1;
    };
    std::vector<Term> terms;
    int num_vars = 0;
    std::vector<int> var_base;  // 2 or 3 per variable

    static EquationSpec from_family(const FamilySpec& f);
    // 2^v0 3^v1 + 2^v2 + 3^v3 - 2^v4 3^v5 - 2^v6 - 3^v7 = 0
    static EquationSpec representation_pair();

    mpz_class substitute_sum(const std::vector<uint32_t>& assign) const;
};

}  // namespace sunit
