#include "sunit/families.hpp"

#include <stdexcept>

namespace sunit {

namespace {

constexpr int A = kVarA, B = kVarB, C = kVarC, D = kVarD, E = kVarE, F = kVarF, N = -1;

// 2^a3^b, 2^c, 3^d, 2^e3^f and 1 in the layouts of the eighteen equations
const std::array<FamilySpec, 18> kFamilies = {{
    {1, {{{+1, A, B}, {+1, C, N}, {+1, N, D}, {+1, N, N}, {-1, E, F}}}},
    {2, {{{+1, A, B}, {+1, E, F}, {+1, C, N}, {+1, N, N}, {-1, N, D}}}},
    {3, {{{+1, A, B}, {+1, E, F}, {+1, N, D}, {+1, N, N}, {-1, C, N}}}},
    {4, {{{+1, A, N}, {+1, C, N}, {+1, N, B}, {+1, N, D}, {-1, E, F}}}},
    {5, {{{+1, A, N}, {+1, E, F}, {+1, N, B}, {+1, N, D}, {-1, C, N}}}},
    {6, {{{+1, A, N}, {+1, C, N}, {+1, E, F}, {+1, N, B}, {-1, N, D}}}},
    {7, {{{+1, A, B}, {+1, C, N}, {+1, N, D}, {-1, E, F}, {-1, N, N}}}},
    {8, {{{+1, A, B}, {+1, C, N}, {+1, N, N}, {-1, E, F}, {-1, N, D}}}},
    {9, {{{+1, A, B}, {+1, N, D}, {+1, N, N}, {-1, E, F}, {-1, C, N}}}},
    {10, {{{+1, C, N}, {+1, N, D}, {+1, N, N}, {-1, E, F}, {-1, A, B}}}},
    {11, {{{+1, A, B}, {+1, E, F}, {+1, N, D}, {-1, C, N}, {-1, N, N}}}},
    {12, {{{+1, A, B}, {+1, E, F}, {+1, C, N}, {-1, N, D}, {-1, N, N}}}},
    {13, {{{+1, A, B}, {+1, E, F}, {+1, N, N}, {-1, C, N}, {-1, N, D}}}},
    {14, {{{+1, A, N}, {+1, C, N}, {+1, N, B}, {-1, E, F}, {-1, N, D}}}},
    {15, {{{+1, A, N}, {+1, N, B}, {+1, N, D}, {-1, E, F}, {-1, C, N}}}},
    {16, {{{+1, A, N}, {+1, N, B}, {+1, E, F}, {-1, C, N}, {-1, N, D}}}},
    {17, {{{+1, N, B}, {+1, N, D}, {+1, E, F}, {-1, A, N}, {-1, C, N}}}},
    {18, {{{+1, A, N}, {+1, C, N}, {+1, E, F}, {-1, N, B}, {-1, N, D}}}},
}};

}  // namespace

const FamilySpec& FamilySpec::get(int id) {
    if (id < 1 || id > 18) throw std::out_of_range("FamilySpec: id must be 1..18");
    return kFamilies[id - 1];
}

const std::array<FamilySpec, 18>& FamilySpec::all() { return kFamilies; }

int64_t FamilySpec::term_value_i64(std::size_t i, const ExponentTuple& assign) const {
    const TermTemplate& t = terms.at(i);
    int64_t v = 1;
    if (t.var2 >= 0) v <<= assign[t.var2];
    if (t.var3 >= 0)
        for (uint32_t j = 0; j < assign[t.var3]; ++j) v *= 3;
    return t.sign * v;
}

mpz_class FamilySpec::term_value(std::size_t i, const ExponentTuple& assign) const {
    const TermTemplate& t = terms.at(i);
    mpz_class v = 1;
    if (t.var3 >= 0) mpz_ui_pow_ui(v.get_mpz_t(), 3, assign[t.var3]);
    if (t.var2 >= 0) mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), assign[t.var2]);
    return t.sign < 0 ? mpz_class(-v) : v;
}

mpz_class FamilySpec::substitute_sum(const ExponentTuple& assign) const {
    mpz_class s = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) s += term_value(i, assign);
    return s;
}

EquationSpec EquationSpec::from_family(const FamilySpec& f) {
    EquationSpec e;
    e.num_vars = 6;
    e.var_base = {2, 3, 2, 3, 2, 3};
    for (const auto& t : f.terms) e.terms.push_back({t.sign, t.var2, t.var3});
    return e;
}

EquationSpec EquationSpec::representation_pair() {
    EquationSpec e;
    e.num_vars = 8;
    e.var_base = {2, 3, 2, 3, 2, 3, 2, 3};
    e.terms = {{+1, 0, 1}, {+1, 2, -1}, {+1, -1, 3}, {-1, 4, 5}, {-1, 6, -1}, {-1, -1, 7}};
    return e;
}

mpz_class EquationSpec::substitute_sum(const std::vector<uint32_t>& assign) const {
    mpz_class s = 0;
    for (const auto& t : terms) {
        mpz_class v = 1;
        if (t.var3 >= 0) mpz_ui_pow_ui(v.get_mpz_t(), 3, assign.at(t.var3));
        if (t.var2 >= 0) mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), assign.at(t.var2));
        s += t.sign < 0 ? mpz_class(-v) : v;
    }
    return s;
}

}  // namespace sunit
