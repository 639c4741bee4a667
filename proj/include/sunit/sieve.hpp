#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "sunit/families.hpp"

namespace sunit {

// A modulus m = gcd(2^k - 1, 3^k - 1) together with the multiplicative orders
// of 2 and 3 mod m (both divide k). gcd(6, m) = 1.
struct SieveModulus {
    uint64_t m = 1;
    uint32_t k = 0;
    uint32_t ord2 = 1;
    uint32_t ord3 = 1;
};

// gcd(2^k - 1, 3^k - 1) computed from scratch (bignum gcd); requires the
// result to fit 64 bits.
SieveModulus sieve_modulus_for(uint32_t k);

// The two standard moduli N_36 and N_180.
std::pair<SieveModulus, SieveModulus> standard_moduli();

// Residue assignment per equation variable: 2-exponent slots live mod ord2,
// 3-exponent slots mod ord3.
using ResidueTuple = std::vector<uint32_t>;

// All residue tuples solving the equation mod m, meet-in-the-middle over the
// smaller side.
std::vector<ResidueTuple> local_solutions(const EquationSpec& eq, const SieveModulus& m,
                                          unsigned workers = 0);

// Same, but prefiltered through a smaller modulus whose k divides the big
// one's (classes lift slotwise from ord_small to ord_big).
std::vector<ResidueTuple> local_solutions_prefiltered(const EquationSpec& eq,
                                                      const SieveModulus& big,
                                                      const SieveModulus& small,
                                                      unsigned workers = 0);

// Enumerate the integer exponent tuples <= caps inside each residue class and
// keep those solving the equation exactly (bignum); optionally drop tuples
// with vanishing subsums so the output matches the direct enumeration.
std::vector<ResidueTuple> lift_and_check(const EquationSpec& eq,
                                         const std::vector<ResidueTuple>& locals,
                                         const SieveModulus& m, ExponentBox caps,
                                         bool drop_vanishing_subsums = true);

// Residue image of an exact exponent assignment.
ResidueTuple project_residues(const EquationSpec& eq, const std::vector<uint32_t>& assign,
                              const SieveModulus& m);

}  // namespace sunit
