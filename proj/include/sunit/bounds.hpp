#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "sunit/validated_real.hpp"

namespace sunit {

// n-term complex linear form data. A_j >= max{D h(alpha_j), |log alpha_j|, 0.16}
// is the caller's obligation.
struct ComplexLFLInput {
    int n = 2;
    int D = 1;
    int kappa_real = 1;  // 1 for real fields, 2 otherwise
    ValidatedReal B;     // max |b_i|, >= 1
    std::vector<ValidatedReal> A;
};

// p-adic n-term data. A_j >= max{h(alpha_j), log p}; B >= 3.
struct PadicLFLInput {
    int n = 2;
    int D = 1;
    unsigned long p = 2;
    ValidatedReal B;
    std::vector<ValidatedReal> A;
};

// Two-log complex data: log A_i >= 1/D, b' > 0.
struct TwoLogInput {
    int D = 1;
    ValidatedReal b_prime;
    ValidatedReal logA1;
    ValidatedReal logA2;
};

enum class PadicTwoLogBranch { odd_p, two_nu_ge2, two_nu_le1 };

// p-adic two-log data: log A_i >= E log p, E > 1/(p-1).
struct PadicTwoLogInput {
    unsigned long p = 2;
    long g = 1;
    ValidatedReal E;
    ValidatedReal b_prime;
    ValidatedReal logA1;
    ValidatedReal logA2;
    PadicTwoLogBranch branch = PadicTwoLogBranch::two_nu_ge2;
};

// Lower bound for log|Lambda|:
//   -(1/kappa)(en)^kappa 30^(n+3) n^3.5 D^2 log(eD) log(eB) A_1...A_n.
ValidatedReal matveev_lower(const ComplexLFLInput& in);

// Upper bound for ord_p(Lambda):
//   12 (6(n+1)D / sqrt(log p))^(2(n+1)) (p^D - 1) log(e^5 nD) A_1...A_n log B.
ValidatedReal yu_upper(const PadicLFLInput& in);

// Lower bound for log|Lambda| in two logs:
//   -17.9 D^4 (max{log b' + 0.38, 30/D, 1})^2 log A_1 log A_2.
ValidatedReal laurent_two_log_lower(const TwoLogInput& in);

// Upper bound for nu_p(Lambda) in two logs; branch-dependent constants.
ValidatedReal bl_padic_two_log_upper(const PadicTwoLogInput& in);

// |2^alpha - 3^beta| > max{2^alpha, 3^beta} exp(-20 log^2 beta), decided with
// an exact left side against a certified right side.
bool lfl2_gap_holds(unsigned long alpha, unsigned long beta);

// 17 log^2(u) log(gamma): the nu_2 cutoff for 3^u g1 - g2 with odd g1, g2.
ValidatedReal lflp_bound(const mpz_class& u, const mpz_class& gamma, long digits = 32);
// Exact nu_2(3^u g1 - g2) compared against the cutoff. Throws std::domain_error
// on the degenerate case 3^u g1 = g2.
bool lflp_check(const mpz_class& g1, const mpz_class& g2, const mpz_class& u);
unsigned long lflp_exact_nu2(const mpz_class& g1, const mpz_class& g2, const mpz_class& u);

// 10 log^2(u) log(gamma): the nu_3 cutoff for 2^u g1 - g2, gcd(g1 g2, 3) = 1.
ValidatedReal lflp2_bound(const mpz_class& u, const mpz_class& gamma, long digits = 32);
bool lflp2_check(const mpz_class& g1, const mpz_class& g2, const mpz_class& u);
unsigned long lflp2_exact_nu3(const mpz_class& g1, const mpz_class& g2, const mpz_class& u);

}  // namespace sunit
