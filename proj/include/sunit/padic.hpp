#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sunit {

// Solution set { x >= 0 : x = r (mod m) }, or Empty when a congruence has
// no solution. 0 <= r < m.
struct CongruenceClass {
    bool is_empty = true;
    mpz_class r = 0;
    mpz_class m = 1;

    static CongruenceClass none() { return {}; }
    static CongruenceClass of(mpz_class r, mpz_class m);

    std::string to_text() const;  // "r mod m" or "none"
    std::string to_json() const;  // {"r":"...","m":"..."} or null
    bool operator==(const CongruenceClass&) const = default;
};

// Lattice intersection of two congruence classes (CRT, non-coprime moduli allowed).
CongruenceClass intersect(const CongruenceClass& a, const CongruenceClass& b);

// nu_p(n): largest e with p^e | n. Throws std::domain_error on n = 0.
unsigned long nu(unsigned long p, const mpz_class& n);

// Exact nu_2(3^x - 1): 1 for odd x, nu_2(x) + 2 for even x.
unsigned long nu2_of_3pow_minus1(uint64_t x);
// Exact nu_3(2^x - 1): 0 for odd x, nu_3(x) + 1 for even x.
unsigned long nu3_of_2pow_minus1(uint64_t x);

// Order of g in (Z/p^k)^*. Throws std::domain_error unless gcd(g, p) = 1.
mpz_class mult_order(const mpz_class& g, unsigned long p, unsigned long k);

// Full solution set of g^x = t (mod p^k) as a class x = r (mod ord(g)),
// or Empty. Digit-by-digit lifting; every returned class is verified by one
// modular exponentiation. Requires gcd(g, p) = gcd(t, p) = 1.
CongruenceClass modular_log(const mpz_class& g, const mpz_class& t, unsigned long p, unsigned long k);

// Same with a rational target t_num/t_den (reduced via the inverse mod p^k).
CongruenceClass modular_log(const mpz_class& g, const mpz_class& t_num, const mpz_class& t_den,
                            unsigned long p, unsigned long k);

// A form c1 * base^t + c2 in the unknown exponent t.
struct ExponentialForm {
    mpz_class c1;
    mpz_class c2;
};

struct SmallestExponentHit {
    mpz_class t;
    std::size_t form_index;
};

// Smallest t with 1 <= t <= bound such that nu_p(c1 * base^t + c2) >= e for
// one of the forms, located through modular_log classes rather than a scan.
std::optional<SmallestExponentHit> smallest_exponent(const std::vector<ExponentialForm>& forms,
                                                     unsigned long base, unsigned long p,
                                                     unsigned long e, const mpz_class& bound);

}  // namespace sunit
