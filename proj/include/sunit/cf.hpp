#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sunit/validated_real.hpp"

namespace sunit {

// Produces an enclosure of a fixed real number at the requested precision.
using RealProducer = std::function<ValidatedReal(long digits)>;

struct precision_ceiling_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// log x / log y with certified radius <= 10^(1-digits).
ValidatedReal log_ratio(const mpz_class& x, const mpz_class& y, long digits);
RealProducer log_ratio_producer(const mpz_class& x, const mpz_class& y);

// p_i/q_i in lowest terms with p_i = a_i p_{i-1} + p_{i-2}; index 0 carries the
// integer part a_0.
struct Convergent {
    std::size_t index = 0;
    mpz_class a;
    mpz_class p;
    mpz_class q;

    std::string to_json() const;  // {"i":..,"a":"..","p":"..","q":".."}
};

struct CFExpansion {
    std::vector<Convergent> convergents;
    bool terminated = false;  // the number turned out rational at this depth
    long digits_used = 0;
};

// First `depth` partial quotients (indices 0..depth-1), each floor certified
// against the interval bounds; precision escalates geometrically from
// `start_digits` and throws precision_ceiling_error beyond `ceiling_digits`.
CFExpansion cf_expand(const RealProducer& f, std::size_t depth, long start_digits = 64,
                      long ceiling_digits = 1000000);

// True iff p/q (gcd 1, q >= 1) appears among the convergents of f up to the
// first denominator exceeding q.
bool is_convergent(const mpz_class& p, const mpz_class& q, const RealProducer& f,
                   long ceiling_digits = 1000000);

// Certified enclosure of |q*kappa - p| for the nearest integer p; escalates
// until the lower endpoint is positive.
ValidatedReal homogeneous_gap(const mpz_class& q, const RealProducer& kappa,
                              long ceiling_digits = 1000000);

// Inputs of the one-dimensional reduction: kappa, mu at a fixed working
// precision, the exponent bound M, inequality constants A, B > 1, and a
// convergent denominator q with q > 6M (checked at construction).
struct BDInput {
    ValidatedReal kappa;
    ValidatedReal mu;
    mpz_class M;
    double A = 1.0;
    double B = 2.0;
    mpz_class q;

    BDInput(ValidatedReal kappa, ValidatedReal mu, mpz_class M, double A, double B, mpz_class q);
};

struct BDOutcome {
    enum class Status { ok, eps_nonpositive, undecided };
    Status status = Status::undecided;
    ValidatedReal eps;           // || mu q || - M || kappa q ||
    ValidatedReal m_kappa_norm;  // M || kappa q ||
    ValidatedReal q_over_eps;    // valid when status == ok
    ValidatedReal threshold;     // log(A q / eps) / log B, valid when status == ok

    const char* reason() const;
};

// epsilon = ||mu q|| - M ||kappa q|| on certified intervals. When epsilon > 0
// provably, the returned threshold bounds the m-range that admits no solution
// of 0 < m kappa - n + mu < A B^-m (threshold <= m <= M excluded).
BDOutcome baker_davenport(const BDInput& in);

}  // namespace sunit
