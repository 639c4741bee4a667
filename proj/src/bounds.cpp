#include "sunit/bounds.hpp"

#include <stdexcept>

#include "sunit/padic.hpp"

namespace sunit {

namespace {

constexpr long kBoundBits = 256;

ValidatedReal vr_e(long bits) { return ValidatedReal::exact(1L, bits).exp(); }

// decimal constants from the bound statements, taken as exact rationals
ValidatedReal vr_dec(long num, long den, long bits) {
    return ValidatedReal::from_rational(mpq_class(num, den), bits);
}

ValidatedReal log_eX(const ValidatedReal& x) {
    // log(e x) = 1 + log x
    return x.log().add(1);
}

mpz_class pow_ui(unsigned long b, unsigned long e) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), b, e);
    return v;
}

}  // namespace

ValidatedReal matveev_lower(const ComplexLFLInput& in) {
    if (in.n < 2 || static_cast<int>(in.A.size()) != in.n)
        throw std::invalid_argument("matveev_lower: need n >= 2 and n values A_j");
    if (in.kappa_real != 1 && in.kappa_real != 2)
        throw std::invalid_argument("matveev_lower: kappa must be 1 or 2");
    const long bits = kBoundBits;
    ValidatedReal en = vr_e(bits).mul(in.n);
    ValidatedReal lead = in.kappa_real == 2 ? en.square() / ValidatedReal::exact(2L, bits) : en;
    ValidatedReal v = lead;
    v = v * ValidatedReal::exact(pow_ui(30, in.n + 3), bits);
    v = v * ValidatedReal::exact(static_cast<long>(in.n), bits).pow(3.5);
    v = v.mul(mpz_class(in.D) * in.D);
    v = v * log_eX(ValidatedReal::exact(static_cast<long>(in.D), bits));
    v = v * log_eX(in.B);
    for (const auto& a : in.A) v = v * a;
    return -v;
}

ValidatedReal yu_upper(const PadicLFLInput& in) {
    if (in.n < 2 || static_cast<int>(in.A.size()) != in.n)
        throw std::invalid_argument("yu_upper: need n >= 2 and n values A_j");
    const long bits = kBoundBits;
    ValidatedReal logp = ValidatedReal::log_of(mpz_class(static_cast<unsigned long>(in.p)), bits);
    ValidatedReal base = ValidatedReal::exact(6L * (in.n + 1) * in.D, bits) / logp.sqrt();
    ValidatedReal v = ValidatedReal::exact(12L, bits);
    v = v * base.pow(2.0 * (in.n + 1));
    v = v * ValidatedReal::exact(mpz_class(pow_ui(in.p, in.D) - 1), bits);
    // log(e^5 n D) = 5 + log(n D)
    v = v * ValidatedReal::exact(static_cast<long>(in.n) * in.D, bits).log().add(5);
    for (const auto& a : in.A) v = v * a;
    v = v * in.B.log();
    return v;
}

ValidatedReal laurent_two_log_lower(const TwoLogInput& in) {
    const long bits = kBoundBits;
    ValidatedReal clamp = ValidatedReal::max(
        in.b_prime.log() + vr_dec(38, 100, bits),
        ValidatedReal::max(ValidatedReal::exact(30L, bits) / ValidatedReal::exact(static_cast<long>(in.D), bits),
                           ValidatedReal::exact(1L, bits)));
    ValidatedReal v = vr_dec(179, 10, bits);
    v = v.mul(mpz_class(in.D) * in.D * in.D * in.D);
    v = v * clamp.square() * in.logA1 * in.logA2;
    return -v;
}

ValidatedReal bl_padic_two_log_upper(const PadicTwoLogInput& in) {
    const long bits = kBoundBits;
    if (in.branch == PadicTwoLogBranch::odd_p && in.p == 2)
        throw std::invalid_argument("bl_padic_two_log_upper: odd-p branch with p = 2");
    if (in.branch != PadicTwoLogBranch::odd_p && in.p != 2)
        throw std::invalid_argument("bl_padic_two_log_upper: p = 2 branches require p = 2");
    if (in.branch == PadicTwoLogBranch::two_nu_le1) {
        ValidatedReal clamp = ValidatedReal::max(in.b_prime.log() + vr_dec(4, 100, bits),
                                                 ValidatedReal::exact(10L, bits));
        return ValidatedReal::exact(208L, bits) * clamp.square() * in.logA1 * in.logA2;
    }
    ValidatedReal logp = ValidatedReal::log_of(mpz_class(static_cast<unsigned long>(in.p)), bits);
    ValidatedReal elogp = in.E * logp;
    ValidatedReal clamp = ValidatedReal::max(
        in.b_prime.log() + elogp.log() + vr_dec(4, 10, bits),
        ValidatedReal::max(ValidatedReal::exact(6L, bits) * elogp, ValidatedReal::exact(5L, bits)));
    ValidatedReal v = vr_dec(361, 10, bits).mul(mpz_class(in.g));
    v = v / (in.E * in.E * in.E * logp.square().square());
    v = v * clamp.square() * in.logA1 * in.logA2;
    return v;
}

bool lfl2_gap_holds(unsigned long alpha, unsigned long beta) {
    if (beta < 2) throw std::invalid_argument("lfl2_gap_holds: beta >= 2 required");
    const mpz_class p2 = pow_ui(2, alpha);
    const mpz_class p3 = pow_ui(3, beta);
    const mpz_class lhs = abs(mpz_class(p2 - p3));
    const mpz_class mx = std::max(p2, p3);
    for (long digits = 48; digits <= 1 << 14; digits *= 2) {
        const long bits = digits_to_bits(digits);
        ValidatedReal logb = ValidatedReal::log_of(mpz_class(static_cast<unsigned long>(beta)), bits);
        ValidatedReal rhs =
            ValidatedReal::exact(mx, bits) * (-(ValidatedReal::exact(20L, bits) * logb.square())).exp();
        if (rhs.certainly_less(mpq_class(lhs))) return true;
        if (rhs.certainly_greater(mpq_class(lhs))) return false;
    }
    throw std::runtime_error("lfl2_gap_holds: undecided at precision ceiling");
}

namespace {

ValidatedReal padic_cutoff(long coeff, const mpz_class& u, const mpz_class& gamma, long digits) {
    if (u <= 0 || gamma < 2) throw std::invalid_argument("cutoff: u >= 1 and gamma >= 2 required");
    const long bits = digits_to_bits(digits);
    ValidatedReal logu = ValidatedReal::log_of(u, bits);
    return ValidatedReal::exact(coeff, bits) * logu.square() * ValidatedReal::log_of(gamma, bits);
}

// nu_p(c1 * base^u + c2) through arithmetic mod p^m; m grows from cap_hint.
// Degenerate c1 * base^u + c2 = 0 throws.
unsigned long exact_nu_modular(unsigned long base, const mpz_class& u, const mpz_class& c1,
                               const mpz_class& c2, unsigned long p, unsigned long cap_hint) {
    for (unsigned long m = cap_hint + 4;; m *= 2) {
        mpz_class pm;
        mpz_ui_pow_ui(pm.get_mpz_t(), p, m);
        mpz_class t;
        mpz_powm(t.get_mpz_t(), mpz_class(static_cast<unsigned long>(base)).get_mpz_t(),
                 u.get_mpz_t(), pm.get_mpz_t());
        t = ((t * c1 + c2) % pm + pm) % pm;
        if (t != 0) return nu(p, t);
        // residue vanished: either the combination is degenerate or nu >= m
        if (c1 != 0 && c2 % c1 == 0) {
            mpz_class q = -c2 / c1;
            if (q > 0) {
                mpz_class rest = q;
                const auto e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(),
                                          mpz_class(static_cast<unsigned long>(base)).get_mpz_t());
                if (rest == 1 && mpz_class(static_cast<unsigned long>(e)) == u)
                    throw std::domain_error("exact_nu: degenerate vanishing combination");
            }
        }
        if (m > 64 * (cap_hint + 4))
            throw std::runtime_error("exact_nu: valuation exceeds every tried modulus");
    }
}

}  // namespace

ValidatedReal lflp_bound(const mpz_class& u, const mpz_class& gamma, long digits) {
    if (gamma < 3) throw std::invalid_argument("lflp_bound: gamma >= 3 required");
    return padic_cutoff(17, u, gamma, digits);
}

unsigned long lflp_exact_nu2(const mpz_class& g1, const mpz_class& g2, const mpz_class& u) {
    if (g1 % 2 == 0 || g2 % 2 == 0) throw std::invalid_argument("lflp: gamma_1, gamma_2 must be odd");
    const mpz_class gamma = std::max(std::max(mpz_class(abs(g1)), mpz_class(abs(g2))), mpz_class(3));
    const double cap = lflp_bound(u, gamma).upper_double();
    return exact_nu_modular(3, u, g1, mpz_class(-g2), 2, static_cast<unsigned long>(cap) + 1);
}

bool lflp_check(const mpz_class& g1, const mpz_class& g2, const mpz_class& u) {
    const mpz_class gamma = std::max(std::max(mpz_class(abs(g1)), mpz_class(abs(g2))), mpz_class(3));
    const unsigned long v = lflp_exact_nu2(g1, g2, u);
    return ValidatedReal::exact(static_cast<long>(v), 64).certainly_less(lflp_bound(u, gamma));
}

ValidatedReal lflp2_bound(const mpz_class& u, const mpz_class& gamma, long digits) {
    if (gamma < 2) throw std::invalid_argument("lflp2_bound: gamma >= 2 required");
    return padic_cutoff(10, u, gamma, digits);
}

unsigned long lflp2_exact_nu3(const mpz_class& g1, const mpz_class& g2, const mpz_class& u) {
    if (g1 % 3 == 0 || g2 % 3 == 0)
        throw std::invalid_argument("lflp2: gcd(gamma_1 gamma_2, 3) = 1 required");
    const mpz_class gamma = std::max(std::max(mpz_class(abs(g1)), mpz_class(abs(g2))), mpz_class(2));
    const double cap = lflp2_bound(u, gamma).upper_double();
    return exact_nu_modular(2, u, g1, mpz_class(-g2), 3, static_cast<unsigned long>(cap) + 1);
}

bool lflp2_check(const mpz_class& g1, const mpz_class& g2, const mpz_class& u) {
    const mpz_class gamma = std::max(std::max(mpz_class(abs(g1)), mpz_class(abs(g2))), mpz_class(2));
    const unsigned long v = lflp2_exact_nu3(g1, g2, u);
    return ValidatedReal::exact(static_cast<long>(v), 64).certainly_less(lflp2_bound(u, gamma));
}

}  // namespace sunit
