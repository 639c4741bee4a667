#include "sunit/cf.hpp"

#include <cmath>

namespace sunit {

ValidatedReal log_ratio(const mpz_class& x, const mpz_class& y, long digits) {
    if (x < 2 || y < 2) throw std::invalid_argument("log_ratio: x, y >= 2 required");
    if (digits < 16) throw std::invalid_argument("log_ratio: digits >= 16 required");
    const long bits = digits_to_bits(digits);
    return ValidatedReal::log_of(x, bits) / ValidatedReal::log_of(y, bits);
}

RealProducer log_ratio_producer(const mpz_class& x, const mpz_class& y) {
    return [x, y](long digits) { return log_ratio(x, y, std::max(16L, digits)); };
}

std::string Convergent::to_json() const {
    return "{\"i\":" + std::to_string(index) + ",\"a\":\"" + a.get_str() + "\",\"p\":\"" +
           p.get_str() + "\",\"q\":\"" + q.get_str() + "\"}";
}

CFExpansion cf_expand(const RealProducer& f, std::size_t depth, long start_digits,
                      long ceiling_digits) {
    if (depth < 1) throw std::invalid_argument("cf_expand: depth >= 1 required");
    for (long digits = start_digits;; digits *= 2) {
        if (digits > ceiling_digits)
            throw precision_ceiling_error("cf_expand: precision ceiling reached before stabilization");
        ValidatedReal x = f(digits);
        CFExpansion out;
        out.digits_used = digits;
        mpz_class p_prev2 = 0, q_prev2 = 1, p_prev = 1, q_prev = 0;
        bool ok = true;
        for (std::size_t i = 0; i < depth; ++i) {
            const auto fl = x.floor();
            if (!fl) {
                ok = false;
                break;
            }
            if (i > 0 && *fl < 1) throw std::logic_error("cf_expand: partial quotient < 1");
            Convergent c;
            c.index = i;
            c.a = *fl;
            c.p = c.a * p_prev + p_prev2;
            c.q = c.a * q_prev + q_prev2;
            p_prev2 = p_prev;
            q_prev2 = q_prev;
            p_prev = c.p;
            q_prev = c.q;
            out.convergents.push_back(std::move(c));
            ValidatedReal frac = x - ValidatedReal::exact(*fl, x.prec_bits());
            if (frac.is_point() && frac.sign() == 0) {
                out.terminated = true;  // exactly rational at this depth
                break;
            }
            if (frac.sign() <= 0) {
                ok = false;  // cannot separate the fractional part from zero
                break;
            }
            x = frac.recip();
        }
        if (ok) return out;
    }
}

namespace {

std::size_t depth_for_denominator(const mpz_class& q) {
    // q_i grows at least like Fibonacci, so log_phi(q) + a margin suffices
    const std::size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2);
    return static_cast<std::size_t>(static_cast<double>(bits) * 1.4404200904125567) + 4;
}

}  // namespace

bool is_convergent(const mpz_class& p, const mpz_class& q, const RealProducer& f,
                   long ceiling_digits) {
    if (q < 1) throw std::invalid_argument("is_convergent: q >= 1 required");
    if (gcd(p, q) != 1) throw std::invalid_argument("is_convergent: gcd(p, q) = 1 required");
    const std::size_t depth = depth_for_denominator(q);
    const CFExpansion e = cf_expand(f, depth, 64, ceiling_digits);
    for (const auto& c : e.convergents) {
        if (c.q > q) break;
        if (c.p == p && c.q == q) return true;
    }
    return false;
}

ValidatedReal homogeneous_gap(const mpz_class& q, const RealProducer& kappa, long ceiling_digits) {
    if (q < 1) throw std::invalid_argument("homogeneous_gap: q >= 1 required");
    for (long digits = 64;; digits *= 2) {
        if (digits > ceiling_digits)
            throw precision_ceiling_error("homogeneous_gap: precision ceiling reached");
        const ValidatedReal z = kappa(digits).mul(q);
        const auto n = z.nearest_int();
        if (!n) continue;
        const ValidatedReal d = (z - ValidatedReal::exact(*n, z.prec_bits())).abs();
        if (d.sign() > 0) return d;
    }
}

BDInput::BDInput(ValidatedReal kappa_, ValidatedReal mu_, mpz_class M_, double A_, double B_,
                 mpz_class q_)
    : kappa(std::move(kappa_)), mu(std::move(mu_)), M(std::move(M_)), A(A_), B(B_), q(std::move(q_)) {
    if (M < 1 || A <= 0 || B <= 1) throw std::invalid_argument("BDInput: need M >= 1, A > 0, B > 1");
    if (q <= 6 * M) throw std::invalid_argument("BDInput: q > 6M required");
}

const char* BDOutcome::reason() const {
    switch (status) {
        case Status::ok: return "ok";
        case Status::eps_nonpositive: return "eps_nonpositive";
        default: return "undecided";
    }
}

BDOutcome baker_davenport(const BDInput& in) {
    BDOutcome out;
    const auto kq = in.kappa.mul(in.q).nearest_int_distance();
    const auto mq = in.mu.mul(in.q).nearest_int_distance();
    if (!kq || !mq) {
        out.status = BDOutcome::Status::undecided;
        return out;
    }
    out.m_kappa_norm = kq->mul(in.M);
    out.eps = *mq - out.m_kappa_norm;
    const int s = out.eps.sign();
    if (s < 0 || (s == 0 && out.eps.is_point())) {
        out.status = BDOutcome::Status::eps_nonpositive;
        return out;
    }
    if (s == 0) {
        out.status = BDOutcome::Status::undecided;
        return out;
    }
    out.status = BDOutcome::Status::ok;
    const long prec = out.eps.prec_bits();
    out.q_over_eps = ValidatedReal::exact(in.q, prec) / out.eps;
    const ValidatedReal aq = ValidatedReal::exact(in.A, prec).mul(in.q);
    out.threshold = (aq / out.eps).log() / ValidatedReal::exact(in.B, prec).log();
    return out;
}

}  // namespace sunit
