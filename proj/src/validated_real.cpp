#include "sunit/validated_real.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace sunit {

long digits_to_bits(long digits) {
    return static_cast<long>(std::ceil(digits * 3.3219280948873626)) + 32;
}

ValidatedReal::ValidatedReal(long prec_bits) {
    if (prec_bits < MPFR_PREC_MIN) prec_bits = MPFR_PREC_MIN;
    mpfr_init2(lo_, prec_bits);
    mpfr_init2(hi_, prec_bits);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

ValidatedReal::ValidatedReal(const ValidatedReal& o) {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

ValidatedReal::ValidatedReal(ValidatedReal&& o) noexcept {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

ValidatedReal& ValidatedReal::operator=(ValidatedReal o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

ValidatedReal::~ValidatedReal() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void ValidatedReal::check() const {
    if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_) || mpfr_cmp(lo_, hi_) > 0)
        throw std::logic_error("ValidatedReal: invalid enclosure");
}

long ValidatedReal::prec_bits() const { return mpfr_get_prec(lo_); }

ValidatedReal ValidatedReal::exact(long v, long prec_bits) {
    ValidatedReal r(prec_bits);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::exact(double v, long prec_bits) {
    ValidatedReal r(prec_bits);
    mpfr_set_d(r.lo_, v, MPFR_RNDD);
    mpfr_set_d(r.hi_, v, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::exact(const mpz_class& v, long prec_bits) {
    ValidatedReal r(prec_bits);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::from_rational(const mpq_class& v, long prec_bits) {
    ValidatedReal r(prec_bits);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::log_of(const mpz_class& x, long prec_bits) {
    if (x <= 0) throw std::domain_error("log_of: positive integer required");
    return exact(x, prec_bits).log();
}

ValidatedReal ValidatedReal::from_endpoints(const mpfr_t lo, const mpfr_t hi) {
    ValidatedReal r(std::max(mpfr_get_prec(lo), mpfr_get_prec(hi)));
    mpfr_set(r.lo_, lo, MPFR_RNDD);
    mpfr_set(r.hi_, hi, MPFR_RNDU);
    r.check();
    return r;
}

ValidatedReal ValidatedReal::operator-() const {
    ValidatedReal r(prec_bits());
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::operator+(const ValidatedReal& o) const {
    ValidatedReal r(std::max(prec_bits(), o.prec_bits()));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::operator-(const ValidatedReal& o) const {
    ValidatedReal r(std::max(prec_bits(), o.prec_bits()));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::operator*(const ValidatedReal& o) const {
    const long p = std::max(prec_bits(), o.prec_bits());
    ValidatedReal r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    // lower endpoint: min of the four products rounded down
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // upper endpoint: max of the four rounded up
    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    r.check();
    return r;
}

ValidatedReal ValidatedReal::recip() const {
    if (sign() == 0) throw std::domain_error("recip: enclosure contains zero");
    ValidatedReal r(prec_bits());
    mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
    mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
    r.check();
    return r;
}

ValidatedReal ValidatedReal::operator/(const ValidatedReal& o) const { return *this * o.recip(); }

ValidatedReal ValidatedReal::mul(const mpz_class& c) const {
    ValidatedReal r(prec_bits());
    if (c >= 0) {
        mpfr_mul_z(r.lo_, lo_, c.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(r.hi_, hi_, c.get_mpz_t(), MPFR_RNDU);
    } else {
        mpfr_mul_z(r.lo_, hi_, c.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(r.hi_, lo_, c.get_mpz_t(), MPFR_RNDU);
    }
    r.check();
    return r;
}

ValidatedReal ValidatedReal::add(long c) const {
    ValidatedReal r(prec_bits());
    mpfr_add_si(r.lo_, lo_, c, MPFR_RNDD);
    mpfr_add_si(r.hi_, hi_, c, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::abs() const {
    ValidatedReal r(prec_bits());
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    // straddles zero
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::square() const {
    ValidatedReal a = abs();
    ValidatedReal r(prec_bits());
    mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("sqrt: negative enclosure");
    ValidatedReal r(prec_bits());
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::log() const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("log: enclosure not strictly positive");
    ValidatedReal r(prec_bits());
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::exp() const {
    ValidatedReal r(prec_bits());
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

ValidatedReal ValidatedReal::pow(double e) const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("pow: base must be positive");
    if (e < 0) return pow(-e).recip();
    ValidatedReal r(prec_bits());
    mpfr_t ed;
    mpfr_init2(ed, 64);
    mpfr_set_d(ed, e, MPFR_RNDN);  // e is an exact double (e.g. 3.5)
    mpfr_pow(r.lo_, lo_, ed, MPFR_RNDD);
    mpfr_pow(r.hi_, hi_, ed, MPFR_RNDU);
    mpfr_clear(ed);
    r.check();
    return r;
}

ValidatedReal ValidatedReal::max(const ValidatedReal& a, const ValidatedReal& b) {
    ValidatedReal r(std::max(a.prec_bits(), b.prec_bits()));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

int ValidatedReal::sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

bool ValidatedReal::is_point() const { return mpfr_cmp(lo_, hi_) == 0; }

bool ValidatedReal::certainly_less(const ValidatedReal& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
bool ValidatedReal::certainly_greater(const ValidatedReal& o) const { return mpfr_cmp(lo_, o.hi_) > 0; }
bool ValidatedReal::certainly_less(const mpq_class& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0; }
bool ValidatedReal::certainly_greater(const mpq_class& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0; }
bool ValidatedReal::contains(const mpq_class& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

std::optional<mpz_class> ValidatedReal::floor() const {
    mpz_class fl, fh;
    mpfr_get_z(fl.get_mpz_t(), lo_, MPFR_RNDD);
    mpfr_get_z(fh.get_mpz_t(), hi_, MPFR_RNDD);
    if (fl != fh) return std::nullopt;
    return fl;
}

std::optional<mpz_class> ValidatedReal::nearest_int() const {
    mpz_class nl, nh;
    mpfr_get_z(nl.get_mpz_t(), lo_, MPFR_RNDN);
    mpfr_get_z(nh.get_mpz_t(), hi_, MPFR_RNDN);
    if (nl != nh) return std::nullopt;
    return nl;
}

std::optional<ValidatedReal> ValidatedReal::nearest_int_distance() const {
    const long p = prec_bits();
    // nearest integer to the midpoint
    mpfr_t mid;
    mpfr_init2(mid, p + 8);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    mpz_class n;
    mpfr_get_z(n.get_mpz_t(), mid, MPFR_RNDN);
    mpfr_clear(mid);

    // shifted enclosure d = x - n (exact integer subtraction, outward rounding)
    ValidatedReal d(p + 8);
    mpfr_sub_z(d.lo_, lo_, n.get_mpz_t(), MPFR_RNDD);
    mpfr_sub_z(d.hi_, hi_, n.get_mpz_t(), MPFR_RNDU);

    const mpq_class half(1, 2);
    const bool inside = d.certainly_greater(-half) && d.certainly_less(half);
    if (!inside) {
        // exact half-integer points still have a well-defined distance of 1/2
        if (is_point() && (mpfr_cmp_q(d.lo_, half.get_mpq_t()) == 0 ||
                           mpfr_cmp_q(d.hi_, mpq_class(-half).get_mpq_t()) == 0))
            return from_rational(half, p);
        return std::nullopt;
    }
    return d.abs();
}

bool ValidatedReal::radius_at_most_pow10(long e) const {
    mpfr_t w, b;
    mpfr_init2(w, 64);
    mpfr_init2(b, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_div_2ui(w, w, 1, MPFR_RNDU);
    mpfr_set_ui(b, 10, MPFR_RNDD);
    mpfr_pow_si(b, b, e, MPFR_RNDD);
    const bool ok = mpfr_cmp(w, b) <= 0;
    mpfr_clear(w);
    mpfr_clear(b);
    return ok;
}

double ValidatedReal::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double ValidatedReal::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double ValidatedReal::midpoint_double() const {
    return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2;
}

std::string ValidatedReal::to_string(long digits) const {
    mpfr_t mid;
    mpfr_init2(mid, prec_bits() + 8);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), mid);
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(mid);
    return out;
}

}  // namespace sunit
