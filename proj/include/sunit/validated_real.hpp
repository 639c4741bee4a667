#pragma once

#include <mpfr.h>

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace sunit {

long digits_to_bits(long digits);

// Arbitrary-precision real with a certified enclosure: the true value lies in
// [lo, hi]. Every operation rounds the endpoints outward, so enclosures only
// widen. Exposed as midpoint/radius where callers expect that view.
class ValidatedReal {
public:
    explicit ValidatedReal(long prec_bits = 64);
    ValidatedReal(const ValidatedReal&);
    ValidatedReal(ValidatedReal&&) noexcept;
    ValidatedReal& operator=(ValidatedReal);
    ~ValidatedReal();

    static ValidatedReal exact(long v, long prec_bits);
    static ValidatedReal exact(double v, long prec_bits);
    static ValidatedReal exact(const mpz_class& v, long prec_bits);
    static ValidatedReal from_rational(const mpq_class& v, long prec_bits);
    // natural log of a positive integer
    static ValidatedReal log_of(const mpz_class& x, long prec_bits);

    long prec_bits() const;

    ValidatedReal operator-() const;
    ValidatedReal operator+(const ValidatedReal&) const;
    ValidatedReal operator-(const ValidatedReal&) const;
    ValidatedReal operator*(const ValidatedReal&) const;
    ValidatedReal operator/(const ValidatedReal&) const;  // divisor must exclude 0

    ValidatedReal mul(const mpz_class& c) const;
    ValidatedReal add(long c) const;
    ValidatedReal abs() const;
    ValidatedReal square() const;
    ValidatedReal sqrt() const;   // requires lo >= 0
    ValidatedReal log() const;    // requires lo > 0
    ValidatedReal exp() const;
    ValidatedReal pow(double e) const;  // requires lo > 0
    ValidatedReal recip() const;        // requires 0 excluded

    static ValidatedReal max(const ValidatedReal& a, const ValidatedReal& b);

    // -1, +1 when the sign is certain; 0 when the enclosure straddles zero
    int sign() const;
    bool is_point() const;  // lo == hi (exact value)

    // certain comparisons; false means "not provable at this enclosure"
    bool certainly_less(const ValidatedReal& o) const;
    bool certainly_greater(const ValidatedReal& o) const;
    bool certainly_less(const mpq_class& q) const;
    bool certainly_greater(const mpq_class& q) const;
    bool contains(const mpq_class& q) const;

    // floor shared by the whole enclosure, if decided
    std::optional<mpz_class> floor() const;
    // distance to the nearest integer; nullopt when the enclosure straddles a
    // half-integer (except for exact half-integer points)
    std::optional<ValidatedReal> nearest_int_distance() const;
    std::optional<mpz_class> nearest_int() const;

    bool radius_at_most_pow10(long e) const;  // radius <= 10^e
    double lower_double() const;  // rounded down
    double upper_double() const;  // rounded up
    double midpoint_double() const;
    std::string to_string(long digits = 20) const;

    // endpoint access for operations not covered above
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }
    static ValidatedReal from_endpoints(const mpfr_t lo, const mpfr_t hi);

private:
    mpfr_t lo_, hi_;
    void check() const;
};

}  // namespace sunit
