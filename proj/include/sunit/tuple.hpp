#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sunit {

// Signed term +-2^a 3^b with nonnegative exponents, the atom of every
// equation handled here.
struct PrimePowerTerm {
    int sign = 1;    // +1 or -1
    uint32_t a = 0;  // exponent of 2
    uint32_t b = 0;  // exponent of 3

    mpz_class value() const;
    bool operator==(const PrimePowerTerm&) const = default;
};

// Signed rational 2-3-monomial sign * 2^e2 * 3^e3; exponents may be negative.
struct SignedMonomial {
    int sign = 1;
    int64_t e2 = 0;
    int64_t e3 = 0;

    mpq_class value() const;
};

// Factor a nonzero rational as +-2^e2 3^e3; nullopt if another prime divides it.
std::optional<SignedMonomial> monomial_from_rational(const mpq_class& x);

// Witness of a zero proper subsum. Indices are 0-based positions in the tuple.
struct SubsumReport {
    bool has_vanishing = false;
    std::vector<std::size_t> witness;  // smallest by (cardinality, lexicographic)
};

// Ordered primitive k-tuple of terms summing to zero:
//   u1 >= u2 >= ... >= uk, gcd(u1..uk) = 1, u1 >= |uk|.
// When u1 = |uk| both orientations are valid; the lexicographically larger
// value sequence is kept so construction stays deterministic.
class SolutionTuple {
public:
    static constexpr std::size_t kMaxTerms = 8;

    explicit SolutionTuple(std::vector<PrimePowerTerm> terms);

    std::size_t size() const { return terms_.size(); }
    const std::vector<PrimePowerTerm>& terms() const { return terms_; }
    std::vector<mpz_class> values() const;

    // canonical text form "[u1,u2,...,uk]" of decimal integers
    std::string to_text() const;
    static SolutionTuple from_text(const std::string& s);
    std::string to_json() const;  // JSON array of decimal integers

    bool operator==(const SolutionTuple& o) const { return terms_ == o.terms_; }
    bool operator<(const SolutionTuple& o) const;

private:
    std::vector<PrimePowerTerm> terms_;
};

// Scale a zero-sum list of 2-3-monomials by the unique positive monomial
// making it a primitive integer tuple, sort descending, and orient so that
// u1 >= |uk|. Throws std::invalid_argument on empty input or nonzero sum.
SolutionTuple normalize_primitive(const std::vector<SignedMonomial>& vals);
SolutionTuple normalize_primitive(const std::vector<mpq_class>& vals);

// Full subset scan over the 2^k - 2 proper subsets; returns the witness
// smallest by cardinality, then lexicographically.
SubsumReport detect_vanishing_subsum(const SolutionTuple& t);
SubsumReport detect_vanishing_subsum(const std::vector<mpz_class>& vals);

// The pairwise notion: some u_i + u_j = 0.
std::optional<std::pair<std::size_t, std::size_t>> pairwise_vanishing(const SolutionTuple& t);

// H(u) = max |u_i| for a primitive integer tuple.
mpz_class tuple_height(const SolutionTuple& t);
double tuple_log_height(const SolutionTuple& t);

// Product formula for rationals supported on {2,3}: |x| * 2^-v2(x) * 3^-v3(x) = 1.
// Throws std::domain_error if x has another prime factor or x = 0.
bool product_formula_check(const mpq_class& x);

// Matching inequality (n - m - 1)|S| < 2n for n terms, m equations, s places.
bool matching_inequality(int64_t n, int64_t m, int64_t s);

}  // namespace sunit
