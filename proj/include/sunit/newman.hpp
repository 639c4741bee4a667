#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sunit {

// One representation N = 2^a 3^b + 2^c + 3^d. Identity for distinctness is
// the term multiset {2^a 3^b, 2^c, 3^d}; the stored tuple is the
// lexicographically smallest one producing that multiset.
struct Representation {
    uint32_t a = 0, b = 0, c = 0, d = 0;

    uint64_t n() const;
    std::array<uint64_t, 3> term_values() const;       // {2^a 3^b, 2^c, 3^d}
    std::array<uint64_t, 3> sorted_term_values() const;
    std::string to_json() const;
    auto operator<=>(const Representation&) const = default;
};

Representation canonical_representation(const Representation& r);
// every (a,b,c,d) labelling of the same multiset
std::vector<Representation> representation_labelings(const Representation& r);

// Complete multiset-distinct representation set of N, sorted.
std::vector<Representation> representations(uint64_t N);
uint32_t omega(uint64_t N);

// The four representations of N = 2^a + 3^b (a, b >= 2), so omega(N) >= 4.
std::array<Representation, 4> identity_family(uint32_t a, uint32_t b);

struct SpecialType {
    enum class Kind { type1, type2, type3 };
    Kind kind = Kind::type1;
    int variant = 0;  // 0 for type I; type II: 1 = 2^a+3^b c, 2 = 2^a c+3^b; type III: 1..5
    uint32_t a = 0, b = 0;
    uint64_t c = 1;

    std::string to_text() const;
    auto operator<=>(const SpecialType&) const = default;
};

// All matching special decompositions (empty result = not special).
std::vector<SpecialType> classify_special(uint64_t N);
bool is_special(uint64_t N);

// All N in [lo, hi] with omega(N) >= min_omega, produced by a generative
// shared-power-table counting pass over fixed-size chunks.
std::vector<std::pair<uint64_t, uint32_t>> scan_range(uint64_t lo, uint64_t hi, uint32_t min_omega,
                                                      unsigned workers = 0);

// Whether the six-term difference of two distinct representations of the same
// N has a vanishing subsum (full subset semantics).
bool pair_has_vanishing_subsum(const Representation& r1, const Representation& r2);

// Matched degeneration pattern of a representation pair. `which` identifies
// the nine printed two-equation splits; 0 marks a pair whose vanishing subsum
// fits none of them (possible when the lone split isolates a mixed term).
struct CaseSplit {
    int which = 0;
    Representation r1_labels, r2_labels;  // labelings under which the pattern holds
    std::string sub_equations;
};

// nullopt iff the pair is non-degenerate. Throws std::invalid_argument unless
// r1, r2 are distinct representations of the same N.
std::optional<CaseSplit> case_split(const Representation& r1, const Representation& r2);

// All N <= bound with omega(N) >= 3, not special, and at least one
// representation pair without vanishing subsums.
std::vector<uint64_t> nonspecial_high_omega(uint64_t bound, unsigned workers = 0);

// The reduction grid of exponent differences: da in [1, max_da] with the
// unique db making 3^db the power of three just above 2^da.
struct GridPair {
    int da = 0;
    int db = 0;
    mpz_class excess;  // 3^db - 2^da, >= 1
};
std::vector<GridPair> reduction_grid(int max_da = 68);

}  // namespace sunit
