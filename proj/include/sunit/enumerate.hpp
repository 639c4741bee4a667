#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sunit/families.hpp"
#include "sunit/tuple.hpp"

namespace sunit {

// All primitive k-term tuples (k = 3 or 4) with 3-smooth entries inside the
// box; for k = 4 tuples with vanishing subsums are excluded. Sorted.
std::vector<SolutionTuple> solve_k_term(int k, ExponentBox box);

// All nonnegative-exponent solutions of one family without vanishing subsums,
// meet-in-the-middle over the smaller side. Sorted (a,b,c,d,e,f) tuples.
std::vector<ExponentTuple> solve_family(const FamilySpec& f, ExponentBox box);
// Reference 6-deep loop for small boxes (oracle for the MITM path).
std::vector<ExponentTuple> solve_family_naive(const FamilySpec& f, ExponentBox box);

// Union of the 18 families mapped through normalize_primitive and
// deduplicated: the primitive 5-term solutions.
std::vector<SolutionTuple> solve_5term(ExponentBox box = {19, 12}, unsigned workers = 0);

struct CountTable {
    std::array<std::size_t, 18> counts{};  // counts[i] for family i+1
    uint32_t max2_seen = 0;                // over a, c, e
    uint32_t max3_seen = 0;                // over b, d, f
};

// Per-family solution counts plus the observed exponent maxima.
CountTable count_table(ExponentBox box = {25, 16}, unsigned workers = 0);

}  // namespace sunit
