#include "sunit/newman.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "sunit/parallel.hpp"
#include "sunit/tuple.hpp"

namespace sunit {

namespace {

uint64_t pow2_u64(uint32_t a) {
    if (a >= 64) throw std::overflow_error("pow2: exponent too large");
    return uint64_t{1} << a;
}

uint64_t pow3_u64(uint32_t b) {
    uint64_t v = 1;
    while (b--) {
        if (v > UINT64_MAX / 3) throw std::overflow_error("pow3: exponent too large");
        v *= 3;
    }
    return v;
}

std::vector<uint64_t> powers_of(uint64_t base, uint64_t limit) {
    std::vector<uint64_t> out{1};
    while (out.back() <= limit / base) out.push_back(out.back() * base);
    return out;
}

bool is_power_of_2(uint64_t v) { return v && (v & (v - 1)) == 0; }

std::optional<uint32_t> log3_exact(uint64_t v) {
    uint32_t e = 0;
    while (v % 3 == 0) {
        v /= 3;
        ++e;
    }
    return v == 1 ? std::optional<uint32_t>(e) : std::nullopt;
}

std::optional<uint32_t> log2_exact(uint64_t v) {
    if (!is_power_of_2(v)) return std::nullopt;
    uint32_t e = 0;
    while (v > 1) {
        v >>= 1;
        ++e;
    }
    return e;
}

// factorization 2^x 3^y of a 3-smooth value, if it is one
struct SmoothFactor {
    uint32_t x, y;
};
std::optional<SmoothFactor> factor_smooth(uint64_t v) {
    if (v == 0) return std::nullopt;
    uint32_t x = 0, y = 0;
    while ((v & 1) == 0) {
        v >>= 1;
        ++x;
    }
    while (v % 3 == 0) {
        v /= 3;
        ++y;
    }
    return v == 1 ? std::optional<SmoothFactor>({x, y}) : std::nullopt;
}

}  // namespace

uint64_t Representation::n() const {
    const auto t = term_values();
    const unsigned __int128 sum =
        static_cast<unsigned __int128>(t[0]) + t[1] + t[2];
    if (sum > UINT64_MAX) throw std::overflow_error("Representation: N exceeds 64 bits");
    return static_cast<uint64_t>(sum);
}

std::array<uint64_t, 3> Representation::term_values() const {
    return {pow2_u64(a) * pow3_u64(b), pow2_u64(c), pow3_u64(d)};
}

std::array<uint64_t, 3> Representation::sorted_term_values() const {
    auto t = term_values();
    std::sort(t.begin(), t.end());
    return t;
}

std::string Representation::to_json() const {
    return "{\"a\":" + std::to_string(a) + ",\"b\":" + std::to_string(b) +
           ",\"c\":" + std::to_string(c) + ",\"d\":" + std::to_string(d) + "}";
}

std::vector<Representation> representation_labelings(const Representation& r) {
    const auto vals = r.term_values();
    std::array<std::size_t, 3> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end());
    std::set<Representation> out;
    do {
        const uint64_t m1 = vals[perm[0]], m2 = vals[perm[1]], m3 = vals[perm[2]];
        const auto f1 = factor_smooth(m1);
        const auto f2 = log2_exact(m2);
        const auto f3 = log3_exact(m3);
        if (f1 && f2 && f3) out.insert({f1->x, f1->y, *f2, *f3});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {out.begin(), out.end()};
}

Representation canonical_representation(const Representation& r) {
    return representation_labelings(r).front();
}

std::vector<Representation> representations(uint64_t N) {
    if (N < 1) throw std::invalid_argument("representations: N >= 1 required");
    std::vector<Representation> out;
    if (N < 3) return out;
    const auto p2 = powers_of(2, N), p3 = powers_of(3, N);
    for (uint32_t a = 0; a < p2.size(); ++a) {
        if (p2[a] > N - 2) break;
        for (uint32_t b = 0; b < p3.size(); ++b) {
            if (p3[b] > (N - 2) / p2[a]) break;
            const uint64_t x = p2[a] * p3[b];
            if (x > N - 2) break;
            for (uint32_t c = 0; c < p2.size(); ++c) {
                if (p2[c] > N - 1 - x) break;
                if (b == 0 && a > c) continue;  // canonical: pure-2 first term not past 2^c
                const uint64_t rem = N - x - p2[c];
                const auto d = log3_exact(rem);
                if (!d) continue;
                if (a == 0 && b > *d) continue;  // canonical: pure-3 first term not past 3^d
                out.push_back({a, b, c, *d});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

uint32_t omega(uint64_t N) { return static_cast<uint32_t>(representations(N).size()); }

std::array<Representation, 4> identity_family(uint32_t a, uint32_t b) {
    if (a < 2 || b < 2) throw std::invalid_argument("identity_family: a, b >= 2 required");
    const uint64_t N = pow2_u64(a) + pow3_u64(b);
    std::array<Representation, 4> reps = {
        canonical_representation({a - 1, 0, a - 1, b}),
        canonical_representation({a - 2, 1, a - 2, b}),
        canonical_representation({1, b - 1, a, b - 1}),
        canonical_representation({3, b - 2, a, b - 2}),
    };
    std::set<std::array<uint64_t, 3>> keys;
    for (const auto& r : reps) {
        if (r.n() != N) throw std::logic_error("identity_family: representation does not recompute N");
        keys.insert(r.sorted_term_values());
    }
    if (keys.size() != 4) throw std::logic_error("identity_family: representations not distinct");
    return reps;
}

namespace {

void classify_into(uint64_t N, std::vector<SpecialType>& tags) {
    const auto p2 = powers_of(2, N), p3 = powers_of(3, N);
    // type I: 2^a + 3^b
    for (uint32_t b = 0; b < p3.size(); ++b)
        if (p3[b] < N)
            if (auto a = log2_exact(N - p3[b]))
                tags.push_back({SpecialType::Kind::type1, 0, *a, b, 1});
    // type II: 2^a + 3^b c (c in {11,19}) and 2^a c + 3^b (c in {5,7})
    for (uint64_t c : {11, 19})
        for (uint32_t b = 0; b < p3.size(); ++b) {
            if (p3[b] > (N - 1) / c) break;
            if (auto a = log2_exact(N - p3[b] * c))
                tags.push_back({SpecialType::Kind::type2, 1, *a, b, c});
        }
    for (uint64_t c : {5, 7})
        for (uint32_t a = 0; a < p2.size(); ++a) {
            if (p2[a] > (N - 1) / c) break;
            if (auto b = log3_exact(N - p2[a] * c))
                tags.push_back({SpecialType::Kind::type2, 2, a, *b, c});
        }
    // type III, the five constant families
    for (uint64_t c : {5, 7, 13, 17, 25, 35, 43, 73, 97, 145, 259})
        for (uint32_t b = 0; b < p3.size(); ++b) {
            if (p3[b] > (N - 1) / c) break;
            if (auto a = log2_exact(N - p3[b] * c))
                tags.push_back({SpecialType::Kind::type3, 1, *a, b, c});
        }
    for (uint64_t c : {11, 13, 17, 19, 25, 35, 41, 73, 97, 145, 259})
        for (uint32_t a = 0; a < p2.size(); ++a) {
            if (p2[a] > (N - 1) / c) break;
            if (auto b = log3_exact(N - p2[a] * c))
                tags.push_back({SpecialType::Kind::type3, 2, a, *b, c});
        }
    for (uint32_t b : {1u, 2u})
        for (uint64_t c : {3, 9}) {
            if (N <= c) continue;
            const uint64_t r = N - c;
            const uint64_t q3 = pow3_u64(b);
            if (r % q3 != 0 || (r / q3) % 3 == 0) continue;
            if (auto a = log2_exact(r / q3))
                tags.push_back({SpecialType::Kind::type3, 3, *a, b, c});
        }
    for (uint32_t a : {1u, 2u})
        for (uint64_t c : {2, 4}) {
            if (N <= c) continue;
            const uint64_t r = N - c;
            const uint64_t q2 = pow2_u64(a);
            if (r % q2 != 0 || ((r / q2) & 1) == 0) continue;
            if (auto b = log3_exact(r / q2))
                tags.push_back({SpecialType::Kind::type3, 4, a, *b, c});
        }
    for (uint64_t c : {5, 11, 17, 35, 259}) {
        if (N <= c) continue;
        if (auto f = factor_smooth(N - c))
            tags.push_back({SpecialType::Kind::type3, 5, f->x, f->y, c});
    }
}

}  // namespace

std::vector<SpecialType> classify_special(uint64_t N) {
    if (N < 1) throw std::invalid_argument("classify_special: N >= 1 required");
    std::vector<SpecialType> tags;
    classify_into(N, tags);
    std::sort(tags.begin(), tags.end());
    return tags;
}

bool is_special(uint64_t N) { return !classify_special(N).empty(); }

std::string SpecialType::to_text() const {
    switch (kind) {
        case Kind::type1:
            return "I(2^" + std::to_string(a) + "+3^" + std::to_string(b) + ")";
        case Kind::type2:
            return variant == 1 ? "II(2^" + std::to_string(a) + "+3^" + std::to_string(b) + "*" +
                                      std::to_string(c) + ")"
                                : "II(2^" + std::to_string(a) + "*" + std::to_string(c) + "+3^" +
                                      std::to_string(b) + ")";
        default: {
            const char* shape = variant == 1   ? "2^a+3^b*c"
                                : variant == 2 ? "2^a*c+3^b"
                                               : "2^a*3^b+c";
            return "III." + std::to_string(variant) + "(" + shape + ",a=" + std::to_string(a) +
                   ",b=" + std::to_string(b) + ",c=" + std::to_string(c) + ")";
        }
    }
}

std::vector<std::pair<uint64_t, uint32_t>> scan_range(uint64_t lo, uint64_t hi, uint32_t min_omega,
                                                      unsigned workers) {
    if (lo > hi) throw std::invalid_argument("scan_range: lo <= hi required");
    lo = std::max<uint64_t>(lo, 3);
    if (lo > hi) return {};
    constexpr uint64_t kChunk = 1 << 20;  // fixed so results ignore the worker count
    const std::size_t nchunks = static_cast<std::size_t>((hi - lo) / kChunk) + 1;
    const auto p2 = powers_of(2, hi), p3 = powers_of(3, hi);

    auto scan_chunk = [&](std::size_t ci) {
        const uint64_t base = lo + ci * kChunk;
        const uint64_t top = std::min(hi, base + kChunk - 1);
        std::vector<uint32_t> counts(static_cast<std::size_t>(top - base + 1), 0);
        for (uint32_t a = 0; a < p2.size(); ++a) {
            for (uint32_t b = 0; b < p3.size(); ++b) {
                if (p3[b] > (top - 2) / p2[a]) break;
                const uint64_t x = p2[a] * p3[b];
                if (x > top - 2) break;
                for (uint32_t c = 0; c < p2.size(); ++c) {
                    if (p2[c] > top - 1 - x) break;
                    if (b == 0 && a > c) continue;
                    const uint64_t xy = x + p2[c];
                    for (uint32_t d = 0; d < p3.size(); ++d) {
                        if (p3[d] > top - xy) break;
                        if (a == 0 && b > d) continue;
                        const uint64_t N = xy + p3[d];
                        if (N >= base) ++counts[static_cast<std::size_t>(N - base)];
                    }
                }
            }
        }
        std::vector<std::pair<uint64_t, uint32_t>> hits;
        for (std::size_t i = 0; i < counts.size(); ++i)
            if (counts[i] >= min_omega) hits.emplace_back(base + i, counts[i]);
        return hits;
    };

    auto per_chunk = parallel_map<std::vector<std::pair<uint64_t, uint32_t>>>(nchunks, workers, scan_chunk);
    std::vector<std::pair<uint64_t, uint32_t>> out;
    for (auto& h : per_chunk) out.insert(out.end(), h.begin(), h.end());
    return out;
}

bool pair_has_vanishing_subsum(const Representation& r1, const Representation& r2) {
    std::vector<mpz_class> v;
    for (uint64_t t : r1.term_values()) v.emplace_back(t);
    for (uint64_t t : r2.term_values()) v.emplace_back(-mpz_class(t));
    return detect_vanishing_subsum(v).has_vanishing;
}

namespace {

std::string eq_text(int which, const Representation& l1, const Representation& l2) {
    auto T = [](const Representation& r) { return "2^" + std::to_string(r.a) + "*3^" + std::to_string(r.b); };
    auto U = [](const Representation& r) { return "2^" + std::to_string(r.c); };
    auto V = [](const Representation& r) { return "3^" + std::to_string(r.d); };
    switch (which) {
        case 1: return T(l1) + "+" + U(l1) + "=" + T(l2) + " ; " + V(l1) + "=" + U(l2) + "+" + V(l2);
        case 2: return T(l1) + "+" + U(l1) + "=" + U(l2) + " ; " + V(l1) + "=" + T(l2) + "+" + V(l2);
        case 3: return T(l1) + "+" + U(l1) + "=" + V(l2) + " ; " + V(l1) + "=" + T(l2) + "+" + U(l2);
        case 4: return T(l1) + "+" + V(l1) + "=" + T(l2) + " ; " + U(l1) + "=" + U(l2) + "+" + V(l2);
        case 5: return T(l1) + "+" + V(l1) + "=" + U(l2) + " ; " + U(l1) + "=" + T(l2) + "+" + V(l2);
        case 6: return U(l1) + "+" + V(l1) + "=" + T(l2) + " ; " + T(l1) + "=" + U(l2) + "+" + V(l2);
        case 7: return T(l1) + "=" + T(l2) + " ; " + U(l1) + "+" + V(l1) + "=" + U(l2) + "+" + V(l2);
        case 8: return U(l1) + "=" + U(l2) + " ; " + T(l1) + "+" + V(l1) + "=" + T(l2) + "+" + V(l2);
        case 9: return V(l1) + "=" + V(l2) + " ; " + T(l1) + "+" + U(l1) + "=" + T(l2) + "+" + U(l2);
        default: return "outside the nine printed splits";
    }
}

bool case_holds(int which, const Representation& l1, const Representation& l2) {
    const auto t1 = l1.term_values(), t2 = l2.term_values();
    const auto T1 = mpz_class(t1[0]), U1 = mpz_class(t1[1]), V1 = mpz_class(t1[2]);
    const auto T2 = mpz_class(t2[0]), U2 = mpz_class(t2[1]), V2 = mpz_class(t2[2]);
    switch (which) {
        case 1: return T1 + U1 == T2 && V1 == U2 + V2;
        case 2: return T1 + U1 == U2 && V1 == T2 + V2;
        case 3: return T1 + U1 == V2 && V1 == T2 + U2;
        case 4: return T1 + V1 == T2 && U1 == U2 + V2;
        case 5: return T1 + V1 == U2 && U1 == T2 + V2;
        case 6: return U1 + V1 == T2 && T1 == U2 + V2;
        case 7: return T1 == T2 && U1 + V1 == U2 + V2;
        case 8: return U1 == U2 && T1 + V1 == T2 + V2;
        case 9: return V1 == V2 && T1 + U1 == T2 + U2;
        default: return false;
    }
}

}  // namespace

std::optional<CaseSplit> case_split(const Representation& r1, const Representation& r2) {
    if (r1.n() != r2.n()) throw std::invalid_argument("case_split: different N");
    if (r1.sorted_term_values() == r2.sorted_term_values())
        throw std::invalid_argument("case_split: representations are not distinct");
    if (!pair_has_vanishing_subsum(r1, r2)) return std::nullopt;
    for (int which = 1; which <= 9; ++which)
        for (const auto& l1 : representation_labelings(r1))
            for (const auto& l2 : representation_labelings(r2))
                if (case_holds(which, l1, l2))
                    return CaseSplit{which, l1, l2, eq_text(which, l1, l2)};
    return CaseSplit{0, canonical_representation(r1), canonical_representation(r2),
                     eq_text(0, r1, r2)};
}

std::vector<uint64_t> nonspecial_high_omega(uint64_t bound, unsigned workers) {
    if (bound < 1) throw std::invalid_argument("nonspecial_high_omega: bound >= 1 required");
    std::vector<uint64_t> out;
    for (const auto& [N, w] : scan_range(1, bound, 3, workers)) {
        (void)w;
        if (is_special(N)) continue;
        const auto reps = representations(N);
        bool has_clean_pair = false;
        for (std::size_t i = 0; i < reps.size() && !has_clean_pair; ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                if (!pair_has_vanishing_subsum(reps[i], reps[j])) {
                    has_clean_pair = true;
                    break;
                }
        if (has_clean_pair) out.push_back(N);
    }
    return out;
}

std::vector<GridPair> reduction_grid(int max_da) {
    if (max_da < 1) throw std::invalid_argument("reduction_grid: max_da >= 1 required");
    std::vector<GridPair> out;
    for (int da = 1; da <= max_da; ++da) {
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, da);
        mpz_class p3 = 1;
        int db = 0;
        while (p3 <= p2) {
            p3 *= 3;
            ++db;
        }
        out.push_back({da, db, mpz_class(p3 - p2)});
    }
    return out;
}

}  // namespace sunit
