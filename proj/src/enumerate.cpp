#include "sunit/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "sunit/parallel.hpp"

namespace sunit {

namespace {

// int64 is the fast path for box-bounded values; 5 * 2^max2 * 3^max3 must fit
void check_box_fits(ExponentBox box) {
    const double bits = box.max2 + box.max3 * 1.5849625007211562 + 3;
    if (bits > 62) throw std::invalid_argument("box too large for the 64-bit enumeration path");
}

int64_t pow3_i64(uint32_t b) {
    int64_t v = 1;
    while (b--) v *= 3;
    return v;
}

struct Magnitude {
    int64_t value;
    uint32_t a, b;
};

std::vector<Magnitude> magnitudes(ExponentBox box) {
    std::vector<Magnitude> out;
    out.reserve(static_cast<std::size_t>(box.max2 + 1) * (box.max3 + 1));
    for (uint32_t a = 0; a <= box.max2; ++a)
        for (uint32_t b = 0; b <= box.max3; ++b)
            out.push_back({(int64_t{1} << a) * pow3_i64(b), a, b});
    std::sort(out.begin(), out.end(), [](const Magnitude& x, const Magnitude& y) { return x.value < y.value; });
    return out;
}

PrimePowerTerm term_of(const Magnitude& m, int sign) { return {sign, m.a, m.b}; }

SolutionTuple normalized_from_terms(const std::vector<PrimePowerTerm>& ts) {
    std::vector<SignedMonomial> ms;
    ms.reserve(ts.size());
    for (const auto& t : ts) ms.push_back({t.sign, t.a, t.b});
    return normalize_primitive(ms);
}

}  // namespace

std::vector<SolutionTuple> solve_k_term(int k, ExponentBox box) {
    if (k != 3 && k != 4) throw std::invalid_argument("solve_k_term: k must be 3 or 4");
    check_box_fits(box);
    const auto mags = magnitudes(box);
    std::unordered_map<int64_t, const Magnitude*> by_value;
    for (const auto& m : mags) by_value.emplace(m.value, &m);

    std::map<std::string, SolutionTuple> found;
    auto emit = [&](const std::vector<PrimePowerTerm>& ts) {
        SolutionTuple t = normalized_from_terms(ts);
        if (t.size() != static_cast<std::size_t>(k)) return;
        if (k == 4 && detect_vanishing_subsum(t).has_vanishing) return;
        found.emplace(t.to_text(), std::move(t));
    };

    if (k == 3) {
        // u1 > 0 >= ... : pick |u2|, |u3| and test whether the balancing first
        // term is a box magnitude
        for (const auto& m2 : mags)
            for (const auto& m3 : mags) {
                const int64_t u1 = m2.value + m3.value;
                auto it = by_value.find(u1);
                if (it == by_value.end()) continue;
                emit({term_of(*it->second, +1), term_of(m2, -1), term_of(m3, -1)});
            }
    } else {
        // hash the sums of signed pairs, then meet pairs with opposite sums
        struct Pair {
            const Magnitude* x;
            const Magnitude* y;
            int sx, sy;
        };
        std::unordered_map<int64_t, std::vector<Pair>> pair_sums;
        for (const auto& mx : mags)
            for (const auto& my : mags)
                for (int sx : {+1, -1})
                    for (int sy : {+1, -1}) {
                        if (mx.value == my.value && sx < sy) continue;  // unordered pair, one orientation
                        const int64_t s = sx * mx.value + sy * my.value;
                        pair_sums[s].push_back({&mx, &my, sx, sy});
                    }
        for (const auto& [s, ps] : pair_sums) {
            if (s < 0) continue;  // the opposite bucket generates the same tuples
            auto it = pair_sums.find(-s);
            if (it == pair_sums.end()) continue;
            for (const auto& p : ps)
                for (const auto& q : it->second)
                    emit({term_of(*p.x, p.sx), term_of(*p.y, p.sy), term_of(*q.x, q.sx),
                          term_of(*q.y, q.sy)});
        }
    }
    std::vector<SolutionTuple> out;
    out.reserve(found.size());
    for (auto& [_, t] : found) out.push_back(std::move(t));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct SideEnum {
    std::vector<int> vars;                      // variable indices this side owns
    std::vector<std::vector<uint32_t>> assigns; // one entry per combination
    std::vector<int64_t> values;                // matching sums
};

SideEnum enumerate_side(const FamilySpec& f, ExponentBox box, int sign) {
    SideEnum side;
    std::vector<std::size_t> term_idx;
    for (std::size_t i = 0; i < f.terms.size(); ++i)
        if (f.terms[i].sign == sign) {
            if (f.terms[i].var2 >= 0) side.vars.push_back(f.terms[i].var2);
            if (f.terms[i].var3 >= 0) side.vars.push_back(f.terms[i].var3);
            term_idx.push_back(i);
        }
    std::vector<uint32_t> limits;
    for (int v : side.vars) limits.push_back(var_is_base2(v) ? box.max2 : box.max3);

    std::vector<uint32_t> cur(side.vars.size(), 0);
    ExponentTuple assign{};
    while (true) {
        for (std::size_t i = 0; i < side.vars.size(); ++i) assign[side.vars[i]] = cur[i];
        int64_t sum = 0;
        for (std::size_t i : term_idx) sum += f.term_value_i64(i, assign) * sign;  // magnitudes
        side.assigns.push_back(cur);
        side.values.push_back(sum);
        std::size_t i = 0;
        for (; i < cur.size(); ++i) {
            if (cur[i] < limits[i]) {
                ++cur[i];
                break;
            }
            cur[i] = 0;
        }
        if (i == cur.size()) break;
        if (cur.empty()) break;
    }
    return side;
}

}  // namespace

std::vector<ExponentTuple> solve_family(const FamilySpec& f, ExponentBox box) {
    check_box_fits(box);
    SideEnum pos = enumerate_side(f, box, +1);
    SideEnum neg = enumerate_side(f, box, -1);
    const bool hash_neg = neg.values.size() <= pos.values.size();
    SideEnum& hashed = hash_neg ? neg : pos;
    SideEnum& scanned = hash_neg ? pos : neg;

    std::unordered_map<int64_t, std::vector<std::size_t>> table;
    table.reserve(hashed.values.size() * 2);
    for (std::size_t i = 0; i < hashed.values.size(); ++i) table[hashed.values[i]].push_back(i);

    std::vector<ExponentTuple> out;
    for (std::size_t i = 0; i < scanned.values.size(); ++i) {
        auto it = table.find(scanned.values[i]);
        if (it == table.end()) continue;
        for (std::size_t j : it->second) {
            ExponentTuple assign{};
            for (std::size_t v = 0; v < scanned.vars.size(); ++v)
                assign[scanned.vars[v]] = scanned.assigns[i][v];
            for (std::size_t v = 0; v < hashed.vars.size(); ++v)
                assign[hashed.vars[v]] = hashed.assigns[j][v];

            // no vanishing subsums: for five terms this is exactly "no
            // left-hand term equals a right-hand term"; assert the full
            // subset scan agrees
            bool pairwise_clean = true;
            std::array<int64_t, 5> vals;
            for (std::size_t t = 0; t < 5; ++t) vals[t] = f.term_value_i64(t, assign);
            for (std::size_t t1 = 0; t1 < 5 && pairwise_clean; ++t1)
                for (std::size_t t2 = 0; t2 < 5; ++t2)
                    if (vals[t1] > 0 && vals[t2] < 0 && vals[t1] + vals[t2] == 0) {
                        pairwise_clean = false;
                        break;
                    }
            std::vector<mpz_class> zvals;
            for (std::size_t t = 0; t < 5; ++t) zvals.emplace_back(f.term_value(t, assign));
            const bool subset_clean = !detect_vanishing_subsum(zvals).has_vanishing;
            if (pairwise_clean != subset_clean)
                throw std::logic_error("solve_family: subsum filters disagree");
            if (!pairwise_clean) continue;

            mpz_class total = 0;
            for (const auto& z : zvals) total += z;
            if (total != 0) throw std::logic_error("solve_family: emitted tuple fails exact recheck");
            out.push_back(assign);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ExponentTuple> solve_family_naive(const FamilySpec& f, ExponentBox box) {
    check_box_fits(box);
    if (box.max2 > 8 || box.max3 > 6)
        throw std::invalid_argument("solve_family_naive: box too large for the 6-deep loop");
    std::vector<ExponentTuple> out;
    ExponentTuple t{};
    for (t[0] = 0; t[0] <= box.max2; ++t[0])
        for (t[1] = 0; t[1] <= box.max3; ++t[1])
            for (t[2] = 0; t[2] <= box.max2; ++t[2])
                for (t[3] = 0; t[3] <= box.max3; ++t[3])
                    for (t[4] = 0; t[4] <= box.max2; ++t[4])
                        for (t[5] = 0; t[5] <= box.max3; ++t[5]) {
                            if (f.substitute_sum(t) != 0) continue;
                            bool clean = true;
                            for (std::size_t i = 0; i < 5 && clean; ++i)
                                for (std::size_t j = 0; j < 5; ++j)
                                    if (f.term_value(i, t) + f.term_value(j, t) == 0) {
                                        clean = false;
                                        break;
                                    }
                            if (clean) out.push_back(t);
                        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SolutionTuple> solve_5term(ExponentBox box, unsigned workers) {
    auto per_family = parallel_map<std::vector<ExponentTuple>>(
        18, workers, [&](std::size_t i) { return solve_family(FamilySpec::get(static_cast<int>(i) + 1), box); });
    std::map<std::string, SolutionTuple> dedup;
    for (std::size_t i = 0; i < 18; ++i) {
        const FamilySpec& f = FamilySpec::get(static_cast<int>(i) + 1);
        for (const auto& assign : per_family[i]) {
            std::vector<PrimePowerTerm> ts;
            for (std::size_t t = 0; t < 5; ++t) {
                const auto& tt = f.terms[t];
                ts.push_back({tt.sign, tt.var2 >= 0 ? assign[tt.var2] : 0,
                              tt.var3 >= 0 ? assign[tt.var3] : 0});
            }
            SolutionTuple tup = normalized_from_terms(ts);
            if (detect_vanishing_subsum(tup).has_vanishing)
                throw std::logic_error("solve_5term: family emitted a degenerate tuple");
            dedup.emplace(tup.to_text(), std::move(tup));
        }
    }
    std::vector<SolutionTuple> out;
    out.reserve(dedup.size());
    for (auto& [_, t] : dedup) out.push_back(std::move(t));
    std::sort(out.begin(), out.end());
    return out;
}

CountTable count_table(ExponentBox box, unsigned workers) {
    auto per_family = parallel_map<std::vector<ExponentTuple>>(
        18, workers, [&](std::size_t i) { return solve_family(FamilySpec::get(static_cast<int>(i) + 1), box); });
    CountTable tab;
    for (std::size_t i = 0; i < 18; ++i) {
        tab.counts[i] = per_family[i].size();
        for (const auto& t : per_family[i]) {
            tab.max2_seen = std::max({tab.max2_seen, t[0], t[2], t[4]});
            tab.max3_seen = std::max({tab.max3_seen, t[1], t[3], t[5]});
        }
    }
    return tab;
}

}  // namespace sunit
