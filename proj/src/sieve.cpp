#include "sunit/sieve.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "sunit/parallel.hpp"
#include "sunit/tuple.hpp"

namespace sunit {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint32_t order_mod(uint64_t base, uint64_t m, uint32_t k) {
    // order divides k by construction; try divisors in increasing order
    for (uint32_t d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        uint64_t v = 1;
        for (uint32_t i = 0; i < d; ++i) v = mulmod(v, base, m);
        if (v == 1) return d;
    }
    throw std::logic_error("order_mod: no divisor of k works");
}

// pow tables per variable base, pow[base][r] = base^r mod m
struct PowTables {
    std::vector<uint64_t> pow2, pow3;
    uint64_t m;

    PowTables(const SieveModulus& sm) : m(sm.m) {
        pow2.resize(sm.ord2);
        pow3.resize(sm.ord3);
        pow2[0] = 1 % sm.m;
        for (uint32_t i = 1; i < sm.ord2; ++i) pow2[i] = mulmod(pow2[i - 1], 2, sm.m);
        pow3[0] = 1 % sm.m;
        for (uint32_t i = 1; i < sm.ord3; ++i) pow3[i] = mulmod(pow3[i - 1], 3, sm.m);
    }
};

uint32_t var_order(const EquationSpec& eq, int v, const SieveModulus& m) {
    return eq.var_base[v] == 2 ? m.ord2 : m.ord3;
}

// value of one side (by sign) under a residue assignment, mod m
uint64_t side_value(const EquationSpec& eq, int sign, const std::vector<uint32_t>& assign,
                    const PowTables& pt) {
    uint64_t sum = 0;
    for (const auto& t : eq.terms) {
        if (t.sign != sign) continue;
        uint64_t v = 1;
        if (t.var2 >= 0) v = pt.pow2[assign[t.var2]];
        if (t.var3 >= 0) v = mulmod(v, pt.pow3[assign[t.var3]], pt.m);
        sum += v;
        if (sum >= pt.m) sum -= pt.m;
    }
    return sum;
}

std::vector<int> side_vars(const EquationSpec& eq, int sign) {
    std::vector<int> vars;
    for (const auto& t : eq.terms)
        if (t.sign == sign) {
            if (t.var2 >= 0) vars.push_back(t.var2);
            if (t.var3 >= 0) vars.push_back(t.var3);
        }
    return vars;
}

uint64_t space_size(const EquationSpec& eq, const std::vector<int>& vars, const SieveModulus& m) {
    uint64_t s = 1;
    for (int v : vars) s *= var_order(eq, v, m);
    return s;
}

void unrank(const EquationSpec& eq, const std::vector<int>& vars, const SieveModulus& m,
            uint64_t rank, std::vector<uint32_t>& assign) {
    for (int v : vars) {
        const uint32_t ord = var_order(eq, v, m);
        assign[v] = static_cast<uint32_t>(rank % ord);
        rank /= ord;
    }
}

}  // namespace

SieveModulus sieve_modulus_for(uint32_t k) {
    if (k == 0) throw std::invalid_argument("sieve_modulus_for: k >= 1 required");
    mpz_class a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), 2, k);
    a -= 1;
    mpz_ui_pow_ui(b.get_mpz_t(), 3, k);
    b -= 1;
    const mpz_class g = gcd(a, b);
    if (!g.fits_ulong_p()) throw std::overflow_error("sieve_modulus_for: modulus exceeds 64 bits");
    SieveModulus m;
    m.m = g.get_ui();
    m.k = k;
    if (m.m % 2 == 0 || m.m % 3 == 0) throw std::logic_error("sieve modulus not coprime to 6");
    m.ord2 = order_mod(2, m.m, k);
    m.ord3 = order_mod(3, m.m, k);
    return m;
}

std::pair<SieveModulus, SieveModulus> standard_moduli() {
    return {sieve_modulus_for(36), sieve_modulus_for(180)};
}

ResidueTuple project_residues(const EquationSpec& eq, const std::vector<uint32_t>& assign,
                              const SieveModulus& m) {
    ResidueTuple r(eq.num_vars);
    for (int v = 0; v < eq.num_vars; ++v) r[v] = assign[v] % var_order(eq, v, m);
    return r;
}

std::vector<ResidueTuple> local_solutions(const EquationSpec& eq, const SieveModulus& m,
                                          unsigned workers) {
    const PowTables pt(m);
    std::vector<int> pos_vars = side_vars(eq, +1), neg_vars = side_vars(eq, -1);
    const uint64_t npos = space_size(eq, pos_vars, m), nneg = space_size(eq, neg_vars, m);
    const bool hash_neg = nneg <= npos;
    const auto& hashed_vars = hash_neg ? neg_vars : pos_vars;
    const auto& scanned_vars = hash_neg ? pos_vars : neg_vars;
    const uint64_t nhashed = hash_neg ? nneg : npos, nscanned = hash_neg ? npos : nneg;
    const int hashed_sign = hash_neg ? -1 : +1, scanned_sign = -hashed_sign;

    if (nhashed > (uint64_t{1} << 27))
        throw std::invalid_argument("local_solutions: hashed side too large; use a smaller modulus");
    std::unordered_map<uint64_t, std::vector<uint64_t>> table;
    table.reserve(static_cast<std::size_t>(nhashed) * 2);
    {
        std::vector<uint32_t> assign(eq.num_vars, 0);
        for (uint64_t r = 0; r < nhashed; ++r) {
            unrank(eq, hashed_vars, m, r, assign);
            table[side_value(eq, hashed_sign, assign, pt)].push_back(r);
        }
    }

    // partition the scanned space in fixed blocks so output order is stable
    constexpr uint64_t kBlock = 1 << 16;
    const std::size_t nblocks = static_cast<std::size_t>((nscanned + kBlock - 1) / kBlock);
    auto run_block = [&](std::size_t bi) {
        std::vector<ResidueTuple> hits;
        std::vector<uint32_t> assign(eq.num_vars, 0);
        const uint64_t rlo = bi * kBlock, rhi = std::min(nscanned, rlo + kBlock);
        for (uint64_t r = rlo; r < rhi; ++r) {
            unrank(eq, scanned_vars, m, r, assign);
            const auto it = table.find(side_value(eq, scanned_sign, assign, pt));
            if (it == table.end()) continue;
            for (uint64_t h : it->second) {
                unrank(eq, hashed_vars, m, h, assign);
                ResidueTuple full(assign.begin(), assign.end());
                hits.push_back(std::move(full));
            }
        }
        return hits;
    };
    auto blocks = parallel_map<std::vector<ResidueTuple>>(nblocks, workers, run_block);
    std::vector<ResidueTuple> out;
    for (auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ResidueTuple> local_solutions_prefiltered(const EquationSpec& eq,
                                                      const SieveModulus& big,
                                                      const SieveModulus& small,
                                                      unsigned workers) {
    if (big.k % small.k != 0)
        throw std::invalid_argument("prefilter: small.k must divide big.k");
    const auto base = local_solutions(eq, small, workers);
    const PowTables pt(big);

    auto lift_one = [&](std::size_t i) {
        std::vector<ResidueTuple> hits;
        const ResidueTuple& loc = base[i];
        // slotwise classes r + ord_small * j, j < ord_big / ord_small
        std::vector<uint32_t> steps(eq.num_vars), counts(eq.num_vars);
        uint64_t total = 1;
        for (int v = 0; v < eq.num_vars; ++v) {
            steps[v] = var_order(eq, v, small);
            counts[v] = var_order(eq, v, big) / steps[v];
            total *= counts[v];
        }
        std::vector<uint32_t> assign(eq.num_vars);
        for (uint64_t r = 0; r < total; ++r) {
            uint64_t rest = r;
            for (int v = 0; v < eq.num_vars; ++v) {
                assign[v] = loc[v] + steps[v] * static_cast<uint32_t>(rest % counts[v]);
                rest /= counts[v];
            }
            if (side_value(eq, +1, assign, pt) == side_value(eq, -1, assign, pt))
                hits.emplace_back(assign.begin(), assign.end());
        }
        return hits;
    };
    auto lifted = parallel_map<std::vector<ResidueTuple>>(base.size(), workers, lift_one);
    std::vector<ResidueTuple> out;
    for (auto& b : lifted) out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ResidueTuple> lift_and_check(const EquationSpec& eq,
                                         const std::vector<ResidueTuple>& locals,
                                         const SieveModulus& m, ExponentBox caps,
                                         bool drop_vanishing_subsums) {
    std::vector<ResidueTuple> out;
    std::vector<uint32_t> assign(eq.num_vars);
    for (const auto& loc : locals) {
        // per-slot representatives <= cap in the residue class
        std::vector<std::vector<uint32_t>> reps(eq.num_vars);
        bool any = true;
        for (int v = 0; v < eq.num_vars; ++v) {
            const uint32_t ord = var_order(eq, v, m);
            const uint32_t cap = eq.var_base[v] == 2 ? caps.max2 : caps.max3;
            for (uint32_t x = loc[v]; x <= cap; x += ord) reps[v].push_back(x);
            if (reps[v].empty()) {
                any = false;
                break;
            }
        }
        if (!any) continue;
        std::vector<std::size_t> idx(eq.num_vars, 0);
        while (true) {
            for (int v = 0; v < eq.num_vars; ++v) assign[v] = reps[v][idx[v]];
            if (eq.substitute_sum(assign) == 0) {
                bool keep = true;
                if (drop_vanishing_subsums) {
                    std::vector<mpz_class> vals;
                    for (const auto& t : eq.terms) {
                        mpz_class v = 1;
                        if (t.var3 >= 0) mpz_ui_pow_ui(v.get_mpz_t(), 3, assign[t.var3]);
                        if (t.var2 >= 0) mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), assign[t.var2]);
                        vals.push_back(t.sign < 0 ? mpz_class(-v) : v);
                    }
                    keep = !detect_vanishing_subsum(vals).has_vanishing;
                }
                if (keep) out.emplace_back(assign.begin(), assign.end());
            }
            int v = 0;
            for (; v < eq.num_vars; ++v) {
                if (++idx[v] < reps[v].size()) break;
                idx[v] = 0;
            }
            if (v == eq.num_vars) break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace sunit
