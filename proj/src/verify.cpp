#include "sunit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "sunit/bounds.hpp"
#include "sunit/cf.hpp"
#include "sunit/enumerate.hpp"
#include "sunit/newman.hpp"
#include "sunit/padic.hpp"
#include "sunit/sieve.hpp"
#include "sunit/tuple.hpp"

namespace sunit {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    bool ok = true;
    std::ostringstream log;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "FAILED: " << what << "; ";
        }
    }
    void note(const std::string& s) { log << s << "; "; }
};

mpz_class pow10_z(unsigned long e) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 10, e);
    return v;
}

const char* k3Expected[] = {"[2,-1,-1]", "[3,-1,-2]", "[4,-1,-3]", "[9,-1,-8]"};

// Prop 5.7 list, verbatim
const int k4Expected[62][4] = {
    {3, -1, -1, -1},    {3, 1, -2, -2},     {4, -1, -1, -2},    {4, 1, -2, -3},
    {4, 2, -3, -3},     {6, -1, -2, -3},    {6, -1, -1, -4},    {6, 1, -3, -4},
    {8, -2, -3, -3},    {8, -1, -3, -4},    {8, -1, -1, -6},    {8, 1, -3, -6},
    {9, -2, -3, -4},    {9, -1, -4, -4},    {9, -1, -2, -6},    {9, 1, -4, -6},
    {9, 1, -2, -8},     {9, 2, -3, -8},     {9, 3, -4, -8},     {12, -1, -3, -8},
    {12, -1, -2, -9},   {12, 1, -4, -9},    {16, -3, -4, -9},   {16, -1, -6, -9},
    {16, -1, -3, -12},  {16, 1, -8, -9},    {16, 2, -9, -9},    {18, -1, -8, -9},
    {18, -1, -1, -16},  {18, 1, -3, -16},   {24, 1, -9, -16},   {27, -3, -8, -16},
    {27, -2, -9, -16},  {27, -1, -8, -18},  {27, -1, -2, -24},  {27, 1, -12, -16},
    {27, 1, -4, -24},   {32, -2, -3, -27},  {32, -1, -4, -27},  {32, 1, -9, -24},
    {32, 1, -6, -27},   {32, 3, -8, -27},   {32, 4, -9, -27},   {36, -1, -8, -27},
    {36, -1, -3, -32},  {64, -1, -27, -36}, {64, -1, -9, -54},  {72, 1, -9, -64},
    {81, -8, -9, -64},  {81, -1, -32, -48}, {81, -1, -16, -64}, {81, -1, -8, -72},
    {81, 1, -18, -64},  {96, 1, -16, -81},  {128, 1, -48, -81}, {144, 1, -64, -81},
    {256, -4, -9, -243}, {256, -1, -12, -243}, {256, 3, -16, -243}, {512, 1, -27, -486},
    {512, 1, -81, -432}, {729, -1, -216, -512}};

const std::size_t kFamilyCounts[18] = {178, 127, 107, 298, 163, 191, 151, 177, 149,
                                       161, 119, 103, 154, 298, 225, 219, 330, 302};

const uint64_t kOmega9Set[8] = {41, 83, 89, 113, 137, 161, 227, 299};
const uint64_t kNonspecial[10] = {274, 473, 505, 1109, 1595, 1811, 2297, 2779, 4403, 20761};

const char* kConvP = "599362460113865624518687902158";
const char* kConvQ = "378155609259623725703103696043";

RealProducer log32() { return log_ratio_producer(3, 2); }

CheckResult run(const std::string& id, const std::string& name, double limit_seconds,
                const VerifyOptions& opt, const std::function<void(Checker&)>& body) {
    CheckResult res;
    res.id = id;
    res.name = name;
    Checker c;
    const auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.log << "exception: " << e.what();
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (opt.enforce_time_limits && limit_seconds > 0 && res.seconds >= limit_seconds) {
        c.ok = false;
        c.log << "time limit " << limit_seconds << "s exceeded; ";
    }
    res.pass = c.ok;
    res.details = c.log.str();
    return res;
}

// ---- criterion bodies -----------------------------------------------------

void criterion1(Checker& c, const VerifyOptions&) {
    const auto sols = solve_k_term(3, {19, 12});
    c.expect(sols.size() == 4, "3-term count = 4");
    std::set<std::string> got;
    for (const auto& s : sols) got.insert(s.to_text());
    for (const char* e : k3Expected) c.expect(got.count(e) == 1, std::string("missing ") + e);
    c.note("3-term solutions: " + std::to_string(sols.size()));
}

void criterion2(Checker& c, const VerifyOptions&) {
    const auto sols = solve_k_term(4, {19, 12});
    c.expect(sols.size() == 62, "4-term count = 62, got " + std::to_string(sols.size()));
    std::set<std::string> got;
    for (const auto& s : sols) got.insert(s.to_text());
    for (const auto& row : k4Expected) {
        std::string t = "[" + std::to_string(row[0]) + "," + std::to_string(row[1]) + "," +
                        std::to_string(row[2]) + "," + std::to_string(row[3]) + "]";
        c.expect(got.count(t) == 1, "missing " + t);
    }
    c.note("matched the 62 reference tuples verbatim");
}

void criterion3(Checker& c, const VerifyOptions& opt) {
    const auto tab = count_table({19, 12}, opt.workers);
    for (int i = 0; i < 18; ++i)
        c.expect(tab.counts[i] == kFamilyCounts[i],
                 "family " + std::to_string(i + 1) + " count " + std::to_string(tab.counts[i]) +
                     " != " + std::to_string(kFamilyCounts[i]));
    c.expect(tab.max2_seen <= 19 && tab.max3_seen <= 12, "observed exponents within (19,12)");
    const auto prim = solve_5term({19, 12}, opt.workers);
    c.expect(prim.size() == 1431, "primitive count 1431, got " + std::to_string(prim.size()));
    mpz_class maxu1 = 0;
    std::set<std::string> tops;
    for (const auto& t : prim) {
        const mpz_class u1 = t.values().front();
        if (u1 > maxu1) {
            maxu1 = u1;
            tops.clear();
        }
        if (u1 == maxu1) tops.insert(t.to_text());
    }
    c.expect(maxu1 == 531441, "max u1 = 531441");
    const std::set<std::string> expect_tops = {"[531441,2,-243,-6912,-524288]",
                                               "[531441,432,-1024,-6561,-524288]",
                                               "[531441,-16,-576,-6561,-524288]"};
    c.expect(tops == expect_tops, "the three maximal tuples");
    const auto tab2 = count_table({25, 16}, opt.workers);
    c.expect(tab2.counts == tab.counts, "box stability (25,16)");
    c.expect(tab2.max2_seen == 19 && tab2.max3_seen == 12, "observed maxima 19/12 in the larger box");
    c.note("18 family counts + 1431 primitives + box stability");
}

void criterion4(Checker& c, const VerifyOptions& opt) {
    const auto nine = scan_range(1, 1000000, 9, opt.workers);
    c.expect(nine.size() == 8, "eight N <= 1e6 with omega >= 9");
    for (std::size_t i = 0; i < nine.size() && i < 8; ++i) {
        c.expect(nine[i].first == kOmega9Set[i], "omega=9 member " + std::to_string(kOmega9Set[i]));
        c.expect(nine[i].second == 9, "omega exactly 9 at " + std::to_string(nine[i].first));
    }
    c.expect(scan_range(1, 1000000, 10, opt.workers).empty(), "no omega >= 10 below 1e6");
    c.expect(omega(131081) == 5 && omega(19699) == 6 && omega(2315) == 7 && omega(785) == 8,
             "threshold witnesses 131081/19699/2315/785");
    c.expect(scan_range(131082, 2000000, 5, opt.workers).empty(), "no omega >= 5 in [131082, 2e6]");
    c.expect(scan_range(19700, 2000000, 6, opt.workers).empty(), "omega <= 5 from 19700");
    c.expect(scan_range(2316, 2000000, 7, opt.workers).empty(), "omega <= 6 from 2316");
    c.expect(scan_range(786, 2000000, 8, opt.workers).empty(), "omega <= 7 from 786");
    c.expect(scan_range(300, 2000000, 9, opt.workers).empty(), "omega <= 8 from 300");
    // identity families: subset relation always; equality omega = 4 once N >= 131082
    for (uint32_t a = 2; a <= 20; ++a)
        for (uint32_t b = 2; b <= 20; ++b) {
            const auto fam = identity_family(a, b);
            const uint64_t N = fam[0].n();
            const auto reps = representations(N);
            std::set<std::array<uint64_t, 3>> keys;
            for (const auto& r : reps) keys.insert(r.sorted_term_values());
            for (const auto& r : fam)
                c.expect(keys.count(r.sorted_term_values()) == 1, "identity member present");
            if (N >= 131082)
                c.expect(reps.size() == 4, "omega(2^" + std::to_string(a) + "+3^" +
                                               std::to_string(b) + ") = 4");
        }
    c.note("threshold battery + identity families (2 <= a,b <= 20)");
}

void criterion5(Checker& c, const VerifyOptions& opt) {
    const auto got = nonspecial_high_omega(25000, opt.workers);
    c.expect(got.size() == 10, "ten nonspecial values");
    for (std::size_t i = 0; i < got.size() && i < 10; ++i)
        c.expect(got[i] == kNonspecial[i], "member " + std::to_string(kNonspecial[i]));
    for (uint64_t n : got) c.expect(omega(n) == 3, "omega = 3 at " + std::to_string(n));
    c.note("nonspecial omega >= 3 set below 25000");
}

void largest_with_omega(Checker& c, const std::vector<uint64_t>& values, uint32_t target,
                        uint64_t expected, const std::string& label) {
    uint64_t best = 0;
    for (uint64_t n : values)
        if (omega(n) == target) best = std::max(best, n);
    c.expect(best == expected, label + " expected " + std::to_string(expected) + ", got " +
                                   std::to_string(best));
}

std::vector<uint64_t> type1_values(uint64_t hi) {
    std::vector<uint64_t> vals;
    for (uint64_t p2 = 1; p2 <= hi; p2 *= 2) {
        for (uint64_t p3 = 1; p2 + p3 <= hi; p3 *= 3) vals.push_back(p2 + p3);
        if (p2 > hi / 2) break;
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

std::vector<uint64_t> type2_values(uint64_t hi) {
    std::vector<uint64_t> vals;
    for (uint64_t cc : {11, 19})
        for (uint64_t p3 = cc; p3 <= hi; p3 *= 3)
            for (uint64_t p2 = 1; p2 <= hi - p3; p2 *= 2) {
                vals.push_back(p2 + p3);
                if (p2 > (hi - p3) / 2) break;
            }
    for (uint64_t cc : {5, 7})
        for (uint64_t p2 = cc; p2 <= hi; p2 *= 2)
            for (uint64_t p3 = 1; p3 <= hi - p2; p3 *= 3) {
                vals.push_back(p2 + p3);
                if (p3 > (hi - p2) / 3) break;
            }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

void criterion6(Checker& c, const VerifyOptions&) {
    const auto t1 = type1_values(2000000);
    largest_with_omega(c, t1, 5, 131081, "largest type I with omega 5");
    largest_with_omega(c, t1, 8, 283, "largest type I with omega 8");
    largest_with_omega(c, t1, 9, 137, "largest type I with omega 9");
    const auto t2 = type2_values(2000000);
    largest_with_omega(c, t2, 9, 299, "largest type II with omega 9");
    largest_with_omega(c, t2, 8, 785, "largest type II with omega 8");
    c.note("type I/II largest-N spot checks below 2e6");
}

void criterion6_long(Checker& c, const VerifyOptions& opt) {
    const uint64_t hi = 80000000;
    uint64_t best = 0;
    for (const auto& [N, w] : scan_range(1, hi, 3, opt.workers)) {
        if (w != 3) continue;
        const auto tags = classify_special(N);
        const bool type3 = std::any_of(tags.begin(), tags.end(), [](const SpecialType& t) {
            return t.kind == SpecialType::Kind::type3;
        });
        if (type3) best = std::max(best, N);
    }
    c.expect(best == 76546075, "largest type III with omega 3 below 8e7, got " + std::to_string(best));
    c.note("long scan to 8e7");
}

void criterion7(Checker& c, const VerifyOptions&) {
    const mpz_class two40 = mpz_class(1) << 40;
    const auto c1 = modular_log(3, mpz_class(-5), 2, 40);
    c.expect(!c1.is_empty && c1.r == mpz_class("205450132747") && c1.m == (mpz_class(1) << 38),
             "3^x = -5 mod 2^40 class");
    const auto c2 = modular_log(3, mpz_class(-1), mpz_class(5), 2, 40);
    c.expect(!c2.is_empty && c2.r == mpz_class("69427774197") && c2.m == (mpz_class(1) << 38),
             "5*3^x = -1 mod 2^40 class");
    (void)two40;

    std::vector<ExponentialForm> forms;
    for (long c1v : {1, 5, 7})
        for (long c2v : {1, 5, 7}) {
            if (c1v == c2v) continue;
            forms.push_back({c1v, c2v});
            forms.push_back({c1v, -c2v});
        }
    const auto hit = smallest_exponent(forms, 2, 3, 15, 1000000);
    c.expect(hit.has_value() && hit->t == 509305, "smallest t with 3^15 | form is 509305");
    if (hit) {
        const auto& f = forms[hit->form_index];
        mpz_class pm;
        mpz_ui_pow_ui(pm.get_mpz_t(), 3, 16);
        mpz_class v;
        mpz_powm(v.get_mpz_t(), mpz_class(2).get_mpz_t(), hit->t.get_mpz_t(), pm.get_mpz_t());
        v = v * f.c1 + f.c2;
        c.expect(nu(3, mpz_class(((v % pm) + pm) % pm)) >= 15, "witness divisibility recheck");
    }

    // (2^e - 3^(d-f)) 3^f = -1 (mod 2^48), 2 <= e <= 36, 1 <= d-f <= 22
    std::vector<ExponentialForm> grid_forms;
    std::vector<std::pair<int, int>> grid_labels;
    for (int e = 2; e <= 36; ++e)
        for (int df = 1; df <= 22; ++df) {
            mpz_class p2 = mpz_class(1) << e, p3;
            mpz_ui_pow_ui(p3.get_mpz_t(), 3, df);
            if (p2 <= p3) continue;
            grid_forms.push_back({mpz_class(p2 - p3), 1});  // (2^e - 3^(d-f)) 3^f + 1
            grid_labels.emplace_back(e, df);
        }
    mpz_class trillion;
    mpz_ui_pow_ui(trillion.get_mpz_t(), 10, 12);
    const auto fhit = smallest_exponent(grid_forms, 3, 2, 48, trillion);
    c.expect(fhit.has_value() && fhit->t == mpz_class("64541949951") &&
                 grid_labels[fhit->form_index] == std::make_pair(26, 1),
             "minimal f = 64541949951 at (e, d-f) = (26, 1)");
    c.note("modular log battery");
}

void criterion8(Checker& c, const VerifyOptions& opt) {
    const auto [n36, n180] = standard_moduli();
    c.expect(n36.m == 23350145, "N_36 = 23350145");
    c.expect(n180.m == 439564261361225ULL, "N_180 = 439564261361225");
    c.expect(36 % n36.ord2 == 0 && 36 % n36.ord3 == 0, "orders divide 36");
    c.expect(180 % n180.ord2 == 0 && 180 % n180.ord3 == 0, "orders divide 180");

    const auto& fam7 = FamilySpec::get(7);
    const auto eq = EquationSpec::from_family(fam7);
    const auto locals = local_solutions_prefiltered(eq, n180, n36, opt.workers);
    const auto lifted = lift_and_check(eq, locals, n180, {19, 12});
    const auto direct = solve_family(fam7, {19, 12});
    std::vector<ResidueTuple> direct_vec;
    for (const auto& t : direct) direct_vec.emplace_back(t.begin(), t.end());
    c.expect(lifted == direct_vec,
             "lift-and-check over N_180 equals direct enumeration for family 7 (" +
                 std::to_string(lifted.size()) + " vs " + std::to_string(direct_vec.size()) + ")");
    c.note("locals mod N_180: " + std::to_string(locals.size()));
}

void criterion9(Checker& c, const VerifyOptions& opt) {
    const mpz_class p(kConvP), q(kConvQ);
    c.expect(is_convergent(p, q, log32(), opt.precision_ceiling), "30-digit p/q is a convergent");

    // the statement indexes quotients from 1 at the integer part, so its
    // a_{i+1}, i < 10000 are positions 1..9999 here and its q_10000 is q[9999]
    const auto exp = cf_expand(log32(), 10001, 64, opt.precision_ceiling);
    c.expect(exp.convergents.size() == 10001, "expansion depth 10001");
    mpz_class maxa = 0;
    std::size_t argmax = 0;
    for (std::size_t i = 1; i <= 9999 && i < exp.convergents.size(); ++i)
        if (exp.convergents[i].a > maxa) {
            maxa = exp.convergents[i].a;
            argmax = i;
        }
    c.expect(maxa == 8228 && argmax == 4312, "max partial quotient 8228 at position 4312 (= a_4313)");
    c.expect(exp.convergents[9999].q > pow10_z(5144), "q_10000 > 10^5144");
    c.expect(exp.convergents[10000].q > pow10_z(5144), "next denominator also exceeds 10^5144");

    const ValidatedReal gap = homogeneous_gap(q, log32(), opt.precision_ceiling);
    // the nearest integer to q kappa is exactly the printed numerator p
    const ValidatedReal direct =
        (log32()(80).mul(q) - ValidatedReal::exact(p, digits_to_bits(80))).abs();
    c.expect(direct.certainly_less(mpq_class(1, 2)), "p is the nearest integer to q kappa");
    const ValidatedReal scaled = gap * ValidatedReal::log_of(2, gap.prec_bits());
    const mpq_class thr(mpz_class(1), mpz_class(318) * pow10_z(28));
    c.expect(scaled.certainly_greater(thr), "|q log3 - p log2| >= (3.18e30)^-1");
    c.note("digits used: " + std::to_string(exp.digits_used));
}

void criterion10(Checker& c, const VerifyOptions&) {
    const mpz_class q(kConvQ);
    const mpz_class M = mpz_class(202) * pow10_z(26);  // 2.02e28
    const mpq_class cap_qe(mpz_class(277) * pow10_z(29), 1);
    const mpq_class cap_mk(107, 10000);

    struct PairOutcome {
        int da, db;
        double qe_lo, qe_hi;
    };
    std::vector<PairOutcome> outcomes;
    int homogeneous = 0;
    for (const auto& gp : reduction_grid(68)) {
        if (gp.excess == 1) {
            ++homogeneous;
            continue;
        }
        BDOutcome out;
        for (long digits = 80; digits <= 1280; digits *= 2) {
            BDInput in(log_ratio(3, 2, digits), log_ratio(gp.excess, 2, digits), M, 1.0, 2.0, q);
            out = baker_davenport(in);
            if (out.status != BDOutcome::Status::undecided) break;
        }
        c.expect(out.status == BDOutcome::Status::ok,
                 "eps > 0 at (" + std::to_string(gp.da) + "," + std::to_string(gp.db) + ")");
        if (out.status != BDOutcome::Status::ok) continue;
        c.expect(out.m_kappa_norm.certainly_less(cap_mk), "M||q kappa|| < 0.0107");
        c.expect(out.q_over_eps.certainly_less(cap_qe),
                 "q/eps < 2.77e31 at (" + std::to_string(gp.da) + "," + std::to_string(gp.db) + ")");
        outcomes.push_back(
            {gp.da, gp.db, out.q_over_eps.lower_double(), out.q_over_eps.upper_double()});
    }
    c.expect(homogeneous == 2, "two homogeneous pairs routed to the gap bound");
    // certified argmax: the (68,43) lower bound beats every other upper bound
    const auto best = std::max_element(outcomes.begin(), outcomes.end(),
                                       [](const PairOutcome& x, const PairOutcome& y) {
                                           return x.qe_lo < y.qe_lo;
                                       });
    bool separated = best != outcomes.end() && best->da == 68 && best->db == 43;
    if (separated)
        for (const auto& o : outcomes)
            if (&o != &*best && o.qe_hi >= best->qe_lo) separated = false;
    c.expect(separated, "maximum q/eps certifiably at (68, 43)");
    c.note("grid pairs checked: " + std::to_string(outcomes.size()));
}

// independent bitmask subset-sum oracle
bool subsum_oracle(const std::vector<mpz_class>& v) {
    const std::size_t k = v.size();
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        mpz_class s = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) s += v[i];
        if (s == 0) return true;
    }
    return false;
}

uint32_t omega_naive(uint64_t N) {
    std::set<std::array<uint64_t, 3>> reps;
    for (uint64_t x = 1; x <= N - 2; x *= 2) {
        for (uint64_t xx = x; xx <= N - 2; xx *= 3) {
            for (uint64_t y = 1; y <= N - 1 - xx; y *= 2) {
                uint64_t r = N - xx - y;
                uint64_t t = r;
                while (t % 3 == 0) t /= 3;
                if (t == 1) {
                    std::array<uint64_t, 3> key{xx, y, r};
                    std::sort(key.begin(), key.end());
                    reps.insert(key);
                }
                if (y > (N - 1 - xx) / 2) break;
            }
            if (xx > (N - 2) / 3) break;
        }
        if (x > (N - 2) / 2) break;
    }
    return static_cast<uint32_t>(reps.size());
}

void criterion11(Checker& c, const VerifyOptions& opt) {
    // (a) LTE closed forms vs direct valuations, exhaustive x <= 1e4
    mpz_class p3 = 1, p2 = 1;
    bool lte_ok = true;
    for (uint64_t x = 1; x <= 10000; ++x) {
        p3 *= 3;
        p2 *= 2;
        if (nu2_of_3pow_minus1(x) != nu(2, mpz_class(p3 - 1))) lte_ok = false;
        if (nu3_of_2pow_minus1(x) != nu(3, mpz_class(p2 - 1))) lte_ok = false;
    }
    c.expect(lte_ok, "LTE closed forms match direct valuations to 1e4");

    // (b) omega vs the naive oracle, exhaustive N <= 1e4
    bool omega_ok = true;
    for (uint64_t N = 3; N <= 10000; ++N)
        if (omega(N) != omega_naive(N)) {
            omega_ok = false;
            c.expect(false, "omega mismatch at N = " + std::to_string(N));
            break;
        }
    c.expect(omega_ok, "omega equals naive oracle to 1e4");

    // (c) meet-in-the-middle vs naive family enumeration on box (5,3)
    for (int id = 1; id <= 18; ++id) {
        const auto& f = FamilySpec::get(id);
        c.expect(solve_family(f, {5, 3}) == solve_family_naive(f, {5, 3}),
                 "family " + std::to_string(id) + " MITM = naive on (5,3)");
    }

    // (d) subsum detector vs the bitmask oracle on zero-sum tuples, k <= 6
    std::mt19937_64 rng(opt.seed);
    const auto three = solve_k_term(3, {19, 12});
    const auto four = solve_k_term(4, {19, 12});
    std::vector<std::vector<mpz_class>> cases;
    for (const auto& t : three) cases.push_back(t.values());
    for (const auto& t : four) cases.push_back(t.values());
    for (int i = 0; i < 400; ++i) {
        // glue one solution against a negated one: still zero-sum, often degenerate
        const auto& t1 = three[rng() % three.size()].values();
        const auto& t2 = three[rng() % three.size()].values();
        std::vector<mpz_class> glued = t1;
        const long s2 = 1L << (rng() % 3), s3 = static_cast<long>(std::pow(3, rng() % 3));
        for (const auto& v : t2) glued.push_back(-v * s2 * s3);
        cases.push_back(glued);
    }
    bool subsum_ok = true;
    for (const auto& v : cases)
        if (detect_vanishing_subsum(v).has_vanishing != subsum_oracle(v)) subsum_ok = false;
    c.expect(subsum_ok, "subsum detector equals bitmask oracle");

    // (e) the 2^alpha vs 3^beta gap inequality at the minimizing alpha
    const auto kappa = log32();
    for (unsigned long beta = 2; beta <= 300; ++beta) {
        // alpha candidates floor/ceil of beta log3/log2
        const ValidatedReal x = kappa(64).mul(beta);
        const auto fl = x.floor();
        c.expect(fl.has_value(), "floor decided");
        if (!fl) continue;
        const unsigned long a0 = fl->get_ui();
        c.expect(lfl2_gap_holds(a0, beta), "gap holds at (" + std::to_string(a0) + "," +
                                               std::to_string(beta) + ")");
        c.expect(lfl2_gap_holds(a0 + 1, beta), "gap holds at (" + std::to_string(a0 + 1) + "," +
                                                   std::to_string(beta) + ")");
    }
    c.note("property suites");
}

}  // namespace

std::vector<std::string> default_criteria() {
    return {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11"};
}

CheckResult verify_criterion(const std::string& id, const VerifyOptions& opt) {
    if (id == "1")
        return run(id, "3-term enumeration (4 primitive tuples)", 1.0, opt,
                   [&](Checker& c) { criterion1(c, opt); });
    if (id == "2")
        return run(id, "4-term enumeration (62 reference tuples)", 10.0, opt,
                   [&](Checker& c) { criterion2(c, opt); });
    if (id == "3")
        return run(id, "5-term pipeline (counts, 1431 primitives, box stability)", 600.0, opt,
                   [&](Checker& c) { criterion3(c, opt); });
    if (id == "4")
        return run(id, "omega battery (thresholds, omega=9 set, identity families)", 300.0, opt,
                   [&](Checker& c) { criterion4(c, opt); });
    if (id == "5")
        return run(id, "nonspecial omega >= 3 set below 25000", 60.0, opt,
                   [&](Checker& c) { criterion5(c, opt); });
    if (id == "6")
        return run(id, "largest special N spot checks (types I/II)", 0.0, opt,
                   [&](Checker& c) { criterion6(c, opt); });
    if (id == "6L")
        return run(id, "largest type III with omega 3 (scan to 8e7)", 0.0, opt,
                   [&](Checker& c) { criterion6_long(c, opt); });
    if (id == "7")
        return run(id, "modular log battery", 60.0, opt, [&](Checker& c) { criterion7(c, opt); });
    if (id == "8")
        return run(id, "sieve moduli and N_180 lift for family 7", 300.0, opt,
                   [&](Checker& c) { criterion8(c, opt); });
    if (id == "9")
        return run(id, "continued fraction battery", 600.0, opt,
                   [&](Checker& c) { criterion9(c, opt); });
    if (id == "10")
        return run(id, "reduction grid (eps > 0, max q/eps at (68,43))", 300.0, opt,
                   [&](Checker& c) { criterion10(c, opt); });
    if (id == "11")
        return run(id, "property suites", 300.0, opt, [&](Checker& c) { criterion11(c, opt); });
    throw std::invalid_argument("unknown criterion id: " + id);
}

std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyOptions& opt) {
    std::vector<std::string> ids;
    if (suite == "all")
        ids = default_criteria();
    else if (suite == "thresholds" || suite == "theorem3")  // the omega battery
        ids = {"4"};
    else if (suite == "enumeration" || suite == "enumerate")
        ids = {"1", "2", "3"};
    else if (suite == "nonspecial")
        ids = {"5"};
    else if (suite == "special-types")
        ids = {"6"};
    else if (suite == "special-types-long")
        ids = {"6L"};
    else if (suite == "modlog")
        ids = {"7"};
    else if (suite == "sieve")
        ids = {"8"};
    else if (suite == "cf")
        ids = {"9"};
    else if (suite == "bd")
        ids = {"10"};
    else if (suite == "properties")
        ids = {"11"};
    else
        throw std::invalid_argument("unknown suite: " + suite);
    std::vector<CheckResult> out;
    for (const auto& id : ids) out.push_back(verify_criterion(id, opt));
    return out;
}

}  // namespace sunit
