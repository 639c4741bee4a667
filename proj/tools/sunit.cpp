// Command-line front end: enumeration runs, omega queries and scans, bound
// evaluation, reduction runs, sieve runs, modular logs, and the verification
// batteries. JSON-lines output with a trailing summary record that embeds the
// run configuration and its hash; identical configuration gives byte-identical
// output. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "sunit/bounds.hpp"
#include "sunit/cf.hpp"
#include "sunit/enumerate.hpp"
#include "sunit/newman.hpp"
#include "sunit/padic.hpp"
#include "sunit/sieve.hpp"
#include "sunit/tuple.hpp"
#include "sunit/verify.hpp"

using json = nlohmann::ordered_json;
using namespace sunit;

namespace {

// the 30-digit convergent denominator driving the reduction runs
constexpr const char* kQ30 = "378155609259623725703103696043";

struct RunConfig {
    std::string subcommand;
    json flags = json::object();
    std::string out_path;  // empty = stdout
    unsigned workers = 0;
    long precision_ceiling = 1000000;
    uint64_t seed = 42;
    bool csv = false;

    json to_json() const {
        json j;
        j["subcommand"] = subcommand;
        j["flags"] = flags;
        j["out"] = out_path;
        j["workers"] = workers;
        j["precision_ceiling"] = precision_ceiling;
        j["seed"] = seed;
        j["csv"] = csv;
        return j;
    }
};

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string config_hash(const RunConfig& cfg) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(cfg.to_json().dump())));
    return buf;
}

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;
    bool csv = false;

    Output(const std::string& path, bool csv_mode = false) : csv(csv_mode) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            os = &file;
        }
    }
    void line(const std::string& s) { (*os) << s << "\n"; }
    void line(const json& j) { (*os) << j.dump() << "\n"; }
    // tabular record: CSV row in csv mode, JSON line otherwise
    void row(const json& j, const std::string& csv_row) {
        if (csv)
            (*os) << csv_row << "\n";
        else
            (*os) << j.dump() << "\n";
    }
};

void emit_summary(Output& out, const RunConfig& cfg, json summary) {
    summary["config"] = cfg.to_json();
    summary["config_hash"] = config_hash(cfg);
    json rec;
    rec["summary"] = std::move(summary);
    if (out.csv)
        out.line("# " + rec.dump());
    else
        out.line(rec);
}

int handle_dry_run(const RunConfig& cfg) {
    json rec;
    rec["dry_run"] = cfg.to_json();
    rec["config_hash"] = config_hash(cfg);
    std::cout << rec.dump() << "\n";
    return 0;
}

mpz_class parse_mpz(const std::string& s) {
    try {
        return mpz_class(s, 10);
    } catch (const std::exception&) {
        throw CLI::ValidationError("not a decimal integer: " + s);
    }
}

// "p^k" or a plain prime power like "1024"
std::pair<unsigned long, unsigned long> parse_prime_power(const std::string& s) {
    try {
        const auto caret = s.find('^');
        if (caret != std::string::npos) {
            const unsigned long p = std::stoul(s.substr(0, caret));
            const unsigned long k = std::stoul(s.substr(caret + 1));
            return {p, k};
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--mod must be a prime power, e.g. 2^40");
    }
    mpz_class v(s, 10);
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        unsigned long k = 0;
        mpz_class w = v;
        while (w % p == 0) {
            w /= p;
            ++k;
        }
        if (w == 1 && k > 0) return {p, k};
    }
    throw CLI::ValidationError("--mod must be a prime power, e.g. 2^40");
}

ExponentBox parse_box(const std::string& s, ExponentBox fallback) {
    if (s.empty()) return fallback;
    try {
        const auto comma = s.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("missing comma");
        return {static_cast<uint32_t>(std::stoul(s.substr(0, comma))),
                static_cast<uint32_t>(std::stoul(s.substr(comma + 1)))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("box/caps must be 'max2,max3'");
    }
}

// ---- subcommands ----------------------------------------------------------

void tuple_maxima(const std::vector<SolutionTuple>& sols, json& summary) {
    uint32_t m2 = 0, m3 = 0;
    for (const auto& t : sols)
        for (const auto& term : t.terms()) {
            m2 = std::max(m2, term.a);
            m3 = std::max(m3, term.b);
        }
    summary["max_exp_2"] = m2;
    summary["max_exp_3"] = m3;
}

std::string tuple_csv(const SolutionTuple& t) {
    std::string s = t.to_text();  // "[u1,...,uk]"
    return s.substr(1, s.size() - 2);
}

int run_enumerate(const RunConfig& cfg, int k, int family, const std::string& box_str) {
    Output out(cfg.out_path, cfg.csv);
    json summary;
    if (family > 0) {
        const ExponentBox box = parse_box(box_str, {19, 12});
        const auto sols = solve_family(FamilySpec::get(family), box);
        uint32_t m2 = 0, m3 = 0;
        for (const auto& t : sols) {
            json j;
            j["family"] = family;
            j["exponents"] = {t[0], t[1], t[2], t[3], t[4], t[5]};
            std::string csv = std::to_string(family);
            for (uint32_t e : t) csv += "," + std::to_string(e);
            out.row(j, csv);
            m2 = std::max({m2, t[0], t[2], t[4]});
            m3 = std::max({m3, t[1], t[3], t[5]});
        }
        summary["count"] = sols.size();
        summary["max_exp_2"] = m2;
        summary["max_exp_3"] = m3;
    } else if (k == 3 || k == 4) {
        const ExponentBox box = parse_box(box_str, {19, 12});
        const auto sols = solve_k_term(k, box);
        for (const auto& t : sols) out.row(json::parse(t.to_json()), tuple_csv(t));
        summary["count"] = sols.size();
        tuple_maxima(sols, summary);
    } else if (k == 5) {
        const ExponentBox box = parse_box(box_str, {19, 12});
        const auto sols = solve_5term(box, cfg.workers);
        mpz_class maxu1 = 0;
        for (const auto& t : sols) {
            out.row(json::parse(t.to_json()), tuple_csv(t));
            maxu1 = std::max(maxu1, t.values().front());
        }
        summary["count"] = sols.size();
        summary["max_u1"] = maxu1.get_str();
        tuple_maxima(sols, summary);
    } else {
        throw CLI::ValidationError("enumerate needs --k {3,4,5} or --family N");
    }
    emit_summary(out, cfg, summary);
    return 0;
}

int run_omega(const RunConfig& cfg, const std::vector<uint64_t>& scan, uint32_t min_omega,
              int64_t single, bool theorem3) {
    Output out(cfg.out_path, cfg.csv);
    if (theorem3) {
        const auto res = verify_criterion("4", {cfg.workers, cfg.seed, cfg.precision_ceiling, false});
        json j;
        j["criterion"] = res.id;
        j["pass"] = res.pass;
        j["details"] = res.details;
        out.line(j);
        emit_summary(out, cfg, json{{"pass", res.pass}});
        return res.pass ? 0 : 1;
    }
    json summary;
    if (!scan.empty()) {
        const auto hits = scan_range(scan[0], scan[1], min_omega, cfg.workers);
        for (const auto& [n, w] : hits) {
            json j;
            j["N"] = n;
            j["omega"] = w;
            out.row(j, std::to_string(n) + "," + std::to_string(w));
        }
        summary["hits"] = hits.size();
    } else {
        if (single < 1) throw CLI::ValidationError("omega needs N >= 1 or --scan");
        const auto reps = representations(static_cast<uint64_t>(single));
        for (const auto& r : reps) out.line(json::parse(r.to_json()));
        summary["N"] = single;
        summary["omega"] = reps.size();
        const auto tags = classify_special(static_cast<uint64_t>(single));
        json jt = json::array();
        for (const auto& t : tags) jt.push_back(t.to_text());
        summary["special"] = jt;
    }
    emit_summary(out, cfg, summary);
    return 0;
}

int run_bound_eval(const RunConfig& cfg, const std::string& in_path) {
    Output out(cfg.out_path);
    json req;
    if (in_path.empty() || in_path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        req = json::parse(ss.str());
    } else {
        std::ifstream f(in_path);
        if (!f) throw std::runtime_error("cannot open " + in_path);
        req = json::parse(f);
    }
    const std::string type = req.at("type");
    const long bits = digits_to_bits(req.value("digits", 48));
    auto vr = [&](const json& v) { return ValidatedReal::exact(v.get<double>(), bits); };
    json res;
    res["type"] = type;
    auto put_interval = [&](const ValidatedReal& v, const char* what) {
        res[std::string(what) + "_lower"] = v.lower_double();
        res[std::string(what) + "_upper"] = v.upper_double();
    };
    if (type == "matveev") {
        ComplexLFLInput in;
        in.n = req.at("n");
        in.D = req.at("D");
        in.kappa_real = req.value("kappa", 1);
        in.B = vr(req.at("B"));
        for (const auto& a : req.at("A")) in.A.push_back(vr(a));
        put_interval(matveev_lower(in), "bound");
        res["outward"] = matveev_lower(in).lower_double();  // lower bounds round down
    } else if (type == "yu") {
        PadicLFLInput in;
        in.n = req.at("n");
        in.D = req.at("D");
        in.p = req.at("p");
        in.B = vr(req.at("B"));
        for (const auto& a : req.at("A")) in.A.push_back(vr(a));
        put_interval(yu_upper(in), "bound");
        res["outward"] = yu_upper(in).upper_double();  // upper bounds round up
    } else if (type == "laurent") {
        TwoLogInput in;
        in.D = req.at("D");
        in.b_prime = vr(req.at("b_prime"));
        in.logA1 = vr(req.at("logA1"));
        in.logA2 = vr(req.at("logA2"));
        put_interval(laurent_two_log_lower(in), "bound");
        res["outward"] = laurent_two_log_lower(in).lower_double();
    } else if (type == "bl-padic") {
        PadicTwoLogInput in;
        in.p = req.at("p");
        in.g = req.value("g", 1);
        in.E = vr(req.at("E"));
        in.b_prime = vr(req.at("b_prime"));
        in.logA1 = vr(req.at("logA1"));
        in.logA2 = vr(req.at("logA2"));
        const std::string branch = req.value("branch", "two-nu-ge2");
        in.branch = branch == "odd-p"       ? PadicTwoLogBranch::odd_p
                    : branch == "two-nu-le1" ? PadicTwoLogBranch::two_nu_le1
                                             : PadicTwoLogBranch::two_nu_ge2;
        put_interval(bl_padic_two_log_upper(in), "bound");
        res["outward"] = bl_padic_two_log_upper(in).upper_double();
    } else if (type == "lfl2-gap") {
        res["holds"] = lfl2_gap_holds(req.at("alpha"), req.at("beta"));
    } else if (type == "lflp" || type == "lflp2") {
        const mpz_class u = parse_mpz(req.at("u").get<std::string>());
        const mpz_class gamma = parse_mpz(req.at("gamma").get<std::string>());
        const auto b = type == "lflp" ? lflp_bound(u, gamma) : lflp2_bound(u, gamma);
        put_interval(b, "bound");
        res["outward"] = b.upper_double();
    } else if (type == "lflp-check" || type == "lflp2-check") {
        const mpz_class u = parse_mpz(req.at("u").get<std::string>());
        const mpz_class g1 = parse_mpz(req.at("g1").get<std::string>());
        const mpz_class g2 = parse_mpz(req.at("g2").get<std::string>());
        if (type == "lflp-check") {
            res["nu"] = lflp_exact_nu2(g1, g2, u);
            res["holds"] = lflp_check(g1, g2, u);
        } else {
            res["nu"] = lflp2_exact_nu3(g1, g2, u);
            res["holds"] = lflp2_check(g1, g2, u);
        }
    } else {
        throw CLI::ValidationError("unknown bound type: " + type);
    }
    out.line(res);
    emit_summary(out, cfg, json{{"evaluated", type}});
    return 0;
}

int run_bd(const RunConfig& cfg, bool grid, int max_da, const std::string& pair_str,
           const std::string& mu_num, long digits, int convergents) {
    Output out(cfg.out_path);
    if (convergents > 0) {
        const auto e = cf_expand(log_ratio_producer(3, 2), static_cast<std::size_t>(convergents),
                                 64, cfg.precision_ceiling);
        for (const auto& cv : e.convergents) out.line(json::parse(cv.to_json()));
        emit_summary(out, cfg, json{{"convergents", e.convergents.size()},
                                    {"digits_used", e.digits_used}});
        return 0;
    }
    const mpz_class q(kQ30, 10);
    const mpz_class M = mpz_class(202) * [] {
        mpz_class v;
        mpz_ui_pow_ui(v.get_mpz_t(), 10, 26);
        return v;
    }();
    auto run_pair = [&](int da, int db, const mpz_class& excess) {
        json j;
        j["da"] = da;
        j["db"] = db;
        j["excess"] = excess.get_str();
        if (excess == 1) {
            j["status"] = "homogeneous";
            out.line(j);
            return;
        }
        BDOutcome o;
        long d = digits;
        for (; d <= cfg.precision_ceiling; d *= 2) {
            BDInput in(log_ratio(3, 2, d), log_ratio(excess, 2, d), M, 1.0, 2.0, q);
            o = baker_davenport(in);
            if (o.status != BDOutcome::Status::undecided) break;
        }
        j["status"] = o.reason();
        if (o.status == BDOutcome::Status::ok) {
            j["eps"] = o.eps.to_string(12);
            j["q_over_eps"] = o.q_over_eps.to_string(12);
            j["M_kappa_norm"] = o.m_kappa_norm.to_string(12);
            j["threshold"] = o.threshold.to_string(12);
        }
        out.line(j);
    };
    if (grid) {
        for (const auto& gp : reduction_grid(max_da)) run_pair(gp.da, gp.db, gp.excess);
        emit_summary(out, cfg, json{{"pairs", max_da}});
        return 0;
    }
    if (!pair_str.empty()) {
        const auto comma = pair_str.find(',');
        if (comma == std::string::npos) throw CLI::ValidationError("--pair must be 'da,db'");
        const int da = std::stoi(pair_str.substr(0, comma));
        const int db = std::stoi(pair_str.substr(comma + 1));
        mpz_class p2, p3;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, da);
        mpz_ui_pow_ui(p3.get_mpz_t(), 3, db);
        if (p3 <= p2) throw CLI::ValidationError("--pair needs 3^db > 2^da");
        run_pair(da, db, mpz_class(p3 - p2));
        emit_summary(out, cfg, json{{"pairs", 1}});
        return 0;
    }
    if (!mu_num.empty()) {
        // generic instance: mu = log(n)/log(2) with the standard kappa, M, q
        run_pair(0, 0, parse_mpz(mu_num));
        emit_summary(out, cfg, json{{"pairs", 1}});
        return 0;
    }
    throw CLI::ValidationError("bd needs --grid, --pair or --mu-num");
}

int run_sieve(const RunConfig& cfg, int family, const std::string& modulus, bool lift,
              const std::string& caps_str) {
    Output out(cfg.out_path);
    const auto [n36, n180] = standard_moduli();
    SieveModulus m;
    if (modulus == "n36")
        m = n36;
    else if (modulus == "n180")
        m = n180;
    else if (!modulus.empty() && modulus[0] == 'k')
        m = sieve_modulus_for(static_cast<uint32_t>(std::stoul(modulus.substr(1))));
    else
        throw CLI::ValidationError("--modulus must be n36, n180 or k<k>");

    const auto& fam = FamilySpec::get(family);
    const auto eq = EquationSpec::from_family(fam);
    const auto locals = m.m == n180.m ? local_solutions_prefiltered(eq, n180, n36, cfg.workers)
                                      : local_solutions(eq, m, cfg.workers);
    json summary;
    summary["modulus"] = m.m;
    summary["ord2"] = m.ord2;
    summary["ord3"] = m.ord3;
    summary["locals"] = locals.size();
    if (lift) {
        const ExponentBox caps = parse_box(caps_str, {19, 12});
        const auto lifted = lift_and_check(eq, locals, m, caps);
        for (const auto& t : lifted) {
            json j;
            j["family"] = family;
            j["exponents"] = t;
            out.line(j);
        }
        summary["lifted"] = lifted.size();
    } else {
        for (const auto& t : locals) {
            json j;
            j["residues"] = t;
            out.line(j);
        }
    }
    emit_summary(out, cfg, summary);
    return 0;
}

int run_modlog(const RunConfig& cfg, const std::string& g_str, const std::string& t_str,
               const std::string& mod_str) {
    Output out(cfg.out_path);
    const auto [p, k] = parse_prime_power(mod_str);
    const mpz_class g = parse_mpz(g_str);
    CongruenceClass cls;
    const auto slash = t_str.find('/');
    if (slash != std::string::npos) {
        cls = modular_log(g, parse_mpz(t_str.substr(0, slash)), parse_mpz(t_str.substr(slash + 1)),
                          p, k);
    } else {
        cls = modular_log(g, parse_mpz(t_str), p, k);
    }
    out.line(cls.to_text());
    emit_summary(out, cfg, json{{"class", json::parse(cls.to_json())}});
    return 0;
}

int run_verify(const RunConfig& cfg, const std::string& suite, bool with_long) {
    VerifyOptions opt;
    opt.workers = cfg.workers;
    opt.seed = cfg.seed;
    opt.precision_ceiling = cfg.precision_ceiling;
    auto results = verify_suite(suite, opt);
    if (with_long && suite == "all") results.push_back(verify_criterion("6L", opt));
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("%s [%s] %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.name.c_str(),
                    r.details.empty() ? "" : " -- ", r.details.c_str());
        all_pass = all_pass && r.pass;
    }
    std::printf("%s\n", all_pass ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED");
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and verifier for {2,3}-unit equations and the "
                 "three-term representation problem"};
    app.require_subcommand(1);

    RunConfig cfg;
    bool dry_run = false;
    if (const char* env = std::getenv("SUNIT_PRECISION_CEILING")) cfg.precision_ceiling = std::atol(env);
    app.add_option("--workers", cfg.workers, "worker threads (0 = all cores)");
    app.add_option("--out", cfg.out_path, "output file (default stdout)");
    app.add_option("--seed", cfg.seed, "seed for randomized property subcommands");
    app.add_option("--precision-ceiling", cfg.precision_ceiling, "digits cap for escalation");
    app.add_flag("--dry-run", dry_run, "validate the configuration and exit");
    app.add_flag("--csv", cfg.csv, "CSV rows for tabular subcommands instead of JSON lines");

    auto* c_enum = app.add_subcommand("enumerate", "k-term and family enumeration");
    int k = 0, family = 0;
    std::string box_str;
    c_enum->add_option("--k", k, "tuple length (3, 4 or 5)");
    c_enum->add_option("--family", family, "family id 1..18");
    c_enum->add_option("--box", box_str, "exponent box 'max2,max3'");

    auto* c_omega = app.add_subcommand("omega", "representation counting");
    int64_t n_single = 0;
    std::vector<uint64_t> scan;
    uint32_t min_omega = 1;
    bool theorem3 = false;
    c_omega->add_option("N", n_single, "single N to expand");
    c_omega->add_option("--scan", scan, "scan range lo hi")->expected(2);
    c_omega->add_option("--min", min_omega, "minimum omega for scan hits");
    c_omega->add_flag("--verify-theorem3", theorem3, "run the full threshold battery");

    auto* c_bound = app.add_subcommand("bound-eval", "evaluate a bound from a JSON description");
    std::string in_path;
    c_bound->add_option("--in", in_path, "JSON input file ('-' = stdin)");

    auto* c_bd = app.add_subcommand("bd", "one-dimensional reduction");
    bool grid = false;
    int max_da = 68;
    std::string pair_str, mu_num;
    long bd_digits = 80;
    int bd_convergents = 0;
    c_bd->add_flag("--grid", grid, "run the exponent-difference grid");
    c_bd->add_option("--convergents", bd_convergents,
                     "dump the first N convergents of log3/log2 as JSON lines");
    c_bd->add_option("--max-da", max_da, "grid extent in the exponent of 2");
    c_bd->add_option("--pair", pair_str, "single pair 'da,db'");
    c_bd->add_option("--mu-num", mu_num, "direct mu = log(n)/log(2) instance");
    c_bd->add_option("--digits", bd_digits, "starting working precision");

    auto* c_sieve = app.add_subcommand("sieve", "modular sieve runs");
    int s_family = 7;
    std::string modulus = "n36", caps_str;
    bool lift = false;
    c_sieve->add_option("--family", s_family, "family id 1..18")->required();
    c_sieve->add_option("--modulus", modulus, "n36, n180 or k<k>");
    c_sieve->add_flag("--lift", lift, "lift residue classes and check exactly");
    c_sieve->add_option("--caps", caps_str, "exponent caps 'max2,max3' for lifting");

    auto* c_modlog = app.add_subcommand("modlog", "solve g^x = t mod p^k");
    std::string g_str = "3", t_str, mod_str;
    c_modlog->add_option("--g", g_str, "base");
    c_modlog->add_option("--t", t_str, "target (integer or num/den)")->required();
    c_modlog->add_option("--mod", mod_str, "modulus p^k")->required();

    auto* c_verify = app.add_subcommand("verify", "acceptance batteries");
    std::string suite = "all";
    bool with_long = false;
    c_verify->add_option("--suite", suite,
                         "all, thresholds, enumeration, nonspecial, special-types, "
                         "special-types-long, modlog, sieve, cf, bd, properties");
    c_verify->add_flag("--long", with_long, "include the 8e7 type III scan");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_enum->parsed()) {
            cfg.subcommand = "enumerate";
            cfg.flags = {{"k", k}, {"family", family}, {"box", box_str}};
            if (dry_run) return handle_dry_run(cfg);
            return run_enumerate(cfg, k, family, box_str);
        }
        if (c_omega->parsed()) {
            cfg.subcommand = "omega";
            cfg.flags = {{"N", n_single}, {"scan", scan}, {"min", min_omega}, {"theorem3", theorem3}};
            if (dry_run) return handle_dry_run(cfg);
            return run_omega(cfg, scan, min_omega, n_single, theorem3);
        }
        if (c_bound->parsed()) {
            cfg.subcommand = "bound-eval";
            cfg.flags = {{"in", in_path}};
            if (dry_run) return handle_dry_run(cfg);
            return run_bound_eval(cfg, in_path);
        }
        if (c_bd->parsed()) {
            cfg.subcommand = "bd";
            cfg.flags = {{"grid", grid}, {"max_da", max_da}, {"pair", pair_str},
                         {"mu_num", mu_num}, {"digits", bd_digits},
                         {"convergents", bd_convergents}};
            if (dry_run) return handle_dry_run(cfg);
            return run_bd(cfg, grid, max_da, pair_str, mu_num, bd_digits, bd_convergents);
        }
        if (c_sieve->parsed()) {
            cfg.subcommand = "sieve";
            cfg.flags = {{"family", s_family}, {"modulus", modulus}, {"lift", lift}, {"caps", caps_str}};
            if (dry_run) return handle_dry_run(cfg);
            return run_sieve(cfg, s_family, modulus, lift, caps_str);
        }
        if (c_modlog->parsed()) {
            cfg.subcommand = "modlog";
            cfg.flags = {{"g", g_str}, {"t", t_str}, {"mod", mod_str}};
            if (dry_run) return handle_dry_run(cfg);
            return run_modlog(cfg, g_str, t_str, mod_str);
        }
        if (c_verify->parsed()) {
            cfg.subcommand = "verify";
            cfg.flags = {{"suite", suite}, {"long", with_long}};
            if (dry_run) return handle_dry_run(cfg);
            return run_verify(cfg, suite, with_long);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
