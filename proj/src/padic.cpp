#include "sunit/padic.hpp"

#include <stdexcept>

namespace sunit {

namespace {

mpz_class pow_ui(unsigned long base, unsigned long e) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), base, e);
    return v;
}

mpz_class powm(const mpz_class& b, const mpz_class& e, const mpz_class& m) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::vector<unsigned long> prime_factors_ui(unsigned long n) {
    std::vector<unsigned long> ps;
    for (unsigned long q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            ps.push_back(q);
            while (n % q == 0) n /= q;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

CongruenceClass CongruenceClass::of(mpz_class r, mpz_class m) {
    if (m <= 0) throw std::invalid_argument("CongruenceClass: modulus must be positive");
    CongruenceClass c;
    c.is_empty = false;
    c.m = std::move(m);
    c.r = ((r % c.m) + c.m) % c.m;
    return c;
}

std::string CongruenceClass::to_text() const {
    if (is_empty) return "none";
    return r.get_str() + " mod " + m.get_str();
}

std::string CongruenceClass::to_json() const {
    if (is_empty) return "null";
    return "{\"r\":\"" + r.get_str() + "\",\"m\":\"" + m.get_str() + "\"}";
}

CongruenceClass intersect(const CongruenceClass& a, const CongruenceClass& b) {
    if (a.is_empty || b.is_empty) return CongruenceClass::none();
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.m.get_mpz_t(), b.m.get_mpz_t());
    mpz_class diff = b.r - a.r;
    if (diff % g != 0) return CongruenceClass::none();
    mpz_class lcm = a.m / g * b.m;
    mpz_class r = a.r + a.m * ((diff / g * s) % (b.m / g));
    return CongruenceClass::of(r, lcm);
}

unsigned long nu(unsigned long p, const mpz_class& n) {
    if (p < 2) throw std::invalid_argument("nu: p must be a prime >= 2");
    if (n == 0) throw std::domain_error("nu: n = 0");
    mpz_class rem;
    const mpz_class pz(static_cast<unsigned long>(p));
    return static_cast<unsigned long>(mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

unsigned long nu2_of_3pow_minus1(uint64_t x) {
    if (x == 0) throw std::domain_error("nu2_of_3pow_minus1: x >= 1 required");
    if (x % 2 == 1) return 1;
    unsigned long v = 0;
    while (x % 2 == 0) {
        x /= 2;
        ++v;
    }
    return v + 2;
}

unsigned long nu3_of_2pow_minus1(uint64_t x) {
    if (x == 0) throw std::domain_error("nu3_of_2pow_minus1: x >= 1 required");
    if (x % 2 == 1) return 0;
    unsigned long v = 0;
    while (x % 3 == 0) {
        x /= 3;
        ++v;
    }
    return v + 1;
}

mpz_class mult_order(const mpz_class& g, unsigned long p, unsigned long k) {
    if (k == 0) throw std::invalid_argument("mult_order: k >= 1 required");
    const mpz_class m = pow_ui(p, k);
    if (gcd(mpz_class(g % m), mpz_class(static_cast<unsigned long>(p))) != 1)
        throw std::domain_error("mult_order: gcd(g, p) != 1");
    // group order p^(k-1) (p-1); strip primes from it
    mpz_class ord = pow_ui(p, k - 1) * (p - 1);
    std::vector<unsigned long> qs = prime_factors_ui(p - 1);
    if (k > 1) qs.push_back(p);
    for (unsigned long q : qs)
        while (ord % q == 0 && powm(g, ord / q, m) == 1) ord /= q;
    return ord;
}

CongruenceClass modular_log(const mpz_class& g, const mpz_class& t, unsigned long p, unsigned long k) {
    if (k == 0) throw std::invalid_argument("modular_log: k >= 1 required");
    const mpz_class pz(static_cast<unsigned long>(p));
    const mpz_class pk = pow_ui(p, k);
    mpz_class gg = ((g % pk) + pk) % pk;
    mpz_class tt = ((t % pk) + pk) % pk;
    if (gcd(gg, pz) != 1 || gcd(tt, pz) != 1) throw std::domain_error("modular_log: non-unit input");

    // level 1: scan the cycle of g mod p
    mpz_class r = 0, ord = 1;
    {
        const mpz_class g1 = gg % pz, t1 = tt % pz;
        mpz_class x = g1;
        while (x != 1) {
            x = x * g1 % pz;
            ++ord;
        }
        x = 1;
        bool found = false;
        for (mpz_class i = 0; i < ord; ++i) {
            if (x == t1) {
                r = i;
                found = true;
                break;
            }
            x = x * g1 % pz;
        }
        if (!found) return CongruenceClass::none();
    }

    // lift: solutions mod p^j form a coset of ord_j * Z; ord_{j+1} / ord_j divides p
    for (unsigned long j = 2; j <= k; ++j) {
        const mpz_class m = pow_ui(p, j);
        const mpz_class h = powm(gg, ord, m);
        mpz_class cand = powm(gg, r, m);
        const mpz_class tm = tt % m;
        bool found = false;
        mpz_class step = 0;
        for (unsigned long i = 0; i < p; ++i) {
            if (cand == tm) {
                found = true;
                step = i;
                break;
            }
            cand = cand * h % m;
        }
        if (!found) return CongruenceClass::none();
        r += step * ord;
        // order of h = g^ord_{j-1} in (Z/p^j)^* is 1 or p
        mpz_class hh = h, oh = 1;
        while (hh != 1) {
            hh = hh * h % m;
            ++oh;
            if (oh > p) throw std::logic_error("modular_log: kernel order exceeded p");
        }
        ord *= oh;
    }
    if (powm(gg, r, pk) != tt) throw std::logic_error("modular_log: verification failed");
    return CongruenceClass::of(r, ord);
}

CongruenceClass modular_log(const mpz_class& g, const mpz_class& t_num, const mpz_class& t_den,
                            unsigned long p, unsigned long k) {
    const mpz_class pk = pow_ui(p, k);
    mpz_class den = ((t_den % pk) + pk) % pk, inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pk.get_mpz_t()) == 0)
        throw std::domain_error("modular_log: denominator not a unit");
    return modular_log(g, mpz_class(t_num * inv), p, k);
}

std::optional<SmallestExponentHit> smallest_exponent(const std::vector<ExponentialForm>& forms,
                                                     unsigned long base, unsigned long p,
                                                     unsigned long e, const mpz_class& bound) {
    if (e == 0 || bound < 1) throw std::invalid_argument("smallest_exponent: e >= 1, bound >= 1");
    const mpz_class pe = pow_ui(p, e);
    std::optional<SmallestExponentHit> best;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const auto& f = forms[i];
        // nu_p(c1 base^t + c2) >= e  <=>  base^t = -c2/c1 (mod p^e)
        mpz_class c1 = ((f.c1 % pe) + pe) % pe;
        if (gcd(c1, mpz_class(static_cast<unsigned long>(p))) != 1)
            throw std::domain_error("smallest_exponent: p divides a leading coefficient");
        if (mpz_class(((f.c2 % pe) + pe) % pe) % p == 0) continue;  // valuation is 0 for every t
        CongruenceClass cls = modular_log(mpz_class(static_cast<unsigned long>(base)),
                                          mpz_class(-f.c2), f.c1, p, e);
        if (cls.is_empty) continue;
        mpz_class t = cls.r >= 1 ? cls.r : cls.m;  // smallest positive member
        if (t > bound) continue;
        if (!best || t < best->t) best = SmallestExponentHit{t, i};
    }
    return best;
}

}  // namespace sunit
