#include "fieldforge/ramify.hpp"

#include <numeric>

namespace ff {

std::string RegionClass::text() const {
    if (is_generic()) return "generic";
    const char* cs = cusp == Cusp::zero ? "0" : cusp == Cusp::one ? "1" : "inf";
    return std::string("cusp ") + cs + ", level " + std::to_string(level);
}

std::array<long, 3> ord_triple(const Rat& tau, const Int& p) {
    AbcTriple t = triple_of(tau);
    return {ord_p(t.A, p), ord_p(t.B, p), ord_p(t.C, p)};
}

RegionClass region(const Rat& tau, const Int& p) {
    auto o = ord_triple(tau, p);
    RegionClass r;
    for (int i = 0; i < 3; ++i) {
        if (o[i] > 0) {
            r.kind = RegionClass::Kind::cusp;
            r.cusp = static_cast<RegionClass::Cusp>(i);
            r.level = o[i];
            return r;
        }
    }
    r.kind = RegionClass::Kind::generic;
    return r;
}

Partition tame_class(const Cover& c, const Rat& tau, const Int& p) {
    for (long q : c.bad_set)
        if (p == q) throw std::domain_error("wild prime: formula inapplicable");
    RegionClass r = region(tau, p);
    if (r.is_generic()) return Partition((std::size_t)c.degree, 1);
    const Partition& lam = r.cusp == RegionClass::Cusp::zero  ? c.lambda0
                           : r.cusp == RegionClass::Cusp::one ? c.lambda1
                                                              : c.lambdainf;
    return power_cycle_type(lam, r.level);
}

long tame_disc_exp(const Cover& c, const Rat& tau, const Int& p) {
    return c.degree - (long)tame_class(c, tau, p).size();
}

namespace {

long g(long a, long b) { return std::gcd(a, std::labs(b)); }

// Observed Table-entries for the (6,1) family at its wild primes, attached
// to uncovered slots as advisory data only.  Keyed by (p, cusp, level mod
// period) where the printed table gives an oscillation set.
std::vector<long> observed_61(const Int& p, const RegionClass& r) {
    if (r.is_generic()) {
        if (p == 2) return {};
        if (p == 3) return {6};
        if (p == 5) return {5, 3};
        return {0};
    }
    long i = r.level;
    if (p == 2) {
        if (r.cusp == RegionClass::Cusp::zero) {
            // period 6 from level 5 on; observed sets at even levels
            long k = i <= 4 ? i : 5 + (i - 5) % 6;
            if (k == 2 || k == 4) return {6, 8};
            if (k == 6) return {6, 0};
            if (k == 8) return {4, 8};
            if (k == 10) return {4, 8};
            return {};
        }
        if (r.cusp == RegionClass::Cusp::one) {
            if (i == 1) return {};
            return i == 2 ? std::vector<long>{7} : std::vector<long>{6, 4};
        }
        if (i == 2) return {6, 4};
        if (i == 4) return {6};
        return {};
    }
    if (p == 3) {
        if (r.cusp == RegionClass::Cusp::zero) {
            long k = i <= 2 ? i : 3 + (i - 3) % 6;
            if (k == 3) return {7, 3};
            if (k == 6) return {6, 2};
            return {};
        }
        if (r.cusp == RegionClass::Cusp::one) {
            if (i == 2) return {7, 5};
            if (i == 3) return {6};
            if (i == 4) return {3};
            if (i >= 5) return {4};
            return {};
        }
        return i == 3 ? std::vector<long>{6} : std::vector<long>{};
    }
    if (p == 5) {
        if (r.cusp == RegionClass::Cusp::zero) return i % 5 == 0 ? std::vector<long>{0} : std::vector<long>{};
        if (r.cusp == RegionClass::Cusp::one) {
            if (i == 2) return {6};
            if (i == 3) return {3};
            if (i >= 4) return {2};
            return {};
        }
        return i % 5 == 0 ? std::vector<long>{5, 3} : std::vector<long>{};
    }
    return {};
}

}  // namespace

DiscExponent trinomial_disc_exp(long N, long m, const Rat& tau, const Int& p) {
    if (std::gcd(N, m) != 1) throw std::domain_error("trinomial_disc_exp: gcd(N,m) != 1");
    long r = N - m;
    long v = ord_p(tau, p);
    long e = 0;
    {
        Int nmr = Int(N) * m * r;
        e = remove_all(nmr, p);
    }
    auto uncov = [&]() {
        DiscExponent d = DiscExponent::uncovered();
        if (N == 6 && m == 1 && (p == 2 || p == 3 || p == 5))
            d.observed = observed_61(p, region(tau, p));
        return d;
    };
    if (v == 0) return uncov();

    if (e == 0) {
        // tame: agrees with the general cycle-type formula
        if (v > 0) return DiscExponent::of(N - g(N, v));
        return DiscExponent::of(m - g(m, v) + r - g(r, v));
    }

    bool vp = mpz_divisible_p(Int(v).get_mpz_t(), p.get_mpz_t()) != 0;
    if (Int(N) % p == 0) {
        long Ne = N * e;
        if (v <= -Ne) return DiscExponent::of(m - g(m, v + Ne) + r - g(r, v + Ne));
        if (vp) return uncov();
        if (v < 0) return DiscExponent::of(N * (e + 1) - g(N, v) + v);
        return DiscExponent::of(N * (e + 1) - g(N, v));
    }
    if (Int(m) % p == 0) {
        long me = m * e;
        if (v > me) return DiscExponent::of(N - g(N, v - me));
        if (vp) return uncov();
        if (v < 0) return DiscExponent::of(m * (e + 1) - g(m, v) + r - g(r, me - v));
        return DiscExponent::of(m * (e + 1) - g(m, v) + r - g(r, me - v) - v);
    }
    // p^e || r
    long re = r * e;
    if (v > re) return DiscExponent::of(N - g(N, v - re));
    if (vp) return uncov();
    if (v < 0) return DiscExponent::of(r * (e + 1) - g(r, v) + m - g(m, re - v));
    return DiscExponent::of(r * (e + 1) - g(r, v) + m - g(m, re - v) - v);
}

bool prime_drop(long N, long m, const Rat& tau, const Int& p) {
    if (std::gcd(N, m) != 1) throw std::domain_error("prime_drop: gcd(N,m) != 1");
    long r = N - m;
    long k = 0;
    if (Int(N) % p == 0)
        k = N;
    else if (Int(m) % p == 0)
        k = m;
    else if (Int(r) % p == 0)
        k = r;
    else
        throw std::domain_error("tame prime: use tame_disc_exp");
    Int nmr = Int(N) * m * r;
    long e = remove_all(nmr, p);
    RegionClass reg = region(tau, p);
    return !reg.is_generic() && reg.cusp == RegionClass::Cusp::zero &&
           reg.level % (k * e) == 0;
}

}  // namespace ff
