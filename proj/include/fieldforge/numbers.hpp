#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ff {

using Int = mpz_class;
using Rat = mpq_class;

inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int ipow(long base, unsigned long e) { return ipow(Int(base), e); }

// τ^e for e possibly negative; τ != 0 required when e < 0.
inline Rat rpow(const Rat& base, long e) {
    if (e >= 0) {
        Rat r;
        mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), (unsigned long)e);
        mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), (unsigned long)e);
        r.canonicalize();
        return r;
    }
    if (base == 0) throw std::domain_error("rpow: 0 to negative power");
    return rpow(Rat(1) / base, -e);
}

// Largest e with p^e | n, n != 0.
inline long ord_p(const Int& n, const Int& p) {
    if (n == 0) throw std::domain_error("ord_p: zero argument");
    Int rest;
    return (long)mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

inline long ord_p(const Rat& q, const Int& p) {
    if (q == 0) throw std::domain_error("ord_p: zero argument");
    return ord_p(q.get_num(), p) - ord_p(q.get_den(), p);
}

// Strips every factor of p from n, returns the exponent removed.
inline long remove_all(Int& n, const Int& p) {
    Int rest;
    long e = (long)mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    n = rest;
    return e;
}

inline bool is_square(const Int& n) { return mpz_perfect_square_p(n.get_mpz_t()) != 0; }

// gcd of the exponents in the prime factorization of n >= 2, i.e. the largest
// k with n = m^k.  Does not factor n.
inline unsigned long exponent_gcd(const Int& n) {
    if (n < 2) throw std::domain_error("exponent_gcd: need n >= 2");
    unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Int root;
    for (unsigned long k = bits; k >= 2; --k) {
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) return k;
    }
    return 1;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& n) { return n.get_str(); }

inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::vector<long> primes_upto(long n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<long> out;
    for (long i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (long j = 2 * i; j <= n; j += i) sieve[j] = false;
    }
    return out;
}

inline bool is_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0; }

// Deterministic 64-bit generator used wherever reproducible randomness is
// needed (equal-degree splitting, sampled property tests).
struct Rng64 {
    std::uint64_t s;
    explicit Rng64(std::uint64_t seed) : s(seed ^ 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        return s * 0x2545f4914f6cdd1dULL;
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace ff
