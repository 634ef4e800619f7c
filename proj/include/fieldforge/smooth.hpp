#pragma once

#include <map>

#include "fieldforge/numbers.hpp"

namespace ff {

// Exact split sign * cofactor * prod p^e of a nonzero integer, the primes
// drawn from a supplied list; cofactor coprime to every listed prime.
struct SmoothFactorization {
    int sign = 1;
    std::map<Int, long> smooth_part;
    Int cofactor = 1;

    Int reconstruct() const {
        Int n = cofactor;
        for (const auto& [p, e] : smooth_part) n *= ipow(p, (unsigned long)e);
        return sign < 0 ? Int(-n) : n;
    }
};

inline SmoothFactorization smooth_factor(const Int& n, const std::vector<long>& primes) {
    if (n == 0) throw std::domain_error("smooth_factor: zero input");
    SmoothFactorization f;
    f.sign = n < 0 ? -1 : 1;
    f.cofactor = abs(n);
    for (long p : primes) {
        long e = remove_all(f.cofactor, Int(p));
        if (e > 0) f.smooth_part[Int(p)] = e;
    }
    return f;
}

}  // namespace ff
