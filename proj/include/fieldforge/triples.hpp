#pragma once

#include <array>
#include <optional>

#include "fieldforge/numbers.hpp"

namespace ff {

// One slot of a signature (p, q, r): a positive integer or infinity.
// Infinity is a distinguished state, never a sentinel integer.
struct SigVal {
    bool inf = false;
    unsigned long v = 0;

    static SigVal infinite() { return {true, 0}; }
    static SigVal finite(unsigned long k) { return {false, k}; }

    bool operator==(const SigVal& o) const {
        return inf == o.inf && (inf || v == o.v);
    }
    // divisibility with the convention k | inf for every k, inf | inf only
    bool divides(const SigVal& o) const {
        if (inf) return o.inf;
        if (o.inf) return true;
        return v != 0 && o.v % v == 0;
    }
};

struct Signature {
    std::array<SigVal, 3> e;

    static Signature of(SigVal p, SigVal q, SigVal r) { return {{p, q, r}}; }
    static Signature fin(unsigned long p, unsigned long q, unsigned long r) {
        return {{SigVal::finite(p), SigVal::finite(q), SigVal::finite(r)}};
    }
    bool operator==(const Signature& o) const { return e == o.e; }
    bool divides(const Signature& o) const {
        return e[0].divides(o.e[0]) && e[1].divides(o.e[1]) && e[2].divides(o.e[2]);
    }
    std::string text() const;
};

// Normalized solution of A + B + C = 0: all nonzero, gcd 1, exactly two
// components positive.
struct AbcTriple {
    Int A, B, C;

    bool operator==(const AbcTriple& o) const { return A == o.A && B == o.B && C == o.C; }
    bool operator<(const AbcTriple& o) const;  // canonical-representative order
    std::string text() const;
    Int max_abs() const;
};

AbcTriple normalize(const Int& A, const Int& B, const Int& C);

Rat tau_of(const AbcTriple& t);
AbcTriple triple_of(const Rat& tau);

Signature max_signature(const AbcTriple& t, const std::vector<long>& S);
bool member(const AbcTriple& t, const Signature& sig, const std::vector<long>& S);

// Some hyperbolic signature with all finite entries S-smooth divides
// max_signature(t, S).
bool qualifies(const AbcTriple& t, const std::vector<long>& S);

struct OrbitRecord {
    AbcTriple representative;
    std::vector<std::pair<AbcTriple, Rat>> elements;  // closed under S3, with tau
    Signature max_sig;                                // of the representative
};

OrbitRecord s3_orbit(const AbcTriple& t);

AbcTriple base_change_2(const AbcTriple& t);
AbcTriple base_change_3(const AbcTriple& t);
AbcTriple base_change_4(const AbcTriple& t);

// All qualifying orbits with every |component| <= bound, one canonical
// representative each, deterministic order.
std::vector<AbcTriple> search(const std::vector<long>& S, const Int& bound,
                              int threads = 1);

// The 101 transcribed orbits, validated on first access.
const std::vector<OrbitRecord>& embedded_tables();

// Index into embedded_tables() of the orbit containing t, if any.
std::optional<int> embedded_orbit_index(const AbcTriple& t);

// Number of distinct tau (arrangements, not orbits) across the embedded
// orbits whose triple arrangement lies in T_sig for S = {2,3}.
long star_count(const Signature& sig);

// The arrangements themselves, sorted by tau; used to drive specialization.
std::vector<std::pair<AbcTriple, Rat>> star_elements(const Signature& sig);

// Signed product of prime powers, e.g. "-2^3*17^2".
Int parse_int_monomial(const std::string& s);

}  // namespace ff
