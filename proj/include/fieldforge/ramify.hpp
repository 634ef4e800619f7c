#pragma once

#include "fieldforge/covers.hpp"

namespace ff {

// p-adic position of tau in the cusp-annulus partition of the parameter
// line: generic, or at distance `level` from one of the cusps 0, 1, inf.
struct RegionClass {
    enum class Kind { generic, cusp };
    enum class Cusp { zero = 0, one = 1, infinity = 2 };

    Kind kind = Kind::generic;
    Cusp cusp = Cusp::zero;
    long level = 0;

    bool is_generic() const { return kind == Kind::generic; }
    std::string text() const;
};

// ord_0, ord_1, ord_inf of tau at p (valuations of A, B, C).
std::array<long, 3> ord_triple(const Rat& tau, const Int& p);

RegionClass region(const Rat& tau, const Int& p);

// Ramification class at a tame prime: 1^N on the generic region,
// the level-th power of the local monodromy class at a cusp.
Partition tame_class(const Cover& c, const Rat& tau, const Int& p);

// N minus the number of orbits of that power.
long tame_disc_exp(const Cover& c, const Rat& tau, const Int& p);

// Valuation of the trinomial-family algebra discriminant, where the
// closed-form covers it; "uncovered" on the deleted intervals and at
// generic placement of a wild prime.  For the (6,1) family the observed
// oscillation values are attached to uncovered slots as advisory data.
struct DiscExponent {
    bool covered = false;
    long value = 0;
    std::vector<long> observed;  // advisory, non-normative

    static DiscExponent of(long v) { return {true, v, {}}; }
    static DiscExponent uncovered() { return {false, 0, {}}; }
};

DiscExponent trinomial_disc_exp(long N, long m, const Rat& tau, const Int& p);

// Whether tau is a prime-dropping specialization point of the trinomial
// family at p: p^e exactly divides one factor k of N*m*r and tau sits at
// cusp 0 with level a positive multiple of k*e.  Requires e >= 1.
bool prime_drop(long N, long m, const Rat& tau, const Int& p);

}  // namespace ff
