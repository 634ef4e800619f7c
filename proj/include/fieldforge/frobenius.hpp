#pragma once

#include <map>

#include "fieldforge/poly.hpp"

namespace ff {

// Multiset of degrees of the irreducible factors of a reduction mod p,
// one entry per distinct factor.  ramified is set when the reduction is
// non-squarefree (or the degree dropped because p divides the leading
// coefficient, in which case degree_dropped is set too).
struct FactorPartition {
    std::vector<int> parts;  // sorted descending
    bool ramified = false;
    bool degree_dropped = false;

    bool operator==(const FactorPartition& o) const {
        return parts == o.parts && ramified == o.ramified;
    }
    std::string text() const;
};

struct ModFactor {
    std::vector<unsigned long> coeffs;  // constant first, monic
    int multiplicity = 1;
};

struct FactorModResult {
    Int p;
    std::vector<ModFactor> factors;  // sorted by degree then coefficients
    bool degree_dropped = false;
    unsigned long unit = 1;  // leading unit so that unit * prod fi^mi = f mod p
};

// Complete factorization over F_p; deterministic for a fixed seed (the
// equal-degree split is randomized, seed 0 by default).
FactorModResult factor_mod_p(const Poly<Rat>& f, const Int& p,
                             std::uint64_t seed = 0);

FactorPartition partition(const Poly<Rat>& f, const Int& p, std::uint64_t seed = 0);

// Jacobi symbol (a/n), n odd positive.
int jacobi(const Int& a, const Int& n);

struct ClassTableRow {
    std::string atlas_label;
    int sign0, sign1;            // coset in C2 x C2 as a pair of Jacobi signs
    std::vector<int> partition;  // sorted descending
    int class_size;
};

const std::vector<ClassTableRow>& pgl29_class_table();

struct Pgl29Result {
    bool matched = false;
    std::string label;
    FactorPartition part;
    int sign0 = 0, sign1 = 0;
};

// Frobenius class of the degree-10 cover's specialization at a good prime,
// identified inside the Jacobi-predicted coset.
Pgl29Result pgl29_class(const Rat& tau, const Int& p);

struct IntLess {
    bool operator()(const Int& a, const Int& b) const { return a < b; }
};

std::map<Int, FactorPartition, IntLess> fingerprint(const Poly<Rat>& f,
                                                    const std::vector<Int>& primes);

// Least listed prime, coprime to both discriminants and leading
// coefficients, with differing partitions; nullopt if indistinguishable.
std::optional<Int> distinguish(const Poly<Rat>& f, const Poly<Rat>& g,
                               const std::vector<Int>& primes);

Int element_order(const FactorPartition& part);

}  // namespace ff
