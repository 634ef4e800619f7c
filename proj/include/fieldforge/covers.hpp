#pragma once

#include <optional>
#include <string>

#include "fieldforge/poly.hpp"
#include "fieldforge/triples.hpp"

namespace ff {

using Partition = std::vector<int>;  // parts sorted descending

int partition_sum(const Partition& p);

// Cycle type of the i-th power of a permutation of cycle type lambda.
Partition power_cycle_type(const Partition& lambda, long i);

// Canonical factorization of the x-discriminant of a cover's defining
// polynomial: D(t) = delta * t^a * (t-1)^b * c(t)^2, with c monic.
struct DiscShape {
    Rat delta;
    int a = 0;
    int b = 0;
    Poly<Rat> c = Poly<Rat>::one();

    bool operator==(const DiscShape& o) const {
        return delta == o.delta && a == o.a && b == o.b && c == o.c;
    }
};

// Disc shape of a cover over the quadratic extension: delta * t^a (t-1)^b
// (the two embedded covers of this kind have trivial residual factor).
struct QuadDiscShape {
    Quad delta;
    int a = 0;
    int b = 0;
};

struct TrinomialInfo {
    long N, m, r, v, w;
    bool swapped = false;                 // constructed with m > N/2, swapped to N-m
    std::vector<Poly<Rat>> star_fx;       // trinomial form m y^N - N t^v y^m + r t^w
};

// A three-point cover record.  f is stored as the list of x-coefficients,
// each a polynomial in t; QuadElem covers carry fxq instead of fx.
struct Cover {
    std::string name;
    int degree = 0;
    std::vector<Poly<Rat>> fx;
    std::vector<Poly<Quad>> fxq;
    bool quad_coeffs = false;
    Partition lambda0, lambda1, lambdainf;
    std::array<std::string, 3> class_labels{};
    std::vector<long> bad_set;
    std::optional<DiscShape> printed_shape;  // canonical convention (Res / lc)
    // For covers with non-unit leading coefficient the published D-line is
    // the resultant Res_x(f, f_x) = +-lc * disc; kept and verified as such.
    std::optional<DiscShape> printed_res;
    std::optional<QuadDiscShape> quad_shape;
    std::string monodromy_group, galois_group;
    int genus = 0;
    bool auxiliary = false;  // ramified over a different cusp set (u-line data)
    std::optional<TrinomialInfo> trinomial;

    // local monodromy orders (e0, e1, einf) = lcm of the parts per cusp
    Signature monodromy_orders() const;
    int riemann_hurwitz_genus() const;
};

enum class SpecForm { canonical, trinomial_star };

struct SpecializedAlgebra {
    std::string cover;
    Rat tau;
    Poly<Rat> poly;  // primitive integer coefficients, positive leading coeff
    bool separable = true;
};

// The embedded catalog; validated (Riemann-Hurwitz, partition sums) on
// first access.  Derived conjugate doubles are not included; see
// conj_double and cover_by_name.
const std::vector<Cover>& catalog();

// Lookup by name: catalog entries, the doubles "f26b"/"f26c", and
// "trinomial:N,m".
Cover cover_by_name(const std::string& name);

Cover trinomial_cover(long N, long m);

SpecializedAlgebra specialize(const Cover& c, const Rat& tau,
                              SpecForm form = SpecForm::canonical);

DiscShape disc_shape_compute(const Cover& c);

// Product of a QuadElem cover with its conjugate; coefficients must become
// rational, the degree doubles, cycle types are unioned.
Cover conj_double(const Cover& c);

std::string cover_json(const Cover& c);

}  // namespace ff
