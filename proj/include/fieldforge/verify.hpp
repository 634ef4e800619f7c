#pragma once

#include "fieldforge/covers.hpp"

namespace ff {

struct CheckResult {
    std::string check_id;
    bool passed = false;
    std::string detail;  // on failure, the exact mismatch
};

// Embedded data used by the checks, exposed so tests can run perturbed
// copies as negative controls.
namespace verify_data {

struct BaseChangeCase {
    int map;  // 2, 3 or 4
    std::array<std::string, 3> input;
    std::array<std::string, 3> image;
};
const std::vector<BaseChangeCase>& basechange_cases();

struct ScaledTrinomial {
    long N, m;
    Rat tau;
    Rat scale;     // outer multiplier
    Rat sub;       // x-substitution y = sub * x
    Poly<Rat> rhs; // printed integral trinomial
    Rat disc;      // printed polynomial discriminant
};
const std::vector<ScaledTrinomial>& scaled_trinomials();

// degree-26 element y with f_{27d}(32/81, y) = 0 in Q[x]/f_{27b}(-48, x)
Poly<Rat> iso27_y();

// symmetric bidegree (4,4) correspondence polynomial, coefficient of s^i t^j
const Rat& hecke_coeff(int i, int j);
Rat hecke_eval(const Rat& s, const Rat& t);
const std::vector<std::pair<Rat, Rat>>& hecke_pairs();
Rat hecke_cm_diagonal();  // h(tau, tau) = 0
Rat hecke_cm_zero();      // h(0, tau) = 0

Poly<Rat> cuspidal_septic();
Poly<Rat> cuspidal_quartic();

// resolvent and companion polynomials carried as data
const std::vector<std::pair<std::string, Poly<Rat>>>& companion_polys();

}  // namespace verify_data

CheckResult check_basechange();
CheckResult check_scaled_trinomials();
CheckResult check_iso_27();
CheckResult check_hecke();
CheckResult check_cuspidal();
CheckResult check_disc_shapes();

// Every check above plus the embedded-data load validations, ordered by
// check_id.  A catalog may be injected (corrupted copies in tests).
std::vector<CheckResult> run_suite();
std::vector<CheckResult> run_suite(const std::vector<Cover>& cat);

// data-parameterized internals, used by the checks and by negative controls
bool basechange_identity(const verify_data::BaseChangeCase& c, std::string* why);
bool scaled_trinomial_identity(const verify_data::ScaledTrinomial& s, std::string* why);
bool iso27_identity(const Poly<Rat>& y, std::string* why);
CheckResult check_disc_shapes(const std::vector<Cover>& cat);

}  // namespace ff
