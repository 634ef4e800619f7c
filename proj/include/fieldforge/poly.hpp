#pragma once

#include <algorithm>
#include <concepts>
#include <optional>
#include <utility>
#include <vector>

#include "fieldforge/numbers.hpp"
#include "fieldforge/quad.hpp"

namespace ff {

// Dense univariate polynomial, coefficients constant-term first.
// Invariant: no stored trailing zeros; the zero polynomial has an empty list.
template <class K>
struct Poly {
    std::vector<K> c;

    Poly() = default;
    explicit Poly(std::vector<K> v) : c(std::move(v)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(K(1)); }
    static Poly constant(K v) { return Poly(std::vector<K>{std::move(v)}); }
    static Poly x() { return monomial(K(1), 1); }
    static Poly monomial(K coef, std::size_t e) {
        std::vector<K> v(e + 1, K(0));
        v[e] = std::move(coef);
        return Poly(std::move(v));
    }

    void trim() {
        while (!c.empty() && c.back() == K(0)) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }
    K coeff(std::size_t i) const { return i < c.size() ? c[i] : K(0); }
    const K& lc() const {
        if (c.empty()) throw std::domain_error("lc of zero polynomial");
        return c.back();
    }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<K> v(std::max(c.size(), o.c.size()), K(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
        return Poly(std::move(v));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return zero();
        std::vector<K> v(c.size() + o.c.size() - 1, K(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) v[i + j] += c[i] * o.c[j];
        return Poly(std::move(v));
    }

    Poly operator*(const K& s) const {
        Poly r = *this;
        for (auto& v : r.c) v = v * s;
        r.trim();
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(unsigned long e) const {
        Poly r = one(), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    Poly derivative() const {
        if (c.size() <= 1) return zero();
        std::vector<K> v(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) v[i - 1] = c[i] * K((long)i);
        return Poly(std::move(v));
    }

    K eval(const K& x0) const {
        K r(0);
        for (std::size_t i = c.size(); i-- > 0;) r = r * x0 + c[i];
        return r;
    }

    // Division with remainder; requires K a field (divides by lc(b)).
    static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        r = a;
        q = zero();
        if (a.degree() < b.degree()) return;
        q.c.assign(a.degree() - b.degree() + 1, K(0));
        K binv = K(1) / b.lc();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = r.degree() - b.degree();
            K factor = r.lc() * binv;
            q.c[shift] = factor;
            for (std::size_t i = 0; i < b.c.size(); ++i)
                r.c[shift + i] -= factor * b.c[i];
            r.trim();
        }
        q.trim();
    }

    Poly operator%(const Poly& o) const {
        Poly q, r;
        divrem(*this, o, q, r);
        return r;
    }
    Poly operator/(const Poly& o) const {
        Poly q, r;
        divrem(*this, o, q, r);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }
};

// Scalar-on-the-left multiply; S covers GMP expression templates too.
template <class K, class S>
    requires(!std::same_as<std::decay_t<S>, Poly<K>> && std::constructible_from<K, S>)
Poly<K> operator*(const S& s, const Poly<K>& p) { return p * K(s); }

// Monic gcd over a field.
template <class K>
Poly<K> gcd_poly(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    K inv = K(1) / a.lc();
    return a * inv;
}

// Resultant by plain Euclid over a field, tracking leading-coefficient
// powers.  Slower than the subresultant path but works over any field K;
// used for the quadratic-extension covers and as a test oracle.
template <class K>
K resultant_field(Poly<K> a, Poly<K> b) {
    if (a.is_zero() || b.is_zero())
        throw std::domain_error("resultant of zero polynomial");
    K acc(1);
    auto kpow = [](K base, int e) {
        K r(1);
        for (int i = 0; i < e; ++i) r = r * base;
        return r;
    };
    while (true) {
        if (b.degree() == 0) return acc * kpow(b.lc(), a.degree());
        Poly<K> q, r;
        Poly<K>::divrem(a, b, q, r);
        if (r.is_zero()) return K(0);
        if ((a.degree() & 1) && (b.degree() & 1)) acc = K(0) - acc;
        acc = acc * kpow(b.lc(), a.degree() - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
}

// g(y) mod f, by Horner with reduction after every step.  f is normalized
// monic by its leading coefficient first; requires deg y < deg f.
template <class K>
Poly<K> compose_mod(const Poly<K>& g, const Poly<K>& y, const Poly<K>& f) {
    if (f.degree() < 1) throw std::domain_error("compose_mod: constant modulus");
    if (y.degree() >= f.degree()) throw std::domain_error("compose_mod: deg y >= deg f");
    Poly<K> fm = f * (K(1) / f.lc());
    Poly<K> acc = Poly<K>::zero();
    for (std::size_t i = g.c.size(); i-- > 0;) {
        acc = acc * y % fm;
        acc += Poly<K>::constant(g.c[i]);
    }
    return acc;
}

// ---- rational-coefficient specifics ----

// Content as a positive rational; content(0) = 0.
inline Rat content(const Poly<Rat>& p) {
    if (p.is_zero()) return Rat(0);
    Int g(0), l(1);
    for (const auto& q : p.c) {
        if (q == 0) continue;
        g = gcd(g, q.get_num());
        l = lcm(l, q.get_den());
    }
    return make_rat(g, l);
}

// p = content * primitive, primitive with integer coefficients, gcd 1,
// positive leading coefficient not enforced here (sign stays in content).
inline std::pair<Rat, std::vector<Int>> primitive_parts(const Poly<Rat>& p) {
    if (p.is_zero()) return {Rat(0), {}};
    Rat ct = content(p);
    if (p.lc() < 0) ct = -ct;
    std::vector<Int> prim(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        Rat q = p.c[i] / ct;
        prim[i] = q.get_num();
    }
    return {ct, prim};
}

inline Poly<Rat> poly_from_ints(const std::vector<Int>& v) {
    std::vector<Rat> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = Rat(v[i]);
    return Poly<Rat>(std::move(c));
}

inline Poly<Rat> poly_i(std::initializer_list<long> v) {
    std::vector<Rat> c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(x);
    return Poly<Rat>(std::move(c));
}

// Resultant of two nonzero integer polynomials by the subresultant PRS
// (fraction-free; keeps intermediate growth polynomial).
Int resultant_int(std::vector<Int> A, std::vector<Int> B);

Rat resultant(const Poly<Rat>& f, const Poly<Rat>& g);

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f); requires deg f >= 1.
Rat poly_disc(const Poly<Rat>& f);

Poly<Rat> squarefree_part(const Poly<Rat>& f);

// f = prod fi^i with fi squarefree pairwise coprime; returns (fi, i) pairs
// for the nontrivial fi, characteristic zero.
std::vector<std::pair<Poly<Rat>, int>> squarefree_decomposition(const Poly<Rat>& f);

// Monic square root of a monic even-degree polynomial, if one exists.
std::optional<Poly<Rat>> monic_sqrt(const Poly<Rat>& e);

// Unique interpolating polynomial through distinct nodes.
Poly<Rat> interpolate(const std::vector<std::pair<Rat, Rat>>& points);

// Multiplicity of `root`, dividing it out of f.
int root_multiplicity(Poly<Rat>& f, const Rat& root);

// Text form "[c0, c1, ..., cn]", constant term first.
std::string poly_text(const Poly<Rat>& p);
Poly<Rat> poly_parse(const std::string& text);

}  // namespace ff
