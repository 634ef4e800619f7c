#pragma once

#include "fieldforge/numbers.hpp"

namespace ff {

// Element a + b*sqrt(d) of the quadratic extension with fixed d = -2,
// the only ambient ring the catalog needs.
struct Quad {
    static constexpr long d = -2;

    Rat a, b;

    Quad() : a(0), b(0) {}
    Quad(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    Quad(long v) : a(v), b(0) {}  // NOLINT(google-explicit-constructor)

    bool is_rational() const { return b == 0; }
    Quad conj() const { return {a, -b}; }
    Rat norm() const { return a * a - Rat(d) * b * b; }

    Quad operator-() const { return {-a, -b}; }
    Quad operator+(const Quad& o) const { return {a + o.a, b + o.b}; }
    Quad operator-(const Quad& o) const { return {a - o.a, b - o.b}; }
    Quad operator*(const Quad& o) const {
        return {a * o.a + Rat(d) * b * o.b, a * o.b + b * o.a};
    }
    Quad inv() const {
        Rat n = norm();
        if (n == 0) throw std::domain_error("Quad::inv: zero element");
        return {a / n, -b / n};
    }
    Quad operator/(const Quad& o) const { return *this * o.inv(); }

    Quad& operator+=(const Quad& o) { return *this = *this + o; }
    Quad& operator-=(const Quad& o) { return *this = *this - o; }
    Quad& operator*=(const Quad& o) { return *this = *this * o; }

    bool operator==(const Quad& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Quad& o) const { return !(*this == o); }
};

inline std::string to_string(const Quad& q) {
    if (q.b == 0) return to_string(q.a);
    return to_string(q.a) + (q.b > 0 ? "+" : "") + to_string(q.b) + "*sqrt(-2)";
}

}  // namespace ff
