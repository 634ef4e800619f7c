#include "fieldforge/triples.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace ff {

std::string Signature::text() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < 3; ++i) {
        if (i) os << ",";
        if (e[i].inf)
            os << "inf";
        else
            os << e[i].v;
    }
    os << ")";
    return os.str();
}

static std::array<Int, 3> abs_key(const AbcTriple& t) {
    return {abs(t.A), abs(t.B), abs(t.C)};
}

bool AbcTriple::operator<(const AbcTriple& o) const {
    auto ka = abs_key(*this), kb = abs_key(o);
    if (ka != kb) return ka < kb;
    return std::array<Int, 3>{A, B, C} < std::array<Int, 3>{o.A, o.B, o.C};
}

std::string AbcTriple::text() const {
    return A.get_str() + " " + B.get_str() + " " + C.get_str();
}

Int AbcTriple::max_abs() const { return std::max({abs(A), abs(B), abs(C)}); }

AbcTriple normalize(const Int& A, const Int& B, const Int& C) {
    if (A + B + C != 0) throw std::domain_error("normalize: A+B+C != 0");
    if (A == 0 || B == 0 || C == 0)
        throw std::domain_error("normalize: zero component (tau in {0,1,inf})");
    Int g = gcd(gcd(A, B), C);
    AbcTriple t{A / g, B / g, C / g};
    int positives = (t.A > 0) + (t.B > 0) + (t.C > 0);
    if (positives != 2) {
        t.A = -t.A;
        t.B = -t.B;
        t.C = -t.C;
    }
    return t;
}

Rat tau_of(const AbcTriple& t) { return make_rat(-t.A, t.C); }

AbcTriple triple_of(const Rat& tau) {
    if (tau == 0 || tau == 1) throw std::domain_error("triple_of: tau in {0,1}");
    const Int& p = tau.get_num();
    const Int& q = tau.get_den();
    return normalize(-p, p - q, q);
}

static SigVal component_sig(const Int& comp, const std::vector<long>& S) {
    Int n = abs(comp);
    for (long p : S) remove_all(n, Int(p));
    if (n == 1) return SigVal::infinite();
    return SigVal::finite(exponent_gcd(n));
}

Signature max_signature(const AbcTriple& t, const std::vector<long>& S) {
    return Signature::of(component_sig(t.A, S), component_sig(t.B, S),
                         component_sig(t.C, S));
}

bool member(const AbcTriple& t, const Signature& sig, const std::vector<long>& S) {
    return sig.divides(max_signature(t, S));
}

bool qualifies(const AbcTriple& t, const std::vector<long>& S) {
    Signature ms = max_signature(t, S);
    // Per slot take the largest S-smooth divisor of the maximal entry; any
    // qualifying signature is dominated by that choice.
    Rat sum(0);
    for (const SigVal& m : ms.e) {
        if (m.inf) continue;
        unsigned long s = 1;
        unsigned long rest = m.v;
        for (long p : S) {
            while (rest % (unsigned long)p == 0) {
                rest /= (unsigned long)p;
                s *= (unsigned long)p;
            }
        }
        if (s == 1) return false;  // slot contributes 1/1, sum can't be < 1
        sum += make_rat(1, (long)s);
    }
    return sum < 1;
}

OrbitRecord s3_orbit(const AbcTriple& t) {
    std::set<std::array<Int, 3>> seen;
    std::vector<std::pair<AbcTriple, Rat>> elems;
    const Int* p[3] = {&t.A, &t.B, &t.C};
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& pr : perms) {
        AbcTriple u{*p[pr[0]], *p[pr[1]], *p[pr[2]]};
        if (!seen.insert({u.A, u.B, u.C}).second) continue;
        elems.push_back({u, tau_of(u)});
    }
    std::sort(elems.begin(), elems.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    OrbitRecord rec;
    rec.representative = elems.front().first;
    rec.elements = std::move(elems);
    rec.max_sig = max_signature(rec.representative, {2, 3});
    return rec;
}

static AbcTriple checked_image(const Int& a, const Int& b, const Int& c,
                               const char* name) {
    if (a == 0 || b == 0 || c == 0)
        throw std::domain_error(std::string(name) + ": image component zero (cusp)");
    return normalize(a, b, c);
}

AbcTriple base_change_2(const AbcTriple& t) {
    return checked_image(4 * t.A * t.B, (2 * t.A + t.C) * (2 * t.A + t.C),
                         -t.C * t.C, "base_change_2");
}

AbcTriple base_change_3(const AbcTriple& t) {
    Int u = 4 * t.A + t.C, v = 8 * t.A - t.C;
    return checked_image(u * u * u, v * v * t.B, -27 * t.A * t.C * t.C,
                         "base_change_3");
}

AbcTriple base_change_4(const AbcTriple& t) {
    Int u = 9 * t.A + t.C;
    Int w = 27 * t.A * t.A + 18 * t.A * t.C - t.C * t.C;
    return checked_image(t.B * u * u * u, w * w, 64 * t.A * t.C * t.C * t.C,
                         "base_change_4");
}

// ---- bounded search ----

namespace {

void gen_smooth(const std::vector<long>& S, std::size_t i, const Int& cur,
                const Int& bound, std::vector<Int>& out) {
    if (i == S.size()) {
        out.push_back(cur);
        return;
    }
    Int v = cur;
    while (v <= bound) {
        gen_smooth(S, i + 1, v, bound, out);
        v *= S[i];
    }
}

// Candidate component values s * core with core a perfect power whose
// exponent gcd has an S-smooth part >= 3 (plus the pure S-units).  Every
// component of a qualifying triple that is not forced to class 2 lands here.
std::vector<Int> strong_values(const std::vector<long>& S, const Int& bound) {
    std::vector<Int> smooth;
    gen_smooth(S, 0, Int(1), bound, smooth);

    std::set<Int> cores;
    for (Int m = 2; m * m <= bound; ++m) {
        bool coprime = true;
        for (long p : S)
            if (m % p == 0) coprime = false;
        if (!coprime) continue;
        Int v = m * m;
        while (v <= bound) {
            cores.insert(v);
            v *= m;
        }
    }

    std::set<Int> out(smooth.begin(), smooth.end());
    for (const Int& core : cores) {
        unsigned long j = exponent_gcd(core);
        unsigned long s = 1;
        for (long p : S)
            while (j % (unsigned long)p == 0) {
                j /= (unsigned long)p;
                s *= (unsigned long)p;
            }
        if (s < 3) continue;
        for (const Int& sm : smooth) {
            Int v = sm * core;
            if (v <= bound) out.insert(v);
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace

std::vector<AbcTriple> search(const std::vector<long>& S, const Int& bound,
                              int threads) {
    if (bound < 2) throw std::domain_error("search: bound must be >= 2");
    std::vector<Int> vals = strong_values(S, bound);
    std::size_t n = vals.size();

    auto run_range = [&](std::size_t lo, std::size_t hi, std::set<AbcTriple>& found) {
        auto consider = [&](const Int& a, const Int& b, const Int& c) {
            if (abs(a) > bound || abs(b) > bound || abs(c) > bound) return;
            AbcTriple t = normalize(a, b, c);
            if (!qualifies(t, S)) return;
            found.insert(s3_orbit(t).representative);
        };
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                const Int &v1 = vals[i], &v2 = vals[j];
                if (gcd(v1, v2) != 1) continue;
                if (v1 + v2 <= bound) consider(v1, v2, -(v1 + v2));
                if (v1 < v2) consider(v1, -v2, v2 - v1);
            }
        }
    };

    std::set<AbcTriple> found;
    if (threads <= 1) {
        run_range(0, n, found);
    } else {
        std::vector<std::set<AbcTriple>> parts(threads);
        std::vector<std::thread> pool;
        // Strided blocks keep the quadratic work roughly balanced.
        std::size_t block = (n + threads - 1) / threads;
        for (int k = 0; k < threads; ++k) {
            std::size_t lo = std::min(n, (std::size_t)k * block);
            std::size_t hi = std::min(n, lo + block);
            pool.emplace_back(run_range, lo, hi, std::ref(parts[k]));
        }
        for (auto& th : pool) th.join();
        for (auto& part : parts) found.insert(part.begin(), part.end());
    }

    std::vector<AbcTriple> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const AbcTriple& a, const AbcTriple& b) {
        auto ka = abs_key(a), kb = abs_key(b);
        std::sort(ka.begin(), ka.end());
        std::sort(kb.begin(), kb.end());
        if (ka != kb) return ka < kb;
        return a < b;
    });
    return out;
}

// ---- embedded tables ----

extern const char* kOrbitRows[][3];  // triples_data.cpp
extern const int kOrbitRowCount;

Int parse_int_monomial(const std::string& s) {
    std::size_t i = 0;
    if (i >= s.size()) throw std::invalid_argument("empty integer expression");
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    Int value(1);
    while (i < s.size()) {
        std::size_t j = i;
        while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
        if (j == i) throw std::invalid_argument("bad integer expression: " + s);
        Int base(s.substr(i, j - i));
        unsigned long e = 1;
        i = j;
        if (i < s.size() && s[i] == '^') {
            ++i;
            j = i;
            while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
            if (j == i) throw std::invalid_argument("bad exponent: " + s);
            e = std::stoul(s.substr(i, j - i));
            i = j;
        }
        value *= ipow(base, e);
        if (i < s.size()) {
            if (s[i] != '*') throw std::invalid_argument("bad integer expression: " + s);
            ++i;
        }
    }
    return sign < 0 ? Int(-value) : value;
}

const std::vector<OrbitRecord>& embedded_tables() {
    static const std::vector<OrbitRecord> tables = [] {
        std::vector<OrbitRecord> out;
        std::set<std::array<Int, 3>> reps;
        for (int r = 0; r < kOrbitRowCount; ++r) {
            Int a = parse_int_monomial(kOrbitRows[r][0]);
            Int b = parse_int_monomial(kOrbitRows[r][1]);
            Int c = parse_int_monomial(kOrbitRows[r][2]);
            AbcTriple t;
            try {
                t = normalize(a, b, c);
            } catch (const std::exception& e) {
                throw std::runtime_error("embedded table row " + std::to_string(r + 1) +
                                         " invalid: " + e.what());
            }
            if (!(t.A == a && t.B == b && t.C == c))
                throw std::runtime_error("embedded table row " + std::to_string(r + 1) +
                                         " not normalized as printed");
            if (!qualifies(t, {2, 3}))
                throw std::runtime_error("embedded table row " + std::to_string(r + 1) +
                                         " fails the membership test");
            OrbitRecord rec = s3_orbit(t);
            if (!reps.insert({rec.representative.A, rec.representative.B,
                              rec.representative.C})
                     .second)
                throw std::runtime_error("embedded table row " + std::to_string(r + 1) +
                                         " duplicates an earlier orbit");
            out.push_back(std::move(rec));
        }
        return out;
    }();
    return tables;
}

std::optional<int> embedded_orbit_index(const AbcTriple& t) {
    static const std::map<std::array<Int, 3>, int> index = [] {
        std::map<std::array<Int, 3>, int> m;
        const auto& tabs = embedded_tables();
        for (std::size_t i = 0; i < tabs.size(); ++i) {
            const AbcTriple& r = tabs[i].representative;
            m[{r.A, r.B, r.C}] = (int)i;
        }
        return m;
    }();
    AbcTriple rep = s3_orbit(t).representative;
    auto it = index.find({rep.A, rep.B, rep.C});
    if (it == index.end()) return std::nullopt;
    return it->second;
}

long star_count(const Signature& sig) {
    long count = 0;
    for (const auto& orbit : embedded_tables())
        for (const auto& [t, tau] : orbit.elements)
            if (member(t, sig, {2, 3})) ++count;
    return count;
}

std::vector<std::pair<AbcTriple, Rat>> star_elements(const Signature& sig) {
    std::vector<std::pair<AbcTriple, Rat>> out;
    for (const auto& orbit : embedded_tables())
        for (const auto& [t, tau] : orbit.elements)
            if (member(t, sig, {2, 3})) out.push_back({t, tau});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

}  // namespace ff
