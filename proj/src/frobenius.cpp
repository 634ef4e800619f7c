#include "fieldforge/frobenius.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fieldforge/covers.hpp"

namespace ff {

namespace {

// Dense polynomial over F_p, p < 2^62, constant term first.
struct Zp {
    unsigned long p;

    unsigned long add(unsigned long a, unsigned long b) const {
        unsigned long s = a + b;
        return s >= p ? s - p : s;
    }
    unsigned long sub(unsigned long a, unsigned long b) const {
        return a >= b ? a - b : a + p - b;
    }
    unsigned long mul(unsigned long a, unsigned long b) const {
        return (unsigned long)((unsigned __int128)a * b % p);
    }
    unsigned long pow(unsigned long a, unsigned long e) const {
        unsigned long r = 1 % p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    unsigned long inv(unsigned long a) const { return pow(a % p, p - 2); }
};

using MP = std::vector<unsigned long>;

void trim(MP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const MP& f) { return (int)f.size() - 1; }

MP mul(const Zp& F, const MP& a, const MP& b) {
    if (a.empty() || b.empty()) return {};
    MP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

MP rem(const Zp& F, MP a, const MP& b) {
    unsigned long binv = F.inv(b.back());
    while (deg(a) >= deg(b)) {
        unsigned long c = F.mul(a.back(), binv);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

MP quot(const Zp& F, MP a, const MP& b) {
    if (deg(a) < deg(b)) return {};
    MP q(a.size() - b.size() + 1, 0);
    unsigned long binv = F.inv(b.back());
    while (!a.empty() && deg(a) >= deg(b)) {
        unsigned long c = F.mul(a.back(), binv);
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
        trim(a);
    }
    trim(q);
    return q;
}

MP monic(const Zp& F, MP f) {
    if (f.empty()) return f;
    unsigned long inv = F.inv(f.back());
    for (auto& c : f) c = F.mul(c, inv);
    return f;
}

MP gcd(const Zp& F, MP a, MP b) {
    while (!b.empty()) {
        MP r = rem(F, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, std::move(a));
}

MP deriv(const Zp& F, const MP& f) {
    if (f.size() <= 1) return {};
    MP r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = F.mul(f[i], i % F.p);
    trim(r);
    return r;
}

MP mulmod(const Zp& F, const MP& a, const MP& b, const MP& f) {
    return rem(F, mul(F, a, b), f);
}

MP powmod(const Zp& F, MP base, const Int& e, const MP& f) {
    MP r{1};
    base = rem(F, std::move(base), f);
    for (long i = mpz_sizeinbase(e.get_mpz_t(), 2) - 1; i >= 0; --i) {
        r = mulmod(F, r, r, f);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(F, r, base, f);
    }
    return r;
}

// p-th root of f = g(x^p): over F_p coefficients are their own p-th roots.
MP pth_root(const MP& f, unsigned long p) {
    MP g(f.size() / p + 1, 0);
    for (std::size_t i = 0; i * p < f.size(); ++i) g[i] = f[i * p];
    trim(g);
    return g;
}

std::vector<std::pair<MP, int>> squarefree_decomp(const Zp& F, MP f) {
    std::vector<std::pair<MP, int>> out;
    if (deg(f) < 1) return out;
    MP fp = deriv(F, f);
    if (fp.empty()) {
        for (auto& [fac, m] : squarefree_decomp(F, pth_root(f, F.p)))
            out.push_back({fac, m * (int)F.p});
        return out;
    }
    MP c = gcd(F, f, fp);
    MP w = quot(F, f, c);
    int i = 1;
    while (deg(w) > 0) {
        MP y = gcd(F, w, c);
        MP z = quot(F, w, y);
        if (deg(z) > 0) out.push_back({monic(F, z), i});
        ++i;
        w = std::move(y);
        c = quot(F, c, w);
    }
    if (deg(c) > 0)
        for (auto& [fac, m] : squarefree_decomp(F, pth_root(c, F.p)))
            out.push_back({fac, m * (int)F.p});
    return out;
}

void equal_degree(const Zp& F, MP f, int d, Rng64& rng, std::vector<MP>& out) {
    if (deg(f) == d) {
        out.push_back(monic(F, std::move(f)));
        return;
    }
    MP g;
    while (true) {
        MP a((std::size_t)deg(f), 0);
        for (auto& c : a) c = rng.below(F.p);
        trim(a);
        if (deg(a) < 1) continue;
        if (F.p == 2) {
            // trace map over F_{2^d}
            MP t = a, cur = a;
            for (int i = 1; i < d; ++i) {
                cur = mulmod(F, cur, cur, f);
                t.resize(std::max(t.size(), cur.size()), 0);
                for (std::size_t k = 0; k < cur.size(); ++k) t[k] = F.add(t[k], cur[k]);
                trim(t);
            }
            g = gcd(F, f, t);
        } else {
            Int e = (ipow(Int(F.p), (unsigned long)d) - 1) / 2;
            MP b = powmod(F, a, e, f);
            if (b.empty())
                g = {};
            else {
                b[0] = F.sub(b[0], 1);
                trim(b);
                g = gcd(F, f, b);
            }
        }
        if (!g.empty() && deg(g) > 0 && deg(g) < deg(f)) break;
    }
    equal_degree(F, g, d, rng, out);
    equal_degree(F, quot(F, f, g), d, rng, out);
}

std::vector<MP> distinct_degree_split(const Zp& F, MP f, Rng64& rng) {
    std::vector<MP> out;
    MP h{0, 1};  // x
    int d = 0;
    MP x{0, 1};
    while (deg(f) > 0) {
        ++d;
        if (2 * d > deg(f)) {
            out.push_back(monic(F, std::move(f)));
            break;
        }
        h = powmod(F, h, Int((unsigned long)F.p), f);
        MP hx = h;
        // h - x
        hx.resize(std::max<std::size_t>(hx.size(), 2), 0);
        hx[1] = F.sub(hx[1], 1);
        trim(hx);
        MP g = gcd(F, f, hx);
        if (deg(g) > 0) {
            equal_degree(F, g, d, rng, out);
            f = quot(F, f, g);
            h = rem(F, std::move(h), f);
        }
    }
    return out;
}

MP reduce_int_poly(const Poly<Rat>& f, const Int& p) {
    MP out(f.c.size());
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        const Rat& q = f.c[i];
        if (q.get_den() != 1)
            throw std::domain_error("factor_mod_p: polynomial is not integral");
        Int r = q.get_num() % p;
        if (r < 0) r += p;
        out[i] = r.get_ui();
    }
    trim(out);
    return out;
}

}  // namespace

std::string FactorPartition::text() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << "]";
    if (ramified) os << "*";
    return os.str();
}

FactorModResult factor_mod_p(const Poly<Rat>& f, const Int& p, std::uint64_t seed) {
    if (!is_prime(p)) throw std::domain_error("factor_mod_p: p not prime");
    Zp F{p.get_ui()};
    MP red = reduce_int_poly(f, p);
    if (red.empty()) throw std::domain_error("factor_mod_p: f = 0 mod p");
    FactorModResult res;
    res.p = p;
    res.degree_dropped = deg(red) < f.degree();
    res.unit = red.back();
    Rng64 rng(seed ^ (0xa5a5a5a5ULL * F.p));
    for (auto& [sf, mult] : squarefree_decomp(F, monic(F, red))) {
        for (MP& irr : distinct_degree_split(F, sf, rng))
            res.factors.push_back({std::move(irr), mult});
    }
    std::sort(res.factors.begin(), res.factors.end(),
              [](const ModFactor& a, const ModFactor& b) {
                  if (a.coeffs.size() != b.coeffs.size())
                      return a.coeffs.size() < b.coeffs.size();
                  return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(),
                                                      b.coeffs.begin(), b.coeffs.end());
              });
    return res;
}

FactorPartition partition(const Poly<Rat>& f, const Int& p, std::uint64_t seed) {
    FactorModResult res = factor_mod_p(f, p, seed);
    FactorPartition part;
    for (const ModFactor& mf : res.factors) {
        part.parts.push_back((int)mf.coeffs.size() - 1);
        if (mf.multiplicity > 1) part.ramified = true;
    }
    if (res.degree_dropped) {
        part.ramified = true;
        part.degree_dropped = true;
    }
    std::sort(part.parts.rbegin(), part.parts.rend());
    return part;
}

int jacobi(const Int& a, const Int& n) {
    if (n <= 0 || n % 2 == 0) throw std::domain_error("jacobi: n must be odd positive");
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

const std::vector<ClassTableRow>& pgl29_class_table() {
    static const std::vector<ClassTableRow> table = [] {
        std::vector<ClassTableRow> t = {
            {"1A", 1, 1, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 1},
            {"2A", 1, 1, {2, 2, 2, 2, 1, 1}, 45},
            {"3AB", 1, 1, {3, 3, 3, 1}, 80},
            {"4A", 1, 1, {4, 4, 1, 1}, 90},
            {"5AB", 1, 1, {5, 5}, 144},
            {"2BC", -1, -1, {2, 2, 2, 1, 1, 1, 1}, 30},
            {"4B", -1, -1, {4, 4, 2}, 90},
            {"6AB", -1, -1, {6, 3, 1}, 240},
            {"2D", 1, -1, {2, 2, 2, 2, 2}, 36},
            {"8AB", 1, -1, {8, 1, 1}, 180},
            {"10AB", 1, -1, {10}, 144},
            {"4C", -1, 1, {4, 4, 1, 1}, 180},
            {"8CD", -1, 1, {8, 2}, 180},
        };
        long csum[2][2] = {{0, 0}, {0, 0}};
        for (const auto& row : t) csum[row.sign0 > 0][row.sign1 > 0] += row.class_size;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (csum[i][j] != 360)
                    throw std::runtime_error("class table: coset sizes do not sum to 360");
        return t;
    }();
    return table;
}

Pgl29Result pgl29_class(const Rat& tau, const Int& p) {
    if (p < 5) throw std::domain_error("pgl29_class: need p >= 5");
    Rat tm1 = tau - 1;
    if (tau.get_num() % p == 0 || tau.get_den() % p == 0 || tm1.get_num() % p == 0)
        throw std::domain_error("pgl29_class: p divides tau or tau-1");
    Pgl29Result out;
    out.sign0 = jacobi(2, p);
    Rat u = 2 * (1 - tau);
    Int unum = u.get_num() % p, uden = u.get_den() % p;
    if (unum < 0) unum += p;
    Zp F{p.get_ui()};
    Int resid = Int(F.mul(unum.get_ui(), F.inv(uden.get_ui())));
    out.sign1 = jacobi(resid, p);
    SpecializedAlgebra alg = specialize(cover_by_name("f10"), tau);
    out.part = partition(alg.poly, p);
    if (out.part.ramified) throw std::domain_error("pgl29_class: ramified reduction");
    std::vector<int> key = out.part.parts;
    for (const auto& row : pgl29_class_table()) {
        if (row.sign0 == out.sign0 && row.sign1 == out.sign1 && row.partition == key) {
            out.matched = true;
            out.label = row.atlas_label;
            return out;
        }
    }
    out.matched = false;  // explicit no-match, partition carried along
    return out;
}

std::map<Int, FactorPartition, IntLess> fingerprint(const Poly<Rat>& f,
                                                    const std::vector<Int>& primes) {
    std::map<Int, FactorPartition, IntLess> out;
    for (const Int& p : primes) out[p] = partition(f, p);
    return out;
}

std::optional<Int> distinguish(const Poly<Rat>& f, const Poly<Rat>& g,
                               const std::vector<Int>& primes) {
    if (f.degree() != g.degree())
        throw std::domain_error("distinguish: degree mismatch");
    Rat df = poly_disc(f), dg = poly_disc(g);
    Int prod = df.get_num() * dg.get_num() * f.lc().get_num() * g.lc().get_num();
    std::vector<Int> sorted = primes;
    std::sort(sorted.begin(), sorted.end());
    for (const Int& p : sorted) {
        if (prod % p == 0) continue;
        if (!(partition(f, p) == partition(g, p))) return p;
    }
    return std::nullopt;
}

Int element_order(const FactorPartition& part) {
    if (part.ramified) throw std::domain_error("element_order: ramified partition");
    Int l = 1;
    for (int k : part.parts) l = lcm(l, Int(k));
    return l;
}

}  // namespace ff
