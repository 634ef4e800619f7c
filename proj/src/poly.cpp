#include "fieldforge/poly.hpp"

#include <sstream>

namespace ff {

namespace {

int deg(const std::vector<Int>& p) { return (int)p.size() - 1; }

void trim(std::vector<Int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

// Subresultant PRS resultant (Cohen, Alg. 3.3.7 shape).  Cross-checked in
// tests against a plain rational-Euclid resultant on randomized inputs.
Int resultant_int(std::vector<Int> A, std::vector<Int> B) {
    trim(A);
    trim(B);
    if (A.empty() || B.empty()) throw std::domain_error("resultant of zero polynomial");
    int sign = 1;
    if (deg(A) < deg(B)) {
        if ((deg(A) & 1) && (deg(B) & 1)) sign = -sign;
        std::swap(A, B);
    }
    if (deg(B) == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), B[0].get_mpz_t(), deg(A));
        return sign * r;
    }
    Int g(1), h(1);
    while (true) {
        int da = deg(A), db = deg(B);
        int delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;

        // R = prem(A, B) with multiplier lc(B)^(delta+1).
        std::vector<Int> R = A;
        {
            const Int& lb = B.back();
            int steps = 0;
            while (!R.empty() && deg(R) >= db) {
                Int la = R.back();
                int shift = deg(R) - db;
                for (auto& r : R) r *= lb;
                for (int i = 0; i <= db; ++i) R[shift + i] -= la * B[i];
                trim(R);
                ++steps;
            }
            // standardize to lb^(delta+1) * A = Q*B + R
            for (int k = steps; k <= delta; ++k)
                for (auto& r : R) r *= lb;
        }
        if (R.empty()) return Int(0);

        A = std::move(B);
        // B = R / (g * h^delta), exact.
        Int divisor = g;
        for (int k = 0; k < delta; ++k) divisor *= h;
        B = std::move(R);
        for (auto& b : B) {
            Int q;
            mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), divisor.get_mpz_t());
            b = q;
        }
        g = A.back();
        if (delta > 0) {
            // h = g^delta / h^(delta-1), exact.
            Int num;
            mpz_pow_ui(num.get_mpz_t(), g.get_mpz_t(), delta);
            Int den;
            mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (deg(B) == 0) {
            // resultant = h^(1 - degA) * lc(B)^degA  (degA = deg of last A)
            int dA = deg(A);
            Int num;
            mpz_pow_ui(num.get_mpz_t(), B[0].get_mpz_t(), dA);
            Int den;
            mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), dA - 1 >= 0 ? dA - 1 : 0);
            Int r;
            mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return sign * r;
        }
    }
}

Rat resultant(const Poly<Rat>& f, const Poly<Rat>& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of zero polynomial");
    auto [cf, F] = primitive_parts(f);
    auto [cg, G] = primitive_parts(g);
    Rat scale = rpow(cf, g.degree()) * rpow(cg, f.degree());
    if (f.degree() == 0 && g.degree() == 0) return Rat(1);
    return scale * Rat(resultant_int(F, G));
}

Rat poly_disc(const Poly<Rat>& f) {
    int n = f.degree();
    if (n < 1) throw std::domain_error("poly_disc: constant polynomial");
    Rat res = resultant(f, f.derivative());
    Rat d = res / f.lc();
    if (((long)n * (n - 1) / 2) % 2) d = -d;
    return d;
}

Poly<Rat> squarefree_part(const Poly<Rat>& f) {
    if (f.degree() < 1) return f;
    Poly<Rat> g = gcd_poly(f, f.derivative());
    Poly<Rat> sf = f / g;
    return sf * (Rat(1) / sf.lc());
}

std::vector<std::pair<Poly<Rat>, int>> squarefree_decomposition(const Poly<Rat>& f) {
    std::vector<std::pair<Poly<Rat>, int>> out;
    if (f.degree() < 1) return out;
    // Yun's algorithm.
    Poly<Rat> fp = f.derivative();
    Poly<Rat> a = gcd_poly(f, fp);
    Poly<Rat> b = f / a;
    Poly<Rat> cpart = fp / a;
    Poly<Rat> d = cpart - b.derivative();
    int i = 1;
    while (b.degree() >= 1) {
        Poly<Rat> t = gcd_poly(b, d);
        if (t.degree() >= 1) out.push_back({t, i});
        b = b / t;
        cpart = d / t;
        d = cpart - b.derivative();
        ++i;
    }
    return out;
}

std::optional<Poly<Rat>> monic_sqrt(const Poly<Rat>& e) {
    int n = e.degree();
    if (n < 0 || (n & 1) || e.lc() != 1) return std::nullopt;
    int d = n / 2;
    std::vector<Rat> a(d + 1, Rat(0));
    a[d] = 1;
    // Match coefficients of t^(d+i) for i = d-1 .. 0; the ordered cross terms
    // a_j * a_{d+i-j} with i < j < d are already known at step i.
    for (int i = d - 1; i >= 0; --i) {
        Rat s(0);
        for (int j = i + 1; j < d; ++j) s += a[j] * a[d + i - j];
        a[i] = (e.coeff(d + i) - s) / 2;
    }
    Poly<Rat> c{std::vector<Rat>(a.begin(), a.end())};
    if (c * c == e) return c;
    return std::nullopt;
}

Poly<Rat> interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    // Newton divided differences, then Horner rebuild.
    std::size_t n = points.size();
    if (n == 0) return Poly<Rat>::zero();
    std::vector<Rat> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - j].first);
            if (i == j) break;
        }
    Poly<Rat> p = Poly<Rat>::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        Poly<Rat> lin{std::vector<Rat>{-points[i].first, Rat(1)}};
        p = p * lin + Poly<Rat>::constant(dd[i]);
    }
    return p;
}

int root_multiplicity(Poly<Rat>& f, const Rat& root) {
    int mult = 0;
    while (f.degree() >= 1) {
        // synthetic division by (x - root)
        std::vector<Rat> q(f.c.size() - 1);
        Rat carry(0);
        for (std::size_t i = f.c.size(); i-- > 1;) {
            carry = carry * root + f.c[i];
            q[i - 1] = carry;
        }
        Rat rem = carry * root + f.c[0];
        if (rem != 0) break;
        f = Poly<Rat>(std::move(q));
        ++mult;
    }
    return mult;
}

std::string poly_text(const Poly<Rat>& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (i) os << ", ";
        os << to_string(p.c[i]);
    }
    os << "]";
    return os.str();
}

Poly<Rat> poly_parse(const std::string& text) {
    std::vector<Rat> c;
    std::string body = text;
    auto l = body.find('['), r = body.rfind(']');
    if (l == std::string::npos || r == std::string::npos || r < l)
        throw std::invalid_argument("poly_parse: expected [c0, c1, ...]");
    body = body.substr(l + 1, r - l - 1);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::string s;
        for (char ch : tok)
            if (!isspace((unsigned char)ch)) s += ch;
        if (s.empty()) continue;
        c.emplace_back(Rat(s));
        c.back().canonicalize();
    }
    return Poly<Rat>(std::move(c));
}

}  // namespace ff
