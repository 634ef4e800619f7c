#include "fieldforge/covers.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ff {

int partition_sum(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition power_cycle_type(const Partition& lambda, long i) {
    if (i < 0) throw std::domain_error("power_cycle_type: negative power");
    Partition out;
    for (int k : lambda) {
        long g = std::gcd((long)k, i);
        for (long j = 0; j < g; ++j) out.push_back((int)(k / g));
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

static unsigned long lcm_parts(const Partition& p) {
    unsigned long l = 1;
    for (int k : p) l = std::lcm(l, (unsigned long)k);
    return l;
}

Signature Cover::monodromy_orders() const {
    return Signature::fin(lcm_parts(lambda0), lcm_parts(lambda1), lcm_parts(lambdainf));
}

int Cover::riemann_hurwitz_genus() const {
    int s = -2 * degree;
    s += degree - (int)lambda0.size();
    s += degree - (int)lambda1.size();
    s += degree - (int)lambdainf.size();
    return (s + 2) / 2;
}

Cover trinomial_cover(long N, long m) {
    if (!(N > m && m >= 1)) throw std::domain_error("trinomial_cover: need N > m >= 1");
    if (std::gcd(N, m) != 1) throw std::domain_error("trinomial_cover: gcd(N,m) != 1");
    bool swapped = false;
    long m0 = m;
    if (2 * m > N) {  // X_{N,m} is isomorphic to X_{N,N-m}; keep m <= N/2
        m = N - m;
        swapped = true;
    }
    long r = N - m;
    // v in {0..r-1} with N v = 1 mod r; for r = 1 (only N=2, m=1) take v = 1
    // so the trinomial form stays y^2 - 2ty + t.
    long v = 1;
    if (r > 1) {
        v = 0;
        while ((N % r) * v % r != 1) {
            ++v;
            if (v >= r) throw std::logic_error("trinomial_cover: no inverse mod r");
        }
    }
    long w = (N * v - 1) / r;

    Cover c;
    c.name = "trinomial:" + std::to_string(N) + "," + std::to_string(m0);
    c.degree = (int)N;
    c.lambda0 = {(int)N};
    c.lambda1 = Partition{2};
    for (long i = 0; i < N - 2; ++i) c.lambda1.push_back(1);
    c.lambdainf = {(int)std::max(m, r), (int)std::min(m, r)};
    // canonical form  m^m x^N - t (N x - r)^m
    Poly<Rat> lin{std::vector<Rat>{Rat(-r), Rat(N)}};
    Poly<Rat> tc = lin.pow((unsigned long)m);
    c.fx.assign((std::size_t)N + 1, Poly<Rat>::zero());
    for (long i = 0; i <= m; ++i)
        c.fx[(std::size_t)i] = Poly<Rat>{std::vector<Rat>{Rat(0), -tc.coeff((std::size_t)i)}};
    c.fx[(std::size_t)N] += Poly<Rat>::constant(Rat(ipow(m, (unsigned long)m)));

    TrinomialInfo info{N, m, r, v, w, swapped, {}};
    // trinomial form  m y^N - N t^v y^m + r t^w
    info.star_fx.assign((std::size_t)N + 1, Poly<Rat>::zero());
    info.star_fx[(std::size_t)N] = Poly<Rat>::constant(Rat(m));
    info.star_fx[(std::size_t)m] = Poly<Rat>::monomial(Rat(-N), (std::size_t)v);
    info.star_fx[0] += Poly<Rat>::monomial(Rat(r), (std::size_t)w);
    c.trinomial = std::move(info);

    long nmr = N * m * r;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
        if (nmr % p == 0) c.bad_set.push_back(p);
        while (nmr % p == 0) nmr /= p;
    }
    for (long p = 37; nmr > 1; p += 2)
        if (nmr % p == 0) {
            c.bad_set.push_back(p);
            while (nmr % p == 0) nmr /= p;
        }
    c.monodromy_group = "S" + std::to_string(N);
    c.galois_group = "S" + std::to_string(N);
    c.genus = 0;
    return c;
}

SpecializedAlgebra specialize(const Cover& c, const Rat& tau, SpecForm form) {
    if (c.quad_coeffs)
        throw std::domain_error("specialize: cover has irrational coefficients; double it first");
    const std::vector<Poly<Rat>>* fx = &c.fx;
    if (form == SpecForm::trinomial_star) {
        if (!c.trinomial) throw std::domain_error("specialize: not a trinomial cover");
        fx = &c.trinomial->star_fx;
    }
    int tdeg = 0;
    for (const auto& p : *fx) tdeg = std::max(tdeg, p.degree());
    // clear denominators by den(tau)^(t-degree), then remove integer content
    const Int& num = tau.get_num();
    const Int& den = tau.get_den();
    std::vector<Int> powp(tdeg + 1), powq(tdeg + 1);
    powp[0] = 1;
    powq[0] = 1;
    for (int i = 1; i <= tdeg; ++i) {
        powp[i] = powp[i - 1] * num;
        powq[i] = powq[i - 1] * den;
    }
    std::vector<Rat> coeffs(fx->size(), Rat(0));
    for (std::size_t i = 0; i < fx->size(); ++i) {
        const Poly<Rat>& ci = (*fx)[i];
        Rat acc(0);
        for (int j = 0; j <= ci.degree(); ++j) {
            Int scale = powp[j] * powq[tdeg - j];
            acc += ci.coeff((std::size_t)j) * Rat(scale);
        }
        coeffs[i] = acc;
    }
    Poly<Rat> spec{std::move(coeffs)};
    if (spec.degree() != c.degree)
        throw std::domain_error("cover degenerates at tau (leading coefficient vanishes)");
    auto [ct, prim] = primitive_parts(spec);
    (void)ct;
    SpecializedAlgebra alg;
    alg.cover = c.name;
    alg.tau = tau;
    alg.poly = poly_from_ints(prim);
    Poly<Rat> g = gcd_poly(alg.poly, alg.poly.derivative());
    alg.separable = g.degree() == 0;
    return alg;
}

DiscShape disc_shape_compute(const Cover& c) {
    if (c.quad_coeffs)
        throw std::domain_error("disc_shape_compute: cover over BigRat required");
    int n = c.degree;
    // LC(t): leading x-coefficient as a polynomial in t.
    Poly<Rat> LC = c.fx[(std::size_t)n];
    int tdeg = 0;
    for (const auto& p : c.fx) tdeg = std::max(tdeg, p.degree());
    int bound = (2 * n - 1) * tdeg;

    // R(t) = Res_x(f, f_x) sampled at integer nodes where the degree holds.
    std::vector<std::pair<Rat, Rat>> samples;
    for (long t0 = 2; (int)samples.size() < bound + 1; ++t0) {
        Rat tv(t0);
        if (LC.eval(tv) == 0) continue;
        std::vector<Rat> coeffs(c.fx.size());
        for (std::size_t i = 0; i < c.fx.size(); ++i) coeffs[i] = c.fx[i].eval(tv);
        Poly<Rat> f{std::move(coeffs)};
        samples.push_back({tv, resultant(f, f.derivative())});
    }
    Poly<Rat> R = interpolate(samples);
    Poly<Rat> D = R / LC;
    if (((long)n * (n - 1) / 2) % 2) D = -D;

    DiscShape shape;
    shape.a = root_multiplicity(D, Rat(0));
    shape.b = root_multiplicity(D, Rat(1));
    shape.delta = D.lc();
    Poly<Rat> e = D * (Rat(1) / shape.delta);
    auto root = monic_sqrt(e);
    if (!root)
        throw std::domain_error("disc_shape_compute(" + c.name +
                                "): residual factor is not a perfect square");
    shape.c = *root;
    return shape;
}

Cover conj_double(const Cover& c) {
    std::vector<Poly<Quad>> fq = c.fxq;
    if (!c.quad_coeffs) {
        fq.assign(c.fx.size(), Poly<Quad>::zero());
        for (std::size_t i = 0; i < c.fx.size(); ++i) {
            std::vector<Quad> qs(c.fx[i].c.size());
            for (std::size_t j = 0; j < qs.size(); ++j) qs[j] = Quad(c.fx[i].c[j], Rat(0));
            fq[i] = Poly<Quad>(std::move(qs));
        }
    }
    // multiply f * conj(f) over Quad[t][x]
    std::size_t nx = fq.size();
    std::vector<Poly<Quad>> prod(2 * nx - 1, Poly<Quad>::zero());
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < nx; ++j) {
            std::vector<Quad> conj(fq[j].c.size());
            for (std::size_t k = 0; k < conj.size(); ++k) conj[k] = fq[j].c[k].conj();
            prod[i + j] += fq[i] * Poly<Quad>(std::move(conj));
        }
    }
    Cover out;
    out.degree = 2 * c.degree;
    out.fx.assign(prod.size(), Poly<Rat>::zero());
    for (std::size_t i = 0; i < prod.size(); ++i) {
        std::vector<Rat> rs(prod[i].c.size());
        for (std::size_t j = 0; j < rs.size(); ++j) {
            if (!prod[i].c[j].is_rational())
                throw std::domain_error("conj_double(" + c.name +
                                        "): product kept a sqrt(-2) coefficient");
            rs[j] = prod[i].c[j].a;
        }
        out.fx[i] = Poly<Rat>(std::move(rs));
    }
    while (!out.fx.empty() && out.fx.back().is_zero()) out.fx.pop_back();
    auto doubled = [](const Partition& p) {
        Partition q;
        for (int k : p) {
            q.push_back(k);
            q.push_back(k);
        }
        std::sort(q.rbegin(), q.rend());
        return q;
    };
    out.lambda0 = doubled(c.lambda0);
    out.lambda1 = doubled(c.lambda1);
    out.lambdainf = doubled(c.lambdainf);
    out.bad_set = c.bad_set;
    // the double is a disjoint pair of copies of the base curve over the
    // closure; genus records the component genus, and the formal
    // Riemann-Hurwitz count comes out to 2 genus - 1
    out.genus = c.genus;
    if (out.riemann_hurwitz_genus() != 2 * c.genus - 1)
        throw std::domain_error("conj_double(" + c.name +
                                "): ramification data inconsistent with a double");
    if (c.name == "f13b")
        out.name = "f26b";
    else if (c.name == "f13c")
        out.name = "f26c";
    else
        out.name = c.name + ".doubled";
    out.galois_group = c.galois_group.empty() ? "" : c.galois_group + ".2";
    return out;
}

Cover cover_by_name(const std::string& name) {
    if (name.rfind("trinomial:", 0) == 0) {
        std::string rest = name.substr(10);
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("trinomial cover name needs N,m");
        long N = std::stol(rest.substr(0, comma));
        long m = std::stol(rest.substr(comma + 1));
        return trinomial_cover(N, m);
    }
    for (const Cover& c : catalog())
        if (c.name == name) return c;
    if (name == "f26b") return conj_double(cover_by_name("f13b"));
    if (name == "f26c") return conj_double(cover_by_name("f13c"));
    throw std::invalid_argument("unknown cover: " + name);
}

std::string cover_json(const Cover& c) {
    std::ostringstream os;
    auto parts = [&](const Partition& p) {
        std::ostringstream o;
        o << "[";
        for (std::size_t i = 0; i < p.size(); ++i) o << (i ? "," : "") << p[i];
        o << "]";
        return o.str();
    };
    auto poly_json = [&](const Poly<Rat>& p) {
        std::ostringstream o;
        o << "[";
        for (std::size_t i = 0; i < p.c.size(); ++i)
            o << (i ? "," : "") << "\"" << to_string(p.c[i]) << "\"";
        o << "]";
        return o.str();
    };
    os << "{\"name\":\"" << c.name << "\",\"degree\":" << c.degree;
    os << ",\"lambda0\":" << parts(c.lambda0) << ",\"lambda1\":" << parts(c.lambda1)
       << ",\"lambdainf\":" << parts(c.lambdainf);
    os << ",\"class_labels\":[\"" << c.class_labels[0] << "\",\"" << c.class_labels[1]
       << "\",\"" << c.class_labels[2] << "\"]";
    os << ",\"bad_set\":[";
    for (std::size_t i = 0; i < c.bad_set.size(); ++i) os << (i ? "," : "") << c.bad_set[i];
    os << "]";
    os << ",\"genus\":" << c.genus << ",\"auxiliary\":" << (c.auxiliary ? "true" : "false");
    os << ",\"monodromy_group\":\"" << c.monodromy_group << "\",\"galois_group\":\""
       << c.galois_group << "\"";
    if (c.printed_shape) {
        os << ",\"disc_shape\":{\"delta\":\"" << to_string(c.printed_shape->delta)
           << "\",\"a\":" << c.printed_shape->a << ",\"b\":" << c.printed_shape->b
           << ",\"c\":" << poly_json(c.printed_shape->c) << "}";
    }
    if (!c.quad_coeffs) {
        os << ",\"f\":[";
        for (std::size_t i = 0; i < c.fx.size(); ++i)
            os << (i ? "," : "") << poly_json(c.fx[i]);
        os << "]";
    } else {
        os << ",\"f_quad\":[";
        for (std::size_t i = 0; i < c.fxq.size(); ++i) {
            os << (i ? "," : "") << "[";
            for (std::size_t j = 0; j < c.fxq[i].c.size(); ++j) {
                const Quad& q = c.fxq[i].c[j];
                os << (j ? "," : "") << "{\"a\":\"" << to_string(q.a) << "\",\"b\":\""
                   << to_string(q.b) << "\"}";
            }
            os << "]";
        }
        os << "]";
    }
    os << "}";
    return os.str();
}

}  // namespace ff
