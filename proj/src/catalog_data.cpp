// The embedded cover catalog.  Defining polynomials are assembled in the
// factored form they are published in, so each factor can be eyeballed
// against its source; load-time checks (partition sums, Riemann-Hurwitz,
// disc-shape recomputation, conjugation cancellation) guard the digits.

#include "fieldforge/covers.hpp"

namespace ff {

namespace {

using PR = Poly<Rat>;
using PQ = Poly<Quad>;

PR P(std::initializer_list<long> v) { return poly_i(v); }

Quad Q(long a, long b) { return Quad(Rat(a), Rat(b)); }

PQ PQof(std::initializer_list<Quad> v) { return PQ(std::vector<Quad>(v)); }

// f(t,x) = A(x) + t C(x)
std::vector<PR> lin_t(const PR& A, const PR& C) {
    std::size_t n = std::max(A.c.size(), C.c.size());
    std::vector<PR> fx(n);
    for (std::size_t i = 0; i < n; ++i)
        fx[i] = PR{std::vector<Rat>{A.coeff(i), C.coeff(i)}};
    return fx;
}

// f(t,x) = A(x) + t B(x) + t^2 C(x)
std::vector<PR> quad_t(const PR& A, const PR& B, const PR& C) {
    std::size_t n = std::max({A.c.size(), B.c.size(), C.c.size()});
    std::vector<PR> fx(n);
    for (std::size_t i = 0; i < n; ++i)
        fx[i] = PR{std::vector<Rat>{A.coeff(i), B.coeff(i), C.coeff(i)}};
    return fx;
}

std::vector<PQ> lin_t_quad(const PQ& A, const PQ& C) {
    std::size_t n = std::max(A.c.size(), C.c.size());
    std::vector<PQ> fx(n);
    for (std::size_t i = 0; i < n; ++i) {
        Quad a = i < A.c.size() ? A.c[i] : Quad(0);
        Quad c = i < C.c.size() ? C.c[i] : Quad(0);
        fx[i] = PQof({a, c});
    }
    return fx;
}

Rat pw(long base, unsigned long e) { return Rat(ipow(base, e)); }

DiscShape shape(Rat delta, int a, int b, PR c = PR::one()) {
    return DiscShape{std::move(delta), a, b, std::move(c)};
}

Cover make(std::string name, Partition l0, Partition l1, Partition linf,
           std::array<std::string, 3> labels, std::vector<long> bad,
           std::vector<PR> fx, std::optional<DiscShape> printed, std::string mono,
           std::string galois, int genus, bool aux = false) {
    Cover c;
    c.name = std::move(name);
    c.fx = std::move(fx);
    c.degree = (int)c.fx.size() - 1;
    c.lambda0 = std::move(l0);
    c.lambda1 = std::move(l1);
    c.lambdainf = std::move(linf);
    c.class_labels = std::move(labels);
    c.bad_set = std::move(bad);
    c.printed_shape = std::move(printed);
    c.monodromy_group = std::move(mono);
    c.galois_group = std::move(galois);
    c.genus = genus;
    c.auxiliary = aux;
    return c;
}

std::vector<Cover> build() {
    std::vector<Cover> cat;

    // ---- degree 6 and 10, the PGL2(9) pair ----
    {
        PR A = P({-2, 0, 1}).pow(3);
        PR C = P({-4, 3}).pow(2);
        cat.push_back(make("f6", {3, 3}, {3, 1, 1, 1}, {4, 2}, {"3A", "3B", "4A"},
                           {2, 3}, lin_t(A, C),
                           shape(pw(2, 13) * pw(3, 6), 4, 2), "A6", "S6", 0));
    }
    {
        PR A = P({96, 60, 12, 1}).pow(3) * P({0, 1});
        PR C = Rat(1728) * P({108, 28, 3});
        cat.push_back(make("f10", {3, 3, 3, 1}, {2, 2, 2, 2, 2}, {8, 1, 1},
                           {"3AB", "2D", "8A"}, {2, 3}, lin_t(A, C),
                           shape(-pw(2, 99) * pw(3, 42), 6, 5), "PGL2(9)",
                           "PGammaL2(9)", 0));
    }

    // ---- degree 9 and 18, the SL2(8) story ----
    {
        PR A = P({-123, -69, -9, 1}).pow(3);
        PR B = -pw(2, 14) * P({-441, -1485, -675, -42, 9});
        PR C = PR::constant(-pw(2, 28));
        // printed residual factor, leading coefficient 2^42
        PR cf = poly_from_ints({Int("513922401"), Int("-7496810496"),
                                Int("-5421322469376"), Int("4398046511104")});
        PR cmonic = cf * (Rat(1) / cf.lc());
        cat.push_back(make("f9a", {3, 3, 3}, {2, 2, 2, 2, 1}, {9}, {"", "", ""},
                           {2, 3}, quad_t(A, B, C),
                           shape(pw(2, 140) * pw(3, 18) * cf.lc() * cf.lc(), 6, 4,
                                 cmonic),
                           "SL2(8)", "SigmaL2(8)", 1));
    }
    {
        // cubic resolvent of the degree-9 cover on the u-line; ramified over
        // {+-sqrt(-3), inf}, kept as auxiliary data
        std::vector<PR> fx(4);
        fx[3] = PR::one();
        fx[2] = PR::zero();
        fx[1] = P({-27, 0, -9});
        fx[0] = P({-27, -27, -9, -9});
        cat.push_back(make("f3", {3}, {3}, {1, 1, 1}, {"3A", "(3A)^2", "1A"}, {3},
                           std::move(fx),
                           shape(pw(3, 6), 0, 0, P({-9, 3, -3, 1})), "C3", "S3", 0,
                           true));
    }
    {
        PR A18 = poly_from_ints({Int(810648), Int(998001), Int(215784), Int(99468),
                                 Int(13608), Int(4374), Int(216), Int(108), Int(0),
                                 Int(1)});
        PR A = A18 * A18;
        PR C = PR::constant(pw(2, 26) * pw(3, 9));
        cat.push_back(make("f18", {2, 2, 2, 2, 2, 2, 2, 2, 2},
                           {3, 3, 3, 3, 1, 1, 1, 1, 1, 1}, {18}, {"", "", ""},
                           {2, 3}, lin_t(A, C),
                           shape(-pw(2, 460) * pw(3, 189), 9, 8),
                           "index-3 subgroup of SigmaL2(8)^2.2", "SigmaL2(8)^2.2",
                           0));
    }

    // ---- degree 13 and 26, SL3(3) ----
    PR A13a = P({-64, -6, -12, 1}) * P({-28, 128, -36, 16, 1}) *
              P({552, 624, 444, 176, 54, 12, 1});
    PR B13a = P({188, 128, 72, 16, 1}) * P({-68, -24, 12, -4, 3}).pow(2);
    {
        // Malle's cover on the u-line, ramified over {+-sqrt(-8), inf}
        cat.push_back(make("f13a", {8, 4, 1}, {8, 4, 1},
                           {2, 2, 2, 2, 1, 1, 1, 1, 1}, {"8A", "8B", "2A"}, {2, 3},
                           lin_t(A13a, -B13a),
                           shape(pw(2, 160) * pw(3, 114), 0, 0, P({8, 0, 1}).pow(5)),
                           "SL3(3)", "SL3(3)", 0, true));
    }
    {
        PR A = A13a * A13a;
        PR C = Rat(8) * B13a * B13a;
        cat.push_back(make("f26a", {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},
                           {8, 8, 4, 4, 1, 1}, {4, 4, 4, 4, 2, 2, 2, 2, 2},
                           {"2B", "8AB", "4B"}, {2, 3}, lin_t(A, C),
                           shape(-pw(2, 777) * pw(3, 452), 13, 20), "SL3(3).2",
                           "SL3(3).2", 0));
    }
    {
        PQ cubic = PQof({Q(-4, -8), Q(-6, 6), Q(0, 0), Q(1, 0)});
        PQ lin1 = PQof({Q(-2, -1), Q(1, 0)});
        PQ lin2 = PQof({Q(-2, 2), Q(1, 0)});
        PQ A = (cubic * lin1).pow(3) * lin2;
        PQ C = PQof({Q(-36, 0)}) * PQof({Q(-4, 1), Q(3, 0)}).pow(4) *
               PQof({Q(-8, 1), Q(3, 0)});
        Cover c;
        c.name = "f13b";
        c.quad_coeffs = true;
        c.fxq = lin_t_quad(A, C);
        c.degree = (int)c.fxq.size() - 1;
        c.lambda0 = {3, 3, 3, 3, 1};
        c.lambda1 = {3, 3, 3, 1, 1, 1, 1};
        c.lambdainf = {8, 4, 1};
        c.class_labels = {"3B", "3A", "8A"};
        c.bad_set = {2, 3};
        c.monodromy_group = "SL3(3)";
        c.galois_group = "SL3(3)";
        c.genus = 0;
        // recomputed: delta = 2^112 3^54 (1 - sqrt(-2))^72; the published
        // line for this cover repeats the 13c line and fails recomputation
        {
            Quad d(Rat(ipow(2, 112)) * Rat(ipow(3, 54)), Rat(0));
            Quad pi(Rat(1), Rat(-1));
            for (int i = 0; i < 72; ++i) d = d * pi;
            c.quad_shape = QuadDiscShape{d, 8, 6};
        }
        cat.push_back(std::move(c));
    }
    {
        Quad s8 = Q(1, 1);
        Quad p8 = Q(1, 0);
        for (int i = 0; i < 8; ++i) p8 = p8 * s8;  // (1+sqrt(-2))^8 = 17+56 sqrt(-2)
        PQ quart = PQof({Q(-3, -3), Q(0, -3), Q(1, 0)});
        PQ sq = PQof({Q(-3, 6), Q(0, 0), Q(1, 0)});
        PQ lin = PQof({Q(3, -3), Q(1, 0)});
        PQ A = quart.pow(4) * sq.pow(2) * lin;
        PQ C = PQof({Q(108, 0) * p8}) * PQof({Q(1, -1), Q(1, 0)}).pow(4) *
               PQof({Q(5, -1), Q(3, 0)});
        Cover c;
        c.name = "f13c";
        c.quad_coeffs = true;
        c.fxq = lin_t_quad(A, C);
        c.degree = (int)c.fxq.size() - 1;
        c.lambda0 = {4, 4, 2, 2, 1};
        c.lambda1 = {3, 3, 3, 1, 1, 1, 1};
        c.lambdainf = {8, 4, 1};
        c.class_labels = {"4A", "3A", "8A"};
        c.bad_set = {2, 3};
        c.monodromy_group = "SL3(3)";
        c.galois_group = "SL3(3)";
        c.genus = 0;
        {
            Quad d(Rat(ipow(2, 92)) * Rat(ipow(3, 72)), Rat(0));
            Quad pi(Rat(1), Rat(1));
            for (int i = 0; i < 96; ++i) d = d * pi;
            c.quad_shape = QuadDiscShape{d, 8, 6};
        }
        cat.push_back(std::move(c));
    }

    // ---- degree 27, PSp4(3) / SO5(3) ----
    {
        PR A = P({-8, 0, 6, 1}).pow(9);
        PR C = -pw(2, 4) * pw(3, 12) * PR::monomial(Rat(1), 6) * P({4, 5, 1}).pow(4) *
               P({-2, 1});
        cat.push_back(make("f27a", {9, 9, 9},
                           {2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
                            1, 1},
                           {12, 6, 4, 4, 1}, {"9AB", "2C", "12C"}, {2, 3},
                           lin_t(A, C), shape(pw(2, 414) * pw(3, 450), 24, 6),
                           "SO5(3)", "SO5(3)", 0));
    }
    {
        // published D-line is Res-normalized: disc * lc = 2^542 3^270 ...
        PR A = pw(2, 4) * PR::monomial(Rat(1), 3) * P({-3, 0, 1}).pow(12);
        PR C = -pw(3, 9) * P({-1, 1}).pow(8) * P({-2, 1}) * P({-1, -2, 1}).pow(8);
        cat.push_back(make("f27b", {12, 12, 3},
                           {2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
                            1, 1},
                           {8, 8, 8, 2, 1}, {"12AB", "2C", "8A"}, {2, 3},
                           lin_t(A, C), shape(pw(2, 538) * pw(3, 270), 24, 6),
                           "SO5(3)", "SO5(3)", 0));
        cat.back().printed_res = shape(pw(2, 542) * pw(3, 270), 24, 6);
    }
    {
        // published D-line is Res-normalized: disc * lc = 2^522 3^450 ...
        PR A = pw(2, 18) * P({1, 6, 9, 1}).pow(9);
        PR C = -pw(3, 15) * P({0, 1}) * P({1, 2}).pow(8) * P({-1, -2, 1}).pow(8);
        cat.push_back(make("f27c", {9, 9, 9},
                           {2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
                            1, 1},
                           {8, 8, 8, 2, 1}, {"9AB", "2C", "8A"}, {2, 3},
                           lin_t(A, C), shape(pw(2, 504) * pw(3, 450), 24, 6),
                           "SO5(3)", "SO5(3)", 0));
        cat.back().printed_res = shape(pw(2, 522) * pw(3, 450), 24, 6);
    }
    {
        // the leading coefficient 78732 (1 - t) vanishes at t = 1, so the
        // published Res-normalized line carries an extra (t-1):
        // Res = 2^520 3^459 t^24 (t-1)^11, disc = 2^518 3^450 t^24 (t-1)^10
        PR A = Rat(4) * P({-8, -12, 0, 3}).pow(9);
        PR C = -(P({22, 63, 54, 12}) *
                 P({64, 288, 432, 276, 135, 81, 9}).pow(4));
        cat.push_back(make("f27d", {9, 9, 9},
                           {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1},
                           {4, 4, 4, 4, 4, 4, 1, 1, 1}, {"9A", "2B", "4A"}, {2, 3},
                           lin_t(A, C), shape(pw(2, 518) * pw(3, 450), 24, 10),
                           "PSp4(3)", "SO5(3)", 0));
        cat.back().printed_res = shape(pw(2, 520) * pw(3, 459), 24, 11);
    }

    // ---- degree 28, Sp6(2) ----
    {
        // published D-line is Res-normalized: disc * lc = 2^540 3^457 ...
        PR A = pw(3, 6) * P({6, 6, 1}).pow(12) * PR::monomial(Rat(1), 3) * P({4, 3});
        PR C = -pw(2, 18) * P({-3, 0, 3, 1}).pow(9);
        Partition l1{2, 2, 2, 2, 2, 2};
        for (int i = 0; i < 16; ++i) l1.push_back(1);
        cat.push_back(make("f28", {12, 12, 3, 1}, l1, {9, 9, 9, 1}, {"", "", ""},
                           {2, 3}, lin_t(A, C),
                           shape(pw(2, 540) * pw(3, 450), 24, 6), "Sp6(2)", "Sp6(2)",
                           0));
        cat.back().printed_res = shape(pw(2, 540) * pw(3, 457), 24, 6);
    }

    return cat;
}

void validate(const std::vector<Cover>& cat) {
    for (const Cover& c : cat) {
        auto bad = [&](const std::string& why) {
            throw std::runtime_error("catalog cover " + c.name + ": " + why);
        };
        if (partition_sum(c.lambda0) != c.degree ||
            partition_sum(c.lambda1) != c.degree ||
            partition_sum(c.lambdainf) != c.degree)
            bad("cycle type does not partition the degree");
        if (c.riemann_hurwitz_genus() != c.genus) bad("Riemann-Hurwitz violation");
        if (!c.quad_coeffs) {
            if ((int)c.fx.size() - 1 != c.degree) bad("x-degree mismatch");
        } else {
            if ((int)c.fxq.size() - 1 != c.degree) bad("x-degree mismatch");
            Cover dbl = conj_double(c);  // throws if conjugation fails to cancel
            if (dbl.degree != 2 * c.degree) bad("conjugate double degree mismatch");
        }
    }
}

}  // namespace

const std::vector<Cover>& catalog() {
    static const std::vector<Cover> cat = [] {
        std::vector<Cover> c = build();
        validate(c);
        return c;
    }();
    return cat;
}

}  // namespace ff
