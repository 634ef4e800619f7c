// Long printed constants: the degree-26 isomorphism element, the Hecke
// correspondence, resolvents, companion defining polynomials.  Each item is
// exercised by an exact identity in verify.cpp or by smoke tests.

#include "fieldforge/verify.hpp"

namespace ff::verify_data {

namespace {

Rat R(const char* s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

Rat Rp(long s, int a, int b) {  // s * 2^a * 3^b
    return Rat(s) * Rat(ipow(2, a)) * Rat(ipow(3, b));
}

}  // namespace

const std::vector<BaseChangeCase>& basechange_cases() {
    static const std::vector<BaseChangeCase> cases = {
        {3,
         {"3^5", "-2^2*61^2", "11^4"},
         {"-13^3*1201^3", "2^2*61^2*12697^2", "3^8*11^8"}},
        {2,
         {"3^3*79^3", "-2*7^3*29^3", "43^4"},
         {"2^3*3^3*7^3*29^3*79^3", "-109^2*275623^2", "43^8"}},
    };
    return cases;
}

const std::vector<ScaledTrinomial>& scaled_trinomials() {
    static const std::vector<ScaledTrinomial> rows = [] {
        std::vector<ScaledTrinomial> v;
        Rat tau = R("6250/9");  // 2*5^5/3^2
        {
            ScaledTrinomial s;
            s.N = 8;
            s.m = 3;
            s.tau = tau;
            s.scale = Rat(ipow(3, 7)) / Rat(ipow(5, 16));
            s.sub = R("-25/3");
            s.rhs = poly_i({24, 0, 0, 32, 0, 0, 0, 0, 1});
            s.disc = -Rat(ipow(2, 45)) * Rat(ipow(3, 5)) * Rat(79 * 79);
            v.push_back(std::move(s));
        }
        {
            ScaledTrinomial s;
            s.N = 9;
            s.m = 4;
            s.tau = tau;
            s.scale = Rat(ipow(3, 18)) / (Rat(4) * Rat(ipow(5, 36)));
            s.sub = R("625/9");
            s.rhs = poly_i({2592, 0, 0, 0, -324, 0, 0, 0, 0, 1});
            s.disc = -Rat(ipow(2, 40)) * Rat(ipow(3, 48)) * Rat(79 * 79);
            v.push_back(std::move(s));
        }
        {
            ScaledTrinomial s;
            s.N = 32;
            s.m = 5;
            s.tau = tau;
            s.scale = Rat(ipow(3, 32)) / Rat(ipow(5, 65));
            s.sub = R("-25/3");
            std::vector<Rat> c(33, Rat(0));
            c[0] = Rat(ipow(2, 13)) * Rat(ipow(3, 9));
            c[5] = Rat(ipow(2, 16)) * Rat(ipow(3, 5));
            c[32] = 1;
            s.rhs = Poly<Rat>(std::move(c));
            s.disc = -Rat(ipow(2, 563)) * Rat(ipow(3, 277)) * Rat(79 * 79);
            v.push_back(std::move(s));
        }
        return v;
    }();
    return rows;
}

Poly<Rat> iso27_y() {
    static const Poly<Rat> y = [] {
        // constant term last in the printed block; stored here low-to-high
        static const char* num[27] = {
            "-73397655884286",
            "-608102864271747",
            "-484480924209657",
            "7711324091701110",
            "11561622988644846",
            "-50056832848713984",
            "-68548289134461768",
            "237402868177405098",
            "171625804007741892",
            "-818860129717879323",
            "58514783809113639",
            "1744593287940021708",
            "-1494872066602993428",
            "-1424334213106643304",
            "3294135546577106040",
            "-1659195683617968252",
            "-1364804638977353670",
            "2770729912599438087",
            "-2221386267735948267",
            "1104517184207752350",
            "-370643301489686778",
            "84720990963862440",
            "-12724591174373616",
            "1137207587245554",
            "-45939794218464",
            "-981509289",
            "-778448003",
        };
        Rat den(Int("126414618624"));
        std::vector<Rat> c(27);
        for (int i = 0; i < 27; ++i) c[i] = Rat(Int(num[i])) / den;
        return Poly<Rat>(std::move(c));
    }();
    return y;
}

// Hecke correspondence on the parameter line of the degree-9 Shimura cover:
// symmetric of bidegree (4,4).
namespace {

struct HeckeTable {
    Rat h[5][5];
    HeckeTable() {
        auto set = [&](int i, int j, Rat v) {
            h[i][j] = v;
            h[j][i] = v;
        };
        // mixed block as printed: 2^12 s t (...)
        set(1, 1, Rp(-66383, 12, 10) * Rat(ipow(17, 3)));
        set(1, 2, Rp(1054805, 25, 8));
        set(1, 3, Rp(211, 39, 5));
        set(2, 2, Rp(2486119, 25, 6));
        set(2, 3, Rp(-22267, 33, 3));
        set(3, 3, Rp(-55, 36, 0));
        set(3, 4, Rp(1, 42, 0));
        set(4, 4, Rat(0));
        // pure powers: -3^6 (-3^2 17^3 + 2^15 s)^3 - 3^6 (... t)^3 - 3^12 17^9;
        // the whole coefficient table is pinned, up to one scalar, by the
        // thirteen printed vanishing conditions (see the reconstruction test)
        Rat X = Rat(ipow(3, 2)) * Rat(ipow(17, 3));
        set(0, 0, Rat(2) * Rat(ipow(3, 6)) * X * X * X - Rat(ipow(3, 12)) * Rat(ipow(17, 9)));
        set(0, 1, Rat(-3) * Rat(ipow(3, 6)) * X * X * Rat(ipow(2, 15)));
        set(0, 2, Rat(3) * Rat(ipow(3, 6)) * X * Rat(ipow(2, 30)));
        set(0, 3, Rat(-1) * Rat(ipow(3, 6)) * Rat(ipow(2, 45)));
        set(0, 4, Rat(0));
        set(1, 4, Rat(0));
        set(2, 4, Rat(0));
    }
};

const HeckeTable& hecke_table() {
    static const HeckeTable t;
    return t;
}

}  // namespace

const Rat& hecke_coeff(int i, int j) { return hecke_table().h[i][j]; }

Rat hecke_eval(const Rat& s, const Rat& t) {
    Rat acc(0);
    Rat si(1);
    for (int i = 0; i <= 4; ++i) {
        Rat tj(1);
        for (int j = 0; j <= 4; ++j) {
            const Rat& c = hecke_coeff(i, j);
            if (c != 0) acc += c * si * tj;
            tj *= t;
        }
        si *= s;
    }
    return acc;
}

const std::vector<std::pair<Rat, Rat>>& hecke_pairs() {
    static const std::vector<std::pair<Rat, Rat>> pairs = {
        {R("1372/3"), R("12167/12288")},      // 2^2 7^3 / 3   ~ 23^3 / 2^12 3
        {R("-2197/12"), R("-15625/1536")},    // -13^3 / 2^2 3 ~ -5^6 / 2^9 3
        {R("1/4"), R("3993/512")},            // 1 / 2^2       ~ 3 11^3 / 2^9
        {R("125/128"), R("20577/128")},       // 5^3 / 2^7     ~ 3 19^3 / 2^7
        {R("-64000/9"), R("-389017/294912")}, // -2^9 5^3/3^2  ~ -73^3 / 2^15 3^2
        {R("125/4"), R("343/512")},           // 5^3 / 2^2     ~ 7^3 / 2^9
        {R("343/512"), R("3501153/512")},     // 7^3 / 2^9     ~ 3^2 73^3 / 2^9
        {R("-1331/256"), R("-128625/256")},   // -11^3 / 2^8   ~ -3 5^3 7^3 / 2^8
        {R("-8365427/4000000000"),            // -7^3 29^3 / 2^11 5^9
         R("94214846625/82644187136")},       // 3 5^3 631^3 / 2^11 7^9
        {R("4"), R("375/4096")},              // 2^2           ~ 3 5^3 / 2^12
        {R("-7022735875/8192"),               // -5^3 383^3 / 2^13
         R("-3249620049/16000000000")},       // -3 13^3 79^3 / 2^13 5^9
    };
    return pairs;
}

Rat hecke_cm_diagonal() { return R("-4913/128"); }  // -17^3 / 2^7
Rat hecke_cm_zero() { return R("44217/32768"); }    // 3^2 17^3 / 2^15

Poly<Rat> cuspidal_septic() { return poly_i({8, 7, 6, 5, 4, 3, 2, 1}); }
Poly<Rat> cuspidal_quartic() { return poly_i({5, 4, 3, 2, 1}); }

const std::vector<std::pair<std::string, Poly<Rat>>>& companion_polys() {
    static const std::vector<std::pair<std::string, Poly<Rat>>> polys = {
        {"h27a_-1", poly_i({2, 6, 6, 6, 15, -3, 0, 6, -3, 1})},
        {"h27b_-1/48", poly_i({-56, 18, 36, 54, 0, -9, -12, 0, 0, 1})},
        {"g27d_1/2", poly_i({124, 183, -108, -174, -12, 27, 0, -6, 0, 1})},
        {"g27d_1/2*13^4", poly_i({-36, -108, 0, 96, 36, -36, -16, 0, 3, 1})},
        {"g8", poly_i({-10, -8, 10, 20, 22, 16, 8, 4, 1})},
        {"gplus", poly_i({9, 0, 36, 0, 36, 0, 12, 0, 1})},
        {"gminus", poly_i({9, 0, -36, 0, 36, 0, -12, 0, 1})},
        {"L10_tame3", poly_i({16, 32, 24, 0, 0, 0, 0, 0, 6, -4, 1})},
        {"L9a_51", poly_i({-594, 486, -972, -54, -162, 0, -36, 0, 0, 1})},
        {"L9a_4/3", poly_i({-6, 27, 0, -18, 0, 0, 0, 0, 0, 1})},
    };
    return polys;
}

}  // namespace ff::verify_data
