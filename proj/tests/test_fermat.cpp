#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "fieldforge/triples.hpp"

using namespace ff;

namespace {

AbcTriple T(const char* a, const char* b, const char* c) {
    return normalize(parse_int_monomial(a), parse_int_monomial(b),
                     parse_int_monomial(c));
}

Signature sig(long p, long q, long r) {
    auto v = [](long k) { return k < 0 ? SigVal::infinite() : SigVal::finite(k); };
    return Signature::of(v(p), v(q), v(r));
}

}  // namespace

TEST_CASE("normalize") {
    AbcTriple t = normalize(2, -3, 1);
    CHECK(t == T("2", "-3", "1"));
    CHECK(normalize(-4, 6, -2) == t);
    CHECK(normalize(Int("-6250"), Int(6241), Int(9)) ==
          T("-2*5^5", "79^2", "3^2"));
    CHECK_THROWS_AS(normalize(1, 1, 1), std::domain_error);
    CHECK_THROWS_AS(normalize(1, -1, 0), std::domain_error);
}

TEST_CASE("tau round trip") {
    CHECK(tau_of(T("2", "-3", "1")) == Rat(-2));
    CHECK(triple_of(Rat(1, 2)) == T("1", "1", "-2"));
    CHECK(triple_of(make_rat(Int(6250), Int(9))) == T("-2*5^5", "79^2", "3^2"));
    CHECK_THROWS_AS(triple_of(Rat(0)), std::domain_error);
    CHECK_THROWS_AS(triple_of(Rat(1)), std::domain_error);
    Rng64 rng(3);
    for (int i = 0; i < 200; ++i) {
        long n = (long)rng.below(4001) - 2000;
        long d = 1 + (long)rng.below(1999);
        if (n == 0) continue;
        Rat tau = make_rat(Int(n), Int(d));
        if (tau == 0 || tau == 1) continue;
        CHECK(tau_of(triple_of(tau)) == tau);
    }
}

TEST_CASE("max_signature and membership") {
    CHECK(max_signature(T("2", "-3", "1"), {2, 3}) == sig(-1, -1, -1));
    CHECK(max_signature(T("3^5", "-2^2*61^2", "11^4"), {2, 3}) == sig(-1, 2, 4));
    CHECK(max_signature(T("-2*5^5", "79^2", "3^2"), {2, 3}) == sig(5, 2, -1));

    AbcTriple drop = T("-2*5^5", "79^2", "3^2");
    CHECK(!member(drop, sig(-1, 2, -1), {2, 3}));
    CHECK(member(drop, sig(5, 2, -1), {2, 3}));
    CHECK(member(T("2", "-3", "1"), sig(2, 3, 8), {2, 3}));
    CHECK(member(T("1", "1", "-2"), sig(2, 3, -1), {2, 3}));
}

TEST_CASE("member is monotone along the divisibility lattice") {
    std::vector<Signature> sigs = {sig(2, 3, 8),  sig(2, 3, 16), sig(4, 3, 8),
                                   sig(2, 9, 8),  sig(2, 3, -1), sig(-1, -1, -1),
                                   sig(2, 3, 24), sig(8, 9, 16)};
    const auto& tabs = embedded_tables();
    for (std::size_t i = 0; i < tabs.size(); i += 7) {
        for (const auto& [t, tau] : tabs[i].elements)
            for (const auto& s1 : sigs)
                for (const auto& s2 : sigs)
                    if (s1.divides(s2) && member(t, s2, {2, 3}))
                        CHECK(member(t, s1, {2, 3}));
    }
}

TEST_CASE("qualifies") {
    CHECK(qualifies(T("1", "1", "-2"), {2, 3}));
    CHECK(!qualifies(T("-2*5^5", "79^2", "3^2"), {2, 3}));
    CHECK(qualifies(T("2", "-3", "1"), {2, 3}));
}

TEST_CASE("s3 orbits") {
    OrbitRecord o = s3_orbit(T("1", "1", "-2"));
    CHECK(o.elements.size() == 3);
    std::set<Rat> taus;
    for (auto& [t, tau] : o.elements) taus.insert(tau);
    CHECK(taus == std::set<Rat>{Rat(-1), Rat(1, 2), Rat(2)});

    OrbitRecord o2 = s3_orbit(T("2", "-3", "1"));
    CHECK(o2.elements.size() == 6);
    std::set<Rat> taus2;
    for (auto& [t, tau] : o2.elements) taus2.insert(tau);
    CHECK(taus2 == std::set<Rat>{Rat(-2), Rat(3), Rat(-1, 2), Rat(1, 3), Rat(2, 3),
                                 Rat(3, 2)});

    for (const auto& orb : embedded_tables())
        CHECK((orb.elements.size() == 6 ||
               (orb.elements.size() == 3 &&
                orb.representative == T("1", "1", "-2"))));
}

TEST_CASE("pairwise coprimality of normalized triples") {
    for (const auto& orb : embedded_tables()) {
        const AbcTriple& t = orb.representative;
        CHECK(gcd(t.A, t.B) == 1);
        CHECK(gcd(t.A, t.C) == 1);
        CHECK(gcd(t.B, t.C) == 1);
    }
}

TEST_CASE("base change maps") {
    CHECK(base_change_3(T("3^5", "-2^2*61^2", "11^4")) ==
          T("-13^3*1201^3", "2^2*61^2*12697^2", "3^8*11^8"));
    CHECK(base_change_2(T("3^3*79^3", "-2*7^3*29^3", "43^4")) ==
          T("2^3*3^3*7^3*29^3*79^3", "-109^2*275623^2", "43^8"));
    CHECK_THROWS_AS(base_change_2(T("1", "1", "-2")), std::domain_error);
}

TEST_CASE("base change images sum to zero before normalization") {
    Rng64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        Int A = Int((long)rng.below(4000)) - 2000;
        Int B = Int((long)rng.below(4000)) - 2000;
        Int C = -A - B;
        CHECK(4 * A * B + (2 * A + C) * (2 * A + C) - C * C == 0);
        Int u3 = 4 * A + C, v3 = 8 * A - C;
        CHECK(u3 * u3 * u3 + v3 * v3 * B - 27 * A * C * C == 0);
        Int u4 = 9 * A + C;
        Int m4 = 27 * A * A + 18 * A * C - C * C;
        CHECK(B * u4 * u4 * u4 + m4 * m4 + 64 * A * C * C * C == 0);
    }
}

TEST_CASE("embedded tables load and validate") {
    const auto& tabs = embedded_tables();
    CHECK(tabs.size() == 101);
    CHECK(embedded_orbit_index(T("-2*184211^2", "4079^3", "3")).has_value());
    CHECK(embedded_orbit_index(T("1", "1", "-2")).has_value());
    CHECK(!embedded_orbit_index(T("-2*5^5", "79^2", "3^2")).has_value());
}

TEST_CASE("star counts reproduce the printed table") {
    CHECK(star_count(sig(2, 3, 8)) == 99);
    CHECK(star_count(sig(2, 3, 9)) == 87);
    CHECK(star_count(sig(2, 3, 18)) == 81);
    CHECK(star_count(sig(2, 4, 8)) == 45);
    CHECK(star_count(sig(2, 4, 9)) == 45);
    CHECK(star_count(sig(2, 9, 12)) == 35);
    CHECK(star_count(sig(3, 3, 4)) == 39);
    CHECK(star_count(sig(3, 3, 8)) == 27);
    CHECK(star_count(sig(3, 4, 8)) == 24);
    // further rows with all three entries printed
    CHECK(star_count(sig(2, 3, 12)) == 82);
    CHECK(star_count(sig(2, 4, 6)) == 48);
    CHECK(star_count(sig(2, 3, -1)) == 81);
}

TEST_CASE("star_count is invariant under permuting the signature") {
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (Signature s : {sig(2, 3, 8), sig(2, 9, 12), sig(3, 3, 4), sig(2, 3, -1)}) {
        long base = star_count(s);
        for (const auto& pr : perms) {
            Signature sp = Signature::of(s.e[pr[0]], s.e[pr[1]], s.e[pr[2]]);
            CHECK(star_count(sp) == base);
        }
    }
}

TEST_CASE("search at tiny bounds") {
    auto r2 = search({2, 3}, 2);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0] == s3_orbit(T("1", "1", "-2")).representative);

    auto r10 = search({2, 3}, 10);
    std::set<AbcTriple> got(r10.begin(), r10.end());
    CHECK(got.count(s3_orbit(T("1", "1", "-2")).representative));
    CHECK(got.count(s3_orbit(T("2", "1", "-3")).representative));
    CHECK(got.count(s3_orbit(T("3", "1", "-2^2")).representative));
    CHECK(got.count(s3_orbit(T("2^3", "1", "-3^2")).representative));
    CHECK(r10.size() == 4);
}

TEST_CASE("search monotone in the bound") {
    auto a = search({2, 3}, 100);
    auto b = search({2, 3}, 1000);
    auto c = search({2, 3}, 10000);
    std::set<AbcTriple> sb(b.begin(), b.end()), sc(c.begin(), c.end());
    for (const auto& t : a) CHECK(sb.count(t));
    for (const auto& t : b) CHECK(sc.count(t));
}

TEST_CASE("threaded search matches single-threaded") {
    auto a = search({2, 3}, 50000, 1);
    auto b = search({2, 3}, 50000, 4);
    CHECK(a == b);
}

TEST_CASE("search against embedded tables at 10^4") {
    Int bound = 10000;
    auto got = search({2, 3}, bound);
    std::set<AbcTriple> want;
    for (const auto& o : embedded_tables())
        if (o.representative.max_abs() <= bound) want.insert(o.representative);
    std::set<AbcTriple> gset(got.begin(), got.end());
    CHECK(gset == want);
}

TEST_CASE("base-change closure reaches at least 73 embedded orbits") {
    const Int cap = ipow(10, 19);
    std::set<AbcTriple> visited;
    std::vector<AbcTriple> frontier{s3_orbit(T("2", "-3", "1")).representative};
    visited.insert(frontier[0]);
    std::set<int> hits;
    if (auto i = embedded_orbit_index(frontier[0])) hits.insert(*i);
    while (!frontier.empty() && visited.size() < 20000) {
        std::vector<AbcTriple> next;
        for (const AbcTriple& rep : frontier) {
            for (const auto& [t, tau] : s3_orbit(rep).elements) {
                for (int map = 2; map <= 4; ++map) {
                    AbcTriple img;
                    try {
                        img = map == 2   ? base_change_2(t)
                              : map == 3 ? base_change_3(t)
                                         : base_change_4(t);
                    } catch (const std::domain_error&) {
                        continue;
                    }
                    if (img.max_abs() > cap) continue;
                    AbcTriple rep2 = s3_orbit(img).representative;
                    if (!visited.insert(rep2).second) continue;
                    next.push_back(rep2);
                    if (auto i = embedded_orbit_index(rep2)) hits.insert(*i);
                }
            }
        }
        frontier = std::move(next);
    }
    CHECK(hits.size() >= 73);
}

TEST_CASE("triple text form") {
    CHECK(parse_int_monomial("-2^3*17^2") == -2312);
    CHECK(parse_int_monomial("79") == 79);
    CHECK(T("1", "1", "-2").text() == "1 1 -2");
}
