#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramsat/errors.hpp"
#include "ramsat/preset.hpp"
#include "ramsat/root_datum.hpp"

#include <set>

using namespace ramsat;

TEST_CASE("root counts and Weyl group orders") {
    struct Row {
        const char* preset;
        std::size_t roots, order;
    };
    for (Row r : {Row{"A1-sc", 2, 2}, Row{"A2-sc", 6, 6}, Row{"A3-ad", 12, 24}, Row{"C2-sc", 8, 8},
                  Row{"G2", 12, 12}, Row{"GL3", 6, 6}, Row{"T1", 0, 1}}) {
        CAPTURE(r.preset);
        BasedRootDatum d = build_datum(r.preset);
        CHECK(d.num_roots() == r.roots);
        CHECK(WeylGroup(d).order() == r.order);
        for (std::size_t i = 0; i < d.num_roots(); ++i) CHECK(dot(d.root(int(i)), d.coroot(int(i))) == 2);
    }
}

TEST_CASE("A1 datum") {
    BasedRootDatum d = build_datum("sl2");
    CHECK(d.simple_root(0) == IntVec{2});
    CHECK(d.roots().size() == 2);
    CHECK(d.two_rho() == IntVec{2});
    WeylGroup w(d);
    auto [dom, g] = w.dominant_representative(IntVec{-1});
    CHECK(dom == IntVec{1});
    CHECK(w.element(g).word == std::vector<int>{0});
    CHECK(w.orbit(IntVec{0}).size() == 1);
    CHECK(w.orbit(IntVec{1}) == std::vector<IntVec>{{-1}, {1}});
    CHECK(w.stabilizer(IntVec{1}).elements.size() == 1);
}

TEST_CASE("A2 orbits and stabilizers") {
    BasedRootDatum d = build_datum("SL3");
    WeylGroup w(d);
    // cocharacters in the simple coroot basis
    const IntVec mu{1, 1}; // regular dominant
    REQUIRE(d.is_dominant_cocharacter(mu));
    int s12 = w.from_word(std::vector<int>{0, 1});
    auto [dom, g] = w.dominant_representative(w.act_cocharacter(s12, mu));
    CHECK(dom == mu);
    CHECK(g == w.inverse(s12));
    CHECK(w.dominant_representative(mu).second == w.identity());
    const IntVec omega1{2, 1}; // 3 omega_1^vee
    CHECK(w.orbit(omega1).size() == 3);
    auto stab = w.stabilizer(omega1);
    CHECK(stab.elements.size() == 2);
    CHECK(stab.generators == std::vector<int>{w.simple(1)});
    CHECK(w.stabilizer(IntVec{0, 0}).elements.size() == 6);
    // 2 rho = 2(alpha_1 + alpha_2)
    CHECK(d.two_rho() == scale(add(d.simple_root(0), d.simple_root(1)), 2));
}

TEST_CASE("C2 two rho is the sum of the positive roots") {
    BasedRootDatum d = build_datum("C2-sc");
    IntVec sum(2, 0);
    int count = 0;
    for (int a : d.positive_indices()) {
        sum = add(sum, d.root(a));
        ++count;
    }
    CHECK(count == 4);
    CHECK(d.two_rho() == sum);
}

TEST_CASE("Weyl group multiplication is consistent with matrices") {
    BasedRootDatum d = build_datum("G2");
    WeylGroup w(d);
    for (int a = 0; a < int(w.order()); ++a) {
        CHECK(w.multiply(a, w.inverse(a)) == w.identity());
        CHECK(w.inversion_count(a) == w.element(a).length());
        for (int b = 0; b < int(w.order()); ++b)
            CHECK(w.element(w.multiply(a, b)).cocharacter_matrix ==
                  w.element(a).cocharacter_matrix * w.element(b).cocharacter_matrix);
    }
    CHECK(w.element(w.longest()).length() == 6);
}

TEST_CASE("dual exchanges roots and coroots") {
    BasedRootDatum d = build_datum("C2-sc");
    BasedRootDatum v = d.dual("C2-sc^vee");
    for (std::size_t i = 0; i < d.num_roots(); ++i) CHECK(v.root_index(d.coroot(int(i))).has_value());
    CHECK(v.cartan() == d.cartan().transpose());
}

TEST_CASE("invalid data is rejected") {
    CHECK_THROWS_AS(BasedRootDatum::from_simple("bad", 1, {{2}}, {{2}}), Error);
    CHECK_THROWS_AS(build_datum("no-such-preset"), Error);
}
