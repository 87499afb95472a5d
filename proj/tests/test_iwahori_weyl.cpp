#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ramsat/errors.hpp"
#include "ramsat/iwahori_weyl.hpp"
#include "ramsat/kernels.hpp"

using namespace ramsat;

namespace {

const PresetCatalog& cat() { return PresetCatalog::global(); }
IwahoriWeylGroup group(const std::string& name) { return IwahoriWeylGroup::from_preset(cat(), name); }

std::vector<std::string> buildable() {
    std::vector<std::string> out;
    for (const auto& n : cat().names()) {
        try {
            group(n);
            out.push_back(n);
        } catch (const Error& e) {
            CHECK(e.name() == "iwahori_weyl.unbounded_alcove");
        }
    }
    return out;
}

} // namespace

TEST_CASE("simple affine reflections and length-zero elements") {
    IwahoriWeylGroup sl2 = group("SL2");
    CHECK(sl2.num_simple() == 2);
    CHECK(sl2.omega().size() == 1);
    IwahoriWeylGroup pgl2 = group("PGL2");
    CHECK(pgl2.num_simple() == 2);
    CHECK(pgl2.omega().size() == 2);
    IwahoriWeylGroup sl3 = group("SL3");
    CHECK(sl3.num_simple() == 3);
    CHECK(sl3.omega().size() == 1);
    CHECK(group("A2-ad").omega().size() == 3);
    for (const auto& o : pgl2.omega()) CHECK(pgl2.length(o) == 0);
}

TEST_CASE("SL2 lengths and reduced words") {
    IwahoriWeylGroup g = group("SL2");
    CHECK(g.length(g.identity()) == 0);
    for (int i = 0; i < g.num_simple(); ++i) {
        CHECK(g.length(g.simple(i)) == 1);
        CHECK(g.reduced_word(g.simple(i)).letters == std::vector<int>{i});
    }
    for (Int n = -5; n <= 5; ++n) CHECK(g.length(g.translation(g.project(IntVec{n}))) == 2 * std::abs(n));
    const IwahoriWeylElement t = g.parse("t[1]");
    ReducedWord w = g.reduced_word(t);
    CHECK(w.letters.size() == 2);
    CHECK(g.from_word(w) == t);
    // t[1] and t[-1] are the two products of s0 and s1
    CHECK(g.multiply(g.simple(w.letters[0]), g.simple(w.letters[1])) == t);
    CHECK(g.reduced_word(g.parse("t[-1]")).letters ==
          std::vector<int>{w.letters[1], w.letters[0]});
}

TEST_CASE("Bruhat order examples") {
    IwahoriWeylGroup g = group("SL2");
    const auto s0 = g.simple(0), s1 = g.simple(1);
    CHECK(g.bruhat_leq(g.identity(), s0));
    CHECK(g.bruhat_leq(s0, g.multiply(s0, s1)));
    CHECK(!g.bruhat_leq(s0, s1));
    IwahoriWeylGroup p = group("PGL2");
    // different length-zero parts are incomparable
    CHECK(!p.bruhat_leq(p.identity(), p.omega()[1]));
    CHECK(p.bruhat_leq(p.omega()[1], p.multiply(p.omega()[1], p.simple(0))));
}

TEST_CASE("Kottwitz map") {
    IwahoriWeylGroup p = group("PGL2");
    const auto zero = p.fundamental_group().zero();
    CHECK(p.kottwitz(p.identity()) == zero);
    for (int i = 0; i < p.num_simple(); ++i) CHECK(p.kottwitz(p.simple(i)) == zero);
    CHECK(p.kottwitz(p.parse("t[1]")) != zero);
    CHECK(p.fundamental_group().torsion() == IntVec{2});
    // a bijection Omega -> pi_1(G)_I on every buildable preset
    for (const auto& name : buildable()) {
        IwahoriWeylGroup g = group(name);
        std::set<LatticeClass> images;
        for (const auto& o : g.omega()) images.insert(g.kottwitz(o));
        CHECK(images.size() == g.omega().size());
        CHECK(Int(images.size()) == g.fundamental_group().torsion_order());
        CHECK(g.fundamental_group().free_rank() == 0);
    }
}

TEST_CASE("translations are additive") {
    IwahoriWeylGroup g = group("C2-sc");
    const auto mu = g.project(IntVec{1, 2}), nu = g.project(IntVec{-3, 1});
    CHECK(g.multiply(g.translation(mu), g.translation(nu)) ==
          g.translation(g.coinvariants().add(mu, nu)));
    CHECK(g.translation(g.coinvariants().zero()) == g.identity());
}

TEST_CASE("torsion translations have length zero") {
    IwahoriWeylGroup g = group("folded-T1");
    REQUIRE(g.coinvariants().torsion() == IntVec{2});
    const auto t = g.translation(g.project(IntVec{1}));
    CHECK(t != g.identity());
    CHECK(g.length(t) == 0);
    CHECK(g.pair_two_rho(g.project(IntVec{1})) == 0);
    CHECK(oracle::hyperplane_count(g, t) == 0);
}

TEST_CASE("length agrees with word length and hyperplane count") {
    for (const auto& name : buildable()) {
        CAPTURE(name);
        IwahoriWeylGroup g = group(name);
        const auto bfs = oracle::bfs_lengths(g, 6);
        for (const auto& [x, l] : bfs) {
            CHECK(g.length(x) == l);
            CHECK(oracle::hyperplane_count(g, x) == l);
            ReducedWord w = g.reduced_word(x);
            CHECK(int(w.letters.size()) == l);
            CHECK(g.from_word(w) == x);
        }
        CHECK(elements_up_to_length(g, 6, ExecPolicy::serial).size() == bfs.size());
    }
}

TEST_CASE("translation length is the pairing with 2 rho") {
    for (const auto& name : buildable()) {
        CAPTURE(name);
        IwahoriWeylGroup g = group(name);
        for (const auto& mu : dominant_classes(g, 10))
            for (const auto& nu : g.finite_orbit(mu)) {
                CHECK(g.length(g.translation(nu)) == g.pair_two_rho(mu));
                CHECK(oracle::hyperplane_count(g, g.translation(nu)) == g.pair_two_rho(mu));
            }
    }
}

TEST_CASE("element syntax round trips") {
    IwahoriWeylGroup g = group("folded-GL3");
    for (const auto& x : elements_up_to_length(g, 4, ExecPolicy::serial)) {
        CHECK(g.parse(g.format(x)) == x);
        CHECK(g.parse(g.format_word(g.reduced_word(x))) == x);
    }
    CHECK_THROWS_AS(g.parse("t[1"), ParseError);
    CHECK_THROWS_AS(g.parse("q[1]"), ParseError);
    CHECK_THROWS_AS(g.parse("s[9]"), Error);
}

TEST_CASE("central directions are rejected") {
    CHECK_THROWS_WITH_AS(group("GL3"), doctest::Contains("central"), Error);
    try {
        group("T1");
        FAIL("expected unbounded_alcove");
    } catch (const Error& e) {
        CHECK(e.name() == "iwahori_weyl.unbounded_alcove");
    }
}

TEST_CASE("echelonnage tables are validated against the derivation") {
    const BasedRootDatum d = cat().datum("folded-A3");
    const PinnedAction a = cat().default_action("folded-A3");
    const auto table = cat().echelon_table("folded-A3");
    IwahoriWeylGroup derived(d, a, table, TableMode::derive);
    CHECK(derived.echelon_table().size() == table.size());
    CHECK_NOTHROW(IwahoriWeylGroup(d, a, table, TableMode::validate));
    auto bad = table;
    bad.front().stride = bad.front().stride * 2;
    CHECK_THROWS_AS(IwahoriWeylGroup(d, a, bad, TableMode::validate), Error);
    auto gap = table;
    gap.pop_back();
    CHECK_THROWS_AS(IwahoriWeylGroup(d, a, gap, TableMode::validate), Error);
}

TEST_CASE("multiplication is associative with inverses") {
    IwahoriWeylGroup g = group("G2");
    const auto xs = elements_up_to_length(g, 3, ExecPolicy::serial);
    for (const auto& x : xs) {
        CHECK(g.multiply(x, g.inverse(x)) == g.identity());
        CHECK(g.length(g.inverse(x)) == g.length(x));
        for (std::size_t j = 0; j < xs.size(); j += 5)
            CHECK(g.multiply(g.multiply(x, xs[j]), g.simple(0)) == g.multiply(x, g.multiply(xs[j], g.simple(0))));
    }
}
