#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ramsat/dual_reps.hpp"
#include "ramsat/errors.hpp"

#include <random>

using namespace ramsat;

namespace {

const PresetCatalog& cat() { return PresetCatalog::global(); }

/// Dominant characters of a datum in a box with <lambda, 2 rho^vee> <= bound.
std::vector<IntVec> dominant_box(const BasedRootDatum& d, Int box, Int bound) {
    std::vector<IntVec> out;
    IntVec x(d.rank(), -box);
    while (true) {
        if (d.is_dominant_character(x) && dot(x, d.two_rho_vee()) <= bound) out.push_back(x);
        int i = 0;
        while (i < d.rank() && x[i] == box) x[i++] = -box;
        if (i == d.rank()) break;
        ++x[i];
    }
    return out;
}

Int total(const std::map<IntVec, Int>& m) {
    Int t = 0;
    for (const auto& [_, k] : m) t += k;
    return t;
}

} // namespace

TEST_CASE("Freudenthal agrees with Kostant and the Weyl dimension formula") {
    for (const auto& name : cat().names()) {
        CAPTURE(name);
        DualGroup dg = dual_group(cat(), name);
        for (const BasedRootDatum* d : {&dg.datum, &dg.folded.datum}) {
            if (d->rank() > 3) continue;
            for (const IntVec& lam : dominant_box(*d, 3, 12)) {
                CAPTURE(to_string(lam));
                const auto f = freudenthal(*d, lam);
                CHECK(f == oracle::kostant_character(*d, lam));
                CHECK(total(f) == oracle::weyl_dimension(*d, lam));
            }
        }
    }
}

TEST_CASE("Freudenthal input checks") {
    DualGroup dg = dual_group(cat(), "SL3");
    CHECK(freudenthal(dg.datum, IntVec{0, 0}) == std::map<IntVec, Int>{{IntVec{0, 0}, 1}});
    CHECK_THROWS_AS(freudenthal(dg.datum, IntVec{-1, 0}), Error);
    CHECK_THROWS_AS(freudenthal(dg.datum, IntVec{1}), Error);
}

TEST_CASE("folded A1: weights of the adjoint representation") {
    DualGroup dg = dual_group(cat(), "folded-A1xA1");
    REQUIRE(dg.folded.datum.semisimple_rank() == 1);
    const IntVec two_omega = dg.folded.datum.simple_root(0);
    WeightMultiset w = irreducible_character_connected(dg.folded, two_omega);
    std::map<IntVec, Int> free;
    for (const auto& [c, m] : w.weights) free[c.free] = m;
    CHECK(free == std::map<IntVec, Int>{{scale(two_omega, -1), 1}, {IntVec(two_omega.size(), 0), 1}, {two_omega, 1}});
    CHECK(irreducible_character_connected(dg.folded, IntVec(two_omega.size(), 0)).dimension() == 1);
}

TEST_CASE("folded C2: a fundamental weight of dimension 4") {
    DualGroup dg = dual_group(cat(), "folded-A3");
    const BasedRootDatum& d = dg.folded.datum;
    REQUIRE(d.semisimple_rank() == 2);
    REQUIRE(d.cartan()(0, 1) * d.cartan()(1, 0) == 2);
    std::set<Int> dims;
    for (const IntVec& lam : dominant_box(d, 2, 100)) {
        // fundamental: pairs to 1 with exactly one simple coroot and 0 with the other
        Int a = dot(d.simple_coroot(0), lam), b = dot(d.simple_coroot(1), lam);
        if ((a == 1 && b == 0) || (a == 0 && b == 1)) dims.insert(irreducible_character_connected(dg.folded, lam).dimension());
    }
    CHECK(dims.count(4) == 1);
    CHECK(dims.count(5) == 1);
}

TEST_CASE("component twists") {
    // trivial pi_0: the character is unchanged
    DualGroup a3 = dual_group(cat(), "folded-A3");
    REQUIRE(a3.folded.component_group.order() == 1);
    for (const IntVec& lam : dominant_box(a3.folded.datum, 2, 8)) {
        WeightMultiset c = irreducible_character_connected(a3.folded, lam);
        LatticeClass mu = a3.folded.characters.quotient().zero();
        mu.free = lam;
        WeightMultiset e = extend_by_component_twist(a3.folded, c, mu);
        CHECK(e.weights == c.weights);
    }
    // rank-one torus with pi_0 = Z/2: the torsion class is a one-dimensional weight
    DualGroup t1 = dual_group(cat(), "folded-T1");
    const LatticeQuotient& q = t1.folded.characters.quotient();
    REQUIRE(q.torsion() == IntVec{2});
    for (const auto& g : q.torsion_classes()) {
        WeightMultiset w = irreducible_character(t1.folded, g);
        CHECK(w.weights == std::map<LatticeClass, Int>{{g, 1}});
    }
}

TEST_CASE("Frobenius reciprocity on a torsion-carrying preset") {
    DualGroup dg = dual_group(cat(), "folded-GL3");
    const LatticeQuotient& q = dg.folded.characters.quotient();
    const Int pi0 = dg.folded.component_group.order();
    REQUIRE(pi0 == 2);
    for (const IntVec& lam : dominant_box(dg.folded.datum, 3, 6)) {
        CAPTURE(to_string(lam));
        WeightMultiset connected = irreducible_character_connected(dg.folded, lam);
        WeightMultiset ind = induced_character(dg.folded, connected);
        CHECK(ind.dimension() == pi0 * connected.dimension());
        std::map<LatticeClass, Int> sum;
        for (const auto& chi : q.torsion_classes()) {
            LatticeClass mu = chi;
            mu.free = lam;
            WeightMultiset rho = irreducible_character(dg.folded, mu);
            CHECK(rho.multiplicity(mu) == 1);
            for (const auto& [w, m] : rho.weights) sum[w] += m;
        }
        CHECK(sum == ind.weights);
    }
    LatticeClass bad = q.zero();
    bad.free = IntVec(q.free_rank(), 0);
    bad.free[0] = 1;
    CHECK_THROWS_AS(extend_by_component_twist(dg.folded, irreducible_character_connected(dg.folded, IntVec(q.free_rank(), 0)), bad),
                    Error);
}

TEST_CASE("dominance order against brute-force coefficient search") {
    for (const auto& name : {"folded-A3", "folded-GL3", "folded-A2", "folded-A1xA1"}) {
        CAPTURE(name);
        DualGroup dg = dual_group(cat(), name);
        const LatticeQuotient& q = dg.folded.characters.quotient();
        DominanceOrder order(dg.folded);
        std::mt19937 rng(3);
        std::uniform_int_distribution<int> coord(-4, 4);
        for (int trial = 0; trial < 200; ++trial) {
            LatticeClass a = q.zero(), b = q.zero();
            for (auto& x : a.free) x = coord(rng);
            for (auto& x : b.free) x = coord(rng);
            for (std::size_t i = 0; i < q.torsion().size(); ++i) {
                a.tors[i] = Int(rng() % q.torsion()[i]);
                b.tors[i] = Int(rng() % q.torsion()[i]);
            }
            CHECK(order.leq(a, b) == oracle::dominance_brute(dg.folded, a, b));
        }
        for (const auto& r : dg.folded.simple_root_classes) {
            CHECK(order.leq(q.zero(), r));
            CHECK(order.leq(r, r));
        }
    }
}

TEST_CASE("highest weight multiplicity one and the weight window") {
    for (const auto& name : cat().names()) {
        CAPTURE(name);
        DualGroup dg = dual_group(cat(), name);
        DominanceOrder order(dg.folded);
        WeylGroup w(dg.folded.datum);
        const LatticeQuotient& q = dg.folded.characters.quotient();
        for (const IntVec& lam : dominant_box(dg.folded.datum, 2, 8))
            for (const auto& chi : q.torsion_classes()) {
                LatticeClass mu = chi;
                mu.free = lam;
                WeightMultiset rho = irreducible_character(dg.folded, mu);
                CHECK(rho.multiplicity(mu) == 1);
                const IntVec low_free = w.act_character(w.longest(), lam);
                std::optional<LatticeClass> low;
                for (const auto& [c, m] : rho.weights)
                    if (c.free == low_free) low = c;
                REQUIRE(low);
                CHECK(rho.multiplicity(*low) == 1);
                for (const auto& [c, m] : rho.weights) {
                    CHECK(order.leq(c, mu));
                    CHECK(order.leq(*low, c));
                }
            }
    }
}

TEST_CASE("restriction examples") {
    DualGroup sl3 = dual_group(cat(), "SL3");
    CHECK(restrict_to_fixed_group(sl3, IntVec{0, 0}) ==
          std::vector<std::pair<LatticeClass, Int>>{{sl3.folded.characters.project(IntVec{0, 0}), 1}});
    for (const IntVec& lam : dominant_box(sl3.datum, 3, 10)) {
        auto r = restrict_to_fixed_group(sl3, lam);
        REQUIRE(r.size() == 1);
        CHECK(r[0].first == sl3.folded.characters.project(lam));
        CHECK(r[0].second == 1);
    }
    CHECK_THROWS_AS(restrict_to_fixed_group(sl3, IntVec{-1, 0}), Error);
}

TEST_CASE("A1 x A1 with the swap: Clebsch-Gordan") {
    DualGroup dg = dual_group(cat(), "A1xA1", "swap");
    const IntVec lam{1, 1};
    // tensor-character oracle: V_omega on each factor, projected to the diagonal
    const std::map<IntVec, Int> first{{IntVec{1, 0}, 1}, {IntVec{-1, 0}, 1}};
    const std::map<IntVec, Int> second{{IntVec{0, 1}, 1}, {IntVec{0, -1}, 1}};
    std::map<LatticeClass, Int> projected;
    for (const auto& [x, m] : oracle::tensor(first, second)) projected[dg.folded.characters.project(x)] += m;
    CHECK(restricted_character(dg, lam).weights == projected);

    auto r = restrict_to_fixed_group(dg, lam);
    REQUIRE(r.size() == 2);
    CHECK(r[0].first == dg.folded.characters.project(IntVec{2, 0}));
    CHECK(r[0].second == 1);
    CHECK(r[1].first == dg.folded.characters.project(IntVec{0, 0}));
    CHECK(r[1].second == 1);
    CHECK(irreducible_character(dg.folded, r[0].first).dimension() == 3);
}

TEST_CASE("restriction preserves dimension and reconstructs the character") {
    for (const auto& name : cat().names()) {
        CAPTURE(name);
        DualGroup dg = dual_group(cat(), name);
        for (const IntVec& lam : dominant_box(dg.datum, 2, 8)) {
            const WeightMultiset res = restricted_character(dg, lam);
            std::map<LatticeClass, Int> rebuilt;
            for (const auto& [mu, m] : restrict_to_fixed_group(dg, lam)) {
                CHECK(m > 0);
                for (const auto& [w, k] : irreducible_character(dg.folded, mu).weights) rebuilt[w] += m * k;
            }
            CHECK(rebuilt == res.weights);
            CHECK(res.dimension() == oracle::weyl_dimension(dg.datum, lam));
        }
    }
}

TEST_CASE("Satake basis report") {
    DualGroup sl2 = dual_group(cat(), "SL2");
    CHECK(satake_basis_report(sl2, {}).empty());
    // the dual of PGL2 is SL2 and omega = 1 is its standard representation
    auto rows = satake_basis_report(dual_group(cat(), "PGL2"), {IntVec{1}});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].dimension == 2);
    CHECK(rows[0].lambda_dim == 2);

    DualGroup a3 = dual_group(cat(), "folded-A3");
    std::vector<IntVec> fundamentals;
    for (const IntVec& lam : dominant_box(a3.datum, 2, 100)) {
        int ones = 0, zeros = 0;
        for (int k = 0; k < a3.datum.semisimple_rank(); ++k) {
            Int p = dot(a3.datum.simple_coroot(k), lam);
            ones += p == 1;
            zeros += p == 0;
        }
        if (ones == 1 && zeros == a3.datum.semisimple_rank() - 1) fundamentals.push_back(lam);
    }
    CHECK(fundamentals.size() >= 3);
    std::map<IntVec, Int> sums;
    for (const auto& r : satake_basis_report(a3, fundamentals)) {
        sums[r.lambda] += r.multiplicity * r.dimension;
        CHECK(r.lambda_dim == oracle::weyl_dimension(a3.datum, r.lambda));
    }
    for (const auto& lam : fundamentals) CHECK(sums[lam] == oracle::weyl_dimension(a3.datum, lam));
}
