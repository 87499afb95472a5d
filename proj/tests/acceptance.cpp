// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include "oracles.hpp"
#include "ramsat/cli.hpp"
#include "ramsat/dual_reps.hpp"
#include "ramsat/errors.hpp"
#include "ramsat/facets_admissible.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

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
            if (e.name() != "iwahori_weyl.unbounded_alcove") throw;
        }
    }
    return out;
}

/// Collects failures with context; a criterion passes when none were recorded.
struct Tally {
    std::size_t checks = 0;
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures.size() < 5) failures.push_back(what);
        if (!ok && failures.size() == 5) failures.push_back("...");
    }
};

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

std::string name_of(const IwahoriWeylGroup& g, const Facet& f) { return g.name() + " J=" + f.label(); }

// 1. hyperplane length = reduced-word length up to 10; translation length = <mu, 2 rho>.
void length_concordance(Tally& t) {
    for (const auto& name : {"A1-sc", "A1-ad", "A2-sc", "C2-sc", "G2", "folded-A3"}) {
        IwahoriWeylGroup g = group(name);
        for (const auto& [x, l] : oracle::bfs_lengths(g, 10)) {
            t.expect(oracle::hyperplane_count(g, x) == l && g.length(x) == l &&
                         int(g.reduced_word(x).letters.size()) == l,
                     g.name() + " " + g.format(x));
        }
        for (const auto& mu : dominant_classes(g, 10))
            for (const auto& nu : g.finite_orbit(mu)) {
                const auto x = g.translation(nu);
                t.expect(oracle::hyperplane_count(g, x) == g.pair_two_rho(mu) && g.length(x) == g.pair_two_rho(mu),
                         g.name() + " t" + to_string(nu));
            }
    }
}

// 2. l((t^nu)^J) = l(t^nu) - #{alpha in R_J^+ : <nu, alpha> < 0}.
void transmax(Tally& t) {
    for (const auto& name : buildable()) {
        IwahoriWeylGroup g = group(name);
        for (const auto& f : enumerate_facets(g))
            for (const auto& mu : default_mu_samples(g))
                for (const auto& nu : g.finite_orbit(mu)) {
                    const auto x = g.translation(nu);
                    const auto lo = oracle::coset_min(g, x, f);
                    t.expect(min_coset_rep(g, x, f) == lo &&
                                 g.length(lo) == g.length(x) - count_negative_restricted(g, f, nu),
                             name_of(g, f) + " nu=" + to_string(nu));
                }
    }
}

// 3. maxima of Adm_mu^J against brute force, counts and common length.
void maxadmcor(Tally& t) {
    for (const auto& name : buildable()) {
        IwahoriWeylGroup g = group(name);
        const auto facets = enumerate_facets(g);
        for (const auto& mu : dominant_classes(g, 10)) {
            const AdmissibleSet alcove = admissible_alcove(g, mu);
            for (const auto& f : facets) {
                const AdmissibleSet adm = admissible_relative(g, alcove, f);
                const auto brute = oracle::brute_admissible(g, mu, f);
                const auto expected = expected_maxima(g, mu, f);
                bool ok = std::set<IwahoriWeylElement>(adm.maximal.begin(), adm.maximal.end()) == brute.maximal &&
                          adm.maximal == expected &&
                          int(adm.maximal.size()) == oracle::double_coset_count(g, mu, f) &&
                          std::set<IwahoriWeylElement>(adm.elements.begin(), adm.elements.end()) == brute.elements;
                for (const auto& m : adm.maximal) ok = ok && g.length(m) == g.pair_two_rho(mu);
                t.expect(ok, name_of(g, f) + " mu=" + to_string(mu));
            }
        }
    }
}

// 4. speciality, parity at l_max + 2 and unique maxima agree on every facet.
void theorem_b(Tally& t) {
    for (const auto& name : buildable()) {
        IwahoriWeylGroup g = group(name);
        const auto samples = default_mu_samples(g);
        const TheoremBReport rep = theorem_b_report(g, samples);
        t.expect(rep.all_agree(), name + " report disagrees");
        for (const auto& row : rep.rows) {
            const Facet& f = row.facet;
            t.expect(f.special == row.parity.ok && f.special == row.unique_max, name_of(g, f) + " columns");
            if (f.special) continue;
            bool witness = row.parity.witness.has_value();
            if (witness) {
                const auto& [u, v] = *row.parity.witness;
                witness = g.kottwitz(u) == g.kottwitz(v) && (g.length(u) - g.length(v)) % 2 != 0 &&
                          g.length(u) <= rep.bound && g.length(v) <= rep.bound;
                // both represent their double coset by its longest W^J element, whose
                // length is the dimension of the orbit in the partial flag variety
                for (const auto& x : {u, v}) witness = witness && oracle::double_coset_max(g, x, f) == x;
            }
            t.expect(witness, name_of(g, f) + " parity witness");
            bool multi = row.multi_max_mu.has_value();
            if (multi) {
                const auto it = std::find(samples.begin(), samples.end(), *row.multi_max_mu);
                const int count = row.max_counts[std::size_t(it - samples.begin())];
                multi = count >= 2 && count >= oracle::double_coset_count(g, *row.multi_max_mu, f);
            }
            t.expect(multi, name_of(g, f) + " multi-max sample");
        }
    }
}

// 5. maximal classes of project(W_0^abs mu) are W_0 . mu_bar on folded presets.
void projected_orbits(Tally& t) {
    for (const auto& name : cat().names()) {
        if (cat().manifest(name).kind != "folded") continue;
        IwahoriWeylGroup g = group(name);
        const BasedRootDatum& d = g.datum();
        const WeylGroup& w = g.absolute_weyl();
        IntVec x(d.rank(), -2);
        while (true) {
            if (d.is_dominant_cocharacter(x) && dot(x, d.two_rho()) <= 10) {
                std::set<LatticeClass> proj;
                for (const auto& y : w.orbit(x)) proj.insert(g.project(y));
                std::set<LatticeClass> maxima;
                for (const auto& c : proj) {
                    bool maximal = true;
                    for (const auto& e : proj)
                        if (e != c && oracle::bruhat_interval(g, g.translation(e)).count(g.translation(c)))
                            maximal = false;
                    if (maximal) maxima.insert(c);
                }
                const auto lam = lambda_mu(g, x);
                const auto orbit = g.finite_orbit(g.dominant(lam.front()).first);
                t.expect(maxima == std::set<LatticeClass>(orbit.begin(), orbit.end()) &&
                             maxima == std::set<LatticeClass>(lam.begin(), lam.end()),
                         name + " mu=" + to_string(x));
            }
            int i = 0;
            while (i < d.rank() && x[i] == 2) x[i++] = -2;
            if (i == d.rank()) break;
            ++x[i];
        }
    }
}

// 6. bruhat_leq against the all-reduced-words subword oracle for l <= 8.
void bruhat_oracle(Tally& t) {
    for (const auto& name : {"A1-sc", "A1-ad", "A1xA1", "A2-sc", "A2-ad", "folded-A2", "folded-A1xA1"}) {
        IwahoriWeylGroup g = group(name);
        std::vector<IwahoriWeylElement> xs;
        for (const auto& [x, l] : oracle::bfs_lengths(g, 8)) xs.push_back(x);
        for (const auto& v : xs) {
            bool consistent = false;
            const auto below = oracle::bruhat_interval(g, v, &consistent);
            t.expect(consistent, g.name() + " reduced words of " + g.format(v));
            for (const auto& u : xs)
                t.expect(g.bruhat_leq(u, v) == (below.count(u) != 0), g.name() + " " + g.format(u) + " <= " + g.format(v));
        }
    }
}

// 7. Smith-form reconstruction, kernel rank and the rank-one inversion example.
void coinvariant_lattices(Tally& t) {
    for (const auto& name : cat().names())
        for (const auto& act : cat().action_names(name)) {
            const PinnedAction a = cat().action(name, act);
            for (LatticeSide side : {LatticeSide::cocharacters, LatticeSide::characters}) {
                const CoinvariantLattice co = coinvariants(a, side);
                const IntMatrix& rel = co.relation_matrix();
                const SmithForm& s = co.quotient().smith();
                IntMatrix d(rel.rows(), rel.cols());
                for (std::size_t i = 0; i < s.diagonal.size(); ++i) d(int(i), int(i)) = s.diagonal[i];
                IntVec torsion;
                for (Int x : oracle::invariant_factors(rel))
                    if (x > 1) torsion.push_back(x);
                bool kernel = true;
                for (int c = 0; c < rel.cols(); ++c) kernel = kernel && co.project(rel.col(c)) == co.quotient().zero();
                t.expect(s.U * rel * s.V == d && s.U_inv * d * s.V_inv == rel && co.torsion() == torsion &&
                             co.ambient_rank() - co.free_rank() == rank(rel) && kernel,
                         name + "/" + act);
            }
        }
    const CoinvariantLattice t1 = coinvariants(cat().action("T1", "inversion"), LatticeSide::cocharacters);
    t.expect(t1.free_rank() == 0 && t1.torsion() == IntVec{2}, "T1 inversion gives Z/2");
}

// 8. highest-weight theory of the fixed points of the dual group.
void appendix_a(Tally& t) {
    for (const auto& name : cat().names()) {
        const DualGroup dg = dual_group(cat(), name);
        const DominanceOrder order(dg.folded);
        const WeylGroup w(dg.folded.datum);
        const LatticeQuotient& q = dg.folded.characters.quotient();
        for (const IntVec& lam : dominant_box(dg.folded.datum, 2, 10))
            for (const auto& chi : q.torsion_classes()) {
                LatticeClass mu = chi;
                mu.free = lam;
                const WeightMultiset rho = irreducible_character(dg.folded, mu);
                const IntVec low_free = w.act_character(w.longest(), lam);
                std::optional<LatticeClass> low;
                for (const auto& [c, m] : rho.weights)
                    if (c.free == low_free) low = c;
                bool ok = rho.multiplicity(mu) == 1 && low.has_value();
                for (const auto& [c, m] : rho.weights) ok = ok && low && order.leq(*low, c) && order.leq(c, mu);
                t.expect(ok, name + " rho_" + to_string(mu));
            }
        for (const BasedRootDatum* d : {&dg.datum, &dg.folded.datum}) {
            if (d->rank() > 3) continue;
            for (const IntVec& lam : dominant_box(*d, 3, 12)) {
                const auto f = freudenthal(*d, lam);
                Int dim = 0;
                for (const auto& [_, m] : f) dim += m;
                t.expect(f == oracle::kostant_character(*d, lam) && dim == oracle::weyl_dimension(*d, lam),
                         d->name() + " lambda=" + to_string(lam));
            }
        }
    }
    // Clebsch-Gordan on the diagonal of A1 x A1
    const DualGroup sw = dual_group(cat(), "A1xA1", "swap");
    const auto r = restrict_to_fixed_group(sw, IntVec{1, 1});
    std::map<LatticeClass, Int> projected;
    const auto cg = oracle::tensor({{IntVec{1, 0}, 1}, {IntVec{-1, 0}, 1}}, {{IntVec{0, 1}, 1}, {IntVec{0, -1}, 1}});
    for (const auto& [x, m] : cg) projected[sw.folded.characters.project(x)] += m;
    t.expect(restricted_character(sw, IntVec{1, 1}).weights == projected, "A1xA1 tensor character");
    t.expect(r.size() == 2 && r[0] == std::pair{sw.folded.characters.project(IntVec{2, 0}), Int(1)} &&
                 r[1] == std::pair{sw.folded.characters.project(IntVec{0, 0}), Int(1)},
             "A1xA1 swap: V_(w,w) = V_2w + V_0");
    // induction from the identity component against the sum of twists
    const DualGroup u3 = dual_group(cat(), "folded-GL3");
    const LatticeQuotient& q = u3.folded.characters.quotient();
    const Int pi0 = u3.folded.component_group.order();
    t.expect(pi0 > 1, "folded-GL3 has a nontrivial component group");
    for (const IntVec& lam : dominant_box(u3.folded.datum, 3, 6)) {
        const WeightMultiset ind = induced_character(u3.folded, irreducible_character_connected(u3.folded, lam));
        std::map<LatticeClass, Int> sum;
        Int dim = 0;
        for (const auto& chi : q.torsion_classes()) {
            LatticeClass mu = chi;
            mu.free = lam;
            for (const auto& [c, m] : irreducible_character(u3.folded, mu).weights) sum[c] += m;
        }
        for (const auto& [c, m] : irreducible_character_connected(u3.folded, lam).weights) dim += m;
        t.expect(sum == ind.weights && ind.dimension() == pi0 * dim, "frobrec lambda=" + to_string(lam));
    }
}

// 9. byte-identical CLI output and a passing selftest.
void cli_determinism(Tally& t) {
    auto run = [](const std::vector<std::string>& args, int* status = nullptr) {
        std::ostringstream out, err;
        const int s = ramsat::run(args, out, err);
        if (status) *status = s;
        return out.str() + "\n--stderr--\n" + err.str();
    };
    const std::vector<std::vector<std::string>> commands{
        {"report", "--preset", "sl2", "--format", "tsv"},
        {"report", "--preset", "folded-A3", "--format", "json"},
        {"report", "--preset", "G2"},
        {"branch", "--preset", "folded-A3", "--lambda", "1,0,0", "--lambda", "1,1,0", "--format", "json"},
        {"branch", "--preset", "folded-GL3", "--lambda", "2,1,0", "--format", "tsv"}};
    for (const auto& c : commands) {
        int s1 = -1, s2 = -1;
        const std::string a = run(c, &s1), b = run(c, &s2);
        t.expect(s1 == 0 && s2 == 0 && a == b, c[0] + " " + c[2]);
    }
    int status = -1;
    run({"selftest"}, &status);
    t.expect(status == 0, "selftest exit status " + std::to_string(status));
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        void (*fn)(Tally&);
    };
    const Criterion criteria[] = {
        {1, "length concordance", length_concordance},
        {2, "transmax formula", transmax},
        {3, "maximal admissible elements", maxadmcor},
        {4, "speciality criteria agree", theorem_b},
        {5, "projected orbit maxima", projected_orbits},
        {6, "Bruhat subword oracle", bruhat_oracle},
        {7, "coinvariants", coinvariant_lattices},
        {8, "highest weights of the fixed points", appendix_a},
        {9, "CLI determinism", cli_determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Tally t;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.fn(t);
        } catch (const Error& e) {
            t.failures.push_back("exception " + e.name() + ": " + e.what());
        } catch (const std::exception& e) {
            t.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = t.failures.empty() && t.checks > 0;
        failed += !ok;
        std::printf("%s  %d  %-36s %8zu checks  %7.2f s\n", ok ? "PASS" : "FAIL", c.id, c.name, t.checks, secs);
        for (const auto& f : t.failures) std::printf("        %s\n", f.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", int(std::size(criteria)) - failed, std::size(criteria));
    return failed ? 1 : 0;
}
