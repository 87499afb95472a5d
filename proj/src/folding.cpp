#include "ramsat/folding.hpp"

#include "ramsat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ramsat {

namespace {

constexpr std::size_t kMaxActionOrder = 1024;

IntMatrix inverse_transpose(const IntMatrix& m) { return unimodular_inverse(m).transpose(); }

} // namespace

PinnedAction PinnedAction::from_permutations(const BasedRootDatum& datum, std::string name,
                                             const std::vector<std::vector<int>>& perms) {
    const int n = datum.rank(), l = datum.semisimple_rank();
    if (l != n)
        fail("folding.not_pinned", name + ": a simple-root permutation determines the action only when roots span X^*");
    IntMatrix a(n, n);
    for (int k = 0; k < l; ++k)
        for (int i = 0; i < n; ++i) a(i, k) = datum.simple_root(k)[i];
    auto a_inv = inverse(to_rational(a));
    check_invariant(a_inv.has_value(), "folding.internal", "simple roots are dependent");
    std::vector<IntMatrix> gens;
    for (const auto& p : perms) {
        if (int(p.size()) != l) fail("folding.not_pinned", name + ": permutation has wrong length");
        std::vector<int> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        for (int k = 0; k < l; ++k)
            if (sorted[k] != k) fail("folding.not_pinned", name + ": not a permutation of the simple roots");
        IntMatrix g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational s = 0;
                for (int k = 0; k < l; ++k) s += Rational(datum.simple_root(p[k])[i]) * (*a_inv)[k][j];
                if (s.denominator() != 1)
                    fail("folding.not_pinned", name + ": permutation does not preserve the character lattice");
                g(i, j) = s.numerator();
            }
        gens.push_back(g);
    }
    return from_matrices(datum, std::move(name), std::move(gens));
}

PinnedAction PinnedAction::from_matrices(const BasedRootDatum& datum, std::string name,
                                         std::vector<IntMatrix> character_generators) {
    PinnedAction act;
    act.name_ = std::move(name);
    act.datum_ = std::make_shared<const BasedRootDatum>(datum);
    act.char_gens_ = std::move(character_generators);
    act.validate_and_close();
    return act;
}

PinnedAction PinnedAction::trivial(const BasedRootDatum& datum) { return from_matrices(datum, "trivial", {}); }

void PinnedAction::validate_and_close() {
    const BasedRootDatum& d = *datum_;
    const int n = d.rank();
    for (const auto& g : char_gens_) {
        if (g.rows() != n || g.cols() != n) fail("folding.not_pinned", name_ + ": generator has wrong shape");
        Int det = determinant(g);
        if (det != 1 && det != -1) fail("folding.not_pinned", name_ + ": generator is not a lattice automorphism");
        IntMatrix gv = inverse_transpose(g);
        for (int i = 0; i < int(d.num_roots()); ++i) {
            auto j = d.root_index(g.apply(d.root(i)));
            if (!j) fail("folding.not_pinned", name_ + ": generator does not permute the roots");
            if (gv.apply(d.coroot(i)) != d.coroot(*j))
                fail("folding.not_pinned", name_ + ": generator does not commute with the coroot bijection");
        }
        for (int k = 0; k < d.semisimple_rank(); ++k) {
            auto j = d.root_index(g.apply(d.simple_root(k)));
            auto& simple = d.simple_indices();
            if (!j || std::find(simple.begin(), simple.end(), *j) == simple.end())
                fail("folding.not_pinned", name_ + ": generator does not preserve the simple roots");
        }
        cochar_gens_.push_back(gv);
    }

    std::set<IntMatrix> seen{IntMatrix::identity(n)};
    char_elems_ = {IntMatrix::identity(n)};
    for (std::size_t h = 0; h < char_elems_.size(); ++h)
        for (const auto& g : char_gens_) {
            IntMatrix x = g * char_elems_[h];
            if (seen.insert(x).second) {
                if (char_elems_.size() >= kMaxActionOrder) fail("folding.not_pinned", name_ + ": group is not finite");
                char_elems_.push_back(x);
            }
        }
    for (const auto& g : char_elems_) cochar_elems_.push_back(inverse_transpose(g));

    // orbits on simple positions
    const int l = d.semisimple_rank();
    std::vector<int> comp(l);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const auto& g : char_gens_)
        for (int k = 0; k < l; ++k) {
            int j = *d.root_index(g.apply(d.simple_root(k)));
            int pos = int(std::find(d.simple_indices().begin(), d.simple_indices().end(), j) - d.simple_indices().begin());
            comp[find(k)] = find(pos);
        }
    std::map<int, std::vector<int>> groups;
    for (int k = 0; k < l; ++k) groups[find(k)].push_back(k);
    for (auto& [_, v] : groups) simple_orbits_.push_back(v);
    std::sort(simple_orbits_.begin(), simple_orbits_.end());
}

std::vector<std::vector<int>> PinnedAction::root_orbits() const {
    const BasedRootDatum& d = *datum_;
    std::vector<char> done(d.num_roots(), 0);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < int(d.num_roots()); ++i) {
        if (done[i]) continue;
        std::set<int> orb;
        for (const auto& g : char_elems_) orb.insert(*d.root_index(g.apply(d.root(i))));
        for (int j : orb) done[j] = 1;
        out.emplace_back(orb.begin(), orb.end());
    }
    return out;
}

bool PinnedAction::fixes_character(std::span<const Int> chi) const {
    IntVec x(chi.begin(), chi.end());
    return std::all_of(char_gens_.begin(), char_gens_.end(), [&](const IntMatrix& g) { return g.apply(x) == x; });
}

bool PinnedAction::fixes_cocharacter(std::span<const Int> y) const {
    IntVec x(y.begin(), y.end());
    return std::all_of(cochar_gens_.begin(), cochar_gens_.end(), [&](const IntMatrix& g) { return g.apply(x) == x; });
}

IntVec PinnedAction::character_orbit_sum(std::span<const Int> chi) const {
    IntVec s(chi.size(), 0);
    for (const auto& g : char_elems_) s = add(s, g.apply(chi));
    return s;
}

IntVec PinnedAction::cocharacter_orbit_sum(std::span<const Int> x) const {
    IntVec s(x.size(), 0);
    for (const auto& g : cochar_elems_) s = add(s, g.apply(x));
    return s;
}

// ---------------- coinvariants ----------------

CoinvariantLattice::CoinvariantLattice(const PinnedAction& action, LatticeSide side) : side_(side) {
    const int n = action.datum().rank();
    const auto& gens = side == LatticeSide::characters ? action.character_generators() : action.cocharacter_generators();
    std::vector<IntVec> cols;
    for (const auto& g : gens)
        for (int j = 0; j < n; ++j) {
            IntVec e(n, 0);
            e[j] = 1;
            cols.push_back(sub(e, g.apply(e)));
        }
    quotient_ = LatticeQuotient(n, cols.empty() ? IntMatrix(n, 0) : IntMatrix::from_columns(cols, n));
}

CoinvariantLattice coinvariants(const PinnedAction& action, LatticeSide side) { return CoinvariantLattice(action, side); }

Int invariant_pairing(const PinnedAction& action, const CoinvariantLattice& co, const LatticeClass& mu_bar,
                      std::span<const Int> chi) {
    const bool fixed = co.side() == LatticeSide::cocharacters ? action.fixes_character(chi) : action.fixes_cocharacter(chi);
    if (!fixed) fail("folding.not_invariant", "pairing partner is not fixed by the action");
    IntVec rep = co.lift(mu_bar);
    Int value = dot(rep, chi);
    // a second representative must give the same value
    const IntMatrix& rel = co.relation_matrix();
    for (int c = 0; c < rel.cols(); ++c)
        check_invariant(dot(add(rep, rel.col(c)), chi) == value, "folding.pairing_ill_defined",
                        "pairing depends on the representative");
    return value;
}

Int FiniteAbelianGroup::order() const {
    Int p = 1;
    for (Int d : invariant_factors) p *= d;
    return p;
}

FiniteAbelianGroup pi0_fixed_torus(const PinnedAction& action) {
    return FiniteAbelianGroup{coinvariants(action, LatticeSide::characters).torsion()};
}

std::vector<int> fixed_weyl_elements(const WeylGroup& w0, const PinnedAction& action) {
    std::vector<int> out;
    for (int w = 0; w < int(w0.order()); ++w) {
        const IntMatrix& m = w0.element(w).character_matrix;
        bool ok = std::all_of(action.character_generators().begin(), action.character_generators().end(),
                              [&](const IntMatrix& g) { return g * m == m * g; });
        if (ok) out.push_back(w);
    }
    return out;
}

// ---------------- fold ----------------

FoldedDatum fold(const PinnedAction& action, Int characteristic) {
    if (characteristic > 0 && Int(action.order()) % characteristic == 0)
        fail("folding.wild", "order of I is divisible by the characteristic");
    const BasedRootDatum& d = action.datum();
    CoinvariantLattice co = coinvariants(action, LatticeSide::characters);
    const LatticeQuotient& q = co.quotient();
    const int f = q.free_rank();
    const IntMatrix lifts = q.free_lifts();

    FoldedDatum out{BasedRootDatum::from_simple(d.name() + "^I", f, {}, {}), co, {}, {}, false, {}};
    std::vector<IntVec> roots, coroots;
    for (const auto& orbit : action.simple_orbits()) {
        LatticeClass cls = q.project(d.simple_root(orbit.front()));
        for (int k : orbit)
            check_invariant(q.project(d.simple_root(k)) == cls, "folding.internal", "orbit members differ in coinvariants");
        bool adjacent = false;
        IntVec vsum(d.rank(), 0);
        for (int a : orbit) {
            vsum = add(vsum, d.simple_coroot(a));
            for (int b : orbit)
                if (a != b && d.cartan()(a, b) != 0) adjacent = true;
        }
        if (adjacent) {
            out.nonreduced = true;
            vsum = scale(vsum, 2);
        }
        check_invariant(action.fixes_cocharacter(vsum), "folding.internal", "orbit coroot sum is not invariant");
        IntVec coroot(f);
        for (int j = 0; j < f; ++j) coroot[j] = dot(vsum, lifts.col(j));
        roots.push_back(cls.free);
        coroots.push_back(coroot);
        out.orbit_map.push_back(orbit);
        out.simple_root_classes.push_back(cls);
    }
    out.datum = BasedRootDatum::from_simple(d.name() + "^I", f, roots, coroots);
    out.component_group = FiniteAbelianGroup{q.torsion()};

    // Second route: each folded simple reflection must be the action on X^*(T)_I of
    // the longest element of the orbit's parabolic subgroup (which is I-fixed).
    WeylGroup w0(d);
    for (std::size_t k = 0; k < out.orbit_map.size(); ++k) {
        std::vector<int> gens;
        for (int a : out.orbit_map[k]) gens.push_back(w0.simple(a));
        int longest = 0;
        for (int w : w0.generated_subgroup(gens))
            if (w0.element(w).length() > w0.element(longest).length()) longest = w;
        IntMatrix ind = q.induced(w0.element(longest).character_matrix);
        IntMatrix refl = out.datum.simple_reflection_character(int(k));
        for (int i = 0; i < f; ++i)
            for (int j = 0; j < f; ++j)
                check_invariant(ind(i, j) == refl(i, j), "folding.weyl_mismatch",
                                "folded reflection differs from the fixed Weyl element");
    }
    WeylGroup folded_w(out.datum);
    check_invariant(folded_w.order() == fixed_weyl_elements(w0, action).size(), "folding.weyl_mismatch",
                    "folded Weyl group order differs from |W_0^I|");
    return out;
}

} // namespace ramsat
