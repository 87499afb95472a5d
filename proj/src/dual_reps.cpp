#include "ramsat/dual_reps.hpp"

#include "ramsat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ramsat {

namespace {

/// n with sum_k n_k (free part of simple root k) = diff, if integral.
std::optional<IntVec> solve_free(const FoldedDatum& folded, std::span<const Int> diff) {
    const auto& gens = folded.simple_root_classes;
    if (gens.empty()) {
        if (!is_zero(diff)) return std::nullopt;
        return IntVec{};
    }
    RatMatrix a(diff.size(), RatVec(gens.size()));
    for (std::size_t i = 0; i < diff.size(); ++i)
        for (std::size_t k = 0; k < gens.size(); ++k) a[i][k] = Rational(gens[k].free[i]);
    RatVec b;
    for (Int x : diff) b.push_back(Rational(x));
    auto x = solve_exact(a, b);
    if (!x) return std::nullopt;
    IntVec n;
    for (const Rational& r : *x) {
        if (r.denominator() != 1) return std::nullopt;
        n.push_back(r.numerator());
    }
    return n;
}

LatticeClass combination(const FoldedDatum& folded, const IntVec& n) {
    const LatticeQuotient& q = folded.characters.quotient();
    LatticeClass out = q.zero();
    for (std::size_t k = 0; k < n.size(); ++k) out = q.add(out, q.scale(folded.simple_root_classes[k], n[k]));
    return out;
}

} // namespace

Int WeightMultiset::dimension() const {
    Int d = 0;
    for (const auto& [_, m] : weights) d += m;
    return d;
}

Int WeightMultiset::multiplicity(const LatticeClass& c) const {
    auto it = weights.find(c);
    return it == weights.end() ? 0 : it->second;
}

DualGroup dual_group(const BasedRootDatum& datum, const PinnedAction& action) {
    BasedRootDatum dual = datum.dual(datum.name() + "^vee");
    PinnedAction act = action.is_trivial() ? PinnedAction::trivial(dual)
                                           : PinnedAction::from_matrices(dual, action.name(),
                                                                         action.cocharacter_generators());
    FoldedDatum folded = fold(act);
    return DualGroup{std::move(dual), std::move(act), std::move(folded)};
}

DualGroup dual_group(const PresetCatalog& catalog, const std::string& preset, const std::string& action_name) {
    return dual_group(catalog.datum(preset),
                      action_name.empty() ? catalog.default_action(preset) : catalog.action(preset, action_name));
}

std::map<IntVec, Int> freudenthal(const BasedRootDatum& datum, std::span<const Int> lambda) {
    if (int(lambda.size()) != datum.rank())
        fail("dual_reps.bad_weight", "weight has " + std::to_string(lambda.size()) + " entries, expected " +
                                         std::to_string(datum.rank()));
    if (!datum.is_dominant_character(lambda))
        fail("dual_reps.not_dominant", to_string(lambda) + " is not dominant for " + datum.name());
    const IntVec top(lambda.begin(), lambda.end());
    std::map<IntVec, Int> mult{{top, 1}};
    if (datum.semisimple_rank() == 0) return mult;

    WeylGroup w(datum);
    const std::vector<int> pos = datum.positive_indices();
    // W-invariant form (x, y) = sum over positive alpha of <alpha^vee, x><alpha^vee, y>
    auto form = [&](std::span<const Int> x, std::span<const Int> y) {
        Int s = 0;
        for (int a : pos) s += dot(datum.coroot(a), x) * dot(datum.coroot(a), y);
        return s;
    };
    const IntVec two_rho = datum.two_rho();
    auto is_weight = [&](const IntVec& mu) {
        IntVec dom = w.dominant_representative_character(mu).first;
        auto c = datum.simple_root_coordinates(sub(top, dom));
        return c && std::all_of(c->begin(), c->end(), [](Int x) { return x >= 0; });
    };

    std::vector<IntVec> layer{top};
    while (!layer.empty()) {
        std::set<IntVec> next;
        for (const IntVec& mu : layer)
            for (int k = 0; k < datum.semisimple_rank(); ++k) {
                IntVec nu = sub(mu, datum.simple_root(k));
                if (!mult.count(nu) && is_weight(nu)) next.insert(nu);
            }
        for (const IntVec& mu : next) {
            Int num = 0;
            for (int a : pos) {
                const IntVec& alpha = datum.root(a);
                IntVec nu = add(mu, alpha);
                for (auto it = mult.find(nu); it != mult.end(); it = mult.find(nu)) {
                    num += it->second * form(nu, alpha);
                    nu = add(nu, alpha);
                }
            }
            num *= 2;
            const Int den = form(sub(top, mu), add(add(top, mu), two_rho));
            check_invariant(den > 0 && num % den == 0 && num / den > 0, "dual_reps.internal",
                            "Freudenthal recursion failed at " + to_string(mu));
            mult[mu] = num / den;
        }
        layer.assign(next.begin(), next.end());
    }
    return mult;
}

DominanceOrder::DominanceOrder(const FoldedDatum& folded) : folded_(&folded) {}

std::optional<IntVec> DominanceOrder::coefficients(const LatticeClass& lambda, const LatticeClass& mu) const {
    const LatticeQuotient& q = folded_->characters.quotient();
    LatticeClass d = q.sub(q.normalize(mu), q.normalize(lambda));
    auto n = solve_free(*folded_, d.free);
    if (!n || combination(*folded_, *n) != d) return std::nullopt;
    return n;
}

bool DominanceOrder::leq(const LatticeClass& lambda, const LatticeClass& mu) const {
    auto n = coefficients(lambda, mu);
    return n && std::all_of(n->begin(), n->end(), [](Int x) { return x >= 0; });
}

WeightMultiset irreducible_character_connected(const FoldedDatum& folded, std::span<const Int> mu_free) {
    WeightMultiset out;
    for (auto& [nu, m] : freudenthal(folded.datum, mu_free)) out.weights[LatticeClass{nu, {}}] = m;
    return out;
}

WeightMultiset extend_by_component_twist(const FoldedDatum& folded, const WeightMultiset& connected,
                                         const LatticeClass& mu) {
    const LatticeQuotient& q = folded.characters.quotient();
    const LatticeClass top = q.normalize(mu);
    if (connected.multiplicity(LatticeClass{top.free, {}}) != 1)
        fail("dual_reps.inconsistent_torsion",
             to_string(top) + " does not restrict to a highest weight of multiplicity one of the character");
    WeightMultiset out;
    for (const auto& [nu, m] : connected.weights) {
        auto n = solve_free(folded, sub(top.free, nu.free));
        if (!n) fail("dual_reps.inconsistent_torsion", to_string(nu) + " is not below " + to_string(top));
        out.weights[q.sub(top, combination(folded, *n))] += m;
    }
    return out;
}

WeightMultiset induced_character(const FoldedDatum& folded, const WeightMultiset& connected) {
    WeightMultiset out;
    const auto torsion = folded.characters.quotient().torsion_classes();
    for (const auto& [nu, m] : connected.weights)
        for (const auto& t : torsion) out.weights[LatticeClass{nu.free, t.tors}] += m;
    return out;
}

WeightMultiset irreducible_character(const FoldedDatum& folded, const LatticeClass& mu) {
    return extend_by_component_twist(folded, irreducible_character_connected(folded, mu.free), mu);
}

WeightMultiset restricted_character(const DualGroup& dual, std::span<const Int> lambda) {
    WeightMultiset out;
    for (const auto& [nu, m] : freudenthal(dual.datum, lambda)) out.weights[dual.folded.characters.project(nu)] += m;
    return out;
}

std::vector<std::pair<LatticeClass, Int>> restrict_to_fixed_group(const DualGroup& dual, std::span<const Int> lambda) {
    const FoldedDatum& folded = dual.folded;
    WeightMultiset residual = restricted_character(dual, lambda);
    const IntVec rho2 = folded.datum.two_rho_vee();
    std::vector<std::pair<LatticeClass, Int>> out;
    while (!residual.weights.empty()) {
        auto top = residual.weights.begin();
        for (auto it = residual.weights.begin(); it != residual.weights.end(); ++it) {
            const Int a = dot(it->first.free, rho2), b = dot(top->first.free, rho2);
            if (a > b || (a == b && it->first > top->first)) top = it;
        }
        const LatticeClass mu = top->first;
        const Int m = top->second;
        if (m < 0)
            fail("dual_reps.negative_multiplicity",
                 "peeling res V_" + to_string(lambda) + " left multiplicity " + std::to_string(m) + " at " +
                     to_string(mu));
        check_invariant(folded.datum.is_dominant_character(mu.free), "dual_reps.internal",
                        "top weight " + to_string(mu) + " of the residual is not dominant");
        for (const auto& [nu, k] : irreducible_character(folded, mu).weights) {
            Int& r = residual.weights[nu];
            r -= m * k;
            if (r == 0) residual.weights.erase(nu);
        }
        out.emplace_back(mu, m);
    }
    return out;
}

std::vector<SatakeRow> satake_basis_report(const DualGroup& dual, const std::vector<IntVec>& lambdas) {
    std::vector<SatakeRow> rows;
    for (const IntVec& lambda : lambdas) {
        Int dim = 0;
        for (const auto& [_, m] : freudenthal(dual.datum, lambda)) dim += m;
        Int total = 0;
        for (const auto& [mu, m] : restrict_to_fixed_group(dual, lambda)) {
            WeightMultiset rho = irreducible_character(dual.folded, mu);
            rows.push_back(SatakeRow{lambda, dim, mu, m, rho.dimension(), rho.weights.size()});
            total += m * rho.dimension();
        }
        check_invariant(total == dim, "dual_reps.internal", "restriction does not preserve dimension");
    }
    return rows;
}

} // namespace ramsat
