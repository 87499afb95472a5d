#pragma once

// Highest-weight theory for the fixed points of a pinned action on the dual
// group: dominance on X^*(T^I), Freudenthal multiplicities, component-group
// twists and restriction of representations.

#include "ramsat/folding.hpp"
#include "ramsat/lattice.hpp"
#include "ramsat/preset.hpp"
#include "ramsat/root_datum.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ramsat {

/// Weight -> multiplicity. Weights are classes of X^*(T^I); a connected
/// character carries an empty torsion part.
struct WeightMultiset {
    std::map<LatticeClass, Int> weights;
    Int dimension() const;
    Int multiplicity(const LatticeClass& c) const;
};

/// The dual group with the transported action and its folding.
struct DualGroup {
    BasedRootDatum datum; // roots and coroots of G exchanged
    PinnedAction action;
    FoldedDatum folded;   // G^{I,0} on X^*(T^I) / torsion
};

DualGroup dual_group(const BasedRootDatum& datum, const PinnedAction& action);
DualGroup dual_group(const PresetCatalog& catalog, const std::string& preset, const std::string& action_name = "");

/// Freudenthal multiplicities of the irreducible representation of a reductive
/// datum with dominant highest weight lambda (characters in datum coordinates).
std::map<IntVec, Int> freudenthal(const BasedRootDatum& datum, std::span<const Int> lambda);

/// lambda <= mu iff mu - lambda is a nonnegative integer combination of the
/// folded simple roots (full classes); decided by an exact solve.
class DominanceOrder {
public:
    explicit DominanceOrder(const FoldedDatum& folded);
    bool leq(const LatticeClass& lambda, const LatticeClass& mu) const;
    /// Coefficients of mu - lambda on the simple roots, if integral (any sign).
    std::optional<IntVec> coefficients(const LatticeClass& lambda, const LatticeClass& mu) const;

private:
    const FoldedDatum* folded_;
    RatMatrix free_gens_; // rank x #simple
};

/// Weights of the irreducible G^{I,0}-representation of highest weight mu_free.
/// Throws dual_reps.not_dominant.
WeightMultiset irreducible_character_connected(const FoldedDatum& folded, std::span<const Int> mu_free);

/// Lifts a connected character to the G^I-representation rho_mu with highest weight
/// the full class mu. Throws dual_reps.inconsistent_torsion when the free part of mu
/// is not the highest weight of the character.
WeightMultiset extend_by_component_twist(const FoldedDatum& folded, const WeightMultiset& connected,
                                         const LatticeClass& mu);

/// Character of the representation induced from G^{I,0}: every weight lifted to
/// all classes over its free part.
WeightMultiset induced_character(const FoldedDatum& folded, const WeightMultiset& connected);

/// rho_mu for a full class mu: the connected character extended by its twist.
WeightMultiset irreducible_character(const FoldedDatum& folded, const LatticeClass& mu);

/// Character of the absolute representation V_lambda projected to X^*(T^I).
WeightMultiset restricted_character(const DualGroup& dual, std::span<const Int> lambda);

/// res V_lambda = sum m_mu rho_mu, peeled from the top of <., 2 rho_fold^vee>
/// (ties broken lexicographically). Throws dual_reps.not_dominant for a
/// non-dominant lambda and dual_reps.negative_multiplicity if peeling fails.
std::vector<std::pair<LatticeClass, Int>> restrict_to_fixed_group(const DualGroup& dual, std::span<const Int> lambda);

struct SatakeRow {
    IntVec lambda;      // absolute dominant weight of the dual group
    Int lambda_dim = 0; // dim V_lambda
    LatticeClass mu;    // highest weight of the constituent
    Int multiplicity = 0;
    Int dimension = 0;  // dim rho_mu
    std::size_t weight_count = 0;
};

/// One row per constituent of res V_lambda, for each lambda in order.
std::vector<SatakeRow> satake_basis_report(const DualGroup& dual, const std::vector<IntVec>& lambdas);

} // namespace ramsat
