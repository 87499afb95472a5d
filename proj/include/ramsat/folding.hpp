#pragma once

#include "ramsat/lattice.hpp"
#include "ramsat/root_datum.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ramsat {

/// A finite group I of pinned automorphisms of a based root datum, given by
/// generators acting on character coordinates.
class PinnedAction {
public:
    /// Generators given as permutations of the simple roots (0-based images).
    /// Only valid when the roots span X^* rationally.
    static PinnedAction from_permutations(const BasedRootDatum& datum, std::string name,
                                          const std::vector<std::vector<int>>& perms);
    /// Generators given as integer matrices on character coordinates.
    static PinnedAction from_matrices(const BasedRootDatum& datum, std::string name,
                                      std::vector<IntMatrix> character_generators);
    static PinnedAction trivial(const BasedRootDatum& datum);

    const std::string& name() const { return name_; }
    const BasedRootDatum& datum() const { return *datum_; }
    std::shared_ptr<const BasedRootDatum> datum_ptr() const { return datum_; }

    const std::vector<IntMatrix>& character_generators() const { return char_gens_; }
    const std::vector<IntMatrix>& cocharacter_generators() const { return cochar_gens_; }
    /// All group elements on character / cocharacter coordinates (identity first).
    const std::vector<IntMatrix>& character_elements() const { return char_elems_; }
    const std::vector<IntMatrix>& cocharacter_elements() const { return cochar_elems_; }
    std::size_t order() const { return char_elems_.size(); }
    bool is_trivial() const { return order() == 1; }

    /// Orbits of I on simple-root positions, each sorted, ordered by least member.
    const std::vector<std::vector<int>>& simple_orbits() const { return simple_orbits_; }
    /// Orbits of I on all root indices.
    std::vector<std::vector<int>> root_orbits() const;

    bool fixes_character(std::span<const Int> chi) const;
    bool fixes_cocharacter(std::span<const Int> x) const;

    /// Sum over group elements of g(chi): an I-invariant character.
    IntVec character_orbit_sum(std::span<const Int> chi) const;
    IntVec cocharacter_orbit_sum(std::span<const Int> x) const;

private:
    void validate_and_close();

    std::string name_;
    std::shared_ptr<const BasedRootDatum> datum_;
    std::vector<IntMatrix> char_gens_, cochar_gens_, char_elems_, cochar_elems_;
    std::vector<std::vector<int>> simple_orbits_;
};

enum class LatticeSide { characters, cocharacters };

/// X_I = X / span{x - g x : g generator, x basis vector}, presented by Smith form.
class CoinvariantLattice {
public:
    CoinvariantLattice(const PinnedAction& action, LatticeSide side);

    LatticeSide side() const { return side_; }
    const LatticeQuotient& quotient() const { return quotient_; }
    int ambient_rank() const { return quotient_.ambient_rank(); }
    int free_rank() const { return quotient_.free_rank(); }
    const IntVec& torsion() const { return quotient_.torsion(); }
    const IntMatrix& relation_matrix() const { return quotient_.relations(); }

    LatticeClass project(std::span<const Int> x) const { return quotient_.project(x); }
    IntVec lift(const LatticeClass& c) const { return quotient_.lift(c); }

private:
    LatticeSide side_;
    LatticeQuotient quotient_;
};

CoinvariantLattice coinvariants(const PinnedAction& action, LatticeSide side);

/// <mu_bar, chi> for an I-invariant chi on the opposite side; throws
/// folding.not_invariant if chi is not fixed by every generator.
Int invariant_pairing(const PinnedAction& action, const CoinvariantLattice& co, const LatticeClass& mu_bar,
                      std::span<const Int> chi);

/// Finite abelian group presented by its invariant factors (all > 1).
struct FiniteAbelianGroup {
    IntVec invariant_factors;
    Int order() const;
};

/// Character group of pi_0(T^I): torsion of the character-side coinvariants.
FiniteAbelianGroup pi0_fixed_torus(const PinnedAction& action);

/// Based root datum of G^{I,0} on X^*(T)_I / torsion.
struct FoldedDatum {
    BasedRootDatum datum;
    CoinvariantLattice characters; // X^*(T)_I with its torsion
    /// orbit_map[k] = simple-root positions of the absolute datum folded to simple root k.
    std::vector<std::vector<int>> orbit_map;
    FiniteAbelianGroup component_group;
    /// Some orbit contains two non-orthogonal simple roots (the A_2n case):
    /// the restricted root system is nonreduced and the folded simple root is
    /// the restriction of a member, not of the orbit sum.
    bool nonreduced = false;
    /// Full (torsion-carrying) image of each folded simple root in X^*(T)_I.
    std::vector<LatticeClass> simple_root_classes;
};

/// Folds a pinned action. characteristic == 0 means characteristic zero; otherwise |I|
/// must be prime to it (folding.wild otherwise).
FoldedDatum fold(const PinnedAction& action, Int characteristic = 0);

/// Indices (in w0) of the Weyl group elements commuting with every generator of I.
std::vector<int> fixed_weyl_elements(const WeylGroup& w0, const PinnedAction& action);

} // namespace ramsat
