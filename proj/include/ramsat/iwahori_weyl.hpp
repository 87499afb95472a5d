#pragma once

// The Iwahori-Weyl group W = X_*(T)_I x| W_0 of a quasi-split group given by a
// based root datum with a pinned action of inertia, realized on the apartment
// (X_*(T)_I / torsion) (x) R.

#include "ramsat/folding.hpp"
#include "ramsat/lattice.hpp"
#include "ramsat/preset.hpp"
#include "ramsat/root_datum.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ramsat {

/// (translation class, relative finite Weyl element). Acts on the apartment by
/// v -> w.v + mu.
struct IwahoriWeylElement {
    LatticeClass translation;
    int finite = 0;

    friend bool operator==(const IwahoriWeylElement&, const IwahoriWeylElement&) = default;
    friend auto operator<=>(const IwahoriWeylElement&, const IwahoriWeylElement&) = default;
};

struct ElementHash {
    std::size_t operator()(const IwahoriWeylElement& g) const noexcept;
};

/// One wall direction of the apartment: walls are psi = k for k in Z.
struct WallDirection {
    IntVec psi_num; // psi(c) = psi_num . c / psi_den on free coordinates
    Int psi_den = 1;
    int reflection = 0;        // relative W_0 element fixing psi = 0
    LatticeClass coroot;       // e with r(v) = v - psi(v) e, full class
    std::vector<int> roots;    // positive absolute roots restricting to this direction
    int finite_simple = -1;    // relative simple index if psi = 0 bounds the base alcove
};

struct ReducedWord {
    int omega = 0;            // index into omega()
    std::vector<int> letters; // S_aff indices
};

enum class TableMode {
    validate, // every wall direction must be covered by the table and agree with the derivation
    derive    // ignore the table; record the derived strides
};

class IwahoriWeylGroup {
public:
    /// Throws iwahori_weyl.unbounded_alcove when the coinvariant lattice has central
    /// directions, iwahori_weyl.table_gap / table_mismatch for a bad echelonnage table.
    IwahoriWeylGroup(const BasedRootDatum& datum, const PinnedAction& action, const std::vector<EchelonEntry>& table,
                     TableMode mode = TableMode::validate);
    /// Group of a catalog preset with its declared (or the named) action and its table.
    static IwahoriWeylGroup from_preset(const PresetCatalog& catalog, const std::string& preset,
                                        const std::string& action_name = "");

    const std::string& name() const { return name_; }
    const BasedRootDatum& datum() const { return *datum_; }
    const PinnedAction& action() const { return *action_; }
    const LatticeQuotient& coinvariants() const { return coinv_; }
    int dimension() const { return coinv_.free_rank(); }
    /// One entry per positive absolute root with the stride of its wall family.
    const std::vector<EchelonEntry>& echelon_table() const { return table_; }

    // ---- relative finite Weyl group W_0 = (W_0^abs)^I ----
    int finite_order() const { return int(fin_abs_.size()); }
    int finite_rank() const { return int(fin_simple_.size()); }
    int finite_simple(int k) const { return fin_simple_[k]; }
    int finite_multiply(int a, int b) const { return fin_mult_[std::size_t(a) * finite_order() + b]; }
    int finite_inverse(int a) const { return fin_inv_[a]; }
    int finite_length(int a) const { return int(fin_word_[a].size()); }
    /// Lexicographically least reduced word in relative simple indices (0-based).
    const std::vector<int>& finite_word(int a) const { return fin_word_[a]; }
    int finite_from_word(const std::vector<int>& word) const;
    int finite_longest() const;
    /// Index of the element in the absolute Weyl group.
    int finite_absolute(int a) const { return fin_abs_[a]; }
    const WeylGroup& absolute_weyl() const { return *w_abs_; }
    LatticeClass finite_act(int w, const LatticeClass& c) const { return coinv_.apply(fin_induced_[w], c); }

    // ---- apartment ----
    const std::vector<WallDirection>& directions() const { return dirs_; }
    /// psi_d(c) for the free part of c.
    Rational psi(int d, const LatticeClass& c) const;
    /// <mu_bar, 2 rho_B> with the sum of positive absolute roots.
    Int pair_two_rho(const LatticeClass& c) const;
    bool is_dominant(const LatticeClass& c) const;
    /// The dominant member of W_0 . c and some w with w . c = dominant.
    std::pair<LatticeClass, int> dominant(const LatticeClass& c) const;
    std::vector<LatticeClass> finite_orbit(const LatticeClass& c) const;

    // ---- the group W ----
    IwahoriWeylElement identity() const { return {coinv_.zero(), 0}; }
    IwahoriWeylElement translation(const LatticeClass& mu) const { return {coinv_.normalize(mu), 0}; }
    IwahoriWeylElement finite(int w) const { return {coinv_.zero(), w}; }
    IwahoriWeylElement multiply(const IwahoriWeylElement& a, const IwahoriWeylElement& b) const;
    IwahoriWeylElement inverse(const IwahoriWeylElement& a) const;

    int num_simple() const { return int(s_aff_.size()); }
    const IwahoriWeylElement& simple(int i) const { return s_aff_[i]; }
    /// s_i * g and g * s_i.
    IwahoriWeylElement left(int i, const IwahoriWeylElement& g) const { return multiply(s_aff_[i], g); }
    IwahoriWeylElement right(const IwahoriWeylElement& g, int i) const { return multiply(g, s_aff_[i]); }

    /// Number of walls separating the base alcove from g(base alcove).
    int length(const IwahoriWeylElement& g) const;
    ReducedWord reduced_word(const IwahoriWeylElement& g) const;
    IwahoriWeylElement from_word(const ReducedWord& w) const;
    bool bruhat_leq(const IwahoriWeylElement& u, const IwahoriWeylElement& v) const;

    /// pi_1(G)_I = X_* / (relations + coroots).
    const LatticeQuotient& fundamental_group() const { return pi1_; }
    LatticeClass kottwitz(const IwahoriWeylElement& g) const;
    const std::vector<IwahoriWeylElement>& omega() const { return omega_; }
    int omega_index(const IwahoriWeylElement& g) const;

    /// Projection of an absolute cocharacter to X_*(T)_I.
    LatticeClass project(std::span<const Int> mu) const { return coinv_.project(mu); }

    /// Element syntax: products of factors joined by '*':
    ///   e | t[f1,f2,...|t1,...] | w[k1,k2,...] | s[i1,i2,...] | o[k]
    /// where w-words use 1-based relative simple indices, s-words S_aff indices
    /// and o[k] the k-th length-zero element.
    IwahoriWeylElement parse(const std::string& text) const;
    std::string format(const IwahoriWeylElement& g) const;
    std::string format_word(const ReducedWord& w) const;

    /// Generic alcove point (scaled by scale()) used by the length function.
    const IntVec& base_point() const { return base_point_; }
    Int scale() const { return scale_; }

private:
    void build_finite();
    void build_directions(const std::vector<EchelonEntry>& table, TableMode mode);
    void build_simple_affine();
    void build_omega();

    std::string name_;
    std::shared_ptr<const BasedRootDatum> datum_;
    std::shared_ptr<const PinnedAction> action_;
    std::shared_ptr<const WeylGroup> w_abs_;
    LatticeQuotient coinv_;
    LatticeQuotient pi1_;

    std::vector<int> fin_abs_, fin_simple_, fin_mult_, fin_inv_;
    std::vector<std::vector<int>> fin_word_;
    std::vector<IntMatrix> fin_induced_;
    std::map<int, int> abs_to_fin_;

    std::vector<WallDirection> dirs_;
    std::vector<EchelonEntry> table_;
    std::vector<IwahoriWeylElement> s_aff_;
    std::vector<IwahoriWeylElement> omega_;
    std::map<LatticeClass, int> omega_lookup_;

    IntVec base_point_;                // -(class of 2 rho^vee), free part
    Int scale_ = 1;                    // base point is base_point_ / scale_
    std::vector<IntVec> moved_points_; // M_w . base_point_
    IntVec two_rho_;
};

} // namespace ramsat
