#pragma once

#include "ramsat/lattice.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ramsat {

/// A based root datum (X^*, R, Delta, X_*, R^vee, Delta^vee) in fixed integer
/// coordinates. Characters and cocharacters are both vectors in Z^rank and the
/// pairing is the dot product. Immutable after construction.
class BasedRootDatum {
public:
    /// Builds the full datum from simple roots and simple coroots: the root set is
    /// the Weyl closure of the simple roots. Throws root_datum.invalid if any
    /// invariant of a based root datum fails.
    static BasedRootDatum from_simple(std::string name, int rank, std::vector<IntVec> simple_roots,
                                      std::vector<IntVec> simple_coroots);

    const std::string& name() const { return name_; }
    int rank() const { return rank_; }
    int semisimple_rank() const { return int(simple_.size()); }
    std::size_t num_roots() const { return roots_.size(); }

    const IntVec& root(int i) const { return roots_[i]; }
    const IntVec& coroot(int i) const { return coroots_[i]; }
    const std::vector<IntVec>& roots() const { return roots_; }
    const std::vector<IntVec>& coroots() const { return coroots_; }
    /// Root indices of the simple roots, in the order they were declared.
    const std::vector<int>& simple_indices() const { return simple_; }
    const IntVec& simple_root(int k) const { return roots_[simple_[k]]; }
    const IntVec& simple_coroot(int k) const { return coroots_[simple_[k]]; }
    bool is_positive(int i) const { return positive_[i]; }
    std::vector<int> positive_indices() const;
    /// Coefficients of root i in the simple roots.
    const IntVec& root_coefficients(int i) const { return coefficients_[i]; }
    std::optional<int> root_index(const IntVec& character) const;
    std::optional<int> coroot_index(const IntVec& cocharacter) const;

    /// Cartan matrix C(i,j) = <alpha_i^vee, alpha_j> on simple roots.
    const IntMatrix& cartan() const { return cartan_; }

    /// s_a on cocharacters: x - <x, a> a^vee.
    IntVec reflect_cocharacter(int root, std::span<const Int> x) const;
    /// s_a on characters: chi - <a^vee, chi> a.
    IntVec reflect_character(int root, std::span<const Int> chi) const;
    /// Matrices of simple reflections on cocharacter / character coordinates.
    IntMatrix simple_reflection_cocharacter(int k) const;
    IntMatrix simple_reflection_character(int k) const;

    bool is_dominant_cocharacter(std::span<const Int> mu) const;
    bool is_dominant_character(std::span<const Int> chi) const;

    /// Sum of positive roots (a character).
    IntVec two_rho() const;
    /// Sum of positive coroots (a cocharacter).
    IntVec two_rho_vee() const;

    /// Expresses chi as an integer combination of simple roots, if possible.
    std::optional<IntVec> simple_root_coordinates(std::span<const Int> chi) const;

    /// The datum with roots and coroots exchanged (same simple order).
    BasedRootDatum dual(std::string name) const;

private:
    std::string name_;
    int rank_ = 0;
    std::vector<IntVec> roots_, coroots_;
    std::vector<int> simple_;
    std::vector<char> positive_;
    std::vector<IntVec> coefficients_;
    IntMatrix cartan_;
    std::map<IntVec, int> root_lookup_, coroot_lookup_;
};

/// An element of the finite Weyl group: lexicographically least reduced word in
/// simple-reflection positions (0-based) plus its matrices.
struct WeylGroupElement {
    std::vector<int> word;
    IntMatrix cocharacter_matrix;
    IntMatrix character_matrix;
    int length() const { return int(word.size()); }
};

/// The finite Weyl group W_0 of a based root datum, enumerated exhaustively.
class WeylGroup {
public:
    explicit WeylGroup(const BasedRootDatum& datum, std::size_t cap = 100000);

    const BasedRootDatum& datum() const { return *datum_; }
    std::size_t order() const { return elements_.size(); }
    const WeylGroupElement& element(int i) const { return elements_[i]; }
    const std::vector<WeylGroupElement>& elements() const { return elements_; }
    int identity() const { return 0; }
    int longest() const { return longest_; }
    int simple(int k) const { return simple_[k]; }

    int multiply(int a, int b) const { return mult_[std::size_t(a) * order() + b]; }
    int inverse(int a) const { return inverse_[a]; }
    std::optional<int> index_of_cocharacter_matrix(const IntMatrix& m) const;
    int from_word(std::span<const int> word) const;

    /// Number of positive roots sent to negative roots.
    int inversion_count(int w) const;

    IntVec act_cocharacter(int w, std::span<const Int> x) const { return elements_[w].cocharacter_matrix.apply(x); }
    IntVec act_character(int w, std::span<const Int> x) const { return elements_[w].character_matrix.apply(x); }

    /// The dominant cocharacter mu+ in W_0 mu together with w such that w mu = mu+.
    std::pair<IntVec, int> dominant_representative(std::span<const Int> mu) const;
    std::pair<IntVec, int> dominant_representative_character(std::span<const Int> chi) const;
    /// Sorted W_0-orbit of a cocharacter.
    std::vector<IntVec> orbit(std::span<const Int> mu) const;
    std::vector<IntVec> orbit_character(std::span<const Int> chi) const;

    /// Stabilizer of mu: generators (standard parabolic, conjugated when mu is not dominant)
    /// and the full element set.
    struct Subgroup {
        std::vector<int> generators;
        std::vector<int> elements;
    };
    Subgroup stabilizer(std::span<const Int> mu) const;
    /// Subgroup generated by the given elements.
    std::vector<int> generated_subgroup(std::span<const int> gens) const;

private:
    std::shared_ptr<const BasedRootDatum> datum_;
    std::vector<WeylGroupElement> elements_;
    std::vector<int> mult_, inverse_, simple_;
    std::map<IntMatrix, int> lookup_;
    int longest_ = 0;
};

} // namespace ramsat
