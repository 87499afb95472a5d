#pragma once

// Standard facets of the base alcove, their parahoric subgroups W_J, coset
// representatives, admissible sets and the finite speciality checks.

#include "ramsat/iwahori_weyl.hpp"
#include "ramsat/kernels.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ramsat {

/// A face of the closure of the base alcove, named by the S_aff indices of its walls.
struct Facet {
    std::vector<int> J;                       // sorted S_aff indices
    std::vector<IwahoriWeylElement> elements; // W_J, sorted
    std::vector<int> finite_parts;            // W_{0,J} = pi(W_J), sorted
    bool special = false;
    // Directions d with r_d in W_{0,J}, and the sign making the local chamber
    // opposite the base alcove positive: the wall through the facet is psi_d = 0
    // (sign +1) or psi_d = -1 (sign -1).
    std::vector<std::pair<int, int>> local_roots;

    std::string label() const;
};

/// W_J by closure; throws facets_admissible.infinite_parahoric past |W_0| elements.
Facet make_facet(const IwahoriWeylGroup& g, std::vector<int> J);
/// All J with finite W_J, by size then lexicographically.
std::vector<Facet> enumerate_facets(const IwahoriWeylGroup& g);
/// Parses "" / "-" / "a" for the alcove, otherwise comma-separated S_aff indices.
std::vector<int> parse_facet(const std::string& text);

/// W_{0,J} = W_0.
bool is_special(const IwahoriWeylGroup& g, const Facet& f);
/// Independent check: every wall direction has a wall through the barycenter of the facet.
bool is_special_by_walls(const IwahoriWeylGroup& g, const Facet& f);
/// Vertices of the closed base alcove in free coordinates.
std::vector<RatVec> alcove_vertices(const IwahoriWeylGroup& g);

struct RestrictedRoot {
    int direction;
    int sign;             // +1: the positive root of R_J is the root of the direction, -1: its negative
    IntVec coefficients;  // simple-root coefficients of the positive root (sign applied)
};
/// R_J with its positive system, one entry per direction.
std::vector<RestrictedRoot> restricted_roots(const IwahoriWeylGroup& g, const Facet& f);

bool is_facet_dominant(const IwahoriWeylGroup& g, const Facet& f, const LatticeClass& c);
/// The unique J-dominant member of W_{0,J} . c.
LatticeClass facet_dominant_rep(const IwahoriWeylGroup& g, const Facet& f, const LatticeClass& c);
/// #{alpha in R_J^+ : <c, alpha> < 0}.
int count_negative_restricted(const IwahoriWeylGroup& g, const Facet& f, const LatticeClass& c);

/// Minimal-length element of x W_J (exhaustive, uniqueness asserted).
IwahoriWeylElement min_coset_rep(const IwahoriWeylGroup& g, const IwahoriWeylElement& x, const Facet& f);
/// Maximal-length element of {(a x b)^J : a, b in W_J} (exhaustive, uniqueness asserted).
IwahoriWeylElement max_double_coset_rep(const IwahoriWeylGroup& g, const IwahoriWeylElement& x, const Facet& f);
/// Same results by ascent and descent along J; used by the bulk kernels.
IwahoriWeylElement min_coset_rep_fast(const IwahoriWeylGroup& g, const IwahoriWeylElement& x, const Facet& f);
IwahoriWeylElement max_double_coset_rep_fast(const IwahoriWeylGroup& g, const IwahoriWeylElement& x, const Facet& f);

/// Lambda_mu for an absolute cocharacter: W_0 . (projection of the dominant member of W_0^abs mu).
std::vector<LatticeClass> lambda_mu(const IwahoriWeylGroup& g, std::span<const Int> mu);
/// Bruhat-maximal classes of project(W_0^abs mu), compared as translations.
std::vector<LatticeClass> projected_orbit_maxima(const IwahoriWeylGroup& g, std::span<const Int> mu,
                                                 ExecPolicy policy = ExecPolicy::parallel);

struct AdmissibleSet {
    LatticeClass mu_bar; // dominant class
    std::vector<int> J;
    std::vector<IwahoriWeylElement> elements; // sorted by (length, element)
    std::vector<IwahoriWeylElement> maximal;
};

/// Adm_mu for the alcove, from the dominant class mu_bar (Lambda = W_0 . mu_bar).
AdmissibleSet admissible_alcove(const IwahoriWeylGroup& g, const LatticeClass& mu_bar,
                                ExecPolicy policy = ExecPolicy::parallel, std::size_t cap = kDefaultCap);
/// Adm_mu^J from the alcove set.
AdmissibleSet admissible_relative(const IwahoriWeylGroup& g, const AdmissibleSet& alcove, const Facet& f,
                                  ExecPolicy policy = ExecPolicy::parallel);
AdmissibleSet admissible_set(const IwahoriWeylGroup& g, const LatticeClass& mu_bar, const Facet& f,
                             ExecPolicy policy = ExecPolicy::parallel, std::size_t cap = kDefaultCap);

/// {t^nu : nu in (W_0 . mu_bar)^{J-dom}}, sorted by (length, element).
std::vector<IwahoriWeylElement> expected_maxima(const IwahoriWeylGroup& g, const LatticeClass& mu_bar,
                                                const Facet& f);
/// |W_{0,J} \ W_0 / W_{0,mu_bar}|, counted as W_{0,J}-orbits on W_0 . mu_bar.
int double_coset_count(const IwahoriWeylGroup& g, const LatticeClass& mu_bar, const Facet& f);

struct SchubertStratum {
    IwahoriWeylElement element;
    int dimension;
    bool component;
};
std::vector<SchubertStratum> schubert_components(const IwahoriWeylGroup& g, const AdmissibleSet& adm);

struct ParityResult {
    bool ok = true;
    int bound = 0;
    std::size_t checked = 0;
    std::optional<std::pair<IwahoriWeylElement, IwahoriWeylElement>> witness;
};
/// Parity of lengths within each Kottwitz class over _J W^J up to length bound.
ParityResult parity_check(const IwahoriWeylGroup& g, const Facet& f, int bound,
                          ExecPolicy policy = ExecPolicy::parallel, std::size_t cap = kDefaultCap);

/// Dominant classes with <mu, 2 rho> <= max_pairing, plus 0 and a regular class of
/// minimal pairing; sorted by (pairing, class).
std::vector<LatticeClass> default_mu_samples(const IwahoriWeylGroup& g, Int max_pairing = 10);
/// Dominant classes with <mu, 2 rho> <= max_pairing, sorted by (pairing, class).
std::vector<LatticeClass> dominant_classes(const IwahoriWeylGroup& g, Int max_pairing);

struct FacetReport {
    Facet facet;
    ParityResult parity;
    bool unique_max = true;                  // over every sample
    std::optional<LatticeClass> multi_max_mu; // first sample with >= 2 maxima
    std::vector<int> max_counts;              // per sample
    bool agree = true;
};

struct TheoremBReport {
    std::string group;
    int bound = 0;
    std::vector<LatticeClass> samples;
    std::vector<FacetReport> rows;
    bool all_agree() const;
};

TheoremBReport theorem_b_report(const IwahoriWeylGroup& g, const std::vector<LatticeClass>& samples, int bound = -1,
                                ExecPolicy policy = ExecPolicy::parallel, std::size_t cap = kDefaultCap);

} // namespace ramsat
