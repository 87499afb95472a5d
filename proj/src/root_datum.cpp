#include "ramsat/root_datum.hpp"

#include "ramsat/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ramsat {

namespace {

constexpr std::size_t kMaxRoots = 4096;

[[noreturn]] void invalid(const std::string& name, const std::string& what) {
    fail("root_datum.invalid", name + ": " + what);
}

} // namespace

BasedRootDatum BasedRootDatum::from_simple(std::string name, int rank, std::vector<IntVec> simple_roots,
                                           std::vector<IntVec> simple_coroots) {
    BasedRootDatum d;
    d.name_ = std::move(name);
    d.rank_ = rank;
    if (rank < 0 || (rank == 0 && !simple_roots.empty())) invalid(d.name_, "rank must be positive");
    if (simple_roots.size() != simple_coroots.size()) invalid(d.name_, "simple roots and coroots differ in number");
    const int l = int(simple_roots.size());
    for (int k = 0; k < l; ++k)
        if (int(simple_roots[k].size()) != rank || int(simple_coroots[k].size()) != rank)
            invalid(d.name_, "simple root or coroot of wrong dimension");

    d.cartan_ = IntMatrix(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) d.cartan_(i, j) = dot(simple_coroots[i], simple_roots[j]);
    for (int i = 0; i < l; ++i) {
        if (d.cartan_(i, i) != 2) invalid(d.name_, "<a^vee, a> != 2 for a simple root");
        for (int j = 0; j < l; ++j) {
            if (i == j) continue;
            if (d.cartan_(i, j) > 0) invalid(d.name_, "positive off-diagonal Cartan entry");
            if ((d.cartan_(i, j) == 0) != (d.cartan_(j, i) == 0)) invalid(d.name_, "asymmetric Cartan zero pattern");
        }
    }
    if (l > 0 && determinant(d.cartan_) <= 0) invalid(d.name_, "Cartan matrix is not of finite type");

    // Weyl closure of the simple (root, coroot) pairs.
    std::map<IntVec, IntVec> pairs;
    std::deque<std::pair<IntVec, IntVec>> queue;
    for (int k = 0; k < l; ++k) {
        if (pairs.emplace(simple_roots[k], simple_coroots[k]).second) queue.emplace_back(simple_roots[k], simple_coroots[k]);
        else invalid(d.name_, "repeated simple root");
    }
    while (!queue.empty()) {
        auto [a, av] = queue.front();
        queue.pop_front();
        for (int k = 0; k < l; ++k) {
            IntVec b = sub(a, scale(simple_roots[k], dot(simple_coroots[k], a)));
            IntVec bv = sub(av, scale(simple_coroots[k], dot(av, simple_roots[k])));
            auto [it, inserted] = pairs.emplace(b, bv);
            if (inserted) {
                if (pairs.size() > kMaxRoots) invalid(d.name_, "root system is not finite");
                queue.emplace_back(std::move(b), std::move(bv));
            } else if (it->second != bv) {
                invalid(d.name_, "coroot bijection is not well defined");
            }
        }
    }

    for (auto& [a, av] : pairs) {
        d.roots_.push_back(a);
        d.coroots_.push_back(av);
    }
    const int n = int(d.roots_.size());
    for (int i = 0; i < n; ++i) {
        d.root_lookup_[d.roots_[i]] = i;
        if (!d.coroot_lookup_.emplace(d.coroots_[i], i).second) invalid(d.name_, "coroot map is not injective");
    }
    for (int k = 0; k < l; ++k) d.simple_.push_back(d.root_lookup_.at(simple_roots[k]));

    d.positive_.assign(n, 0);
    d.coefficients_.resize(n);
    for (int i = 0; i < n; ++i) {
        if (dot(d.coroots_[i], d.roots_[i]) != 2) invalid(d.name_, "<a^vee, a> != 2");
        auto c = d.simple_root_coordinates(d.roots_[i]);
        if (!c) invalid(d.name_, "root outside the simple-root lattice");
        bool nonneg = std::all_of(c->begin(), c->end(), [](Int x) { return x >= 0; });
        bool nonpos = std::all_of(c->begin(), c->end(), [](Int x) { return x <= 0; });
        if (nonneg == nonpos) invalid(d.name_, "root with mixed-sign simple coefficients");
        d.positive_[i] = nonneg;
        d.coefficients_[i] = std::move(*c);
    }
    const auto inv = inverse(to_rational(d.cartan_.transpose()));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (!d.root_lookup_.count(d.reflect_character(i, d.roots_[j])))
                invalid(d.name_, "reflection does not permute the roots");
        // positivity of coroots, measured in simple coroots
        IntVec b(l);
        for (int k = 0; k < l; ++k) b[k] = dot(d.coroots_[i], simple_roots[k]);
        // coroot coefficients c satisfy <a^vee, alpha_k> = sum_m c_m C(m, k)
        bool pos = true;
        for (int k = 0; k < l; ++k) {
            Rational s = 0;
            for (int m = 0; m < l; ++m) s += (*inv)[k][m] * b[m];
            if (s < 0) pos = false;
        }
        if (pos != bool(d.positive_[i])) invalid(d.name_, "coroot bijection does not preserve positivity");
    }
    return d;
}

std::vector<int> BasedRootDatum::positive_indices() const {
    std::vector<int> out;
    for (int i = 0; i < int(roots_.size()); ++i)
        if (positive_[i]) out.push_back(i);
    return out;
}

std::optional<int> BasedRootDatum::root_index(const IntVec& chi) const {
    auto it = root_lookup_.find(chi);
    if (it == root_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> BasedRootDatum::coroot_index(const IntVec& x) const {
    auto it = coroot_lookup_.find(x);
    if (it == coroot_lookup_.end()) return std::nullopt;
    return it->second;
}

IntVec BasedRootDatum::reflect_cocharacter(int a, std::span<const Int> x) const {
    return sub(x, scale(coroots_[a], dot(x, roots_[a])));
}

IntVec BasedRootDatum::reflect_character(int a, std::span<const Int> chi) const {
    return sub(chi, scale(roots_[a], dot(coroots_[a], chi)));
}

IntMatrix BasedRootDatum::simple_reflection_cocharacter(int k) const {
    IntMatrix m(rank_, rank_);
    for (int j = 0; j < rank_; ++j) {
        IntVec e(rank_, 0);
        e[j] = 1;
        IntVec img = reflect_cocharacter(simple_[k], e);
        for (int i = 0; i < rank_; ++i) m(i, j) = img[i];
    }
    return m;
}

IntMatrix BasedRootDatum::simple_reflection_character(int k) const {
    IntMatrix m(rank_, rank_);
    for (int j = 0; j < rank_; ++j) {
        IntVec e(rank_, 0);
        e[j] = 1;
        IntVec img = reflect_character(simple_[k], e);
        for (int i = 0; i < rank_; ++i) m(i, j) = img[i];
    }
    return m;
}

bool BasedRootDatum::is_dominant_cocharacter(std::span<const Int> mu) const {
    for (int s : simple_)
        if (dot(mu, roots_[s]) < 0) return false;
    return true;
}

bool BasedRootDatum::is_dominant_character(std::span<const Int> chi) const {
    for (int s : simple_)
        if (dot(coroots_[s], chi) < 0) return false;
    return true;
}

IntVec BasedRootDatum::two_rho() const {
    IntVec s(rank_, 0);
    for (int i = 0; i < int(roots_.size()); ++i)
        if (positive_[i]) s = add(s, roots_[i]);
    return s;
}

IntVec BasedRootDatum::two_rho_vee() const {
    IntVec s(rank_, 0);
    for (int i = 0; i < int(roots_.size()); ++i)
        if (positive_[i]) s = add(s, coroots_[i]);
    return s;
}

std::optional<IntVec> BasedRootDatum::simple_root_coordinates(std::span<const Int> chi) const {
    const int l = semisimple_rank();
    if (l == 0) return is_zero(chi) ? std::optional<IntVec>(IntVec{}) : std::nullopt;
    RatVec b(l);
    for (int k = 0; k < l; ++k) b[k] = dot(coroots_[simple_[k]], chi);
    auto x = solve(to_rational(cartan_), b);
    if (!x) return std::nullopt;
    IntVec out(l);
    IntVec recon(rank_, 0);
    for (int k = 0; k < l; ++k) {
        if ((*x)[k].denominator() != 1) return std::nullopt;
        out[k] = (*x)[k].numerator();
        recon = add(recon, scale(roots_[simple_[k]], out[k]));
    }
    if (recon != IntVec(chi.begin(), chi.end())) return std::nullopt;
    return out;
}

BasedRootDatum BasedRootDatum::dual(std::string name) const {
    std::vector<IntVec> sr, sc;
    for (int s : simple_) {
        sr.push_back(coroots_[s]);
        sc.push_back(roots_[s]);
    }
    return from_simple(std::move(name), rank_, sr, sc);
}

// ---------------- WeylGroup ----------------

WeylGroup::WeylGroup(const BasedRootDatum& datum, std::size_t cap)
    : datum_(std::make_shared<const BasedRootDatum>(datum)) {
    const int l = datum.semisimple_rank();
    const int n = datum.rank();
    std::vector<IntMatrix> gens;
    for (int k = 0; k < l; ++k) gens.push_back(datum.simple_reflection_cocharacter(k));

    std::vector<IntMatrix> mats{IntMatrix::identity(n)};
    std::vector<int> len{0};
    lookup_[mats[0]] = 0;
    for (std::size_t head = 0; head < mats.size(); ++head) {
        for (int k = 0; k < l; ++k) {
            IntMatrix m = gens[k] * mats[head];
            if (lookup_.count(m)) continue;
            if (mats.size() >= cap) fail("root_datum.too_large", "Weyl group exceeds enumeration cap");
            lookup_[m] = int(mats.size());
            mats.push_back(m);
            len.push_back(len[head] + 1);
        }
    }
    const int order = int(mats.size());
    elements_.resize(order);
    mult_.resize(std::size_t(order) * order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) mult_[std::size_t(a) * order + b] = lookup_.at(mats[a] * mats[b]);
    inverse_.resize(order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if (mult_[std::size_t(a) * order + b] == 0) inverse_[a] = b;
    for (int k = 0; k < l; ++k) simple_.push_back(lookup_.at(gens[k]));

    // lexicographically least reduced words: least left descent first
    std::vector<int> by_len(order);
    for (int i = 0; i < order; ++i) by_len[i] = i;
    std::stable_sort(by_len.begin(), by_len.end(), [&](int a, int b) { return len[a] < len[b]; });
    for (int w : by_len) {
        elements_[w].cocharacter_matrix = mats[w];
        if (len[w] == 0) continue;
        for (int k = 0; k < l; ++k) {
            int v = mult_[std::size_t(simple_[k]) * order + w];
            if (len[v] < len[w]) {
                elements_[w].word.push_back(k);
                elements_[w].word.insert(elements_[w].word.end(), elements_[v].word.begin(), elements_[v].word.end());
                break;
            }
        }
    }
    for (int w = 0; w < order; ++w) {
        IntMatrix c = IntMatrix::identity(n);
        for (int k : elements_[w].word) c = c * datum.simple_reflection_character(k);
        elements_[w].character_matrix = c;
        if (len[w] > len[longest_]) longest_ = w;
    }
}

std::optional<int> WeylGroup::index_of_cocharacter_matrix(const IntMatrix& m) const {
    auto it = lookup_.find(m);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

int WeylGroup::from_word(std::span<const int> word) const {
    int w = identity();
    for (int k : word) {
        if (k < 0 || k >= int(simple_.size())) fail("root_datum.bad_word", "simple reflection index out of range");
        w = multiply(w, simple_[k]);
    }
    return w;
}

int WeylGroup::inversion_count(int w) const {
    int c = 0;
    for (int i : datum_->positive_indices()) {
        IntVec img = act_character(w, datum_->root(i));
        auto j = datum_->root_index(img);
        check_invariant(j.has_value(), "root_datum.internal", "Weyl element does not permute roots");
        if (!datum_->is_positive(*j)) ++c;
    }
    return c;
}

std::pair<IntVec, int> WeylGroup::dominant_representative(std::span<const Int> mu) const {
    IntVec x(mu.begin(), mu.end());
    int w = identity();
    const int l = datum_->semisimple_rank();
    for (bool moved = true; moved;) {
        moved = false;
        for (int k = 0; k < l; ++k)
            if (dot(x, datum_->simple_root(k)) < 0) {
                x = datum_->reflect_cocharacter(datum_->simple_indices()[k], x);
                w = multiply(simple_[k], w);
                moved = true;
                break;
            }
    }
    return {x, w};
}

std::pair<IntVec, int> WeylGroup::dominant_representative_character(std::span<const Int> chi) const {
    IntVec x(chi.begin(), chi.end());
    int w = identity();
    const int l = datum_->semisimple_rank();
    for (bool moved = true; moved;) {
        moved = false;
        for (int k = 0; k < l; ++k)
            if (dot(datum_->simple_coroot(k), x) < 0) {
                x = datum_->reflect_character(datum_->simple_indices()[k], x);
                w = multiply(simple_[k], w);
                moved = true;
                break;
            }
    }
    return {x, w};
}

std::vector<IntVec> WeylGroup::orbit(std::span<const Int> mu) const {
    std::set<IntVec> s;
    for (const auto& e : elements_) s.insert(e.cocharacter_matrix.apply(mu));
    return {s.begin(), s.end()};
}

std::vector<IntVec> WeylGroup::orbit_character(std::span<const Int> chi) const {
    std::set<IntVec> s;
    for (const auto& e : elements_) s.insert(e.character_matrix.apply(chi));
    return {s.begin(), s.end()};
}

std::vector<int> WeylGroup::generated_subgroup(std::span<const int> gens) const {
    std::set<int> seen{identity()};
    std::vector<int> order{identity()};
    for (std::size_t h = 0; h < order.size(); ++h)
        for (int g : gens) {
            int x = multiply(order[h], g);
            if (seen.insert(x).second) order.push_back(x);
        }
    return {seen.begin(), seen.end()};
}

WeylGroup::Subgroup WeylGroup::stabilizer(std::span<const Int> mu) const {
    auto [dom, w] = dominant_representative(mu);
    Subgroup s;
    const int winv = inverse(w);
    for (int k = 0; k < datum_->semisimple_rank(); ++k)
        if (dot(dom, datum_->simple_root(k)) == 0) s.generators.push_back(multiply(winv, multiply(simple_[k], w)));
    s.elements = generated_subgroup(s.generators);
    return s;
}

} // namespace ramsat
