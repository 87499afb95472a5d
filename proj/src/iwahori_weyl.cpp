#include "ramsat/iwahori_weyl.hpp"

#include "ramsat/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace ramsat {

std::size_t ElementHash::operator()(const IwahoriWeylElement& g) const noexcept {
    std::size_t h = std::hash<int>{}(g.finite);
    auto mix = [&h](Int x) { h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (Int x : g.translation.free) mix(x);
    for (Int x : g.translation.tors) mix(x);
    return h;
}

namespace {

IntMatrix free_block(const IntMatrix& m, int n) {
    IntMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = m(i, j);
    return out;
}

bool proportional(std::span<const Int> a, std::span<const Int> b) {
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[j] * b[k] != a[k] * b[j]) return false;
    return true;
}

std::string join(std::span<const Int> v, int offset = 0) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i] + offset);
    }
    return s;
}

[[noreturn]] void bad_element(const std::string& text, const std::string& why) {
    throw ParseError("iwahori_weyl.bad_element", "cannot parse element '" + text + "': " + why);
}

IntVec parse_list(const std::string& body, const std::string& text) {
    IntVec out;
    std::string tok;
    std::istringstream is(body);
    while (std::getline(is, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) bad_element(text, "empty entry");
        try {
            std::size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) bad_element(text, "'" + tok + "' is not an integer");
            out.push_back(v);
        } catch (const std::logic_error&) {
            bad_element(text, "'" + tok + "' is not an integer");
        }
    }
    return out;
}

} // namespace

IwahoriWeylGroup::IwahoriWeylGroup(const BasedRootDatum& datum, const PinnedAction& action,
                                   const std::vector<EchelonEntry>& table, TableMode mode)
    : name_(datum.name()), datum_(action.datum_ptr()), action_(std::make_shared<const PinnedAction>(action)) {
    check_invariant(datum.name() == action.datum().name() && datum.rank() == action.datum().rank(),
                    "iwahori_weyl.internal", "action belongs to a different datum");
    coinv_ = ramsat::coinvariants(action, LatticeSide::cocharacters).quotient();
    two_rho_ = datum_->two_rho();
    check_invariant(action_->fixes_character(two_rho_), "iwahori_weyl.internal", "2 rho is not I-invariant");
    if (coinv_.free_rank() != int(action_->simple_orbits().size()))
        fail("iwahori_weyl.unbounded_alcove",
             name_ + ": X_*(T)_I has rank " + std::to_string(coinv_.free_rank()) + " but there are " +
                 std::to_string(action_->simple_orbits().size()) +
                 " relative simple roots; central directions give no walls");
    build_finite();
    build_directions(table, mode);
    build_simple_affine();
    build_omega();
}

IwahoriWeylGroup IwahoriWeylGroup::from_preset(const PresetCatalog& catalog, const std::string& preset,
                                               const std::string& action_name) {
    const PresetManifest& m = catalog.manifest(preset);
    BasedRootDatum d = catalog.datum(preset);
    const bool declared = action_name.empty() || (m.action_name && *m.action_name == action_name) ||
                          (m.kind == "split" && action_name == "trivial");
    PinnedAction a = action_name.empty() ? catalog.default_action(preset) : catalog.action(preset, action_name);
    std::vector<EchelonEntry> table = declared ? catalog.echelon_table(preset) : std::vector<EchelonEntry>{};
    IwahoriWeylGroup g(d, a, table);
    g.name_ = m.name;
    return g;
}

// ---------------- relative finite Weyl group ----------------

void IwahoriWeylGroup::build_finite() {
    w_abs_ = std::make_shared<const WeylGroup>(*datum_);
    const WeylGroup& w = *w_abs_;
    fin_abs_ = fixed_weyl_elements(w, *action_);
    for (int i = 0; i < int(fin_abs_.size()); ++i) abs_to_fin_[fin_abs_[i]] = i;
    const int m = int(fin_abs_.size());
    fin_mult_.resize(std::size_t(m) * m);
    fin_inv_.resize(m);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            auto it = abs_to_fin_.find(w.multiply(fin_abs_[a], fin_abs_[b]));
            check_invariant(it != abs_to_fin_.end(), "iwahori_weyl.internal", "fixed Weyl elements are not closed");
            fin_mult_[std::size_t(a) * m + b] = it->second;
        }
        fin_inv_[a] = abs_to_fin_.at(w.inverse(fin_abs_[a]));
    }
    for (const auto& orbit : action_->simple_orbits()) {
        std::vector<int> gens;
        for (int k : orbit) gens.push_back(w.simple(k));
        int longest = 0;
        for (int x : w.generated_subgroup(gens))
            if (w.element(x).length() > w.element(longest).length()) longest = x;
        auto it = abs_to_fin_.find(longest);
        check_invariant(it != abs_to_fin_.end(), "iwahori_weyl.internal", "orbit longest element is not I-fixed");
        fin_simple_.push_back(it->second);
    }

    // lengths by breadth-first search, then lex-least words via least left descents
    std::vector<int> len(m, -1), order{0};
    len[0] = 0;
    for (std::size_t h = 0; h < order.size(); ++h)
        for (int s : fin_simple_) {
            int x = finite_multiply(s, order[h]);
            if (len[x] < 0) {
                len[x] = len[order[h]] + 1;
                order.push_back(x);
            }
        }
    check_invariant(int(order.size()) == m, "iwahori_weyl.internal", "relative simple reflections do not generate W_0^I");
    fin_word_.assign(m, {});
    for (int x : order) {
        if (len[x] == 0) continue;
        for (int k = 0; k < finite_rank(); ++k) {
            int y = finite_multiply(fin_simple_[k], x);
            if (len[y] == len[x] - 1) {
                fin_word_[x] = {k};
                fin_word_[x].insert(fin_word_[x].end(), fin_word_[y].begin(), fin_word_[y].end());
                break;
            }
        }
    }
    for (int a = 0; a < m; ++a) fin_induced_.push_back(coinv_.induced(w.element(fin_abs_[a]).cocharacter_matrix));
}

int IwahoriWeylGroup::finite_from_word(const std::vector<int>& word) const {
    int x = 0;
    for (int k : word) {
        if (k < 0 || k >= finite_rank()) fail("iwahori_weyl.bad_index", "relative simple index out of range");
        x = finite_multiply(x, fin_simple_[k]);
    }
    return x;
}

int IwahoriWeylGroup::finite_longest() const {
    int best = 0;
    for (int a = 0; a < finite_order(); ++a)
        if (finite_length(a) > finite_length(best)) best = a;
    return best;
}

// ---------------- walls ----------------

void IwahoriWeylGroup::build_directions(const std::vector<EchelonEntry>& table, TableMode mode) {
    const BasedRootDatum& d = *datum_;
    const int n = coinv_.free_rank();
    const IntMatrix lifts = coinv_.free_lifts();
    const Int order = Int(action_->order());
    const auto& orbits = action_->simple_orbits();
    std::vector<int> orbit_of(d.semisimple_rank());
    for (int o = 0; o < int(orbits.size()); ++o)
        for (int k : orbits[o]) orbit_of[k] = o;
    const BasedRootDatum dual = d.dual(d.name() + "^vee");

    // restricted functional of every positive root on free coordinates
    std::map<int, RatVec> phi;
    std::map<IntVec, int> by_primitive;
    for (int i : d.positive_indices()) {
        IntVec chi = action_->character_orbit_sum(d.root(i));
        RatVec f(n);
        for (int j = 0; j < n; ++j) f[j] = Rational(dot(chi, lifts.col(j)), order);
        IntVec prim = primitive_integer(f);
        check_invariant(!is_zero(prim), "iwahori_weyl.internal", "a root restricts to zero");
        phi[i] = f;
        auto [it, fresh] = by_primitive.emplace(prim, int(dirs_.size()));
        if (fresh) dirs_.emplace_back();
        dirs_[it->second].roots.push_back(i);
    }

    for (auto& [prim, di] : by_primitive) {
        WallDirection& dir = dirs_[di];
        // the reflection of W_0 with this wall direction
        int refl = -1;
        const IntMatrix id = IntMatrix::identity(n);
        for (int w = 1; w < finite_order(); ++w) {
            IntMatrix mw = free_block(fin_induced_[w], n);
            if (!(mw * mw == id)) continue;
            bool ok = false, all = true;
            for (int r = 0; r < n && all; ++r) {
                IntVec row(n);
                for (int c = 0; c < n; ++c) row[c] = id(r, c) - mw(r, c);
                if (is_zero(row)) continue;
                ok = true;
                all = proportional(row, prim);
            }
            if (ok && all) {
                check_invariant(refl < 0, "iwahori_weyl.internal", "two reflections share a wall direction");
                refl = w;
            }
        }
        check_invariant(refl >= 0, "iwahori_weyl.internal", "no reflection for a restricted root direction");
        dir.reflection = refl;

        // -1 eigenvector of the reflection on the coinvariants of the coroot lattice
        const int no = int(orbits.size());
        RatMatrix rplus(no, RatVec(no, 0));
        for (int o = 0; o < no; ++o) {
            IntVec img = w_abs_->act_cocharacter(fin_abs_[refl], d.simple_coroot(orbits[o].front()));
            auto coords = dual.simple_root_coordinates(img);
            check_invariant(coords.has_value(), "iwahori_weyl.internal", "coroot image outside the coroot lattice");
            for (int k = 0; k < d.semisimple_rank(); ++k) rplus[orbit_of[k]][o] += (*coords)[k];
            rplus[o][o] += 1;
        }
        auto ker = nullspace(rplus, no);
        check_invariant(ker.size() == 1, "iwahori_weyl.internal", "reflection has a -1 eigenspace of dimension != 1");
        IntVec e_orb = primitive_integer(ker[0]);
        LatticeClass e = coinv_.zero();
        for (int o = 0; o < no; ++o)
            e = coinv_.add(e, coinv_.scale(coinv_.project(d.simple_coroot(orbits[o].front())), e_orb[o]));
        const RatVec& f = phi[dir.roots.front()];
        Rational fe = 0;
        for (int j = 0; j < n; ++j) fe += f[j] * e.free[j];
        check_invariant(fe != 0, "iwahori_weyl.internal", "coroot direction is orthogonal to its root");
        if (fe < 0) {
            e = coinv_.negate(e);
            fe = -fe;
        }
        dir.coroot = e;
        RatVec psi(n);
        for (int j = 0; j < n; ++j) psi[j] = 2 * f[j] / fe;
        dir.psi_den = lcm_of_denominators(psi);
        for (int j = 0; j < n; ++j) dir.psi_num.push_back((psi[j] * dir.psi_den).numerator());

        // the reflection is v -> v - psi(v) e on free coordinates
        IntMatrix mw = free_block(fin_induced_[refl], n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                check_invariant(Rational(mw(i, j)) == Rational(i == j ? 1 : 0) - psi[j] * e.free[i],
                                "iwahori_weyl.internal", "reflection is not v - psi(v) e");
        check_invariant(finite_act(refl, e) == coinv_.negate(e), "iwahori_weyl.internal", "reflection does not negate e");
    }

    // strides implied by the derivation, one per positive absolute root
    std::map<int, Rational> derived;
    for (int di = 0; di < int(dirs_.size()); ++di)
        for (int i : dirs_[di].roots) {
            const RatVec& f = phi[i];
            for (int j = 0; j < n; ++j)
                if (dirs_[di].psi_num[j] != 0) {
                    derived[i] = f[j] / Rational(dirs_[di].psi_num[j], dirs_[di].psi_den);
                    break;
                }
        }
    for (const auto& [i, s] : derived) table_.push_back(EchelonEntry{d.root_coefficients(i), s});
    if (mode == TableMode::derive) return;

    std::vector<char> covered(dirs_.size(), 0);
    for (const auto& entry : table) {
        int found = -1;
        for (int i : d.positive_indices())
            if (d.root_coefficients(i) == entry.root_coefficients) found = i;
        if (found < 0)
            fail("iwahori_weyl.table_mismatch",
                 name_ + ": echelon entry " + to_string(entry.root_coefficients) + " is not a positive root");
        if (derived.at(found) != entry.stride) {
            std::ostringstream os;
            os << name_ << ": echelon entry " << to_string(entry.root_coefficients) << " has stride " << entry.stride
               << " but the affine Weyl group has walls at stride " << derived.at(found);
            fail("iwahori_weyl.table_mismatch", os.str());
        }
        for (int di = 0; di < int(dirs_.size()); ++di)
            if (std::find(dirs_[di].roots.begin(), dirs_[di].roots.end(), found) != dirs_[di].roots.end())
                covered[di] = 1;
    }
    for (int di = 0; di < int(dirs_.size()); ++di)
        if (!covered[di])
            fail("iwahori_weyl.table_gap", name_ + ": no echelonnage entry for the direction of root " +
                                               to_string(d.root_coefficients(dirs_[di].roots.front())));
}

Rational IwahoriWeylGroup::psi(int d, const LatticeClass& c) const {
    return Rational(dot(dirs_[d].psi_num, c.free), dirs_[d].psi_den);
}

Int IwahoriWeylGroup::pair_two_rho(const LatticeClass& c) const { return dot(coinv_.lift(c), two_rho_); }

bool IwahoriWeylGroup::is_dominant(const LatticeClass& c) const {
    for (int d = 0; d < int(dirs_.size()); ++d)
        if (dot(dirs_[d].psi_num, c.free) < 0) return false;
    return true;
}

std::pair<LatticeClass, int> IwahoriWeylGroup::dominant(const LatticeClass& c) const {
    std::optional<std::pair<LatticeClass, int>> found;
    for (int w = 0; w < finite_order(); ++w) {
        LatticeClass x = finite_act(w, c);
        if (!is_dominant(x)) continue;
        if (!found)
            found.emplace(x, w);
        else
            check_invariant(found->first == x, "iwahori_weyl.internal", "two dominant classes in one W_0-orbit");
    }
    check_invariant(found.has_value(), "iwahori_weyl.internal", "no dominant class in a W_0-orbit");
    return *found;
}

std::vector<LatticeClass> IwahoriWeylGroup::finite_orbit(const LatticeClass& c) const {
    std::set<LatticeClass> s;
    for (int w = 0; w < finite_order(); ++w) s.insert(finite_act(w, c));
    return {s.begin(), s.end()};
}

// ---------------- group law and length ----------------

IwahoriWeylElement IwahoriWeylGroup::multiply(const IwahoriWeylElement& a, const IwahoriWeylElement& b) const {
    return {coinv_.add(a.translation, finite_act(a.finite, b.translation)), finite_multiply(a.finite, b.finite)};
}

IwahoriWeylElement IwahoriWeylGroup::inverse(const IwahoriWeylElement& a) const {
    const int winv = finite_inverse(a.finite);
    return {coinv_.negate(finite_act(winv, a.translation)), winv};
}

int IwahoriWeylGroup::length(const IwahoriWeylElement& g) const {
    const IntVec& moved = moved_points_[g.finite];
    const int n = int(moved.size());
    int total = 0;
    for (const auto& dir : dirs_) {
        Int v = 0;
        for (int j = 0; j < n; ++j) v += dir.psi_num[j] * (moved[j] + scale_ * g.translation.free[j]);
        Int k = floor_div(v, dir.psi_den * scale_);
        total += int(k >= -1 ? k + 1 : -(k + 1));
    }
    return total;
}

void IwahoriWeylGroup::build_simple_affine() {
    const int n = coinv_.free_rank();
    // interior point -c_rho / D of the base alcove {-1 < psi < 0}
    LatticeClass c_rho = coinv_.project(datum_->two_rho_vee());
    Rational top = 0;
    for (int d = 0; d < int(dirs_.size()); ++d) top = std::max(top, psi(d, c_rho));
    scale_ = floor_div(top.numerator(), top.denominator()) + 1;
    base_point_ = ramsat::scale(c_rho.free, -1);
    for (int d = 0; d < int(dirs_.size()); ++d) {
        Rational v = Rational(dot(dirs_[d].psi_num, base_point_), dirs_[d].psi_den * scale_);
        check_invariant(v > -1 && v < 0, "iwahori_weyl.internal", "base point is not inside the base alcove");
    }
    for (int w = 0; w < finite_order(); ++w) moved_points_.push_back(free_block(fin_induced_[w], n).apply(base_point_));

    std::vector<IwahoriWeylElement> finite_walls, affine_walls;
    for (int k = 0; k < finite_rank(); ++k) {
        IwahoriWeylElement s = finite(fin_simple_[k]);
        check_invariant(length(s) == 1, "iwahori_weyl.internal", "relative simple reflection has length != 1");
        finite_walls.push_back(s);
        for (auto& dir : dirs_)
            if (dir.reflection == fin_simple_[k]) dir.finite_simple = k;
    }
    for (const auto& dir : dirs_) {
        IwahoriWeylElement s{coinv_.negate(dir.coroot), dir.reflection};
        if (length(s) == 1) affine_walls.push_back(s);
    }
    check_invariant(finite_rank() == 0 || !affine_walls.empty(), "iwahori_weyl.internal", "no affine wall bounds the alcove");
    if (!affine_walls.empty()) s_aff_.push_back(affine_walls.front());
    s_aff_.insert(s_aff_.end(), finite_walls.begin(), finite_walls.end());
    s_aff_.insert(s_aff_.end(), affine_walls.begin() + std::min<std::size_t>(1, affine_walls.size()), affine_walls.end());
    for (const auto& s : s_aff_)
        check_invariant(multiply(s, s) == identity(), "iwahori_weyl.internal", "simple affine reflection is not an involution");
}

void IwahoriWeylGroup::build_omega() {
    const BasedRootDatum& d = *datum_;
    const int rank = d.rank();
    std::vector<IntVec> cols;
    const IntMatrix& rel = coinv_.relations();
    for (int c = 0; c < rel.cols(); ++c) cols.push_back(rel.col(c));
    for (int k = 0; k < d.semisimple_rank(); ++k) cols.push_back(d.simple_coroot(k));
    pi1_ = LatticeQuotient(rank, cols.empty() ? IntMatrix(rank, 0) : IntMatrix::from_columns(cols, rank));
    check_invariant(pi1_.free_rank() == 0, "iwahori_weyl.internal", "pi_1(G)_I is infinite for a semisimple quotient");
    for (const LatticeClass& c : pi1_.torsion_classes()) {
        IwahoriWeylElement g = translation(coinv_.project(pi1_.lift(c)));
        for (bool improved = true; improved;) {
            improved = false;
            const int l = length(g);
            for (int i = 0; i < num_simple(); ++i) {
                IwahoriWeylElement h = right(g, i);
                if (length(h) < l) {
                    g = h;
                    improved = true;
                    break;
                }
            }
        }
        check_invariant(length(g) == 0, "iwahori_weyl.internal", "Kottwitz fiber has no length-zero element");
        check_invariant(kottwitz(g) == c, "iwahori_weyl.internal", "Kottwitz map is not constant on W_aff-cosets");
        omega_lookup_[c] = int(omega_.size());
        omega_.push_back(g);
    }
}

LatticeClass IwahoriWeylGroup::kottwitz(const IwahoriWeylElement& g) const {
    return pi1_.project(coinv_.lift(g.translation));
}

int IwahoriWeylGroup::omega_index(const IwahoriWeylElement& g) const { return omega_lookup_.at(kottwitz(g)); }

ReducedWord IwahoriWeylGroup::reduced_word(const IwahoriWeylElement& g) const {
    ReducedWord out;
    out.omega = omega_index(g);
    IwahoriWeylElement x = multiply(inverse(omega_[out.omega]), g);
    for (int l = length(x); l > 0;) {
        bool stepped = false;
        for (int i = 0; i < num_simple(); ++i) {
            IwahoriWeylElement y = left(i, x);
            int ly = length(y);
            if (ly < l) {
                out.letters.push_back(i);
                x = y;
                l = ly;
                stepped = true;
                break;
            }
        }
        check_invariant(stepped, "iwahori_weyl.internal", "element of positive length without a descent");
    }
    check_invariant(x == identity(), "iwahori_weyl.internal", "length-zero element of W_aff is not the identity");
    return out;
}

IwahoriWeylElement IwahoriWeylGroup::from_word(const ReducedWord& w) const {
    if (w.omega < 0 || w.omega >= int(omega_.size())) fail("iwahori_weyl.bad_index", "omega index out of range");
    IwahoriWeylElement g = omega_[w.omega];
    for (int i : w.letters) {
        if (i < 0 || i >= num_simple()) fail("iwahori_weyl.bad_index", "S_aff index out of range");
        g = right(g, i);
    }
    return g;
}

bool IwahoriWeylGroup::bruhat_leq(const IwahoriWeylElement& u, const IwahoriWeylElement& v) const {
    const int ou = omega_index(u);
    if (ou != omega_index(v)) return false;
    const IwahoriWeylElement tau_inv = inverse(omega_[ou]);
    IwahoriWeylElement y = multiply(tau_inv, u);
    int ly = length(y);
    const ReducedWord wv = reduced_word(v);
    if (ly > int(wv.letters.size())) return false;
    for (int s : wv.letters) {
        IwahoriWeylElement z = left(s, y);
        int lz = length(z);
        if (lz < ly) {
            y = std::move(z);
            ly = lz;
        }
    }
    return ly == 0;
}

// ---------------- text form ----------------

std::string IwahoriWeylGroup::format(const IwahoriWeylElement& g) const {
    std::string s = "t[" + join(g.translation.free);
    if (!g.translation.tors.empty()) s += "|" + join(g.translation.tors);
    std::vector<Int> word(finite_word(g.finite).begin(), finite_word(g.finite).end());
    return s + "]*w[" + join(word, 1) + "]";
}

std::string IwahoriWeylGroup::format_word(const ReducedWord& w) const {
    std::vector<Int> letters(w.letters.begin(), w.letters.end());
    return "o[" + std::to_string(w.omega) + "]*s[" + join(letters) + "]";
}

IwahoriWeylElement IwahoriWeylGroup::parse(const std::string& text) const {
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    if (compact.empty()) bad_element(text, "empty string");
    IwahoriWeylElement g = identity();
    std::size_t pos = 0;
    while (pos < compact.size()) {
        std::size_t star = compact.find('*', pos);
        std::string f = compact.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        pos = star == std::string::npos ? compact.size() : star + 1;
        if (star != std::string::npos && pos == compact.size()) bad_element(text, "trailing '*'");
        if (f == "e") continue;
        if (f.size() < 3 || f[1] != '[' || f.back() != ']') bad_element(text, "factor '" + f + "'");
        const std::string body = f.substr(2, f.size() - 3);
        IwahoriWeylElement h = identity();
        switch (f[0]) {
        case 't': {
            auto bar = body.find('|');
            IntVec fr = body.empty() ? IntVec{} : parse_list(body.substr(0, bar), text);
            IntVec tr = bar == std::string::npos ? IntVec(coinv_.torsion().size(), 0) : parse_list(body.substr(bar + 1), text);
            if (int(fr.size()) != coinv_.free_rank())
                bad_element(text, "translation needs " + std::to_string(coinv_.free_rank()) + " free coordinates");
            if (tr.size() != coinv_.torsion().size())
                bad_element(text, "translation needs " + std::to_string(coinv_.torsion().size()) + " torsion coordinates");
            h = translation(LatticeClass{fr, tr});
            break;
        }
        case 'w': {
            std::vector<int> word;
            for (Int k : body.empty() ? IntVec{} : parse_list(body, text)) {
                if (k < 1 || k > finite_rank()) bad_element(text, "relative simple index " + std::to_string(k) + " out of range");
                word.push_back(int(k) - 1);
            }
            h = finite(finite_from_word(word));
            break;
        }
        case 's': {
            for (Int i : body.empty() ? IntVec{} : parse_list(body, text)) {
                if (i < 0 || i >= num_simple()) bad_element(text, "S_aff index " + std::to_string(i) + " out of range");
                h = right(h, int(i));
            }
            break;
        }
        case 'o': {
            IntVec k = parse_list(body, text);
            if (k.size() != 1 || k[0] < 0 || k[0] >= Int(omega_.size())) bad_element(text, "omega index out of range");
            h = omega_[k[0]];
            break;
        }
        default:
            bad_element(text, "unknown factor '" + f + "'");
        }
        g = multiply(g, h);
    }
    return g;
}

} // namespace ramsat
