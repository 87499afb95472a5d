#include "ramsat/facets_admissible.hpp"

#include "ramsat/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ramsat {

namespace {

/// (direction, level) of the reflection hyperplane of a reflection x, or nullopt if
/// x is not a reflection in a wall direction. The wall is psi_d = level.
std::optional<std::pair<int, Rational>> wall_of(const IwahoriWeylGroup& g, const IwahoriWeylElement& x) {
    for (int d = 0; d < int(g.directions().size()); ++d)
        if (g.directions()[d].reflection == x.finite) return std::make_pair(d, g.psi(d, x.translation) / 2);
    return std::nullopt;
}

Rational psi_at(const IwahoriWeylGroup& g, int d, const RatVec& x) {
    const WallDirection& dir = g.directions()[d];
    Rational v = 0;
    for (std::size_t j = 0; j < x.size(); ++j) v += Rational(dir.psi_num[j]) * x[j];
    return v / dir.psi_den;
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

LatticeClass free_unit(const IwahoriWeylGroup& g, int i) {
    LatticeClass c = g.coinvariants().zero();
    c.free[i] = 1;
    return c;
}

std::vector<IwahoriWeylElement> translations(const IwahoriWeylGroup& g, const std::vector<LatticeClass>& classes) {
    std::vector<IwahoriWeylElement> out;
    for (const auto& c : classes) out.push_back(g.translation(c));
    sort_unique(g, out);
    return out;
}

} // namespace

std::string Facet::label() const {
    if (J.empty()) return "{}";
    std::string s = "{";
    for (std::size_t i = 0; i < J.size(); ++i) s += (i ? "," : "") + std::to_string(J[i]);
    return s + "}";
}

Facet make_facet(const IwahoriWeylGroup& g, std::vector<int> J) {
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    for (int j : J)
        if (j < 0 || j >= g.num_simple())
            fail("facets_admissible.bad_facet",
                 "S_aff index " + std::to_string(j) + " out of range [0, " + std::to_string(g.num_simple()) + ")");
    Facet f;
    f.J = J;
    std::set<IwahoriWeylElement> seen{g.identity()};
    std::vector<IwahoriWeylElement> frontier{g.identity()};
    while (!frontier.empty()) {
        std::vector<IwahoriWeylElement> next;
        for (const auto& x : frontier)
            for (int j : J) {
                IwahoriWeylElement y = g.right(x, j);
                if (seen.insert(y).second) next.push_back(y);
            }
        // pi restricted to a finite W_J is injective, so |W_J| <= |W_0|
        if (int(seen.size()) > g.finite_order())
            fail("facets_admissible.infinite_parahoric", "W_J for J = " + f.label() + " is infinite");
        frontier = std::move(next);
    }
    f.elements.assign(seen.begin(), seen.end());
    for (const auto& x : f.elements) f.finite_parts.push_back(x.finite);
    std::sort(f.finite_parts.begin(), f.finite_parts.end());
    check_invariant(std::adjacent_find(f.finite_parts.begin(), f.finite_parts.end()) == f.finite_parts.end(),
                    "facets_admissible.internal", "W_J -> W_0 is not injective for J = " + f.label());
    f.special = int(f.finite_parts.size()) == g.finite_order();
    for (const auto& x : f.elements) {
        auto wall = wall_of(g, x);
        if (!wall) continue;
        const Rational level = wall->second;
        check_invariant(level == 0 || level == -1, "facets_admissible.internal",
                        "reflection of W_J does not fix a wall of the base alcove");
        f.local_roots.emplace_back(wall->first, level == 0 ? 1 : -1);
    }
    std::sort(f.local_roots.begin(), f.local_roots.end());
    return f;
}

std::vector<Facet> enumerate_facets(const IwahoriWeylGroup& g) {
    const int n = g.num_simple();
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> J;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) J.push_back(i);
        subsets.push_back(J);
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<Facet> out;
    for (const auto& J : subsets) {
        try {
            out.push_back(make_facet(g, J));
        } catch (const Error& e) {
            if (e.name() != "facets_admissible.infinite_parahoric") throw;
        }
    }
    for (const auto& f : out)
        if (is_special(g, f) != is_special_by_walls(g, f))
            throw InvariantViolation("facets_admissible.special_mismatch",
                                     g.name() + ": facet " + f.label() +
                                         " is special by one criterion only (subgroup order vs parallel walls)");
    return out;
}

std::vector<int> parse_facet(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}') t += ch;
    std::vector<int> J;
    if (t.empty() || t == "-" || t == "a") return J;
    std::istringstream is(t);
    for (std::string tok; std::getline(is, tok, ',');) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            J.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("facets_admissible.bad_facet", "cannot parse facet '" + text + "'");
        }
    }
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    return J;
}

bool is_special(const IwahoriWeylGroup& g, const Facet& f) {
    return int(f.finite_parts.size()) == g.finite_order();
}

std::vector<RatVec> alcove_vertices(const IwahoriWeylGroup& g) {
    const int n = g.dimension();
    const int m = int(g.directions().size());
    if (n == 0) return {RatVec{}};
    // constraints psi_d = level, level in {0, -1}
    std::vector<std::pair<int, int>> cons;
    for (int d = 0; d < m; ++d) {
        cons.emplace_back(d, 0);
        cons.emplace_back(d, -1);
    }
    std::set<RatVec> found;
    std::vector<int> pick(n);
    for (int i = 0; i < n; ++i) pick[i] = i;
    const int c = int(cons.size());
    while (true) {
        RatMatrix a;
        RatVec b;
        for (int i : pick) {
            const WallDirection& dir = g.directions()[cons[i].first];
            RatVec row;
            for (Int x : dir.psi_num) row.push_back(Rational(x, dir.psi_den));
            a.push_back(row);
            b.push_back(Rational(cons[i].second));
        }
        if (auto x = solve(a, b)) {
            bool inside = true;
            for (int d = 0; d < m && inside; ++d) {
                Rational v = psi_at(g, d, *x);
                inside = v >= -1 && v <= 0;
            }
            if (inside) found.insert(*x);
        }
        int k = n - 1;
        while (k >= 0 && pick[k] == c - n + k) --k;
        if (k < 0) break;
        ++pick[k];
        for (int i = k + 1; i < n; ++i) pick[i] = pick[i - 1] + 1;
    }
    return {found.begin(), found.end()};
}

bool is_special_by_walls(const IwahoriWeylGroup& g, const Facet& f) {
    const int n = g.dimension();
    if (n == 0) return true;
    std::vector<std::pair<int, Rational>> walls;
    for (int j : f.J) {
        auto w = wall_of(g, g.simple(j));
        check_invariant(w.has_value(), "facets_admissible.internal", "simple affine reflection has no wall");
        walls.push_back(*w);
    }
    RatVec bary(n, Rational(0));
    int count = 0;
    for (const RatVec& v : alcove_vertices(g)) {
        bool on_face = true;
        for (const auto& [d, level] : walls) on_face = on_face && psi_at(g, d, v) == level;
        if (!on_face) continue;
        for (int i = 0; i < n; ++i) bary[i] += v[i];
        ++count;
    }
    check_invariant(count > 0, "facets_admissible.internal", "facet " + f.label() + " has no vertices");
    for (auto& x : bary) x /= count;
    for (int d = 0; d < int(g.directions().size()); ++d)
        if (!is_integer(psi_at(g, d, bary))) return false;
    return true;
}

std::vector<RestrictedRoot> restricted_roots(const IwahoriWeylGroup& g, const Facet& f) {
    std::vector<RestrictedRoot> out;
    for (const auto& [d, sign] : f.local_roots) {
        IntVec coeff = g.datum().root_coefficients(g.directions()[d].roots.front());
        out.push_back(RestrictedRoot{d, sign, scale(coeff, sign)});
    }
    return out;
}

bool is_facet_dominant(const IwahoriWeylGroup& g, const Facet& f, const LatticeClass& c) {
    for (const auto& [d, sign] : f.local_roots)
        if (sign * dot(g.directions()[d].psi_num, c.free) < 0) return false;
    return true;
}

LatticeClass facet_dominant_rep(const IwahoriWeylGroup& g, const Facet& f, const LatticeClass& c) {
    std::set<LatticeClass> hits;
    for (int w : f.finite_parts) {
        LatticeClass x = g.finite_act(w, c);
        if (is_facet_dominant(g, f, x)) hits.insert(x);
    }
    check_invariant(hits.size() == 1, "facets_admissible.internal",
                    "W_{0,J}-orbit of " + to_string(c) + " has " + std::to_string(hits.size()) +
                        " J-dominant members for J = " + f.label());
    return *hits.begin();
}

int count_negative_restricted(const IwahoriWeylGroup& g, const Facet& f, const LatticeClass& c) {
    int n = 0;
    for (const auto& [d, sign] : f.local_roots)
        if (sign * dot(g.directions()[d].psi_num, c.free) < 0) ++n;
    return n;
}

IwahoriWeylElement min_coset_rep(const IwahoriWeylGroup& g, const IwahoriWeylElement& x, const Facet& f) {
    std::optional<IwahoriWeylElement> best;
    int best_len = 0, ties = 0;
    for (const auto& a : f.elements) {
        IwahoriWeylElement y = g.multiply(x, a);
        const int l = g.length(y);
        if (!best || l < best_len) {
            best = y;
            best_len = l;
            ties = 1;
        } else if (l == best_len) {
            ++ties;
        }
    }
    check_invariant(ties == 1, "facets_admissible.internal", "coset x W_J has several minimal elements");
    return *best;
}

IwahoriWeylElement max_double_coset_rep(const IwahoriWeylGroup& g, const IwahoriWeylElement& x, const Facet& f) {
    std::set<IwahoriWeylElement> reps;
    for (const auto& a : f.elements) reps.insert(min_coset_rep(g, g.multiply(a, x), f));
    std::optional<IwahoriWeylElement> best;
    int best_len = 0, ties = 0;
    for (const auto& y : reps) {
        const int l = g.length(y);
        if (!best || l > best_len) {
            best = y;
            best_len = l;
            ties = 1;
        } else if (l == best_len) {
            ++ties;
        }
    }
    check_invariant(ties == 1, "facets_admissible.double_coset_not_unique",
                    "double coset of " + g.format(x) + " has several maximal representatives for J = " + f.label());
    return *best;
}

IwahoriWeylElement min_coset_rep_fast(const IwahoriWeylGroup& g, const IwahoriWeylElement& x, const Facet& f) {
    IwahoriWeylElement y = x;
    int l = g.length(y);
    for (bool moved = true; moved;) {
        moved = false;
        for (int j : f.J) {
            IwahoriWeylElement z = g.right(y, j);
            const int lz = g.length(z);
            if (lz < l) {
                y = std::move(z);
                l = lz;
                moved = true;
            }
        }
    }
    return y;
}

IwahoriWeylElement max_double_coset_rep_fast(const IwahoriWeylGroup& g, const IwahoriWeylElement& x, const Facet& f) {
    // the longest element of W_J x W_J is the only one without J-ascents on either side
    IwahoriWeylElement y = x;
    int l = g.length(y);
    for (bool moved = true; moved;) {
        moved = false;
        for (int j : f.J) {
            for (IwahoriWeylElement z : {g.left(j, y), g.right(y, j)}) {
                const int lz = g.length(z);
                if (lz > l) {
                    y = std::move(z);
                    l = lz;
                    moved = true;
                }
            }
        }
    }
    return min_coset_rep_fast(g, y, f);
}

std::vector<LatticeClass> lambda_mu(const IwahoriWeylGroup& g, std::span<const Int> mu) {
    if (int(mu.size()) != g.datum().rank())
        fail("facets_admissible.bad_mu", "cocharacter has " + std::to_string(mu.size()) + " entries, expected " +
                                             std::to_string(g.datum().rank()));
    IntVec dom = g.absolute_weyl().dominant_representative(mu).first;
    return g.finite_orbit(g.project(dom));
}

std::vector<LatticeClass> projected_orbit_maxima(const IwahoriWeylGroup& g, std::span<const Int> mu,
                                                 ExecPolicy policy) {
    std::set<LatticeClass> classes;
    for (const IntVec& x : g.absolute_weyl().orbit(mu)) classes.insert(g.project(x));
    auto tops = bruhat_maxima(g, translations(g, {classes.begin(), classes.end()}), policy);
    std::vector<LatticeClass> out;
    for (const auto& t : tops) out.push_back(t.translation);
    std::sort(out.begin(), out.end());
    return out;
}

AdmissibleSet admissible_alcove(const IwahoriWeylGroup& g, const LatticeClass& mu_bar, ExecPolicy policy,
                                std::size_t cap) {
    AdmissibleSet out;
    out.mu_bar = g.dominant(g.coinvariants().normalize(mu_bar)).first;
    LowerClosure lc = lower_closure(g, translations(g, g.finite_orbit(out.mu_bar)), policy, cap);
    out.elements = std::move(lc.elements);
    out.maximal = std::move(lc.maximal);
    return out;
}

AdmissibleSet admissible_relative(const IwahoriWeylGroup& g, const AdmissibleSet& alcove, const Facet& f,
                                  ExecPolicy policy) {
    check_invariant(alcove.J.empty(), "facets_admissible.internal", "relative admissible set needs the alcove set");
    if (f.J.empty()) return alcove;
    AdmissibleSet out;
    out.mu_bar = alcove.mu_bar;
    out.J = f.J;
    out.elements = map_elements(
        alcove.elements, [&](const IwahoriWeylElement& w) { return max_double_coset_rep_fast(g, w, f); }, policy);
    sort_unique(g, out.elements);
    out.maximal = bruhat_maxima(g, out.elements, policy);
    return out;
}

AdmissibleSet admissible_set(const IwahoriWeylGroup& g, const LatticeClass& mu_bar, const Facet& f, ExecPolicy policy,
                             std::size_t cap) {
    return admissible_relative(g, admissible_alcove(g, mu_bar, policy, cap), f, policy);
}

std::vector<IwahoriWeylElement> expected_maxima(const IwahoriWeylGroup& g, const LatticeClass& mu_bar,
                                                const Facet& f) {
    std::vector<LatticeClass> dom;
    for (const auto& nu : g.finite_orbit(mu_bar))
        if (is_facet_dominant(g, f, nu)) dom.push_back(nu);
    return translations(g, dom);
}

int double_coset_count(const IwahoriWeylGroup& g, const LatticeClass& mu_bar, const Facet& f) {
    std::set<LatticeClass> keys;
    for (const auto& nu : g.finite_orbit(mu_bar)) {
        LatticeClass key = nu;
        for (int w : f.finite_parts) key = std::min(key, g.finite_act(w, nu));
        keys.insert(key);
    }
    return int(keys.size());
}

std::vector<SchubertStratum> schubert_components(const IwahoriWeylGroup& g, const AdmissibleSet& adm) {
    std::set<IwahoriWeylElement> tops(adm.maximal.begin(), adm.maximal.end());
    std::vector<SchubertStratum> out;
    for (const auto& w : adm.elements) out.push_back(SchubertStratum{w, g.length(w), tops.count(w) > 0});
    return out;
}

ParityResult parity_check(const IwahoriWeylGroup& g, const Facet& f, int bound, ExecPolicy policy, std::size_t cap) {
    ParityResult out;
    out.bound = bound;
    auto all = elements_up_to_length(g, bound, policy, cap);
    auto reps = map_elements(
        all, [&](const IwahoriWeylElement& w) { return max_double_coset_rep_fast(g, w, f); }, policy);
    std::vector<std::tuple<int, ReducedWord, IwahoriWeylElement>> keyed;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (reps[i] == all[i]) keyed.emplace_back(g.length(all[i]), g.reduced_word(all[i]), all[i]);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        const auto& [la, wa, xa] = a;
        const auto& [lb, wb, xb] = b;
        if (la != lb) return la < lb;
        if (wa.omega != wb.omega) return wa.omega < wb.omega;
        return wa.letters < wb.letters;
    });
    out.checked = keyed.size();
    std::map<int, std::pair<int, IwahoriWeylElement>> first; // omega index -> (length, element)
    for (const auto& [l, w, x] : keyed) {
        auto [it, fresh] = first.emplace(w.omega, std::make_pair(l, x));
        if (fresh || (it->second.first - l) % 2 == 0) continue;
        out.ok = false;
        out.witness = std::make_pair(it->second.second, x);
        break;
    }
    return out;
}

std::vector<LatticeClass> dominant_classes(const IwahoriWeylGroup& g, Int max_pairing) {
    const int n = g.dimension();
    std::vector<LatticeClass> out;
    const auto torsion = g.coinvariants().torsion_classes();
    if (n == 0) {
        if (max_pairing >= 0) out = torsion;
    } else {
        // dominant c = sum_k psi_k(c) varpi_k with psi_k >= 0 over the simple directions
        RatMatrix a(n);
        for (const auto& dir : g.directions())
            if (dir.finite_simple >= 0)
                for (Int x : dir.psi_num) a[dir.finite_simple].push_back(Rational(x, dir.psi_den));
        auto inv = inverse(a);
        check_invariant(inv.has_value(), "facets_admissible.internal", "simple wall functionals are dependent");
        IntVec p(n);
        for (int i = 0; i < n; ++i) p[i] = g.pair_two_rho(free_unit(g, i));
        IntVec box(n, 0);
        for (int k = 0; k < n; ++k) {
            Rational pk = 0;
            for (int i = 0; i < n; ++i) pk += Rational(p[i]) * (*inv)[i][k];
            check_invariant(pk > 0, "facets_admissible.internal", "2 rho does not pair positively with the cone");
            const Rational bk = Rational(std::max<Int>(max_pairing, 0)) / pk;
            for (int i = 0; i < n; ++i) {
                Rational t = (*inv)[i][k] * bk;
                box[i] += floor_div((t < 0 ? -t : t).numerator(), (t < 0 ? -t : t).denominator()) + 1;
            }
        }
        IntVec c(n);
        for (int i = 0; i < n; ++i) c[i] = -box[i];
        while (true) {
            LatticeClass x = g.coinvariants().zero();
            x.free = c;
            if (g.is_dominant(x) && dot(p, c) <= max_pairing)
                for (const auto& t : torsion) out.push_back(g.coinvariants().add(x, t));
            int i = 0;
            while (i < n && c[i] == box[i]) c[i] = -box[i], ++i;
            if (i == n) break;
            ++c[i];
        }
    }
    std::sort(out.begin(), out.end(), [&](const LatticeClass& x, const LatticeClass& y) {
        const Int px = g.pair_two_rho(x), py = g.pair_two_rho(y);
        return px != py ? px < py : x < y;
    });
    return out;
}

std::vector<LatticeClass> default_mu_samples(const IwahoriWeylGroup& g, Int max_pairing) {
    auto out = dominant_classes(g, max_pairing);
    auto regular = [&](const LatticeClass& c) {
        for (const auto& dir : g.directions())
            if (dot(dir.psi_num, c.free) <= 0) return false;
        return true;
    };
    std::optional<LatticeClass> reg;
    for (Int bound = std::max<Int>(max_pairing, 1); !reg; bound *= 2) {
        for (const auto& c : dominant_classes(g, bound))
            if (regular(c)) {
                reg = c;
                break;
            }
        check_invariant(bound < (Int(1) << 20), "facets_admissible.internal", "no regular dominant class found");
    }
    if (std::find(out.begin(), out.end(), *reg) == out.end()) out.push_back(*reg);
    const LatticeClass zero = g.coinvariants().zero();
    if (std::find(out.begin(), out.end(), zero) == out.end()) out.push_back(zero);
    std::sort(out.begin(), out.end(), [&](const LatticeClass& x, const LatticeClass& y) {
        const Int px = g.pair_two_rho(x), py = g.pair_two_rho(y);
        return px != py ? px < py : x < y;
    });
    return out;
}

bool TheoremBReport::all_agree() const {
    return std::all_of(rows.begin(), rows.end(), [](const FacetReport& r) { return r.agree; });
}

TheoremBReport theorem_b_report(const IwahoriWeylGroup& g, const std::vector<LatticeClass>& samples, int bound,
                                ExecPolicy policy, std::size_t cap) {
    TheoremBReport rep;
    rep.group = g.name();
    rep.samples = samples;
    if (bound < 0) {
        Int l_max = 0;
        for (const auto& mu : samples) l_max = std::max(l_max, g.pair_two_rho(g.dominant(mu).first));
        bound = int(l_max) + 2;
    }
    rep.bound = bound;
    for (auto& f : enumerate_facets(g)) {
        FacetReport row;
        row.facet = std::move(f);
        rep.rows.push_back(std::move(row));
    }
    const std::size_t nf = rep.rows.size();
    for (const auto& mu : samples) {
        const AdmissibleSet alcove = admissible_alcove(g, mu, policy, cap);
        std::vector<int> counts(nf);
        for_each_index(nf, policy, [&](std::size_t i) {
            counts[i] = int(admissible_relative(g, alcove, rep.rows[i].facet, ExecPolicy::serial).maximal.size());
        });
        for (std::size_t i = 0; i < nf; ++i) {
            FacetReport& row = rep.rows[i];
            row.max_counts.push_back(counts[i]);
            if (counts[i] != 1 && row.unique_max) {
                row.unique_max = false;
                row.multi_max_mu = alcove.mu_bar;
            }
        }
    }
    for_each_index(nf, policy, [&](std::size_t i) {
        rep.rows[i].parity = parity_check(g, rep.rows[i].facet, bound, ExecPolicy::serial, cap);
    });
    for (auto& row : rep.rows)
        row.agree = row.facet.special == row.parity.ok && row.facet.special == row.unique_max;
    return rep;
}

} // namespace ramsat
