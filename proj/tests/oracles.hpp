#pragma once

// Independent reference computations used by the tests and the acceptance
// binary. Nothing here calls the library routine it is meant to check.

#include "ramsat/dual_reps.hpp"
#include "ramsat/facets_admissible.hpp"
#include "ramsat/iwahori_weyl.hpp"
#include "ramsat/lattice.hpp"
#include "ramsat/root_datum.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using namespace ramsat;

// ---- Smith form by determinantal divisors ----

inline Int det_small(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int d = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Int>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Int> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        d += (c % 2 ? -1 : 1) * m[0][c] * det_small(minor);
    }
    return d;
}

inline void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (int(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// Nonzero invariant factors d_k / d_{k-1}, d_k the gcd of the k x k minors.
inline IntVec invariant_factors(const IntMatrix& a) {
    IntVec out;
    Int prev = 1;
    for (int k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
        std::vector<std::vector<int>> rs, cs;
        std::vector<int> cur;
        subsets(a.rows(), k, 0, cur, rs);
        subsets(a.cols(), k, 0, cur, cs);
        Int g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) m[i][j] = a(r[i], c[j]);
                g = std::gcd(g, std::abs(det_small(m)));
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

// ---- Iwahori-Weyl group ----

/// Word length by breadth-first search over S_aff from Omega, up to max_len.
inline std::map<IwahoriWeylElement, int> bfs_lengths(const IwahoriWeylGroup& g, int max_len) {
    std::map<IwahoriWeylElement, int> dist;
    std::vector<IwahoriWeylElement> layer(g.omega().begin(), g.omega().end());
    for (const auto& o : layer) dist[o] = 0;
    for (int l = 1; l <= max_len; ++l) {
        std::vector<IwahoriWeylElement> next;
        for (const auto& x : layer)
            for (int i = 0; i < g.num_simple(); ++i) {
                IwahoriWeylElement y = g.multiply(x, g.simple(i));
                if (dist.emplace(y, l).second) next.push_back(y);
            }
        layer = std::move(next);
    }
    return dist;
}

/// Walls psi_d = k crossed by the segment from the base point p to x(p).
inline int hyperplane_count(const IwahoriWeylGroup& g, const IwahoriWeylElement& x) {
    const LatticeQuotient& q = g.coinvariants();
    LatticeClass p = q.zero();
    p.free = g.base_point();
    LatticeClass moved = g.finite_act(x.finite, p);
    const Int s = g.scale();
    for (std::size_t i = 0; i < moved.free.size(); ++i) moved.free[i] += s * x.translation.free[i];
    int count = 0;
    for (int d = 0; d < int(g.directions().size()); ++d) {
        Rational a = g.psi(d, p) / Rational(s), b = g.psi(d, moved) / Rational(s);
        if (a > b) std::swap(a, b);
        // integers strictly between a and b; neither end lies on a wall
        const Int lo = floor_div(a.numerator(), a.denominator()) + 1;
        const Int hi = -floor_div(-b.numerator(), b.denominator()) - 1;
        if (hi >= lo) count += int(hi - lo + 1);
    }
    return count;
}

/// Every reduced word of x (as S_aff letters), found by peeling right descents.
inline std::vector<std::vector<int>> all_reduced_words(const IwahoriWeylGroup& g, const IwahoriWeylElement& x) {
    const int l = g.length(x);
    if (l == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int i = 0; i < g.num_simple(); ++i) {
        IwahoriWeylElement y = g.multiply(x, g.simple(i));
        if (g.length(y) != l - 1) continue;
        for (auto w : all_reduced_words(g, y)) {
            w.push_back(i);
            out.push_back(std::move(w));
        }
    }
    return out;
}

/// Products of all subwords of one word, prefixed by the length-zero part o.
inline std::set<IwahoriWeylElement> subword_products(const IwahoriWeylGroup& g, const IwahoriWeylElement& o,
                                                     const std::vector<int>& word) {
    std::set<IwahoriWeylElement> cur{o};
    for (int letter : word) {
        std::set<IwahoriWeylElement> next = cur;
        for (const auto& x : cur) next.insert(g.multiply(x, g.simple(letter)));
        cur = std::move(next);
    }
    return cur;
}

/// One reduced word of x, by repeatedly peeling the first right descent.
inline std::vector<int> one_reduced_word(const IwahoriWeylGroup& g, IwahoriWeylElement x) {
    std::vector<int> word;
    for (int l = g.length(x); l > 0; --l)
        for (int i = 0; i < g.num_simple(); ++i) {
            IwahoriWeylElement y = g.multiply(x, g.simple(i));
            if (g.length(y) == l - 1) {
                word.insert(word.begin(), i);
                x = y;
                break;
            }
        }
    return word;
}

/// Lower Bruhat interval of v by the subword property. With consistent set, the
/// interval is recomputed from every reduced word of v and compared.
inline std::set<IwahoriWeylElement> bruhat_interval(const IwahoriWeylGroup& g, const IwahoriWeylElement& v,
                                                    bool* consistent = nullptr) {
    const std::vector<int> word = one_reduced_word(g, v);
    // length-zero part: v = o * (product of the word)
    IwahoriWeylElement rest = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) rest = g.multiply(rest, g.simple(*it));
    std::set<IwahoriWeylElement> first = subword_products(g, rest, word);
    if (consistent) {
        *consistent = g.length(rest) == 0;
        for (const auto& w : all_reduced_words(g, v)) *consistent = *consistent && subword_products(g, rest, w) == first;
    }
    return first;
}

// ---- facets ----

/// W_{0,J}-orbits on W_0 . mu_bar.
inline int double_coset_count(const IwahoriWeylGroup& g, const LatticeClass& mu, const Facet& f) {
    std::set<LatticeClass> orbit;
    for (int w = 0; w < g.finite_order(); ++w) orbit.insert(g.finite_act(w, mu));
    int count = 0;
    std::set<LatticeClass> seen;
    for (const auto& c : orbit) {
        if (seen.count(c)) continue;
        ++count;
        for (int w : f.finite_parts) seen.insert(g.finite_act(w, c));
    }
    return count;
}

/// Minimal-length element of x W_J by scanning the coset.
inline IwahoriWeylElement coset_min(const IwahoriWeylGroup& g, const IwahoriWeylElement& x, const Facet& f) {
    IwahoriWeylElement best = x;
    for (const auto& u : f.elements) {
        IwahoriWeylElement y = g.multiply(x, u);
        if (g.length(y) < g.length(best) || (g.length(y) == g.length(best) && y < best)) best = y;
    }
    return best;
}

/// Longest minimal coset representative (a x b)^J over a, b in W_J, by scanning
/// the double coset; asserts that it is unique.
inline IwahoriWeylElement double_coset_max(const IwahoriWeylGroup& g, const IwahoriWeylElement& x, const Facet& f) {
    // (a x b)^J = (a x)^J, so one pass over a suffices
    std::set<IwahoriWeylElement> reps;
    for (const auto& a : f.elements) reps.insert(coset_min(g, g.multiply(a, x), f));
    int best = -1;
    std::vector<IwahoriWeylElement> top;
    for (const auto& r : reps) {
        const int l = g.length(r);
        if (l > best) {
            best = l;
            top.clear();
        }
        if (l == best) top.push_back(r);
    }
    if (top.size() != 1) throw std::logic_error("oracle: double coset maximum is not unique");
    return top.front();
}

/// Adm_mu^J and its maxima by brute force: elements below a translation of the
/// orbit, pushed to their double-coset representatives, then maximal under the subword order.
struct BruteAdm {
    std::set<IwahoriWeylElement> elements, maximal;
};
inline BruteAdm brute_admissible(const IwahoriWeylGroup& g, const LatticeClass& mu, const Facet& f) {
    std::set<IwahoriWeylElement> adm;
    for (const auto& nu : g.finite_orbit(mu))
        for (const auto& x : bruhat_interval(g, g.translation(nu))) adm.insert(x);
    BruteAdm out;
    for (const auto& x : adm) out.elements.insert(double_coset_max(g, x, f));
    // longest first: x is maximal iff no maximum found so far lies above it
    std::vector<IwahoriWeylElement> order(out.elements.begin(), out.elements.end());
    std::stable_sort(order.begin(), order.end(),
                     [&](const auto& a, const auto& b) { return g.length(a) > g.length(b); });
    std::set<IwahoriWeylElement> covered;
    for (const auto& x : order) {
        if (covered.count(x)) continue;
        out.maximal.insert(x);
        for (const auto& y : bruhat_interval(g, x)) covered.insert(y);
    }
    return out;
}

// ---- characters ----

/// Weyl dimension formula: prod over positive alpha of <alpha^vee, lambda + rho> / <alpha^vee, rho>.
inline Int weyl_dimension(const BasedRootDatum& d, std::span<const Int> lambda) {
    Rational r = 1;
    const IntVec rho2 = d.two_rho();
    for (int a : d.positive_indices())
        r *= Rational(2 * dot(d.coroot(a), lambda) + dot(d.coroot(a), rho2), dot(d.coroot(a), rho2));
    return boost::rational_cast<Int>(r);
}

/// Kostant partition function on simple-root coordinates.
class Kostant {
public:
    explicit Kostant(const BasedRootDatum& d) {
        for (int a : d.positive_indices()) pos_.push_back(d.root_coefficients(a));
    }
    Int operator()(const IntVec& v) { return count(v, 0); }

private:
    Int count(const IntVec& v, std::size_t i) {
        for (Int x : v)
            if (x < 0) return 0;
        if (i == pos_.size()) return is_zero(v) ? 1 : 0;
        auto key = std::make_pair(v, i);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Int total = 0;
        IntVec w = v;
        while (std::all_of(w.begin(), w.end(), [](Int x) { return x >= 0; })) {
            total += count(w, i + 1);
            w = sub(w, pos_[i]);
        }
        return memo_[key] = total;
    }
    std::vector<IntVec> pos_;
    std::map<std::pair<IntVec, std::size_t>, Int> memo_;
};

/// Weight multiplicities by Kostant's formula
/// m(mu) = sum_w sgn(w) P(w(lambda + rho) - (mu + rho)), over the weights mu <= lambda.
inline std::map<IntVec, Int> kostant_character(const BasedRootDatum& d, const IntVec& lambda) {
    std::map<IntVec, Int> out;
    if (d.semisimple_rank() == 0) {
        out[lambda] = 1;
        return out;
    }
    WeylGroup w(d);
    Kostant P(d);
    const IntVec rho2 = d.two_rho();
    std::vector<std::pair<IntVec, int>> shifted; // (w(lambda + rho) - rho, sign)
    for (int i = 0; i < int(w.order()); ++i) {
        IntVec wr = sub(w.act_character(i, rho2), rho2);
        for (Int& x : wr) x /= 2;
        shifted.emplace_back(add(w.act_character(i, lambda), wr), w.element(i).length() % 2 ? -1 : 1);
    }
    // candidate weights: lambda minus nonnegative root combinations within the orbit hull
    std::set<IntVec> seen{lambda};
    std::vector<IntVec> stack{lambda};
    while (!stack.empty()) {
        IntVec mu = stack.back();
        stack.pop_back();
        Int m = 0;
        for (const auto& [s, sign] : shifted) {
            auto c = d.simple_root_coordinates(sub(s, mu));
            if (c) m += sign * P(*c);
        }
        if (m != 0) out[mu] = m;
        // stay within the convex hull: the dominant conjugate must be <= lambda
        for (int k = 0; k < d.semisimple_rank(); ++k) {
            IntVec nu = sub(mu, d.simple_root(k));
            if (seen.count(nu)) continue;
            IntVec dom = w.dominant_representative_character(nu).first;
            auto c = d.simple_root_coordinates(sub(lambda, dom));
            if (c && std::all_of(c->begin(), c->end(), [](Int x) { return x >= 0; })) {
                seen.insert(nu);
                stack.push_back(nu);
            }
        }
    }
    return out;
}

/// lambda <= mu by searching nonnegative coefficient vectors up to depth on the folded simple roots.
inline bool dominance_brute(const FoldedDatum& f, const LatticeClass& lambda, const LatticeClass& mu, Int depth = 20) {
    const LatticeQuotient& q = f.characters.quotient();
    const LatticeClass target = q.sub(q.normalize(mu), q.normalize(lambda));
    const std::size_t k = f.simple_root_classes.size();
    IntVec n(k, 0);
    while (true) {
        LatticeClass c = q.zero();
        for (std::size_t i = 0; i < k; ++i) c = q.add(c, q.scale(f.simple_root_classes[i], n[i]));
        if (c == target) return true;
        std::size_t i = 0;
        while (i < k && n[i] == depth) n[i++] = 0;
        if (i == k) return false;
        ++n[i];
    }
}

/// Character of a tensor product of two weight multisets on the same lattice.
inline std::map<IntVec, Int> tensor(const std::map<IntVec, Int>& a, const std::map<IntVec, Int>& b) {
    std::map<IntVec, Int> out;
    for (const auto& [x, m] : a)
        for (const auto& [y, n] : b) out[add(x, y)] += m * n;
    return out;
}

} // namespace oracle
