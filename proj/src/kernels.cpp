#include "ramsat/kernels.hpp"

#include "ramsat/errors.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <unordered_set>

#include <omp.h>

namespace ramsat {

bool ByLength::operator()(const IwahoriWeylElement& a, const IwahoriWeylElement& b) const {
    const int la = group->length(a), lb = group->length(b);
    if (la != lb) return la < lb;
    return a < b;
}

void sort_unique(const IwahoriWeylGroup& g, std::vector<IwahoriWeylElement>& v) {
    std::vector<std::pair<int, IwahoriWeylElement>> keyed;
    keyed.reserve(v.size());
    for (auto& x : v) keyed.emplace_back(g.length(x), std::move(x));
    std::sort(keyed.begin(), keyed.end());
    keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
    v.clear();
    for (auto& [_, x] : keyed) v.push_back(std::move(x));
}

namespace {

void check_cap(std::size_t size, std::size_t cap) {
    if (size > cap)
        fail("kernels.cap_exceeded", "enumeration exceeded the cap of " + std::to_string(cap) + " elements");
}

// Runs body(i, out) for i in [0, n) and concatenates the per-thread outputs.
template <class Body>
std::vector<IwahoriWeylElement> gather(std::size_t n, ExecPolicy policy, Body body) {
    std::vector<IwahoriWeylElement> out;
    if (policy == ExecPolicy::serial) {
        for (std::size_t i = 0; i < n; ++i) body(i, out);
        return out;
    }
    std::vector<std::vector<IwahoriWeylElement>> parts(static_cast<std::size_t>(omp_get_max_threads()));
    std::exception_ptr error;
#pragma omp parallel
    {
        auto& mine = parts[std::size_t(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
        for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(n); ++i) {
            try {
                body(std::size_t(i), mine);
            } catch (...) {
#pragma omp critical(ramsat_kernel_error)
                if (!error) error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

} // namespace

std::vector<IwahoriWeylElement> elements_up_to_length(const IwahoriWeylGroup& g, int bound, ExecPolicy policy,
                                                      std::size_t cap) {
    std::vector<IwahoriWeylElement> all, layer = g.omega();
    if (bound < 0) return all;
    sort_unique(g, layer);
    for (int l = 0;; ++l) {
        all.insert(all.end(), layer.begin(), layer.end());
        check_cap(all.size(), cap);
        if (l == bound) break;
        auto next = gather(layer.size(), policy, [&](std::size_t i, std::vector<IwahoriWeylElement>& out) {
            for (int s = 0; s < g.num_simple(); ++s) {
                IwahoriWeylElement y = g.right(layer[i], s);
                if (g.length(y) == l + 1) out.push_back(std::move(y));
            }
        });
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.empty()) break;
        layer = std::move(next);
    }
    return all;
}

LowerClosure lower_closure(const IwahoriWeylGroup& g, const std::vector<IwahoriWeylElement>& tops, ExecPolicy policy,
                           std::size_t cap) {
    std::map<int, std::vector<IwahoriWeylElement>> by_length;
    for (const auto& t : tops) by_length[g.length(t)].push_back(t);
    LowerClosure out;
    std::unordered_set<IwahoriWeylElement, ElementHash> covered;
    std::size_t total = 0;
    for (int l = by_length.empty() ? -1 : by_length.rbegin()->first; l >= 0; --l) {
        auto& layer = by_length[l];
        std::sort(layer.begin(), layer.end());
        layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
        for (const auto& x : layer)
            if (!covered.count(x)) out.maximal.push_back(x);
        total += layer.size();
        check_cap(total, cap);
        if (l == 0) break;
        auto children = gather(layer.size(), policy, [&](std::size_t i, std::vector<IwahoriWeylElement>& res) {
            const ReducedWord w = g.reduced_word(layer[i]);
            const int k = int(w.letters.size());
            // prefix[j] = tau s_1 ... s_j, suffix[j] = s_{j+1} ... s_k
            std::vector<IwahoriWeylElement> prefix{g.omega()[w.omega]}, suffix(k + 1, g.identity());
            for (int j = 0; j < k; ++j) prefix.push_back(g.right(prefix.back(), w.letters[j]));
            for (int j = k - 1; j >= 0; --j) suffix[j] = g.left(w.letters[j], suffix[j + 1]);
            for (int j = 0; j < k; ++j) {
                IwahoriWeylElement y = g.multiply(prefix[j], suffix[j + 1]);
                if (g.length(y) == l - 1) res.push_back(std::move(y));
            }
        });
        for (auto& c : children) {
            covered.insert(c);
            by_length[l - 1].push_back(std::move(c));
        }
    }
    for (auto it = by_length.begin(); it != by_length.end(); ++it)
        out.elements.insert(out.elements.end(), it->second.begin(), it->second.end());
    sort_unique(g, out.elements);
    sort_unique(g, out.maximal);
    return out;
}

std::vector<IwahoriWeylElement> bruhat_maxima(const IwahoriWeylGroup& g, const std::vector<IwahoriWeylElement>& set,
                                              ExecPolicy policy) {
    std::vector<int> len(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) len[i] = g.length(set[i]);
    auto out = gather(set.size(), policy, [&](std::size_t i, std::vector<IwahoriWeylElement>& res) {
        // longest first: tops tend to sit at the end of length-sorted input
        for (std::size_t j = set.size(); j-- > 0;)
            if (len[j] > len[i] && g.bruhat_leq(set[i], set[j])) return;
        res.push_back(set[i]);
    });
    sort_unique(g, out);
    return out;
}

std::vector<IwahoriWeylElement> map_elements(const std::vector<IwahoriWeylElement>& in,
                                             const std::function<IwahoriWeylElement(const IwahoriWeylElement&)>& f,
                                             ExecPolicy policy) {
    std::vector<IwahoriWeylElement> out(in.size());
    if (policy == ExecPolicy::serial) {
        for (std::size_t i = 0; i < in.size(); ++i) out[i] = f(in[i]);
        return out;
    }
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(in.size()); ++i) {
        try {
            out[std::size_t(i)] = f(in[std::size_t(i)]);
        } catch (...) {
#pragma omp critical(ramsat_kernel_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

void for_each_index(std::size_t n, ExecPolicy policy, const std::function<void(std::size_t)>& body) {
    if (policy == ExecPolicy::serial) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(n); ++i) {
        try {
            body(std::size_t(i));
        } catch (...) {
#pragma omp critical(ramsat_kernel_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

} // namespace ramsat
