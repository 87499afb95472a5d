#pragma once

// Enumeration kernels over the Iwahori-Weyl group. Every kernel has a serial
// reference path and an OpenMP path; both return identical, sorted output.

#include "ramsat/iwahori_weyl.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace ramsat {

enum class ExecPolicy { serial, parallel };

/// Default cap on enumerated set sizes.
inline constexpr std::size_t kDefaultCap = 2'000'000;

/// Orders elements by (length, element).
struct ByLength {
    const IwahoriWeylGroup* group;
    bool operator()(const IwahoriWeylElement& a, const IwahoriWeylElement& b) const;
};

/// All elements of length <= bound, sorted by (length, element).
/// Throws kernels.cap_exceeded past cap.
std::vector<IwahoriWeylElement> elements_up_to_length(const IwahoriWeylGroup& g, int bound, ExecPolicy policy,
                                                      std::size_t cap = kDefaultCap);

struct LowerClosure {
    std::vector<IwahoriWeylElement> elements; // sorted by (length, element)
    std::vector<IwahoriWeylElement> maximal;  // elements covered by nothing in the set
};

/// {w : w <= t for some top t}, generated through Bruhat covers (single-letter deletions).
LowerClosure lower_closure(const IwahoriWeylGroup& g, const std::vector<IwahoriWeylElement>& tops, ExecPolicy policy,
                           std::size_t cap = kDefaultCap);

/// Maximal elements of an arbitrary finite set under the Bruhat order (pairwise test).
std::vector<IwahoriWeylElement> bruhat_maxima(const IwahoriWeylGroup& g, const std::vector<IwahoriWeylElement>& set,
                                              ExecPolicy policy);

/// out[i] = f(in[i]) evaluated serially or by an OpenMP loop.
std::vector<IwahoriWeylElement> map_elements(const std::vector<IwahoriWeylElement>& in,
                                             const std::function<IwahoriWeylElement(const IwahoriWeylElement&)>& f,
                                             ExecPolicy policy);

/// body(i) for i in [0, n); the first exception thrown by any iteration is rethrown.
void for_each_index(std::size_t n, ExecPolicy policy, const std::function<void(std::size_t)>& body);

/// Sorts by (length, element) and removes duplicates.
void sort_unique(const IwahoriWeylGroup& g, std::vector<IwahoriWeylElement>& v);

} // namespace ramsat
