#include "vknot/invariants.hpp"

#include <stdexcept>

namespace vknot {

ArrowSum arrow_expansion(const LinkGaussCode& code, std::size_t max_arrows)
{
    if (code.num_components() != 1)
        throw std::invalid_argument("arrow expansion needs a single component");
    auto labels = code.labels();
    const std::size_t n = labels.size();
    if (n > 24)
        throw std::invalid_argument("arrow expansion limited to 24 chords");
    std::map<CrossingLabel, std::size_t> bit;
    for (std::size_t k = 0; k < n; ++k)
        bit[labels[k]] = k;

    // Chords are arrows from the Over passage (tail) to the Under passage (head);
    // a sub-diagram is the word restricted to its chords, up to rotation and relabeling.
    ArrowSum sum;
    const auto& word = code.components()[0];
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_arrows)
            continue;
        Component sub;
        for (const auto& e : word)
            if ((mask >> bit[e.label]) & 1)
                sub.push_back(e);
        std::string key = render_gauss(canonicalize(LinkGaussCode({sub})));
        ++sum[key];
    }
    return sum;
}

} // namespace vknot
