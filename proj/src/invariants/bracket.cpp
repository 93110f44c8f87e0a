#include "vknot/invariants.hpp"

#include "smoothing.hpp"

#include <stdexcept>

namespace vknot {

std::size_t loop_count(const LinkGaussCode& code, const State& state)
{
    detail::SmoothingGraph g(code);
    auto labels = code.labels();
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        auto it = state.find(labels[k]);
        if (it == state.end())
            throw std::invalid_argument("state has no smoothing for crossing " + std::to_string(labels[k].id));
        if (it->second == Smoothing::B)
            mask |= std::uint64_t{1} << k;
    }
    std::vector<std::size_t> scratch;
    return g.loops(mask, scratch);
}

LaurentPoly bracket(const LinkGaussCode& code)
{
    detail::SmoothingGraph g(code);
    const std::size_t n = g.crossings.size();
    if (n > 40)
        throw std::invalid_argument("bracket state sum limited to 40 crossings");
    const std::size_t max_loops = g.edges + g.free_circles + 1;

    // histogram[number of A-smoothings][loops]
    std::vector<std::vector<std::int64_t>> histogram(n + 1, std::vector<std::int64_t>(max_loops + 1, 0));
    std::vector<std::size_t> scratch;
    const std::uint64_t states = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < states; ++mask) {
        std::size_t a = n - static_cast<std::size_t>(__builtin_popcountll(mask));
        ++histogram[a][g.loops(mask, scratch)];
    }

    const LaurentPoly d({{2, -1}, {-2, -1}}, 'A');
    std::vector<LaurentPoly> d_pow{LaurentPoly::constant(1, 'A')};
    for (std::size_t k = 1; k <= max_loops; ++k)
        d_pow.push_back(d_pow.back() * d);

    LaurentPoly total('A');
    for (std::size_t a = 0; a <= n; ++a) {
        LaurentPoly by_loops('A');
        for (std::size_t l = 1; l <= max_loops; ++l)
            if (histogram[a][l])
                by_loops += LaurentPoly::constant(histogram[a][l], 'A') * d_pow[l - 1];
        total += by_loops.shifted(static_cast<int>(a) - static_cast<int>(n - a));
    }
    return total;
}

int writhe(const LinkGaussCode& code)
{
    int w = 0;
    const CrossingIndex index(code);
    for (const auto& [label, info] : index.table())
        w += to_int(info.sign);
    return w;
}

LaurentPoly f_polynomial(const LinkGaussCode& code)
{
    int w = writhe(code);
    LaurentPoly f = bracket(code).shifted(-3 * w);
    return w % 2 ? -f : f;
}

std::optional<LaurentPoly> jones_from_f(const LaurentPoly& f)
{
    std::vector<LaurentPoly::Term> terms;
    for (auto [e, c] : f.terms()) {
        if (e % 4 != 0)
            return std::nullopt;
        terms.emplace_back(-e / 4, c);
    }
    return LaurentPoly(std::move(terms), 't');
}

} // namespace vknot
