#include "vknot/moves.hpp"

#include <random>

namespace vknot {

std::vector<LinkGaussCode> random_walk(const LinkGaussCode& code, std::size_t steps, std::uint64_t seed,
                                       const WalkOptions& options)
{
    std::mt19937_64 rng(seed);
    const std::size_t cap = options.max_crossings ? options.max_crossings : code.num_crossings() + 2;
    std::vector<MoveKind> kinds{MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove,
                                MoveKind::R3};
    if (options.allow_forbidden)
        kinds.push_back(MoveKind::ForbiddenOver);

    std::vector<LinkGaussCode> walk{code};
    walk.reserve(steps + 1);
    for (std::size_t step = 0; step < steps; ++step) {
        const LinkGaussCode& cur = walk.back();
        std::vector<std::vector<MoveSite>> options_by_kind;
        std::vector<std::vector<MoveSite>> over_cap;
        for (MoveKind k : kinds) {
            std::size_t added = k == MoveKind::R1Add ? 1 : k == MoveKind::R2Add ? 2 : 0;
            auto sites = enumerate_sites(cur, k);
            if (sites.empty())
                continue;
            (cur.num_crossings() + added > cap ? over_cap : options_by_kind).push_back(std::move(sites));
        }
        // std::uniform_int_distribution is not portable across standard libraries.
        auto& pool = options_by_kind.empty() ? over_cap : options_by_kind;
        const auto& sites = pool[rng() % pool.size()];
        const MoveSite& site = sites[rng() % sites.size()];
        walk.push_back(apply_move(cur, site));
    }
    return walk;
}

} // namespace vknot
