#include "vknot/gauss.hpp"

#include <functional>
#include <unordered_map>

namespace vknot {

namespace {

// Branch-and-bound search for the lexicographically least encoding over all
// component orders and rotations. A component contributes its length followed by
// one token per entry; labels are renumbered in order of first appearance, so for a
// fixed order and rotation the relabeling is already minimal.
struct Item {
    std::uint32_t label;
    std::uint32_t extra; // passage/sign bits, 0 for flat codes
};

class CanonicalSearch {
public:
    CanonicalSearch(const std::vector<std::vector<Item>>& comps, std::uint32_t extra_bits)
        : comps_(comps), shift_(extra_bits), used_(comps.size(), false)
    {
    }

    std::vector<std::uint64_t> run()
    {
        std::unordered_map<std::uint32_t, std::uint32_t> relabel;
        std::vector<std::uint64_t> cur;
        dfs(0, relabel, cur, false);
        return best_;
    }

private:
    // Appends a token; returns false if the prefix can no longer beat best_.
    bool push(std::vector<std::uint64_t>& cur, std::uint64_t token, bool& less) const
    {
        if (!less && have_best_) {
            std::uint64_t b = best_[cur.size()];
            if (token > b)
                return false;
            if (token < b)
                less = true;
        }
        cur.push_back(token);
        return true;
    }

    // Compares the prefix with best_; best_ may have improved since the prefix was built.
    int compare_prefix(const std::vector<std::uint64_t>& cur) const
    {
        if (!have_best_)
            return -1;
        for (std::size_t k = 0; k < cur.size(); ++k)
            if (cur[k] != best_[k])
                return cur[k] < best_[k] ? -1 : 1;
        return 0;
    }

    void dfs(std::size_t depth, std::unordered_map<std::uint32_t, std::uint32_t>& relabel,
             std::vector<std::uint64_t>& cur, bool less)
    {
        if (depth == comps_.size()) {
            if (!have_best_ || less) {
                best_ = cur;
                have_best_ = true;
            }
            return;
        }
        for (std::size_t ci = 0; ci < comps_.size(); ++ci) {
            if (used_[ci])
                continue;
            const auto& comp = comps_[ci];
            std::size_t rotations = comp.empty() ? 1 : comp.size();
            used_[ci] = true;
            for (std::size_t r = 0; r < rotations; ++r) {
                auto saved_relabel = relabel;
                std::size_t saved_size = cur.size();
                int cmp = compare_prefix(cur);
                if (cmp > 0) {
                    used_[ci] = false;
                    return;
                }
                bool l = cmp < 0;
                bool ok = push(cur, comp.size(), l);
                for (std::size_t k = 0; ok && k < comp.size(); ++k) {
                    const Item& it = comp[(r + k) % comp.size()];
                    auto [pos, inserted] = relabel.try_emplace(it.label, static_cast<std::uint32_t>(relabel.size() + 1));
                    std::uint64_t token = (static_cast<std::uint64_t>(pos->second) << shift_) | it.extra;
                    ok = push(cur, token, l);
                }
                if (ok)
                    dfs(depth + 1, relabel, cur, l);
                cur.resize(saved_size);
                relabel = std::move(saved_relabel);
            }
            used_[ci] = false;
        }
    }

    const std::vector<std::vector<Item>>& comps_;
    std::uint32_t shift_;
    std::vector<bool> used_;
    std::vector<std::uint64_t> best_;
    bool have_best_ = false;
};

} // namespace

LinkGaussCode canonicalize(const LinkGaussCode& code)
{
    std::vector<std::vector<Item>> comps;
    for (const auto& c : code.components()) {
        auto& out = comps.emplace_back();
        for (const auto& e : c) {
            std::uint32_t extra = (e.passage == Passage::Under ? 2u : 0u) | (e.sign == Sign::Negative ? 1u : 0u);
            out.push_back({e.label.id, extra});
        }
    }
    auto enc = CanonicalSearch(comps, 2).run();

    std::vector<Component> result;
    std::size_t pos = 0;
    while (pos < enc.size()) {
        std::size_t len = enc[pos++];
        Component c;
        for (std::size_t k = 0; k < len; ++k) {
            std::uint64_t token = enc[pos++];
            GaussEntry e;
            e.label = CrossingLabel(static_cast<std::uint32_t>(token >> 2));
            e.passage = (token & 2u) ? Passage::Under : Passage::Over;
            e.sign = (token & 1u) ? Sign::Negative : Sign::Positive;
            c.push_back(e);
        }
        result.push_back(std::move(c));
    }
    return LinkGaussCode(std::move(result));
}

FlatCode canonicalize_flat(const FlatCode& flat)
{
    std::vector<std::vector<Item>> comps;
    for (const auto& c : flat.components) {
        auto& out = comps.emplace_back();
        for (auto l : c)
            out.push_back({l.id, 0});
    }
    auto enc = CanonicalSearch(comps, 0).run();

    FlatCode result;
    std::size_t pos = 0;
    while (pos < enc.size()) {
        std::size_t len = enc[pos++];
        auto& c = result.components.emplace_back();
        for (std::size_t k = 0; k < len; ++k)
            c.emplace_back(static_cast<std::uint32_t>(enc[pos++]));
    }
    if (result.components.empty())
        result.components.emplace_back();
    return result;
}

} // namespace vknot
