#include "vknot/moves.hpp"

namespace vknot {

namespace {

template <class F>
LinkGaussCode rewrite_label(const LinkGaussCode& code, CrossingLabel label, F&& f)
{
    CrossingIndex index(code);
    index.at(label); // throws for an unknown label
    std::vector<Component> comps = code.components();
    for (auto& c : comps)
        for (auto& e : c)
            if (e.label == label)
                f(e);
    return LinkGaussCode(std::move(comps));
}

} // namespace

LinkGaussCode switch_crossing(const LinkGaussCode& code, CrossingLabel label)
{
    return rewrite_label(code, label, [](GaussEntry& e) {
        e.passage = opposite(e.passage);
        e.sign = negate(e.sign);
    });
}

LinkGaussCode virtualize_crossing(const LinkGaussCode& code, CrossingLabel label)
{
    return rewrite_label(code, label, [](GaussEntry& e) { e.sign = negate(e.sign); });
}

std::set<CrossingLabel> descending_switch_set(const LinkGaussCode& code, std::size_t basepoint)
{
    if (code.num_components() != 1)
        throw std::invalid_argument("descending switch set needs a single component");
    const auto& word = code.components()[0];
    std::set<CrossingLabel> seen, out;
    if (word.empty())
        return out;
    if (basepoint >= word.size())
        throw std::out_of_range("basepoint outside the code");
    for (std::size_t k = 0; k < word.size(); ++k) {
        const GaussEntry& e = word[(basepoint + k) % word.size()];
        if (seen.insert(e.label).second && e.passage == Passage::Under)
            out.insert(e.label);
    }
    return out;
}

LinkGaussCode virt_construction(const LinkGaussCode& code)
{
    LinkGaussCode out = code;
    for (CrossingLabel l : descending_switch_set(code, 0))
        out = virtualize_crossing(out, l);
    return out;
}

} // namespace vknot
