#include "vknot/moves.hpp"

#include <algorithm>

namespace vknot {

const char* to_string(MoveKind kind)
{
    switch (kind) {
    case MoveKind::R1Add: return "R1Add";
    case MoveKind::R1Remove: return "R1Remove";
    case MoveKind::R2Add: return "R2Add";
    case MoveKind::R2Remove: return "R2Remove";
    case MoveKind::R3: return "R3";
    case MoveKind::ForbiddenOver: return "ForbiddenOver";
    }
    return "?";
}

namespace {

EntryRef next_of(const LinkGaussCode& code, EntryRef r)
{
    return {r.component, (r.index + 1) % code.components()[r.component].size()};
}

EntryRef prev_of(const LinkGaussCode& code, EntryRef r)
{
    std::size_t len = code.components()[r.component].size();
    return {r.component, (r.index + len - 1) % len};
}

bool valid_ref(const LinkGaussCode& code, EntryRef r)
{
    return r.component < code.num_components() && r.index < code.components()[r.component].size();
}

bool valid_gap(const LinkGaussCode& code, EntryRef g)
{
    return g.component < code.num_components() &&
           g.index < std::max<std::size_t>(code.components()[g.component].size(), 1);
}

bool adjacent(const LinkGaussCode& code, EntryRef a, EntryRef b)
{
    return valid_ref(code, a) && valid_ref(code, b) && a != b && next_of(code, a) == b;
}

LinkGaussCode erase_labels(const LinkGaussCode& code, std::initializer_list<CrossingLabel> labels)
{
    std::vector<Component> comps;
    for (const auto& c : code.components()) {
        auto& out = comps.emplace_back();
        for (const auto& e : c)
            if (std::find(labels.begin(), labels.end(), e.label) == labels.end())
                out.push_back(e);
    }
    return LinkGaussCode(std::move(comps));
}

// Triangle data read off three adjacent pairs; see r3_legal.
struct Triangle {
    CrossingLabel x, y, z;
    int sigma_t = 0, sigma_m = 0, sigma_b = 0;
};

// The pairs must be (top: O O), (middle: {U_x, O_z}), (bottom: {U_y, U_z}), each
// given in traversal order.
std::optional<Triangle> read_triangle(const LinkGaussCode& code, const std::array<EntryRef, 6>& p)
{
    const GaussEntry &t0 = code.at(p[0]), &t1 = code.at(p[1]);
    const GaussEntry &m0 = code.at(p[2]), &m1 = code.at(p[3]);
    const GaussEntry &b0 = code.at(p[4]), &b1 = code.at(p[5]);
    if (t0.passage != Passage::Over || t1.passage != Passage::Over)
        return std::nullopt;
    if (b0.passage != Passage::Under || b1.passage != Passage::Under)
        return std::nullopt;
    if (m0.passage == m1.passage)
        return std::nullopt;
    const GaussEntry& ux = m0.passage == Passage::Under ? m0 : m1;
    const GaussEntry& oz = m0.passage == Passage::Under ? m1 : m0;
    Triangle tri;
    tri.x = ux.label;
    tri.z = oz.label;
    tri.sigma_m = m0.passage == Passage::Under ? 1 : -1;
    if (t0.label == tri.x) {
        tri.y = t1.label;
        tri.sigma_t = 1;
    } else if (t1.label == tri.x) {
        tri.y = t0.label;
        tri.sigma_t = -1;
    } else {
        return std::nullopt;
    }
    if (b0.label == tri.y && b1.label == tri.z)
        tri.sigma_b = 1;
    else if (b0.label == tri.z && b1.label == tri.y)
        tri.sigma_b = -1;
    else
        return std::nullopt;
    if (tri.x == tri.y || tri.x == tri.z || tri.y == tri.z)
        return std::nullopt;
    return tri;
}

// A triangle of three strands can be flattened and pushed through the opposite
// crossing exactly when the crossing signs agree with the orientations of its
// sides: sign(x) sign(y) = sigma_m sigma_b and sign(x) sign(z) = sigma_t sigma_b.
bool r3_legal(const CrossingIndex& index, const Triangle& tri)
{
    int sx = to_int(index.at(tri.x).sign), sy = to_int(index.at(tri.y).sign), sz = to_int(index.at(tri.z).sign);
    return sx * sy == tri.sigma_m * tri.sigma_b && sx * sz == tri.sigma_t * tri.sigma_b;
}

std::vector<MoveSite> r1_remove_sites(const LinkGaussCode& code)
{
    std::vector<MoveSite> out;
    const auto& comps = code.components();
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const std::size_t len = comps[c].size();
        for (std::size_t k = 0; k < len && len >= 2; ++k) {
            if (len == 2 && k == 1)
                break;
            EntryRef a{c, k}, b = next_of(code, a);
            if (code.at(a).label == code.at(b).label)
                out.push_back({MoveKind::R1Remove, {a, b}});
        }
    }
    return out;
}

std::vector<EntryRef> all_gaps(const LinkGaussCode& code)
{
    std::vector<EntryRef> gaps;
    const auto& comps = code.components();
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (std::size_t k = 0; k < std::max<std::size_t>(comps[c].size(), 1); ++k)
            gaps.push_back({c, k});
    return gaps;
}

std::vector<MoveSite> r1_add_sites(const LinkGaussCode& code)
{
    std::vector<MoveSite> out;
    for (EntryRef g : all_gaps(code))
        for (bool over_first : {true, false})
            for (Sign s : {Sign::Positive, Sign::Negative})
                out.push_back({MoveKind::R1Add, {g}, s, over_first, true});
    return out;
}

std::vector<MoveSite> r2_add_sites(const LinkGaussCode& code)
{
    std::vector<MoveSite> out;
    auto gaps = all_gaps(code);
    for (EntryRef g1 : gaps)
        for (EntryRef g2 : gaps)
            for (Sign s : {Sign::Positive, Sign::Negative})
                for (bool parallel : {true, false}) {
                    if (g1 == g2) {
                        for (bool over_first : {true, false})
                            out.push_back({MoveKind::R2Add, {g1, g2}, s, over_first, parallel});
                    } else {
                        out.push_back({MoveKind::R2Add, {g1, g2}, s, true, parallel});
                    }
                }
    return out;
}

std::vector<MoveSite> r2_remove_sites(const LinkGaussCode& code)
{
    std::vector<MoveSite> out;
    std::set<std::pair<CrossingLabel, CrossingLabel>> seen;
    CrossingIndex index(code);
    const auto& comps = code.components();
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const std::size_t len = comps[c].size();
        for (std::size_t k = 0; k < len && len >= 2; ++k) {
            EntryRef o1{c, k}, o2 = next_of(code, o1);
            const GaussEntry &e1 = code.at(o1), &e2 = code.at(o2);
            if (e1.passage != Passage::Over || e2.passage != Passage::Over || e1.sign == e2.sign)
                continue;
            auto key = std::minmax(e1.label, e2.label);
            if (seen.count(key))
                continue;
            EntryRef u1 = index.at(e1.label).under, u2 = index.at(e2.label).under;
            if (adjacent(code, u1, u2) || adjacent(code, u2, u1)) {
                if (!adjacent(code, u1, u2))
                    std::swap(u1, u2);
                seen.insert(key);
                out.push_back({MoveKind::R2Remove, {o1, o2, u1, u2}});
            }
        }
    }
    return out;
}

std::vector<MoveSite> r3_sites(const LinkGaussCode& code)
{
    std::vector<MoveSite> out;
    std::set<std::vector<EntryRef>> seen;
    CrossingIndex index(code);
    const auto& comps = code.components();
    // Orders an adjacent pair {a, neighbour} by traversal.
    auto ordered = [&](EntryRef a, bool neighbour_is_next) {
        return neighbour_is_next ? std::pair{a, next_of(code, a)} : std::pair{prev_of(code, a), a};
    };
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (std::size_t k = 0; k < comps[c].size() && comps[c].size() >= 2; ++k) {
            EntryRef p{c, k}, q = next_of(code, p);
            if (code.at(p).passage != Passage::Over || code.at(q).passage != Passage::Over)
                continue;
            for (int assign = 0; assign < 2; ++assign) {
                CrossingLabel x = code.at(assign == 0 ? p : q).label;
                CrossingLabel y = code.at(assign == 0 ? q : p).label;
                if (x == y)
                    continue;
                EntryRef ux = index.at(x).under, uy = index.at(y).under;
                for (bool m_next : {true, false})
                    for (bool b_next : {true, false}) {
                        auto m = ordered(ux, m_next);
                        auto b = ordered(uy, b_next);
                        std::array<EntryRef, 6> pos{p, q, m.first, m.second, b.first, b.second};
                        std::vector<EntryRef> sorted(pos.begin(), pos.end());
                        std::sort(sorted.begin(), sorted.end());
                        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                            continue;
                        auto tri = read_triangle(code, pos);
                        if (!tri || tri->x != x || !r3_legal(index, *tri))
                            continue;
                        if (!seen.insert(sorted).second)
                            continue;
                        out.push_back({MoveKind::R3, std::vector<EntryRef>(pos.begin(), pos.end())});
                    }
            }
        }
    }
    return out;
}

std::vector<MoveSite> forbidden_sites(const LinkGaussCode& code)
{
    std::vector<MoveSite> out;
    const auto& comps = code.components();
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (comps[c].size() <= 2)
            continue;
        for (std::size_t k = 0; k < comps[c].size(); ++k) {
            EntryRef a{c, k}, b = next_of(code, a);
            if (code.at(a).passage == Passage::Over && code.at(b).passage == Passage::Over)
                out.push_back({MoveKind::ForbiddenOver, {a, b}});
        }
    }
    return out;
}

[[noreturn]] void stale(const MoveSite& site)
{
    throw StaleSiteError(std::string("move site does not apply: ") + to_string(site.kind));
}

LinkGaussCode swap_pairs(const LinkGaussCode& code, const std::vector<EntryRef>& pos)
{
    std::vector<Component> comps = code.components();
    for (std::size_t k = 0; k + 1 < pos.size(); k += 2)
        std::swap(comps[pos[k].component][pos[k].index], comps[pos[k + 1].component][pos[k + 1].index]);
    return LinkGaussCode(std::move(comps));
}

// Inserts runs of entries at gaps; gaps refer to the original indexing.
LinkGaussCode insert_runs(const LinkGaussCode& code, std::vector<std::pair<EntryRef, Component>> runs)
{
    std::sort(runs.begin(), runs.end(), [](const auto& a, const auto& b) { return b.first < a.first; });
    std::vector<Component> comps = code.components();
    for (auto& [gap, run] : runs) {
        auto& c = comps[gap.component];
        c.insert(c.begin() + static_cast<std::ptrdiff_t>(gap.index), run.begin(), run.end());
    }
    return LinkGaussCode(std::move(comps));
}

} // namespace

std::vector<MoveSite> enumerate_sites(const LinkGaussCode& code, MoveKind kind)
{
    switch (kind) {
    case MoveKind::R1Add: return r1_add_sites(code);
    case MoveKind::R1Remove: return r1_remove_sites(code);
    case MoveKind::R2Add: return r2_add_sites(code);
    case MoveKind::R2Remove: return r2_remove_sites(code);
    case MoveKind::R3: return r3_sites(code);
    case MoveKind::ForbiddenOver: return forbidden_sites(code);
    }
    return {};
}

LinkGaussCode apply_move(const LinkGaussCode& code, const MoveSite& site)
{
    const auto& pos = site.positions;
    switch (site.kind) {
    case MoveKind::R1Add: {
        if (pos.size() != 1 || !valid_gap(code, pos[0]))
            stale(site);
        CrossingLabel l(code.max_label() + 1);
        GaussEntry o{l, Passage::Over, site.sign}, u{l, Passage::Under, site.sign};
        Component run = site.over_first ? Component{o, u} : Component{u, o};
        return insert_runs(code, {{pos[0], run}});
    }
    case MoveKind::R1Remove: {
        if (pos.size() != 2 || !adjacent(code, pos[0], pos[1]) || code.at(pos[0]).label != code.at(pos[1]).label)
            stale(site);
        return erase_labels(code, {code.at(pos[0]).label});
    }
    case MoveKind::R2Add: {
        if (pos.size() != 2 || !valid_gap(code, pos[0]) || !valid_gap(code, pos[1]))
            stale(site);
        CrossingLabel a(code.max_label() + 1), b(code.max_label() + 2);
        Sign sa = site.sign, sb = negate(site.sign);
        Component over{{a, Passage::Over, sa}, {b, Passage::Over, sb}};
        Component under = site.parallel ? Component{{a, Passage::Under, sa}, {b, Passage::Under, sb}}
                                        : Component{{b, Passage::Under, sb}, {a, Passage::Under, sa}};
        if (pos[0] == pos[1]) {
            Component run = site.over_first ? over : under;
            const Component& tail = site.over_first ? under : over;
            run.insert(run.end(), tail.begin(), tail.end());
            return insert_runs(code, {{pos[0], run}});
        }
        return insert_runs(code, {{pos[0], over}, {pos[1], under}});
    }
    case MoveKind::R2Remove: {
        if (pos.size() != 4 || !adjacent(code, pos[0], pos[1]) || !adjacent(code, pos[2], pos[3]))
            stale(site);
        const GaussEntry &o1 = code.at(pos[0]), &o2 = code.at(pos[1]);
        const GaussEntry &u1 = code.at(pos[2]), &u2 = code.at(pos[3]);
        if (o1.passage != Passage::Over || o2.passage != Passage::Over || o1.sign == o2.sign ||
            u1.passage != Passage::Under || u2.passage != Passage::Under)
            stale(site);
        if (!((u1.label == o1.label && u2.label == o2.label) || (u1.label == o2.label && u2.label == o1.label)))
            stale(site);
        return erase_labels(code, {o1.label, o2.label});
    }
    case MoveKind::R3: {
        if (pos.size() != 6)
            stale(site);
        std::array<EntryRef, 6> p;
        for (std::size_t k = 0; k < 6; ++k) {
            if (!valid_ref(code, pos[k]))
                stale(site);
            p[k] = pos[k];
        }
        for (std::size_t k = 0; k < 6; k += 2)
            if (!adjacent(code, p[k], p[k + 1]))
                stale(site);
        auto tri = read_triangle(code, p);
        if (!tri || !r3_legal(CrossingIndex(code), *tri))
            stale(site);
        return swap_pairs(code, pos);
    }
    case MoveKind::ForbiddenOver: {
        if (pos.size() != 2 || !adjacent(code, pos[0], pos[1]) || code.at(pos[0]).passage != Passage::Over ||
            code.at(pos[1]).passage != Passage::Over)
            stale(site);
        return swap_pairs(code, pos);
    }
    }
    stale(site);
}

} // namespace vknot
