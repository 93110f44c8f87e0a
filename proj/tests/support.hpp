#pragma once

// Oracles and generators shared by the test binaries. Everything here is written
// directly from the definitions and avoids the library code paths it checks.

#include "vknot/algebra.hpp"
#include "vknot/coloring.hpp"
#include "vknot/gauss.hpp"
#include "vknot/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace vknot::testing {

/// Random valid code: n crossings spread over `components` cycles (components may be empty).
inline LinkGaussCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t components = 1)
{
    std::vector<GaussEntry> entries;
    for (std::uint32_t l = 1; l <= n; ++l) {
        Sign s = rng() % 2 ? Sign::Positive : Sign::Negative;
        entries.push_back({CrossingLabel(l), Passage::Over, s});
        entries.push_back({CrossingLabel(l), Passage::Under, s});
    }
    std::shuffle(entries.begin(), entries.end(), rng);
    std::vector<Component> comps(components);
    for (std::size_t k = 0; k < entries.size(); ++k)
        comps[components == 1 ? 0 : rng() % components].push_back(entries[k]);
    return LinkGaussCode(comps);
}

/// Laplace expansion along the first row.
template <class R>
R cofactor_det(const Matrix<R>& m)
{
    const std::size_t n = m.rows();
    if (n == 0)
        return RingTraits<R>::one();
    if (n == 1)
        return m(0, 0);
    R total;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero())
            continue;
        R term = m(0, c) * cofactor_det(m.without(0, c));
        if (c % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

/// The four passages of every crossing located directly in the code.
struct Ends {
    // (component, index) of the over and under entries
    std::size_t oc, oi, uc, ui;
    int sign;
};

inline std::map<std::uint32_t, Ends> locate(const LinkGaussCode& code)
{
    std::map<std::uint32_t, Ends> out;
    for (std::size_t c = 0; c < code.num_components(); ++c)
        for (std::size_t k = 0; k < code.components()[c].size(); ++k) {
            const auto& e = code.components()[c][k];
            auto& x = out[e.label.id];
            x.sign = to_int(e.sign);
            if (e.passage == Passage::Over) {
                x.oc = c;
                x.oi = k;
            } else {
                x.uc = c;
                x.ui = k;
            }
        }
    return out;
}

/// Global id of the segment that leaves entry k of component c; offsets[c] is the first id.
inline std::vector<std::size_t> segment_offsets(const LinkGaussCode& code)
{
    std::vector<std::size_t> off{0};
    for (const auto& comp : code.components())
        off.push_back(off.back() + comp.size());
    return off;
}

/// Bracket by walking every state: each segment has a tail end (2s) and head end
/// (2s+1); a smoothing pairs the four ends at a crossing, a segment pairs its own two
/// ends, and loops are the cycles of the resulting 2-regular graph. Crossingless
/// components each add one loop. Returned as exponent -> coefficient in A.
inline std::map<int, std::int64_t> bracket_oracle(const LinkGaussCode& code)
{
    const auto ends = locate(code);
    const auto off = segment_offsets(code);
    const std::size_t segs = off.back();
    std::size_t free_circles = 0;
    for (const auto& comp : code.components())
        free_circles += comp.empty();
    auto seg_in = [&](std::size_t c, std::size_t k) {
        std::size_t len = code.components()[c].size();
        return off[c] + (k + len - 1) % len;
    };
    auto seg_out = [&](std::size_t c, std::size_t k) { return off[c] + k; };

    std::vector<Ends> xs;
    for (const auto& [l, e] : ends)
        xs.push_back(e);
    const std::size_t n = xs.size();
    std::map<int, std::int64_t> total;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<std::size_t> partner(2 * segs);
        int a_count = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const auto& x = xs[k];
            std::size_t oin = 2 * seg_in(x.oc, x.oi) + 1, oout = 2 * seg_out(x.oc, x.oi);
            std::size_t uin = 2 * seg_in(x.uc, x.ui) + 1, uout = 2 * seg_out(x.uc, x.ui);
            bool b = (mask >> k) & 1;
            a_count += !b;
            // The oriented reconnection is the A-smoothing at a positive crossing.
            bool oriented = b == (x.sign < 0);
            if (oriented) {
                partner[uin] = oout, partner[oout] = uin;
                partner[oin] = uout, partner[uout] = oin;
            } else {
                partner[uin] = oin, partner[oin] = uin;
                partner[uout] = oout, partner[oout] = uout;
            }
        }
        std::vector<char> seen(2 * segs, 0);
        std::size_t loops = free_circles;
        for (std::size_t start = 0; start < 2 * segs; ++start) {
            if (seen[start])
                continue;
            ++loops;
            std::size_t cur = start;
            while (!seen[cur]) {
                seen[cur] = 1;
                std::size_t other = cur ^ 1; // the far end of the same segment
                seen[other] = 1;
                cur = partner[other];
            }
        }
        // A^(a - b) * d^(loops - 1), d = -A^2 - A^-2
        std::map<int, std::int64_t> term{{a_count - static_cast<int>(n - a_count), 1}};
        for (std::size_t k = 1; k < loops; ++k) {
            std::map<int, std::int64_t> next;
            for (auto [e, c] : term) {
                next[e + 2] -= c;
                next[e - 2] -= c;
            }
            term = next;
        }
        for (auto [e, c] : term)
            total[e] += c;
    }
    for (auto it = total.begin(); it != total.end();)
        it = it->second == 0 ? total.erase(it) : std::next(it);
    return total;
}

inline std::map<int, std::int64_t> to_map(const LaurentPoly& p)
{
    std::map<int, std::int64_t> m;
    for (auto [e, c] : p.terms())
        m[e] = c;
    return m;
}

/// Every labeling of the segments, checked crossing by crossing.
inline std::uint64_t brute_biquandle_colorings(const LinkGaussCode& code, const FiniteBiquandle& bq)
{
    const auto ends = locate(code);
    const auto off = segment_offsets(code);
    const std::size_t segs = off.back();
    std::size_t free_circles = 0;
    for (const auto& comp : code.components())
        free_circles += comp.empty();
    auto seg_in = [&](std::size_t c, std::size_t k) {
        std::size_t len = code.components()[c].size();
        return off[c] + (k + len - 1) % len;
    };
    std::vector<std::uint32_t> label(segs, 0);
    std::uint64_t count = 0;
    for (;;) {
        bool ok = true;
        for (const auto& [l, x] : ends) {
            auto ui = label[seg_in(x.uc, x.ui)], oi = label[seg_in(x.oc, x.oi)];
            auto uo = label[off[x.uc] + x.ui], oo = label[off[x.oc] + x.oi];
            if (x.sign > 0)
                ok = uo == bq.u(ui, oi) && oo == bq.d(oi, ui);
            else
                ok = uo == bq.ub(ui, oi) && oo == bq.db(oi, ui);
            if (!ok)
                break;
        }
        count += ok;
        std::size_t k = 0;
        while (k < segs && ++label[k] == bq.n)
            label[k++] = 0;
        if (k == segs)
            break;
    }
    for (std::size_t k = 0; k < free_circles; ++k)
        count *= bq.n;
    return count;
}

/// Every labeling of the arcs. Arcs are found by walking from each under passage to
/// the next one; an arc id is attached to every segment.
inline std::uint64_t brute_iq_colorings(const LinkGaussCode& code, const FiniteQuandle& q)
{
    const auto off = segment_offsets(code);
    std::vector<std::size_t> arc_of(off.back(), 0);
    std::size_t arcs = 0;
    for (std::size_t c = 0; c < code.num_components(); ++c) {
        const auto& comp = code.components()[c];
        if (comp.empty()) {
            ++arcs;
            continue;
        }
        std::size_t start = comp.size();
        for (std::size_t k = 0; k < comp.size(); ++k)
            if (comp[k].passage == Passage::Under) {
                start = k;
                break;
            }
        if (start == comp.size()) {
            for (std::size_t k = 0; k < comp.size(); ++k)
                arc_of[off[c] + k] = arcs;
            ++arcs;
            continue;
        }
        for (std::size_t step = 0; step < comp.size(); ++step) {
            std::size_t k = (start + step) % comp.size();
            if (comp[k].passage == Passage::Under)
                ++arcs;
            arc_of[off[c] + k] = arcs - 1;
        }
    }
    const auto ends = locate(code);
    auto seg_in = [&](std::size_t c, std::size_t k) {
        std::size_t len = code.components()[c].size();
        return off[c] + (k + len - 1) % len;
    };
    std::vector<std::uint32_t> label(arcs, 0);
    std::uint64_t count = 0;
    for (;;) {
        bool ok = true;
        for (const auto& [l, x] : ends) {
            auto in = label[arc_of[seg_in(x.uc, x.ui)]], out = label[arc_of[off[x.uc] + x.ui]];
            auto over = label[arc_of[off[x.oc] + x.oi]];
            if (out != q.act(in, over)) {
                ok = false;
                break;
            }
        }
        count += ok;
        std::size_t k = 0;
        while (k < arcs && ++label[k] == q.n)
            label[k++] = 0;
        if (k == arcs)
            break;
    }
    return count;
}

inline LaurentPoly random_poly(std::mt19937_64& rng, char var = 't', int span = 3, int coeff = 3)
{
    std::vector<LaurentPoly::Term> terms;
    std::size_t count = rng() % 4;
    for (std::size_t k = 0; k < count; ++k)
        terms.push_back({static_cast<int>(rng() % (2 * span + 1)) - span,
                         static_cast<Coeff>(rng() % (2 * coeff + 1)) - coeff});
    return LaurentPoly(terms, var);
}

inline LaurentPoly2 random_poly2(std::mt19937_64& rng)
{
    std::vector<LaurentPoly2::Term> terms;
    std::size_t count = rng() % 4;
    for (std::size_t k = 0; k < count; ++k)
        terms.push_back({{static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 5) - 2},
                         static_cast<Coeff>(rng() % 7) - 3});
    return LaurentPoly2(terms);
}

inline QuatLaurent random_quat(std::mt19937_64& rng)
{
    return {random_poly(rng, 't', 2, 2), random_poly(rng, 't', 2, 2), random_poly(rng, 't', 2, 2),
            random_poly(rng, 't', 2, 2)};
}

} // namespace vknot::testing
