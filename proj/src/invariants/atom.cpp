#include "vknot/invariants.hpp"

#include <numeric>
#include <queue>

namespace vknot {

namespace {

// Loops of the all-A or all-B state traced over edge ends (2e = tail, 2e+1 = head).
// loop_of[e] is the loop running along edge e, dir[e] is +1 if it runs tail to head.
struct TracedState {
    std::size_t loops = 0;
    std::vector<std::size_t> loop_of;
    std::vector<int> dir;
};

TracedState trace(const EdgeStructure& es, bool all_b)
{
    const std::size_t ends = 2 * es.edges.size();
    std::vector<std::size_t> partner(ends);
    for (const auto& x : es.crossings) {
        std::size_t ui = 2 * x.under_in + 1, oi = 2 * x.over_in + 1;
        std::size_t uo = 2 * x.under_out, oo = 2 * x.over_out;
        bool oriented = all_b != (x.sign == Sign::Positive);
        auto link = [&](std::size_t a, std::size_t b) {
            partner[a] = b;
            partner[b] = a;
        };
        if (oriented) {
            link(ui, oo);
            link(oi, uo);
        } else {
            link(ui, oi);
            link(uo, oo);
        }
    }
    TracedState st;
    st.loop_of.assign(es.edges.size(), SIZE_MAX);
    st.dir.assign(es.edges.size(), 0);
    for (std::size_t e0 = 0; e0 < es.edges.size(); ++e0) {
        if (st.loop_of[e0] != SIZE_MAX)
            continue;
        std::size_t at = 2 * e0; // enter edge e0 at its tail
        while (st.loop_of[at / 2] == SIZE_MAX) {
            std::size_t e = at / 2;
            st.loop_of[e] = st.loops;
            st.dir[e] = at % 2 == 0 ? 1 : -1;
            std::size_t leave = at ^ 1; // run along the edge to its other end
            at = partner[leave];
        }
        ++st.loops;
    }
    return st;
}

std::size_t connected_pieces(const EdgeStructure& es)
{
    const std::size_t n = es.crossings.size();
    std::vector<std::size_t> crossing_of_edge_end(2 * es.edges.size());
    for (std::size_t k = 0; k < n; ++k) {
        const auto& x = es.crossings[k];
        crossing_of_edge_end[2 * x.under_in + 1] = crossing_of_edge_end[2 * x.over_in + 1] = k;
        crossing_of_edge_end[2 * x.under_out] = crossing_of_edge_end[2 * x.over_out] = k;
    }
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t pieces = n;
    for (std::size_t e = 0; e < es.edges.size(); ++e) {
        std::size_t a = find(crossing_of_edge_end[2 * e]), b = find(crossing_of_edge_end[2 * e + 1]);
        if (a != b) {
            parent[a] = b;
            --pieces;
        }
    }
    return pieces;
}

} // namespace

AtomProfile atom_profile(const LinkGaussCode& code)
{
    EdgeStructure es = edge_structure(code);
    const std::size_t free = es.free_components.size();
    AtomProfile p;
    TracedState a = trace(es, false), b = trace(es, true);
    p.a_loops = a.loops + free;
    p.b_loops = b.loops + free;
    const int n = static_cast<int>(es.crossings.size());
    // Each free circle is a sphere of its own and is left out of the surface count.
    p.euler_characteristic = n - 2 * n + static_cast<int>(a.loops + b.loops);
    const int pieces = static_cast<int>(connected_pieces(es));

    // Faces are the loops of both states; a band (edge) borders one of each, and
    // coherent orientations of the two faces must run along it in opposite senses.
    const std::size_t faces = a.loops + b.loops;
    std::vector<std::vector<std::pair<std::size_t, int>>> adj(faces);
    for (std::size_t e = 0; e < es.edges.size(); ++e) {
        std::size_t fa = a.loop_of[e], fb = a.loops + b.loop_of[e];
        int rel = -a.dir[e] * b.dir[e];
        adj[fa].push_back({fb, rel});
        adj[fb].push_back({fa, rel});
    }
    std::vector<int> eps(faces, 0);
    for (std::size_t s = 0; s < faces && p.orientable; ++s) {
        if (eps[s])
            continue;
        eps[s] = 1;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty() && p.orientable) {
            std::size_t u = q.front();
            q.pop();
            for (auto [v, rel] : adj[u]) {
                int want = eps[u] * rel;
                if (!eps[v]) {
                    eps[v] = want;
                    q.push(v);
                } else if (eps[v] != want) {
                    p.orientable = false;
                    break;
                }
            }
        }
    }
    const int deficit = 2 * pieces - p.euler_characteristic;
    p.genus = p.orientable ? deficit / 2 : deficit;
    return p;
}

} // namespace vknot
