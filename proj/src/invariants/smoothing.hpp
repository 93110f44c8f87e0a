#pragma once

#include "vknot/gauss.hpp"

#include <numeric>
#include <vector>

namespace vknot::detail {

// Edges as union-find nodes and, per crossing, the edge pairs joined by each smoothing.
struct SmoothingGraph {
    struct Crossing {
        std::size_t over_in, over_out, under_in, under_out;
        bool positive;
    };
    std::size_t edges = 0;
    std::size_t free_circles = 0;
    std::vector<Crossing> crossings; // ascending label order

    explicit SmoothingGraph(const LinkGaussCode& code)
    {
        EdgeStructure es = edge_structure(code);
        edges = es.edges.size();
        free_circles = es.free_components.size();
        for (const auto& x : es.crossings)
            crossings.push_back({x.over_in, x.over_out, x.under_in, x.under_out, x.sign == Sign::Positive});
    }

    // b_mask bit k set: crossing k takes its B-smoothing.
    std::size_t loops(std::uint64_t b_mask, std::vector<std::size_t>& parent) const
    {
        parent.resize(edges);
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        std::size_t comps = edges;
        auto find = [&](std::size_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        auto join = [&](std::size_t a, std::size_t b) {
            a = find(a);
            b = find(b);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        };
        for (std::size_t k = 0; k < crossings.size(); ++k) {
            const Crossing& c = crossings[k];
            bool b = (b_mask >> k) & 1;
            if (b != c.positive) { // oriented reconnection
                join(c.under_in, c.over_out);
                join(c.over_in, c.under_out);
            } else {
                join(c.under_in, c.over_in);
                join(c.under_out, c.over_out);
            }
        }
        return comps + free_circles;
    }
};

} // namespace vknot::detail
