#include "vknot/gauss.hpp"

namespace vknot {

EdgeStructure edge_structure(const LinkGaussCode& code)
{
    EdgeStructure es;
    const auto& comps = code.components();
    es.edge_of_entry.resize(comps.size());

    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& c = comps[ci];
        if (c.empty()) {
            es.free_components.push_back(ci);
            es.arcs.push_back({ci, {}, true});
            continue;
        }
        for (std::size_t k = 0; k < c.size(); ++k) {
            es.edge_of_entry[ci].push_back(es.edges.size());
            es.edges.push_back({ci, k, (k + 1) % c.size()});
        }
    }

    // Arcs: start right after each Under passage and run to the next one.
    std::vector<std::size_t> arc_of_edge(es.edges.size(), 0);
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& c = comps[ci];
        if (c.empty())
            continue;
        std::size_t first_under = c.size();
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k].passage == Passage::Under) {
                first_under = k;
                break;
            }
        if (first_under == c.size()) {
            Arc arc{ci, {}, true};
            for (std::size_t k = 0; k < c.size(); ++k) {
                arc_of_edge[es.edge_of_entry[ci][k]] = es.arcs.size();
                arc.edges.push_back(es.edge_of_entry[ci][k]);
            }
            es.arcs.push_back(std::move(arc));
            continue;
        }
        for (std::size_t step = 0; step < c.size(); ++step) {
            std::size_t k = (first_under + step) % c.size();
            if (c[k].passage == Passage::Under)
                es.arcs.push_back({ci, {}, false});
            std::size_t e = es.edge_of_entry[ci][k];
            arc_of_edge[e] = es.arcs.size() - 1;
            es.arcs.back().edges.push_back(e);
        }
    }

    CrossingIndex index(code);
    for (const auto& [label, info] : index.table()) {
        CrossingIncidence ci;
        ci.label = label;
        ci.sign = info.sign;
        auto in_edge = [&](EntryRef r) {
            std::size_t len = comps[r.component].size();
            return es.edge_of_entry[r.component][(r.index + len - 1) % len];
        };
        auto out_edge = [&](EntryRef r) { return es.edge_of_entry[r.component][r.index]; };
        ci.over_in = in_edge(info.over);
        ci.over_out = out_edge(info.over);
        ci.under_in = in_edge(info.under);
        ci.under_out = out_edge(info.under);
        ci.over_arc = arc_of_edge[ci.over_in];
        ci.under_in_arc = arc_of_edge[ci.under_in];
        ci.under_out_arc = arc_of_edge[ci.under_out];
        es.crossings.push_back(ci);
    }
    return es;
}

} // namespace vknot
