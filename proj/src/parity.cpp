#include "kframe/parity.hpp"

#include <algorithm>
#include <deque>

namespace kframe::parity {

TwoColoring apply_switch(const Multigraph &g, const TwoColoring &c, VertexId v) {
    if (!g.has_vertex(v))
        throw InvalidInput("unknown vertex " + std::to_string(v));
    TwoColoring out = c;
    for (EdgeId id : g.incident(v)) {
        if (g.edge(id).is_loop())
            continue;
        Tone &t = out.at(id);
        t = t == Tone::Red ? Tone::Blue : Tone::Red;
    }
    return out;
}

TwoColoring apply_switches(const Multigraph &g, const TwoColoring &c, const SwitchSequence &seq) {
    TwoColoring out = c;
    for (VertexId v : seq)
        out = apply_switch(g, out, v);
    return out;
}

std::optional<SwitchSequence> switchable_to_blue(const Multigraph &g, const TwoColoring &c) {
    EdgeSet blue;
    for (const Edge &e : g.edges())
        if (c.at(e.id) == Tone::Blue)
            blue.insert(e.id);
    Contraction gb = contract_edges(g, blue, false);
    auto sides = is_bipartite(gb.graph);
    if (!sides)
        return std::nullopt;
    SwitchSequence seq;
    for (VertexId v : g.vertices())
        if (sides->side_b.contains(gb.vertex_map.at(v)))
            seq.push_back(v);
    return seq;
}

std::set<int> resolve_two_row(const rows::RowGraph &r2) {
    if (r2.rows() != 2)
        throw InvalidInput("expected a 2-row graph");
    Multigraph rc = rows::row_contract(r2);
    if (rc.edge_count() != spanning_forest(rc).size())
        throw InvalidInput("R_C of the 2-row graph contains a cycle");
    TwoColoring c;
    for (std::size_t e = 0; e < r2.edge_count(); ++e)
        c[static_cast<EdgeId>(e)] = r2.edges()[e].u.row != r2.edges()[e].v.row ? Tone::Red : Tone::Blue;
    auto seq = switchable_to_blue(rc, c);
    if (!seq)
        throw InvariantViolation("a forest failed the switching test");
    return {seq->begin(), seq->end()};
}

EdgeSet acyclic_t_join(const Multigraph &g, const VertexSet &t) {
    for (VertexId v : t)
        if (!g.has_vertex(v))
            throw InvalidInput("t contains unknown vertex " + std::to_string(v));
    for (const auto &comp : components(g)) {
        int hits = 0;
        for (VertexId v : comp)
            hits += t.contains(v) ? 1 : 0;
        if (hits % 2 != 0)
            throw InvalidInput("t has an odd number of vertices in the component of vertex " +
                               std::to_string(comp.front()));
    }
    Multigraph forest = g.spanning_subgraph(spanning_forest(g));
    std::map<VertexId, EdgeId> parent_edge;
    std::vector<VertexId> order;
    std::set<VertexId> seen;
    for (const auto &comp : components(forest)) {
        VertexId root = comp.front();
        std::deque<VertexId> queue{root};
        seen.insert(root);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (EdgeId id : forest.incident(v)) {
                VertexId w = forest.edge(id).other(v);
                if (seen.insert(w).second) {
                    parent_edge[w] = id;
                    queue.push_back(w);
                }
            }
        }
    }
    std::set<VertexId> odd(t.begin(), t.end());
    EdgeSet join;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        VertexId v = *it;
        if (!odd.contains(v) || !parent_edge.contains(v))
            continue;
        EdgeId id = parent_edge.at(v);
        join.insert(id);
        odd.erase(v);
        VertexId p = forest.edge(id).other(v);
        if (!odd.erase(p))
            odd.insert(p);
    }
    if (!odd.empty())
        throw InvariantViolation("t-join left unmatched vertices");
    return join;
}

} // namespace kframe::parity
