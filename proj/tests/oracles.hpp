#pragma once

// Test-only brute-force oracles, written independently of the library's
// search and construction code paths.

#include "kframe/graph.hpp"

#include <functional>
#include <map>
#include <vector>

namespace oracle {

using kframe::Edge;
using kframe::EdgeId;
using kframe::Multigraph;
using kframe::VertexId;

/// Every map edge -> {1,2,3}, enumerated as base-3 counters.
inline void for_each_edge_3coloring(const Multigraph &g, const std::function<void(const std::map<EdgeId, int> &)> &visit) {
    std::vector<EdgeId> ids;
    for (const Edge &e : g.edges())
        ids.push_back(e.id);
    std::vector<int> digit(ids.size(), 0);
    while (true) {
        std::map<EdgeId, int> c;
        for (std::size_t i = 0; i < ids.size(); ++i)
            c[ids[i]] = digit[i] + 1;
        visit(c);
        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == 3)
            digit[i++] = 0;
        if (i == digit.size())
            return;
    }
}

inline bool proper(const Multigraph &g, const std::map<EdgeId, int> &c) {
    for (VertexId v : g.vertices()) {
        int seen[4] = {0, 0, 0, 0};
        for (EdgeId id : g.incident(v))
            if (++seen[c.at(id)] > 1)
                return false;
    }
    return true;
}

/// The edges not colored `skip` form one closed walk through all vertices.
inline bool pair_hamiltonian(const Multigraph &g, const std::map<EdgeId, int> &c, int skip) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const Edge &e : g.edges())
        if (c.at(e.id) != skip) {
            adj[e.a].push_back(e.b);
            adj[e.b].push_back(e.a);
        }
    std::map<VertexId, bool> seen;
    std::vector<VertexId> stack{g.vertices()[0]};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        if (seen[v])
            continue;
        seen[v] = true;
        for (VertexId w : adj[v])
            stack.push_back(w);
    }
    for (VertexId v : g.vertices())
        if (!seen[v] || adj[v].size() != 2)
            return false;
    return true;
}

inline bool kotzig(const Multigraph &g, const std::map<EdgeId, int> &c) {
    return proper(g, c) && pair_hamiltonian(g, c, 1) && pair_hamiltonian(g, c, 2) && pair_hamiltonian(g, c, 3);
}

/// Plain backtracking for a proper 3-edge-coloring, no Kotzig pruning.
inline bool has_proper_3_edge_coloring(const Multigraph &g) {
    std::vector<Edge> es(g.edges().begin(), g.edges().end());
    std::map<EdgeId, int> c;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == es.size())
            return true;
        for (int col = 1; col <= 3; ++col) {
            bool ok = !es[i].is_loop();
            for (VertexId v : {es[i].a, es[i].b})
                for (EdgeId other : g.incident(v))
                    if (other != es[i].id && c.contains(other) && c[other] == col)
                        ok = false;
            if (!ok)
                continue;
            c[es[i].id] = col;
            if (rec(i + 1))
                return true;
            c.erase(es[i].id);
        }
        return false;
    };
    return rec(0);
}

} // namespace oracle
