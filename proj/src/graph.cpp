#include "kframe/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace kframe {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

Multigraph::Multigraph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!vertex_index_.emplace(vertices_[i], i).second)
            throw InvalidInput("duplicate vertex id " + std::to_string(vertices_[i]));
    }
    incidence_.resize(vertices_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge &e = edges_[i];
        if (!edge_index_.emplace(e.id, i).second)
            throw InvalidInput("duplicate edge id " + std::to_string(e.id));
        if (!has_vertex(e.a) || !has_vertex(e.b))
            throw InvalidInput("edge " + std::to_string(e.id) + " references an unknown vertex");
        incidence_[vertex_index_.at(e.a)].push_back(e.id);
        incidence_[vertex_index_.at(e.b)].push_back(e.id);
    }
}

Multigraph Multigraph::from_pairs(int n, const std::vector<std::pair<VertexId, VertexId>> &pairs) {
    std::vector<VertexId> vs(static_cast<std::size_t>(n));
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    es.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        es.push_back({static_cast<EdgeId>(i), pairs[i].first, pairs[i].second});
    return Multigraph(std::move(vs), std::move(es));
}

std::size_t Multigraph::vertex_index(VertexId v) const {
    auto it = vertex_index_.find(v);
    if (it == vertex_index_.end())
        throw InvalidInput("unknown vertex id " + std::to_string(v));
    return it->second;
}

std::size_t Multigraph::edge_index(EdgeId e) const {
    auto it = edge_index_.find(e);
    if (it == edge_index_.end())
        throw InvalidInput("unknown edge id " + std::to_string(e));
    return it->second;
}

bool Multigraph::is_cubic() const {
    return std::all_of(incidence_.begin(), incidence_.end(), [](const auto &inc) { return inc.size() == 3; });
}

Multigraph Multigraph::spanning_subgraph(const EdgeSet &keep) const {
    std::vector<Edge> es;
    for (EdgeId id : keep)
        es.push_back(edge(id));
    return Multigraph(vertices_, std::move(es));
}

Multigraph Multigraph::induced_subgraph(const VertexSet &keep) const {
    std::vector<VertexId> vs;
    for (VertexId v : vertices_)
        if (keep.contains(v))
            vs.push_back(v);
    if (vs.size() != keep.size())
        throw InvalidInput("induced_subgraph: unknown vertex in selection");
    std::vector<Edge> es;
    for (const Edge &e : edges_)
        if (keep.contains(e.a) && keep.contains(e.b))
            es.push_back(e);
    return Multigraph(std::move(vs), std::move(es));
}

Multigraph Multigraph::edge_subgraph(const EdgeSet &keep) const {
    VertexSet touched;
    std::vector<Edge> es;
    for (EdgeId id : keep) {
        const Edge &e = edge(id);
        touched.insert(e.a);
        touched.insert(e.b);
        es.push_back(e);
    }
    std::vector<VertexId> vs;
    for (VertexId v : vertices_)
        if (touched.contains(v))
            vs.push_back(v);
    return Multigraph(std::move(vs), std::move(es));
}

Contraction contract_edges(const Multigraph &g, const EdgeSet &contracted, bool delete_loops) {
    UnionFind uf(g.vertex_count());
    for (EdgeId id : contracted) {
        const Edge &e = g.edge(id);
        uf.unite(g.vertex_index(e.a), g.vertex_index(e.b));
    }
    // Class representative -> smallest original id in the class.
    std::map<std::size_t, VertexId> smallest;
    for (VertexId v : g.vertices()) {
        std::size_t root = uf.find(g.vertex_index(v));
        auto [it, inserted] = smallest.emplace(root, v);
        if (!inserted)
            it->second = std::min(it->second, v);
    }
    std::vector<std::pair<VertexId, std::size_t>> order;
    for (auto [root, v] : smallest)
        order.emplace_back(v, root);
    std::sort(order.begin(), order.end());
    std::map<std::size_t, VertexId> fresh;
    for (std::size_t i = 0; i < order.size(); ++i)
        fresh[order[i].second] = static_cast<VertexId>(i);

    Contraction out;
    for (VertexId v : g.vertices())
        out.vertex_map[v] = fresh.at(uf.find(g.vertex_index(v)));
    std::vector<VertexId> vs(order.size());
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (const Edge &e : g.edges()) {
        if (contracted.contains(e.id))
            continue;
        VertexId a = out.vertex_map.at(e.a);
        VertexId b = out.vertex_map.at(e.b);
        if (a == b && delete_loops)
            continue;
        es.push_back({e.id, a, b});
    }
    out.graph = Multigraph(std::move(vs), std::move(es));
    return out;
}

Suppression suppress_degree2(const Multigraph &h) {
    for (VertexId v : h.vertices()) {
        int d = h.degree(v);
        if (d != 2 && d != 3)
            throw InvalidInput("suppress_degree2: vertex " + std::to_string(v) + " has degree " +
                               std::to_string(d));
    }
    if (!is_connected(h))
        throw InvalidInput("suppress_degree2: graph is not connected");
    std::vector<VertexId> branch;
    for (VertexId v : h.vertices())
        if (h.degree(v) == 3)
            branch.push_back(v);
    if (branch.empty())
        throw InvalidInput("suppress_degree2: no 3-valent vertex");

    Suppression out;
    std::vector<Edge> base_edges;
    std::set<EdgeId> used;
    for (VertexId start : branch) {
        for (EdgeId first : h.incident(start)) {
            if (used.contains(first))
                continue;
            std::vector<EdgeId> path{first};
            used.insert(first);
            VertexId cur = h.edge(first).other(start);
            EdgeId last = first;
            while (h.degree(cur) == 2) {
                auto inc = h.incident(cur);
                EdgeId next = inc[0] == last ? inc[1] : inc[0];
                // A 2-valent vertex carrying a loop cannot occur in a connected
                // graph that also has a 3-valent vertex.
                path.push_back(next);
                used.insert(next);
                cur = h.edge(next).other(cur);
                last = next;
            }
            base_edges.push_back({first, start, cur});
            out.path_map[first] = std::move(path);
        }
    }
    out.base = Multigraph(branch, std::move(base_edges));
    return out;
}

std::optional<Bipartition> is_bipartite(const Multigraph &g) {
    std::vector<int> side(g.vertex_count(), -1);
    Bipartition out;
    std::vector<VertexId> sorted(g.vertices().begin(), g.vertices().end());
    std::sort(sorted.begin(), sorted.end());
    for (VertexId root : sorted) {
        if (side[g.vertex_index(root)] != -1)
            continue;
        side[g.vertex_index(root)] = 0;
        std::deque<VertexId> queue{root};
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            int sv = side[g.vertex_index(v)];
            for (EdgeId id : g.incident(v)) {
                VertexId w = g.edge(id).other(v);
                int &sw = side[g.vertex_index(w)];
                if (sw == -1) {
                    sw = 1 - sv;
                    queue.push_back(w);
                } else if (sw == sv) {
                    return std::nullopt;
                }
            }
        }
    }
    for (VertexId v : g.vertices())
        (side[g.vertex_index(v)] == 0 ? out.side_a : out.side_b).insert(v);
    return out;
}

bool is_eulerian(const Multigraph &g) {
    return std::all_of(g.vertices().begin(), g.vertices().end(), [&](VertexId v) { return g.degree(v) % 2 == 0; });
}

std::vector<std::vector<VertexId>> components(const Multigraph &g) {
    UnionFind uf(g.vertex_count());
    for (const Edge &e : g.edges())
        uf.unite(g.vertex_index(e.a), g.vertex_index(e.b));
    std::map<std::size_t, std::vector<VertexId>> groups;
    for (VertexId v : g.vertices())
        groups[uf.find(g.vertex_index(v))].push_back(v);
    std::vector<std::vector<VertexId>> out;
    for (auto &[root, vs] : groups) {
        std::sort(vs.begin(), vs.end());
        out.push_back(std::move(vs));
    }
    std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.front() < y.front(); });
    return out;
}

bool is_connected(const Multigraph &g) { return components(g).size() <= 1; }

EdgeSet spanning_forest(const Multigraph &g) {
    EdgeSet forest;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> sorted(g.vertices().begin(), g.vertices().end());
    std::sort(sorted.begin(), sorted.end());
    for (VertexId root : sorted) {
        if (seen[g.vertex_index(root)])
            continue;
        seen[g.vertex_index(root)] = true;
        std::deque<VertexId> queue{root};
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            std::vector<EdgeId> inc(g.incident(v).begin(), g.incident(v).end());
            std::sort(inc.begin(), inc.end());
            for (EdgeId id : inc) {
                VertexId w = g.edge(id).other(v);
                if (seen[g.vertex_index(w)])
                    continue;
                seen[g.vertex_index(w)] = true;
                forest.insert(id);
                queue.push_back(w);
            }
        }
    }
    return forest;
}

bool is_two_connected(const Multigraph &g) {
    if (g.vertex_count() < 2 || !is_connected(g))
        return false;
    if (g.vertex_count() == 2) {
        int joining = 0;
        for (const Edge &e : g.edges())
            joining += e.is_loop() ? 0 : 1;
        return joining >= 2;
    }
    for (VertexId cut : g.vertices()) {
        VertexSet rest(g.vertices().begin(), g.vertices().end());
        rest.erase(cut);
        if (!is_connected(g.induced_subgraph(rest)))
            return false;
    }
    return true;
}

Multigraph resubdivide(const Suppression &s) {
    VertexId next = 0;
    for (VertexId v : s.base.vertices())
        next = std::max(next, v + 1);
    std::vector<VertexId> vs(s.base.vertices().begin(), s.base.vertices().end());
    std::vector<Edge> es;
    for (const Edge &e : s.base.edges()) {
        const auto &path = s.path_map.at(e.id);
        VertexId cur = e.a;
        for (std::size_t k = 0; k < path.size(); ++k) {
            VertexId to = k + 1 == path.size() ? e.b : next++;
            if (k + 1 != path.size())
                vs.push_back(to);
            es.push_back({path[k], cur, to});
            cur = to;
        }
    }
    return Multigraph(std::move(vs), std::move(es));
}

} // namespace kframe
