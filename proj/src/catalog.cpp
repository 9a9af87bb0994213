#include "kframe/catalog.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace kframe::catalog {

Multigraph theta() { return Multigraph::from_pairs(2, {{0, 1}, {0, 1}, {0, 1}}); }

Multigraph k4() { return Multigraph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Multigraph k33() {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b)
            pairs.emplace_back(a, b);
    return Multigraph::from_pairs(6, pairs);
}

Multigraph prism() {
    return Multigraph::from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

Multigraph cube() {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int bit = 0; bit < 3; ++bit)
        for (int v = 0; v < 8; ++v)
            if (!(v & (1 << bit)))
                pairs.emplace_back(v, v | (1 << bit));
    return Multigraph::from_pairs(8, pairs);
}

Multigraph petersen() {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int i = 0; i < 5; ++i)
        pairs.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i)
        pairs.emplace_back(i, i + 5);
    for (int i = 0; i < 5; ++i)
        pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
    return Multigraph::from_pairs(10, pairs);
}

Multigraph by_name(const std::string &name) {
    static const std::map<std::string, Multigraph (*)()> table{
        {"theta", theta}, {"k4", k4}, {"k33", k33}, {"prism", prism}, {"cube", cube}, {"petersen", petersen}};
    auto it = table.find(name);
    if (it == table.end())
        throw InvalidInput("unknown named graph '" + name + "'");
    return it->second();
}

namespace {

using Adjacency = std::vector<std::vector<bool>>;

Adjacency adjacency(const Multigraph &g) {
    int n = static_cast<int>(g.vertex_count());
    Adjacency adj(n, std::vector<bool>(n, false));
    for (const Edge &e : g.edges())
        adj[e.a][e.b] = adj[e.b][e.a] = true;
    return adj;
}

// Per-vertex invariant: degree, triangles through v, and the count of
// vertices at each BFS distance.
std::vector<int> vertex_invariant(const Adjacency &adj, int v) {
    int n = static_cast<int>(adj.size());
    std::vector<int> inv;
    int deg = 0, tri = 0;
    for (int w = 0; w < n; ++w) {
        if (!adj[v][w])
            continue;
        ++deg;
        for (int x = w + 1; x < n; ++x)
            if (adj[v][x] && adj[w][x])
                ++tri;
    }
    inv.push_back(deg);
    inv.push_back(tri);
    std::vector<int> dist(n, -1);
    dist[v] = 0;
    std::deque<int> queue{v};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y = 0; y < n; ++y)
            if (adj[x][y] && dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    std::vector<int> layers(n + 1, 0);
    for (int d : dist)
        ++layers[d < 0 ? n : d];
    inv.insert(inv.end(), layers.begin(), layers.end());
    return inv;
}

bool isomorphic_adj(const Adjacency &a, const Adjacency &b, const std::vector<std::vector<int>> &inv_a,
                    const std::vector<std::vector<int>> &inv_b) {
    int n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n)
        return false;
    // Map a's vertices in BFS order so each new vertex has a mapped neighbour.
    std::vector<int> order;
    std::vector<bool> seen(n, false);
    for (int root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        seen[root] = true;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            order.push_back(x);
            for (int y = 0; y < n; ++y)
                if (a[x][y] && !seen[y]) {
                    seen[y] = true;
                    queue.push_back(y);
                }
        }
    }
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> extend = [&](int depth) {
        if (depth == n)
            return true;
        int x = order[depth];
        for (int y = 0; y < n; ++y) {
            if (used[y] || inv_a[x] != inv_b[y])
                continue;
            bool ok = true;
            for (int k = 0; k < depth && ok; ++k) {
                int p = order[k];
                ok = a[x][p] == b[y][image[p]];
            }
            if (!ok)
                continue;
            image[x] = y;
            used[y] = true;
            if (extend(depth + 1))
                return true;
            used[y] = false;
        }
        image[x] = -1;
        return false;
    };
    return extend(0);
}

std::vector<std::vector<int>> all_invariants(const Adjacency &adj) {
    std::vector<std::vector<int>> out;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
        out.push_back(vertex_invariant(adj, v));
    return out;
}

} // namespace

bool isomorphic(const Multigraph &a, const Multigraph &b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    Adjacency adj_a = adjacency(a), adj_b = adjacency(b);
    auto inv_a = all_invariants(adj_a), inv_b = all_invariants(adj_b);
    auto sa = inv_a, sb = inv_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
        return false;
    return isomorphic_adj(adj_a, adj_b, inv_a, inv_b);
}

std::vector<Multigraph> connected_cubic_graphs(int n) {
    if (n < 4 || n % 2 != 0)
        return {};
    struct Rep {
        Adjacency adj;
        std::vector<std::vector<int>> inv;
    };
    std::map<std::vector<std::vector<int>>, std::vector<Rep>> buckets;
    std::vector<Multigraph> out;

    Adjacency adj(n, std::vector<bool>(n, false));
    std::vector<int> deg(n, 0);
    // Neighbours above v are added in increasing order; among untouched
    // vertices only the lowest may be chosen, since they are interchangeable.
    std::function<void()> fill = [&]() {
        int v = 0;
        while (v < n && deg[v] == 3)
            ++v;
        if (v == n) {
            auto inv = all_invariants(adj);
            for (const auto &layer : inv)
                if (layer.back() != 0)
                    return; // disconnected
            auto key = inv;
            std::sort(key.begin(), key.end());
            auto &bucket = buckets[key];
            for (const Rep &r : bucket)
                if (isomorphic_adj(adj, r.adj, inv, r.inv))
                    return;
            bucket.push_back({adj, inv});
            std::vector<std::pair<VertexId, VertexId>> pairs;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    if (adj[i][j])
                        pairs.emplace_back(i, j);
            out.push_back(Multigraph::from_pairs(n, pairs));
            return;
        }
        int highest = v;
        for (int w = v + 1; w < n; ++w)
            if (adj[v][w])
                highest = w;
        bool fresh_tried = false;
        for (int w = highest + 1; w < n; ++w) {
            if (deg[w] == 3 || adj[v][w])
                continue;
            if (deg[w] == 0) {
                if (fresh_tried)
                    continue;
                fresh_tried = true;
            }
            adj[v][w] = adj[w][v] = true;
            ++deg[v];
            ++deg[w];
            fill();
            adj[v][w] = adj[w][v] = false;
            --deg[v];
            --deg[w];
        }
    };
    fill();
    return out;
}

} // namespace kframe::catalog
