#include "kframe/kotzig.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace kframe::kotzig {

namespace {

void require_cubic(const Multigraph &k) {
    if (!k.is_cubic())
        throw InvalidInput("Kotzig check needs a cubic graph");
}

// Edge order: breadth-first from the lowest vertex, incident edges by id.
std::vector<EdgeId> bfs_edge_order(const Multigraph &k) {
    std::vector<EdgeId> order;
    if (k.vertex_count() == 0)
        return order;
    std::set<EdgeId> taken;
    std::vector<bool> seen(k.vertex_count(), false);
    std::vector<VertexId> sorted(k.vertices().begin(), k.vertices().end());
    std::sort(sorted.begin(), sorted.end());
    for (VertexId root : sorted) {
        if (seen[k.vertex_index(root)])
            continue;
        seen[k.vertex_index(root)] = true;
        std::deque<VertexId> queue{root};
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            std::vector<EdgeId> inc(k.incident(v).begin(), k.incident(v).end());
            std::sort(inc.begin(), inc.end());
            for (EdgeId id : inc) {
                if (taken.insert(id).second)
                    order.push_back(id);
                VertexId w = k.edge(id).other(v);
                if (!seen[k.vertex_index(w)]) {
                    seen[k.vertex_index(w)] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    return order;
}

class KotzigSearch {
  public:
    KotzigSearch(const Multigraph &k, bool up_to_permutation,
                 const std::function<bool(const EdgeColoring3 &)> &visit)
        : k_(k), visit_(visit), order_(bfs_edge_order(k)), color_(k.edge_count(), 0),
          n_(static_cast<int>(k.vertex_count())) {
        if (up_to_permutation && !order_.empty()) {
            // The first three edges in BFS order are those at the lowest vertex.
            VertexId root = *std::min_element(k.vertices().begin(), k.vertices().end());
            for (EdgeId id : k.incident(root))
                if (!k.edge(id).is_loop())
                    ++fixed_;
            if (fixed_ != 3)
                fixed_ = 0;
        }
    }

    void run() {
        for (const Edge &e : k_.edges())
            if (e.is_loop())
                return;
        extend(0);
    }

  private:
    bool extend(std::size_t depth) {
        if (depth == order_.size()) {
            EdgeColoring3 out;
            for (const Edge &e : k_.edges())
                out[e.id] = color_[k_.edge_index(e.id)];
            return visit_(out);
        }
        EdgeId id = order_[depth];
        std::size_t idx = k_.edge_index(id);
        int lo = 1, hi = 3;
        if (depth < fixed_)
            lo = hi = static_cast<int>(depth) + 1;
        for (int c = lo; c <= hi; ++c) {
            if (!admissible(id, c))
                continue;
            color_[idx] = c;
            bool keep_going = !closes_short_cycle(id) ? extend(depth + 1) : true;
            color_[idx] = 0;
            if (!keep_going)
                return false;
        }
        return true;
    }

    bool admissible(EdgeId id, int c) const {
        const Edge &e = k_.edge(id);
        for (VertexId v : {e.a, e.b})
            for (EdgeId other : k_.incident(v))
                if (other != id && color_[k_.edge_index(other)] == c)
                    return false;
        return true;
    }

    EdgeId pair_edge(VertexId v, EdgeId from, int c1, int c2) const {
        for (EdgeId other : k_.incident(v)) {
            if (other == from)
                continue;
            int c = color_[k_.edge_index(other)];
            if (c == c1 || c == c2)
                return other;
        }
        return -1;
    }

    // After coloring `id`, a two-colored cycle through it shorter than n
    // rules out hamiltonicity of that color pair.
    bool closes_short_cycle(EdgeId id) const {
        int c = color_[k_.edge_index(id)];
        for (int other = 1; other <= 3; ++other) {
            if (other == c)
                continue;
            const Edge &start = k_.edge(id);
            VertexId v = start.b;
            EdgeId via = id;
            int length = 1;
            while (true) {
                EdgeId next = pair_edge(v, via, c, other);
                if (next < 0)
                    break;
                if (next == id) {
                    if (length < n_)
                        return true;
                    break;
                }
                ++length;
                v = k_.edge(next).other(v);
                via = next;
                if (length > n_)
                    break;
            }
        }
        return false;
    }

    const Multigraph &k_;
    const std::function<bool(const EdgeColoring3 &)> &visit_;
    std::vector<EdgeId> order_;
    std::vector<int> color_;
    int n_;
    std::size_t fixed_ = 0;
};

} // namespace

bool is_kotzig_coloring(const Multigraph &k, const EdgeColoring3 &c) {
    require_cubic(k);
    for (const Edge &e : k.edges()) {
        auto it = c.find(e.id);
        if (it == c.end() || it->second < 1 || it->second > 3)
            return false;
    }
    for (VertexId v : k.vertices()) {
        std::array<int, 4> seen{};
        for (EdgeId id : k.incident(v))
            if (++seen[c.at(id)] > 1)
                return false;
    }
    for (int skip = 1; skip <= 3; ++skip) {
        EdgeSet pair;
        for (const Edge &e : k.edges())
            if (c.at(e.id) != skip)
                pair.insert(e.id);
        if (!is_connected(k.spanning_subgraph(pair)))
            return false;
    }
    return true;
}

void for_each_kotzig_coloring(const Multigraph &k, bool up_to_permutation,
                              const std::function<bool(const EdgeColoring3 &)> &visit) {
    require_cubic(k);
    KotzigSearch(k, up_to_permutation, visit).run();
}

std::optional<EdgeColoring3> find_kotzig_coloring(const Multigraph &k) {
    std::optional<EdgeColoring3> found;
    for_each_kotzig_coloring(k, true, [&](const EdgeColoring3 &c) {
        found = c;
        return false;
    });
    return found;
}

bool ComponentClass::is_cubic() const {
    if (kind != ComponentKind::KotzigSubdivision || !subdivision)
        return false;
    return std::all_of(subdivision->path_map.begin(), subdivision->path_map.end(),
                       [](const auto &kv) { return kv.second.size() == 1; });
}

ComponentClass classify_component(const Multigraph &h) {
    ComponentClass out;
    if (h.vertex_count() == 0)
        return out;
    bool two_regular = std::all_of(h.vertices().begin(), h.vertices().end(), [&](VertexId v) { return h.degree(v) == 2; });
    if (two_regular) {
        if (is_connected(h))
            out.kind = ComponentKind::Cycle;
        return out;
    }
    Suppression sub;
    try {
        sub = suppress_degree2(h);
    } catch (const InvalidInput &) {
        return out;
    }
    auto witness = find_kotzig_coloring(sub.base);
    if (!witness)
        return out;
    out.kind = ComponentKind::KotzigSubdivision;
    out.subdivision = std::move(sub);
    out.witness = std::move(*witness);
    return out;
}

ComponentColoring lift_coloring(const Multigraph &h, const Suppression &sub, const EdgeColoring3 &base) {
    ComponentColoring out;
    for (const auto &[base_id, path] : sub.path_map) {
        Color c = base.at(base_id);
        for (EdgeId id : path)
            out.edge_color[id] = c;
    }
    for (VertexId v : h.vertices())
        if (h.degree(v) == 2)
            out.vertex_color[v] = out.edge_color.at(h.incident(v)[0]);
    return out;
}

std::vector<ComponentColoring> enumerate_perfect_colorings(const Multigraph &h, const ComponentClass &cls,
                                                           bool up_to_permutation) {
    std::vector<ComponentColoring> out;
    switch (cls.kind) {
    case ComponentKind::Cycle:
        for (Color c = 1; c <= (up_to_permutation ? 1 : 3); ++c) {
            ComponentColoring col;
            for (VertexId v : h.vertices())
                col.vertex_color[v] = c;
            for (const Edge &e : h.edges())
                col.edge_color[e.id] = c;
            out.push_back(std::move(col));
        }
        break;
    case ComponentKind::KotzigSubdivision:
        for_each_kotzig_coloring(cls.subdivision->base, up_to_permutation, [&](const EdgeColoring3 &c) {
            out.push_back(lift_coloring(h, *cls.subdivision, c));
            return true;
        });
        break;
    case ComponentKind::Neither:
        throw InvalidInput("enumerate_perfect_colorings: component is neither a cycle nor a Kotzig subdivision");
    }
    return out;
}

bool is_perfect_component_coloring(const Multigraph &h, const ComponentClass &cls,
                                   const std::map<VertexId, Color> &vertex_color,
                                   const std::map<EdgeId, Color> &edge_color) {
    auto edge_c = [&](EdgeId id) {
        auto it = edge_color.find(id);
        return it == edge_color.end() ? 0 : it->second;
    };
    auto vertex_c = [&](VertexId v) {
        auto it = vertex_color.find(v);
        return it == vertex_color.end() ? 0 : it->second;
    };
    for (const Edge &e : h.edges())
        if (edge_c(e.id) < 1 || edge_c(e.id) > 3)
            return false;
    if (cls.kind == ComponentKind::Cycle) {
        Color c = edge_c(h.edges().front().id);
        for (const Edge &e : h.edges())
            if (edge_c(e.id) != c)
                return false;
        for (VertexId v : h.vertices())
            if (vertex_c(v) != c)
                return false;
        return true;
    }
    if (cls.kind != ComponentKind::KotzigSubdivision)
        return false;
    for (VertexId v : h.vertices()) {
        if (h.degree(v) != 2)
            continue;
        auto inc = h.incident(v);
        if (edge_c(inc[0]) != edge_c(inc[1]) || vertex_c(v) != edge_c(inc[0]))
            return false;
    }
    EdgeColoring3 base;
    for (const auto &[base_id, path] : cls.subdivision->path_map)
        base[base_id] = edge_c(path.front());
    return is_kotzig_coloring(cls.subdivision->base, base);
}

} // namespace kframe::kotzig
