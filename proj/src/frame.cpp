#include "kframe/frame.hpp"

#include <algorithm>
#include <deque>

namespace kframe::frame {

namespace {

Color color_or_zero(const std::map<VertexId, Color> &m, VertexId v) {
    auto it = m.find(v);
    return it == m.end() ? 0 : it->second;
}

std::optional<Frame> build_frame(const Multigraph &g, const EdgeSet &frame_edges,
                                 const std::optional<std::vector<VertexId>> &label_order, std::string &error) {
    if (!g.is_cubic()) {
        error = "host graph is not cubic";
        return std::nullopt;
    }
    for (EdgeId id : frame_edges)
        if (!g.has_edge(id)) {
            error = "frame edge " + std::to_string(id) + " is not a host edge";
            return std::nullopt;
        }
    Multigraph spanning = g.spanning_subgraph(frame_edges);
    for (VertexId v : g.vertices())
        if (spanning.degree(v) == 0) {
            error = "non-spanning: vertex " + std::to_string(v) + " has no frame edge";
            return std::nullopt;
        }

    std::vector<FrameComponent> comps;
    for (const auto &vs : components(spanning)) {
        if (vs.size() % 2 != 0) {
            error = "odd component containing vertex " + std::to_string(vs.front()) + " (" +
                    std::to_string(vs.size()) + " vertices)";
            return std::nullopt;
        }
        FrameComponent c;
        c.vertices = vs;
        c.subgraph = spanning.induced_subgraph(VertexSet(vs.begin(), vs.end()));
        for (const Edge &e : c.subgraph.edges())
            c.edges.push_back(e.id);
        c.cls = kotzig::classify_component(c.subgraph);
        if (c.cls.kind == kotzig::ComponentKind::Neither) {
            error = "component containing vertex " + std::to_string(vs.front()) +
                    " is neither a cycle nor a subdivision of a Kotzig graph";
            return std::nullopt;
        }
        c.kind = c.cls.kind == kotzig::ComponentKind::Cycle ? Kind::C : Kind::K;
        comps.push_back(std::move(c));
    }

    if (label_order) {
        if (label_order->size() != comps.size()) {
            error = "label order must name one vertex per component";
            return std::nullopt;
        }
        std::vector<FrameComponent> ordered;
        std::vector<bool> placed(comps.size(), false);
        for (VertexId rep : *label_order) {
            auto it = std::find_if(comps.begin(), comps.end(), [&](const FrameComponent &c) {
                return std::binary_search(c.vertices.begin(), c.vertices.end(), rep);
            });
            std::size_t idx = static_cast<std::size_t>(it - comps.begin());
            if (it == comps.end() || placed[idx]) {
                error = "label order names vertex " + std::to_string(rep) + " twice or outside the frame";
                return std::nullopt;
            }
            placed[idx] = true;
            ordered.push_back(comps[idx]);
        }
        comps = std::move(ordered);
    } else {
        std::stable_sort(comps.begin(), comps.end(), [](const FrameComponent &a, const FrameComponent &b) {
            if (a.kind != b.kind)
                return a.kind == Kind::K;
            if (a.vertices.size() != b.vertices.size())
                return a.vertices.size() < b.vertices.size();
            return a.vertices.front() < b.vertices.front();
        });
    }

    Frame f;
    f.host = g;
    f.frame_edges = frame_edges;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        comps[i].label = static_cast<int>(i) + 1;
        for (VertexId v : comps[i].vertices)
            f.component_of[v] = static_cast<int>(i);
        if (comps[i].cls.is_cubic())
            f.warnings.push_back("component L" + std::to_string(i + 1) + " has no 2-valent vertex");
    }
    f.components = std::move(comps);
    for (const Edge &e : g.edges())
        if (!frame_edges.contains(e.id) && f.component_of.at(e.a) == f.component_of.at(e.b))
            f.chords.insert(e.id);
    if (!is_two_connected(g))
        f.warnings.push_back("host graph is not 2-connected");
    return f;
}

} // namespace

int Frame::k_count() const {
    return static_cast<int>(
        std::count_if(components.begin(), components.end(), [](const FrameComponent &c) { return c.kind == Kind::K; }));
}

bool Frame::is_two_valent(VertexId v) const {
    int idx = component_of.at(v);
    return components[idx].subgraph.degree(v) == 2;
}

EdgeSet Frame::connecting_edges() const {
    EdgeSet out;
    for (const Edge &e : host.edges())
        if (!frame_edges.contains(e.id) && !chords.contains(e.id))
            out.insert(e.id);
    return out;
}

Frame validate_frame(const Multigraph &g, const EdgeSet &frame_edges,
                     const std::optional<std::vector<VertexId>> &label_order) {
    std::string error;
    auto f = build_frame(g, frame_edges, label_order, error);
    if (!f)
        throw InvalidInput("invalid frame: " + error);
    return std::move(*f);
}

bool is_perfect_coloring(const Frame &f, const PerfectColoring &alpha) {
    return std::all_of(f.components.begin(), f.components.end(), [&](const FrameComponent &c) {
        return kotzig::is_perfect_component_coloring(c.subgraph, c.cls, alpha.vertex_color, alpha.edge_color);
    });
}

PerfectColoring recolor_component(const Frame &f, const PerfectColoring &alpha, int component,
                                  const std::array<Color, 4> &perm) {
    PerfectColoring out = alpha;
    const FrameComponent &c = f.components.at(static_cast<std::size_t>(component));
    for (VertexId v : c.vertices)
        if (auto it = out.vertex_color.find(v); it != out.vertex_color.end())
            it->second = perm[it->second];
    for (EdgeId id : c.edges)
        if (auto it = out.edge_color.find(id); it != out.edge_color.end())
            it->second = perm[it->second];
    return out;
}

ContractedFrame contract_frame(const Frame &f) {
    Contraction con = contract_edges(f.host, f.frame_edges, true);
    std::map<VertexId, VertexId> to_label;
    for (const auto &[old_v, new_v] : con.vertex_map)
        to_label[new_v] = f.component_of.at(old_v) + 1;
    std::vector<VertexId> vs;
    for (int j = 1; j <= f.s(); ++j)
        vs.push_back(j);
    std::vector<Edge> es;
    for (const Edge &e : con.graph.edges())
        es.push_back({e.id, to_label.at(e.a), to_label.at(e.b)});
    ContractedFrame out;
    out.graph = Multigraph(std::move(vs), std::move(es));
    for (const FrameComponent &c : f.components)
        out.kinds.push_back(c.kind);
    if (!is_eulerian(out.graph))
        throw InvariantViolation("contracted frame is not eulerian");
    return out;
}

ColoredContraction build_colored_contraction(const Frame &f, const PerfectColoring &alpha) {
    if (!is_perfect_coloring(f, alpha))
        throw InvalidInput("coloring is not perfect for this frame");
    ColoredContraction out;
    out.contracted = contract_frame(f);
    for (const Edge &e : out.contracted.graph.edges()) {
        const Edge &host = f.host.edge(e.id);
        Color ca = color_or_zero(alpha.vertex_color, host.a);
        Color cb = color_or_zero(alpha.vertex_color, host.b);
        if (ca != 0 && ca == cb)
            out.edge_color[e.id] = ca;
    }
    return out;
}

namespace {

std::optional<Witness> witness_for(const ColoredContraction &cc, Color c) {
    const Multigraph &gf = cc.contracted.graph;
    EdgeSet colored;
    for (const auto &[id, col] : cc.edge_color)
        if (col == c)
            colored.insert(id);
    Multigraph sub = gf.spanning_subgraph(colored);
    VertexSet k_vertices;
    for (std::size_t i = 0; i < cc.contracted.kinds.size(); ++i)
        if (cc.contracted.kinds[i] == Kind::K)
            k_vertices.insert(static_cast<VertexId>(i) + 1);
    VertexId anchor = k_vertices.empty() ? 1 : *k_vertices.begin();
    for (const auto &comp : components(sub)) {
        if (!std::binary_search(comp.begin(), comp.end(), anchor))
            continue;
        VertexSet vs(comp.begin(), comp.end());
        for (VertexId k : k_vertices)
            if (!vs.contains(k))
                return std::nullopt;
        Witness w;
        w.color = c;
        w.vertices = vs;
        for (EdgeId id : colored) {
            const Edge &e = gf.edge(id);
            if (vs.contains(e.a))
                w.edges.insert(id);
        }
        return w;
    }
    return std::nullopt;
}

} // namespace

std::optional<Witness> well_connected_witness(const Frame &f, const PerfectColoring &alpha) {
    ColoredContraction cc = build_colored_contraction(f, alpha);
    std::optional<Witness> best;
    for (Color c = 1; c <= 3; ++c) {
        auto w = witness_for(cc, c);
        if (w && (!best || w->vertices.size() > best->vertices.size()))
            best = std::move(w);
    }
    return best;
}

std::optional<WellConnectedColoring> find_well_connected_frame_coloring(const Frame &f) {
    std::vector<std::vector<kotzig::ComponentColoring>> choices;
    int first_k = -1;
    for (int i = 0; i < f.s(); ++i)
        if (f.components[i].kind == Kind::K) {
            first_k = i;
            break;
        }
    for (int i = 0; i < f.s(); ++i) {
        const FrameComponent &c = f.components[i];
        choices.push_back(kotzig::enumerate_perfect_colorings(c.subgraph, c.cls, i == first_k));
        if (choices.back().empty())
            return std::nullopt;
    }
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
        PerfectColoring alpha;
        for (std::size_t i = 0; i < choices.size(); ++i) {
            const auto &cc = choices[i][pick[i]];
            alpha.vertex_color.insert(cc.vertex_color.begin(), cc.vertex_color.end());
            alpha.edge_color.insert(cc.edge_color.begin(), cc.edge_color.end());
        }
        if (auto w = well_connected_witness(f, alpha))
            return WellConnectedColoring{std::move(alpha), std::move(*w)};
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == choices[i].size())
            pick[i++] = 0;
        if (i == pick.size())
            return std::nullopt;
    }
}

SufficientConditions check_sufficient_conditions(const ContractedFrame &cf) {
    const Multigraph &gf = cf.graph;
    VertexSet ks, cs;
    for (std::size_t i = 0; i < cf.kinds.size(); ++i)
        (cf.kinds[i] == Kind::K ? ks : cs).insert(static_cast<VertexId>(i) + 1);

    bool independent = true;
    std::map<VertexId, bool> touches_c;
    for (const Edge &e : gf.edges()) {
        if (ks.contains(e.a) && ks.contains(e.b))
            independent = false;
        if (ks.contains(e.a) && cs.contains(e.b))
            touches_c[e.a] = true;
        if (ks.contains(e.b) && cs.contains(e.a))
            touches_c[e.b] = true;
    }
    Multigraph c_part = gf.induced_subgraph(cs);
    bool c_connected = is_connected(c_part);
    bool all_touch = std::all_of(ks.begin(), ks.end(), [&](VertexId k) { return touches_c[k]; });

    SufficientConditions out;
    out.independent_and_connected = independent && c_connected;
    out.adjacent_to_c_and_connected = all_touch && c_connected;
    if (ks.empty()) {
        out.dominated_by_connected_c = true;
    } else {
        for (const auto &q : components(c_part)) {
            VertexSet qs(q.begin(), q.end());
            VertexSet reached;
            for (const Edge &e : gf.edges()) {
                if (qs.contains(e.a) && ks.contains(e.b))
                    reached.insert(e.b);
                if (qs.contains(e.b) && ks.contains(e.a))
                    reached.insert(e.a);
            }
            if (reached == ks) {
                out.dominated_by_connected_c = true;
                break;
            }
        }
    }
    return out;
}

namespace {

void perfect_matchings(const Multigraph &g, const std::function<bool(const EdgeSet &)> &visit) {
    std::vector<VertexId> sorted(g.vertices().begin(), g.vertices().end());
    std::sort(sorted.begin(), sorted.end());
    std::set<VertexId> matched;
    EdgeSet chosen;
    bool stop = false;
    std::function<void()> rec = [&]() {
        if (stop)
            return;
        auto it = std::find_if(sorted.begin(), sorted.end(), [&](VertexId v) { return !matched.contains(v); });
        if (it == sorted.end()) {
            stop = !visit(chosen);
            return;
        }
        VertexId v = *it;
        std::vector<EdgeId> inc(g.incident(v).begin(), g.incident(v).end());
        std::sort(inc.begin(), inc.end());
        inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
        for (EdgeId id : inc) {
            const Edge &e = g.edge(id);
            if (e.is_loop())
                continue;
            VertexId w = e.other(v);
            if (matched.contains(w))
                continue;
            matched.insert(v);
            matched.insert(w);
            chosen.insert(id);
            rec();
            chosen.erase(id);
            matched.erase(v);
            matched.erase(w);
            if (stop)
                return;
        }
    };
    rec();
}

std::vector<EdgeSet> all_matchings(const Multigraph &g) {
    std::vector<Edge> es(g.edges().begin(), g.edges().end());
    std::sort(es.begin(), es.end(), [](const Edge &a, const Edge &b) { return a.id < b.id; });
    std::vector<EdgeSet> out;
    std::set<VertexId> matched;
    EdgeSet chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == es.size()) {
            out.push_back(chosen);
            return;
        }
        rec(i + 1);
        const Edge &e = es[i];
        if (e.is_loop() || matched.contains(e.a) || matched.contains(e.b))
            return;
        matched.insert(e.a);
        matched.insert(e.b);
        chosen.insert(e.id);
        rec(i + 1);
        chosen.erase(e.id);
        matched.erase(e.a);
        matched.erase(e.b);
    };
    rec(0);
    std::stable_sort(out.begin(), out.end(), [](const EdgeSet &a, const EdgeSet &b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

EdgeSet complement(const Multigraph &g, const EdgeSet &removed) {
    EdgeSet out;
    for (const Edge &e : g.edges())
        if (!removed.contains(e.id))
            out.insert(e.id);
    return out;
}

} // namespace

void for_each_frame(const Multigraph &g, const FrameStrategy &strategy, const std::function<bool(const Frame &)> &visit) {
    if (!g.is_cubic())
        return;
    std::string error;
    switch (strategy.kind) {
    case FrameStrategy::Kind::UserSupplied: {
        if (auto f = build_frame(g, strategy.user_edges, std::nullopt, error))
            visit(*f);
        return;
    }
    case FrameStrategy::Kind::TwoFactor:
        perfect_matchings(g, [&](const EdgeSet &m) {
            EdgeSet two_factor = complement(g, m);
            for (const auto &comp : components(g.spanning_subgraph(two_factor)))
                if (comp.size() % 2 != 0)
                    return true;
            if (auto f = build_frame(g, two_factor, std::nullopt, error))
                return visit(*f);
            return true;
        });
        return;
    case FrameStrategy::Kind::Exhaustive:
        if (static_cast<int>(g.edge_count()) > strategy.max_edges)
            return;
        for (const EdgeSet &m : all_matchings(g)) {
            if (auto f = build_frame(g, complement(g, m), std::nullopt, error))
                if (!visit(*f))
                    return;
        }
        return;
    }
}

std::vector<Frame> search_frames(const Multigraph &g, const FrameStrategy &strategy, std::size_t limit) {
    std::vector<Frame> out;
    if (limit == 0)
        return out;
    for_each_frame(g, strategy, [&](const Frame &f) {
        out.push_back(f);
        return out.size() < limit;
    });
    return out;
}

nlohmann::json to_json(const Frame &f) {
    nlohmann::json comps = nlohmann::json::array();
    for (const FrameComponent &c : f.components)
        comps.push_back({{"kind", c.kind == Kind::C ? "C" : "K"}, {"vertices", c.vertices}, {"label", c.label}});
    return {{"frame_edges", std::vector<EdgeId>(f.frame_edges.begin(), f.frame_edges.end())},
            {"components", comps},
            {"chords", std::vector<EdgeId>(f.chords.begin(), f.chords.end())}};
}

Frame frame_from_json(const Multigraph &g, const nlohmann::json &j) {
    try {
        auto ids = j.at("frame_edges").get<std::vector<EdgeId>>();
        std::optional<std::vector<VertexId>> order;
        if (j.contains("components")) {
            std::vector<std::pair<int, VertexId>> labelled;
            for (const auto &c : j.at("components"))
                labelled.emplace_back(c.at("label").get<int>(), c.at("vertices").at(0).get<VertexId>());
            std::sort(labelled.begin(), labelled.end());
            order.emplace();
            for (const auto &[label, v] : labelled)
                order->push_back(v);
        }
        return validate_frame(g, EdgeSet(ids.begin(), ids.end()), order);
    } catch (const nlohmann::json::exception &ex) {
        throw InvalidInput(std::string("frame JSON: ") + ex.what());
    }
}

nlohmann::json to_json(const PerfectColoring &alpha) {
    nlohmann::json vc = nlohmann::json::array(), ec = nlohmann::json::array();
    for (const auto &[v, c] : alpha.vertex_color)
        vc.push_back({v, c});
    for (const auto &[e, c] : alpha.edge_color)
        ec.push_back({e, c});
    return {{"vertex_color", vc}, {"edge_color", ec}};
}

PerfectColoring perfect_coloring_from_json(const nlohmann::json &j) {
    try {
        PerfectColoring out;
        for (const auto &p : j.at("vertex_color"))
            out.vertex_color[p.at(0).get<VertexId>()] = p.at(1).get<Color>();
        for (const auto &p : j.at("edge_color"))
            out.edge_color[p.at(0).get<EdgeId>()] = p.at(1).get<Color>();
        return out;
    } catch (const nlohmann::json::exception &ex) {
        throw InvalidInput(std::string("coloring JSON: ") + ex.what());
    }
}

} // namespace kframe::frame
