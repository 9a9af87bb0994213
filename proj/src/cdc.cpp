#include "kframe/cdc.hpp"

#include <algorithm>
#include <set>

namespace kframe::cdc {

ByColor partition_chords(const frame::Frame &f, const frame::PerfectColoring &alpha) {
    ByColor x;
    for (EdgeId id : f.chords) {
        const Edge &e = f.host.edge(id);
        Color ca = alpha.vertex_color.at(e.a), cb = alpha.vertex_color.at(e.b);
        Color i = 1;
        while (i == ca || i == cb)
            ++i;
        x[i].insert(id);
    }
    return x;
}

EdgeSet JDecomposition::j(Color i) const {
    EdgeSet out = h[i];
    out.insert(e[i].begin(), e[i].end());
    out.insert(x[i].begin(), x[i].end());
    return out;
}

JDecomposition decompose(const frame::Frame &f, const frame::PerfectColoring &alpha,
                         const std::map<EdgeId, Color> &g) {
    JDecomposition d;
    for (EdgeId id : f.frame_edges) {
        Color c = alpha.edge_color.at(id);
        for (Color i = 1; i <= 3; ++i)
            if (i != c)
                d.h[i].insert(id);
    }
    for (EdgeId id : f.connecting_edges()) {
        auto it = g.find(id);
        if (it == g.end() || it->second < 1 || it->second > 3)
            throw InvalidInput("connecting edge " + std::to_string(id) + " has no color");
        d.e[it->second].insert(id);
    }
    d.x = partition_chords(f, alpha);
    return d;
}

namespace {

using Incidence = std::map<VertexId, std::vector<EdgeId>>;

Incidence incidence_of(const Multigraph &g, const EdgeSet &edges) {
    Incidence inc;
    for (EdgeId id : edges) {
        if (!g.has_edge(id))
            throw InvalidInput("unknown edge " + std::to_string(id));
        const Edge &e = g.edge(id);
        inc[e.a].push_back(id);
        inc[e.b].push_back(id);
    }
    return inc;
}

/// Closed walk around a cycle: vertices[t] is the tail of edges[t].
struct Walk {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

Walk walk_cycle(const Multigraph &g, const Incidence &inc, VertexId start, EdgeId first) {
    Walk w;
    VertexId v = start;
    EdgeId e = first;
    while (true) {
        w.vertices.push_back(v);
        w.edges.push_back(e);
        v = g.edge(e).other(v);
        if (v == start)
            return w;
        const auto &at = inc.at(v);
        e = at[0] == e ? at[1] : at[0];
    }
}

/// Edge toward the lower neighbor, ties to the lower edge id.
EdgeId first_edge(const Multigraph &g, const Incidence &inc, VertexId v) {
    const auto &at = inc.at(v);
    auto key = [&](EdgeId e) { return std::pair(g.edge(e).other(v), e); };
    return std::min(key(at[0]), key(at[1])).second;
}

void require_two_regular(const Incidence &inc) {
    for (const auto &[v, es] : inc)
        if (es.size() != 2)
            throw InvalidInput("vertex " + std::to_string(v) + " has degree " + std::to_string(es.size()) + " in a cycle set");
}

} // namespace

std::vector<std::vector<EdgeId>> split_cycles(const Multigraph &g, const EdgeSet &edges) {
    Incidence inc = incidence_of(g, edges);
    require_two_regular(inc);
    std::set<EdgeId> seen;
    std::vector<std::vector<EdgeId>> out;
    for (const auto &[v, es] : inc) {
        if (seen.contains(es[0]))
            continue;
        Walk w = walk_cycle(g, inc, v, first_edge(g, inc, v));
        seen.insert(w.edges.begin(), w.edges.end());
        out.push_back(std::move(w.edges));
    }
    return out;
}

TwoCycleCover two_cycle_cover_even(const Multigraph &g, const EdgeSet &cycles, const EdgeSet &matching) {
    Incidence inc = incidence_of(g, cycles);
    require_two_regular(inc);
    VertexSet attached;
    for (EdgeId id : matching) {
        if (cycles.contains(id))
            throw InvalidInput("edge " + std::to_string(id) + " is both a cycle edge and a matching edge");
        if (!g.has_edge(id))
            throw InvalidInput("unknown edge " + std::to_string(id));
        const Edge &e = g.edge(id);
        for (VertexId v : {e.a, e.b}) {
            if (!inc.contains(v))
                throw InvalidInput("matching edge " + std::to_string(id) + " leaves the cycles at vertex " + std::to_string(v));
            if (!attached.insert(v).second)
                throw InvalidInput("vertex " + std::to_string(v) + " carries two matching edges");
        }
    }

    EdgeSet side_a(matching.begin(), matching.end()), side_b = side_a;
    TwoCycleCover out;
    std::set<EdgeId> seen;
    for (const auto &[v, es] : inc) {
        if (seen.contains(es[0]))
            continue;
        Walk w = walk_cycle(g, inc, v, first_edge(g, inc, v));
        seen.insert(w.edges.begin(), w.edges.end());
        std::vector<std::size_t> points;
        for (std::size_t t = 0; t < w.vertices.size(); ++t)
            if (attached.contains(w.vertices[t]))
                points.push_back(t);
        if (points.empty()) {
            out.a.push_back(std::move(w.edges));
            continue;
        }
        if (points.size() % 2)
            throw InvalidInput("cycle through vertex " + std::to_string(v) + " has " + std::to_string(points.size()) + " attachments");
        // Restart at the lowest attachment, toward its lower neighbor.
        VertexId low = w.vertices[points[0]];
        for (std::size_t t : points)
            low = std::min(low, w.vertices[t]);
        w = walk_cycle(g, inc, low, first_edge(g, inc, low));
        bool in_a = false;
        for (std::size_t t = 0; t < w.vertices.size(); ++t) {
            if (attached.contains(w.vertices[t]))
                in_a = !in_a;
            (in_a ? side_a : side_b).insert(w.edges[t]);
        }
    }
    for (auto &c : split_cycles(g, side_a))
        out.a.push_back(std::move(c));
    out.b = split_cycles(g, side_b);
    return out;
}

CdcReport verify_cdc(const Multigraph &g, const CdcCertificate &cert) {
    CdcReport rep;
    auto fail = [&](std::string msg) {
        rep.valid = false;
        rep.violations.push_back(std::move(msg));
    };
    for (const Edge &e : g.edges())
        rep.coverage[e.id] = 0;
    std::map<std::string, std::set<EdgeId>> used;
    for (std::size_t k = 0; k < cert.cycles.size(); ++k) {
        const LabeledCycle &c = cert.cycles[k];
        if (std::find(kClassLabels.begin(), kClassLabels.end(), c.label) == kClassLabels.end())
            fail("cycle " + std::to_string(k) + " has unknown class label '" + c.label + "'");
        if (c.edges.empty()) {
            fail("cycle " + std::to_string(k) + " is empty");
            continue;
        }
        std::set<EdgeId> es;
        bool ok = true;
        for (EdgeId id : c.edges) {
            if (!g.has_edge(id)) {
                fail("cycle " + std::to_string(k) + " uses unknown edge " + std::to_string(id));
                ok = false;
            } else if (!es.insert(id).second) {
                fail("cycle " + std::to_string(k) + " repeats edge " + std::to_string(id));
                ok = false;
            }
        }
        if (!ok)
            continue;
        // 2-regular and connected.
        std::map<VertexId, int> deg;
        for (EdgeId id : es) {
            ++deg[g.edge(id).a];
            ++deg[g.edge(id).b];
        }
        bool regular = std::all_of(deg.begin(), deg.end(), [](const auto &p) { return p.second == 2; });
        if (!regular)
            fail("cycle " + std::to_string(k) + " is not 2-regular");
        else if (components(g.edge_subgraph(es)).size() != 1)
            fail("cycle " + std::to_string(k) + " is not connected");
        for (EdgeId id : es) {
            ++rep.coverage[id];
            if (!used[c.label].insert(id).second)
                fail("class " + c.label + " uses edge " + std::to_string(id) + " twice");
        }
    }
    for (const auto &[id, n] : rep.coverage)
        if (n != 2)
            fail("edge " + std::to_string(id) + " is covered " + std::to_string(n) + " times");
    return rep;
}

frame::PerfectColoring fold_back(const frame::Frame &f, const frame::PerfectColoring &alpha,
                                 const rows::AmiableColoring &a) {
    int s = f.s();
    if (a.f.size() != static_cast<std::size_t>(3 * s))
        throw InvalidInput("vertex coloring does not match the frame");
    frame::PerfectColoring out = alpha;
    for (int j = 0; j < s; ++j) {
        std::array<Color, 4> perm{0, a.f[j], a.f[s + j], a.f[2 * s + j]};
        std::array<Color, 4> sorted = perm;
        std::sort(sorted.begin() + 1, sorted.end());
        if (sorted != std::array<Color, 4>{0, 1, 2, 3})
            throw InvalidInput("column " + std::to_string(j + 1) + " is not colored by a permutation");
        out = frame::recolor_component(f, out, j, perm);
    }
    return out;
}

CdcConstruction construct_6cdc(const frame::Frame &f, const frame::PerfectColoring &alpha,
                               const rows::AmiableColoring &a) {
    rows::RowGraph r = rows::build_row_graph(f, alpha);
    if (!rows::is_amiable(r, a))
        throw InvalidInput("coloring is not amiable for R(G,F,alpha)");
    CdcConstruction out;
    out.alpha = fold_back(f, alpha, a);
    for (std::size_t e = 0; e < r.edge_count(); ++e) {
        EdgeId id = *r.edges()[e].origin;
        const Edge &he = f.host.edge(id);
        Color c = a.g[e];
        if (c == out.alpha.vertex_color.at(he.a) || c == out.alpha.vertex_color.at(he.b))
            throw InvariantViolation("edge " + std::to_string(id) + " repeats an end color after recoloring");
        out.g[id] = c;
    }
    out.j = decompose(f, out.alpha, out.g);

    for (Color i = 1; i <= 3; ++i) {
        EdgeSet matching = out.j.e[i];
        matching.insert(out.j.x[i].begin(), out.j.x[i].end());
        VertexSet ends;
        for (EdgeId id : matching) {
            ends.insert(f.host.edge(id).a);
            ends.insert(f.host.edge(id).b);
        }
        for (const auto &cycle : split_cycles(f.host, out.j.h[i])) {
            VertexSet on_cycle;
            for (EdgeId id : cycle) {
                on_cycle.insert(f.host.edge(id).a);
                on_cycle.insert(f.host.edge(id).b);
            }
            auto n = std::count_if(on_cycle.begin(), on_cycle.end(), [&](VertexId v) { return ends.contains(v); });
            if (n % 2)
                throw InvariantViolation(
                    "contradiction: a cycle of H_" + std::to_string(i) + " has " + std::to_string(n) + " attachments");
        }
        TwoCycleCover cover = two_cycle_cover_even(f.host, out.j.h[i], matching);
        for (auto &c : cover.a)
            out.certificate.cycles.push_back({std::to_string(i) + "a", std::move(c)});
        for (auto &c : cover.b)
            out.certificate.cycles.push_back({std::to_string(i) + "b", std::move(c)});
    }
    CdcReport rep = verify_cdc(f.host, out.certificate);
    if (!rep.valid)
        throw InvariantViolation("assembled cover fails verification: " + rep.violations.front());
    return out;
}

nlohmann::json to_json(const CdcCertificate &cert) {
    nlohmann::json classes = nlohmann::json::object();
    for (const auto &label : kClassLabels)
        classes[label] = nlohmann::json::array();
    for (const auto &c : cert.cycles)
        classes[c.label].push_back(c.edges);
    return {{"classes", classes}};
}

CdcCertificate certificate_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("classes") || !j["classes"].is_object())
        throw InvalidInput("certificate needs a 'classes' object");
    CdcCertificate cert;
    try {
        for (const auto &[label, list] : j["classes"].items())
            for (const auto &cycle : list)
                cert.cycles.push_back({label, cycle.get<std::vector<EdgeId>>()});
    } catch (const nlohmann::json::exception &e) {
        throw InvalidInput(std::string("malformed certificate: ") + e.what());
    }
    return cert;
}

nlohmann::json to_json(const CdcReport &report) {
    nlohmann::json cov = nlohmann::json::object();
    for (const auto &[id, n] : report.coverage)
        cov[std::to_string(id)] = n;
    return {{"valid", report.valid}, {"violations", report.violations}, {"coverage", cov}};
}

} // namespace kframe::cdc
