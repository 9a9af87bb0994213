#include "kframe/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kframe::io {

namespace {

struct SizeField {
    int n;
    std::size_t consumed;
};

int data_byte(char c) {
    int v = static_cast<unsigned char>(c) - 63;
    if (v < 0 || v > 63)
        throw InvalidInput(std::string("graph6: invalid character '") + c + "'");
    return v;
}

SizeField read_size(std::string_view s) {
    if (s.empty())
        throw InvalidInput("graph6: empty input");
    if (s[0] != '~')
        return {data_byte(s[0]), 1};
    if (s.size() >= 2 && s[1] == '~') {
        if (s.size() < 8)
            throw InvalidInput("graph6: truncated size field");
        long long n = 0;
        for (std::size_t i = 2; i < 8; ++i)
            n = (n << 6) | data_byte(s[i]);
        return {static_cast<int>(n), 8};
    }
    if (s.size() < 4)
        throw InvalidInput("graph6: truncated size field");
    int n = 0;
    for (std::size_t i = 1; i < 4; ++i)
        n = (n << 6) | data_byte(s[i]);
    return {n, 4};
}

std::string write_size(int n) {
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    return s;
}

} // namespace

Multigraph parse_graph6(std::string_view line) {
    line = trim(line);
    constexpr std::string_view header = ">>graph6<<";
    if (line.starts_with(header))
        line.remove_prefix(header.size());
    auto [n, used] = read_size(line);
    line.remove_prefix(used);
    std::size_t bits_needed = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2;
    if (line.size() * 6 < bits_needed || line.size() != (bits_needed + 5) / 6)
        throw InvalidInput("graph6: wrong data length for n=" + std::to_string(n));
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = data_byte(line[bit / 6]);
            if ((byte >> (5 - bit % 6)) & 1)
                pairs.emplace_back(i, j);
        }
    }
    return Multigraph::from_pairs(n, pairs);
}

Multigraph parse_sparse6(std::string_view line) {
    line = trim(line);
    constexpr std::string_view header = ">>sparse6<<";
    if (line.starts_with(header))
        line.remove_prefix(header.size());
    if (line.empty() || line[0] != ':')
        throw InvalidInput("sparse6: missing leading ':'");
    line.remove_prefix(1);
    auto [n, used] = read_size(line);
    line.remove_prefix(used);
    int k = 1;
    while ((1 << k) < n)
        ++k;
    std::vector<int> bits;
    for (char c : line) {
        int byte = data_byte(c);
        for (int shift = 5; shift >= 0; --shift)
            bits.push_back((byte >> shift) & 1);
    }
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::size_t pos = 0;
    int v = 0;
    while (pos + 1 + static_cast<std::size_t>(k) <= bits.size()) {
        int b = bits[pos++];
        int x = 0;
        for (int i = 0; i < k; ++i)
            x = (x << 1) | bits[pos++];
        if (b == 1)
            ++v;
        if (x >= n || v >= n)
            break;
        if (x > v)
            v = x;
        else
            pairs.emplace_back(x, v);
    }
    return Multigraph::from_pairs(n, pairs);
}

Multigraph parse_graph6_or_sparse6(std::string_view line) {
    std::string_view t = trim(line);
    if (t.starts_with(':') || t.starts_with(">>sparse6<<"))
        return parse_sparse6(t);
    return parse_graph6(t);
}

std::string to_graph6(const Multigraph &g) {
    int n = static_cast<int>(g.vertex_count());
    for (int v = 0; v < n; ++v)
        if (!g.has_vertex(v))
            throw InvalidInput("to_graph6: vertex ids must be 0..n-1");
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const Edge &e : g.edges()) {
        if (e.is_loop() || adj[e.a][e.b])
            throw InvalidInput("to_graph6: graph is not simple");
        adj[e.a][e.b] = adj[e.b][e.a] = true;
    }
    std::string out = write_size(n);
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (adj[i][j] ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

nlohmann::json to_json(const Multigraph &g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge &e : g.edges())
        edges.push_back({e.id, e.a, e.b});
    return {{"vertices", std::vector<VertexId>(g.vertices().begin(), g.vertices().end())}, {"edges", edges}};
}

Multigraph multigraph_from_json(const nlohmann::json &j) {
    try {
        std::vector<VertexId> vs = j.at("vertices").get<std::vector<VertexId>>();
        std::vector<Edge> es;
        for (const auto &e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                throw InvalidInput("graph JSON: each edge must be [id, a, b]");
            es.push_back({e[0].get<EdgeId>(), e[1].get<VertexId>(), e[2].get<VertexId>()});
        }
        return Multigraph(std::move(vs), std::move(es));
    } catch (const nlohmann::json::exception &ex) {
        throw InvalidInput(std::string("graph JSON: ") + ex.what());
    }
}

nlohmann::json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &ex) {
        throw InvalidInput(path.string() + ": " + ex.what());
    }
}

void write_json_file(const std::filesystem::path &path, const nlohmann::json &j) {
    std::ofstream out(path);
    if (!out)
        throw InvalidInput("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

std::vector<NamedGraph> read_graph_file(const std::filesystem::path &path, GraphFormat format) {
    if (format == GraphFormat::Auto)
        format = path.extension() == ".json" ? GraphFormat::Json : GraphFormat::Graph6;
    std::string stem = path.stem().string();
    std::vector<NamedGraph> out;
    if (format == GraphFormat::Json) {
        nlohmann::json j = read_json_file(path);
        if (j.is_array()) {
            for (std::size_t i = 0; i < j.size(); ++i)
                out.push_back({stem + "#" + std::to_string(i + 1), multigraph_from_json(j[i])});
        } else {
            out.push_back({stem, multigraph_from_json(j)});
        }
        return out;
    }
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open " + path.string());
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty())
            continue;
        ++count;
        out.push_back({stem + "#" + std::to_string(count), parse_graph6_or_sparse6(line)});
    }
    if (out.size() == 1)
        out.front().name = stem;
    return out;
}

} // namespace kframe::io
