// kframe: 6-cycle double covers from Kotzig-frames.

#include "kframe/catalog.hpp"
#include "kframe/cdc.hpp"
#include "kframe/graph_io.hpp"
#include "kframe/pipeline.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace kframe;
namespace fs = std::filesystem;

namespace {

constexpr int kInputError = 3;

io::GraphFormat parse_format(const std::string &s) {
    if (s == "graph6")
        return io::GraphFormat::Graph6;
    if (s == "json")
        return io::GraphFormat::Json;
    return io::GraphFormat::Auto;
}

struct Common {
    std::string strategy = "exhaustive";
    std::string frame_file;
    std::string format = "auto";
    int max_edges = 30;
};

void add_common(CLI::App *cmd, Common &c) {
    cmd->add_option("--frame-strategy", c.strategy, "Frame source")
        ->check(CLI::IsMember({"two-factor", "exhaustive", "file"}));
    cmd->add_option("--frame-file", c.frame_file, "Frame JSON for --frame-strategy file");
    cmd->add_option("--format", c.format, "Graph file format")->check(CLI::IsMember({"auto", "graph6", "json"}));
    cmd->add_option("--max-frame-edges", c.max_edges, "Skip exhaustive frame search above this many edges");
}

pipeline::Options make_options(const Common &c, const Multigraph *g) {
    pipeline::Options o;
    o.strategy.max_edges = c.max_edges;
    if (c.strategy == "two-factor") {
        o.strategy.kind = frame::FrameStrategy::Kind::TwoFactor;
    } else if (c.strategy == "file") {
        if (c.frame_file.empty())
            throw InvalidInput("--frame-strategy file needs --frame-file");
        if (!g)
            throw InvalidInput("--frame-strategy file works on a single graph");
        o.strategy.kind = frame::FrameStrategy::Kind::UserSupplied;
        o.strategy.user_edges = frame::frame_from_json(*g, io::read_json_file(c.frame_file)).frame_edges;
    } else {
        o.strategy.kind = frame::FrameStrategy::Kind::Exhaustive;
    }
    return o;
}

void write_or_print(const std::string &path, const nlohmann::json &j) {
    if (path.empty())
        std::cout << j.dump(2) << "\n";
    else
        io::write_json_file(path, j);
}

std::vector<io::NamedGraph> read_inputs(const std::string &path, io::GraphFormat format) {
    if (!fs::is_directory(path))
        return io::read_graph_file(path, format);
    std::vector<fs::path> files;
    for (const auto &e : fs::directory_iterator(path))
        if (e.is_regular_file())
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<io::NamedGraph> out;
    for (const auto &f : files) {
        auto ext = f.extension().string();
        if (ext != ".g6" && ext != ".s6" && ext != ".json" && ext != ".txt")
            continue;
        for (auto &g : io::read_graph_file(f, format))
            out.push_back(std::move(g));
    }
    return out;
}

int cmd_pipeline(const std::string &file, int index, const Common &c, const std::string &trace_path,
                 const std::string &output) {
    auto graphs = io::read_graph_file(file, parse_format(c.format));
    if (index < 0 || index >= static_cast<int>(graphs.size()))
        throw InvalidInput("graph index out of range");
    const auto &ng = graphs[index];
    pipeline::Options o = make_options(c, &ng.graph);
    o.keep_trace = !trace_path.empty();
    pipeline::InstanceReport rep = pipeline::run_pipeline(ng.graph, ng.name, o);
    nlohmann::json j = pipeline::to_json(rep);
    if (!trace_path.empty()) {
        nlohmann::json t = {{"graph", io::to_json(ng.graph)}, {"frame", rep.frame}, {"alpha", rep.alpha},
                            {"steps", rep.trace}};
        if (rep.certificate)
            t["certificate"] = cdc::to_json(*rep.certificate);
        io::write_json_file(trace_path, t);
        j.erase("trace");
    }
    write_or_print(output, j);
    std::cerr << ng.name << ": " << pipeline::to_string(rep.outcome);
    if (!rep.message.empty())
        std::cerr << " (" << rep.message << ")";
    std::cerr << "\n";
    return pipeline::exit_code(rep.outcome);
}

int cmd_verify(const std::string &graph_file, const std::string &cert_file, const std::string &format) {
    auto graphs = io::read_graph_file(graph_file, parse_format(format));
    if (graphs.size() != 1)
        throw InvalidInput("expected exactly one graph in " + graph_file);
    cdc::CdcCertificate cert = cdc::certificate_from_json(io::read_json_file(cert_file));
    cdc::CdcReport rep = cdc::verify_cdc(graphs[0].graph, cert);
    if (rep.valid) {
        std::cout << "valid: " << cert.cycles.size() << " cycles, every edge covered twice\n";
        return 0;
    }
    std::cout << "invalid:\n";
    for (const auto &v : rep.violations)
        std::cout << "  " << v << "\n";
    return 1;
}

int cmd_corpus(const std::string &path, const Common &c, int jobs, const std::string &output) {
    auto graphs = read_inputs(path, parse_format(c.format));
    if (graphs.empty())
        throw InvalidInput("no graphs found in " + path);
    pipeline::CorpusReport rep = pipeline::run_corpus(graphs, make_options(c, nullptr), jobs);
    nlohmann::json j = pipeline::to_json(rep);
    if (!output.empty())
        io::write_json_file(output, j);
    j.erase("instances");
    std::cout << j.dump(2) << "\n";
    for (const auto &r : rep.instances)
        if (r.outcome != pipeline::Outcome::Verified)
            std::cerr << r.name << ": " << pipeline::to_string(r.outcome) << "\n";
    return rep.exit_code;
}

int cmd_scan(int s_max, int edge_max, int oracle_limit, const std::string &archive_path) {
    pipeline::ScanOptions o;
    o.s_max = s_max;
    o.edge_max = edge_max;
    if (oracle_limit > 0)
        o.limits.max_edges = oracle_limit;
    std::ofstream archive;
    if (!archive_path.empty()) {
        archive.open(archive_path, std::ios::app);
        if (!archive)
            throw InvalidInput("cannot open " + archive_path);
    }
    pipeline::ScanReport rep = pipeline::scan_row_graphs(o, [&](const nlohmann::json &j) {
        if (archive.is_open())
            archive << j.dump() << std::endl;
    });
    std::cout << pipeline::to_json(rep).dump(2) << "\n";
    return rep.counterexamples.empty() ? 0 : 1;
}

int cmd_generate(const std::string &name, int n, const std::string &format) {
    std::vector<Multigraph> gs;
    if (!name.empty())
        gs.push_back(catalog::by_name(name));
    else
        gs = catalog::connected_cubic_graphs(n);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &g : gs)
            arr.push_back(io::to_json(g));
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto &g : gs)
            std::cout << io::to_graph6(g) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Constructs and verifies 6-cycle double covers of cubic graphs with Kotzig-frames"};
    app.require_subcommand(1);

    Common common;
    std::string file, cert, trace, output, archive, name;
    int index = 0, jobs = pipeline::default_jobs(), s_max = 2, edge_max = 6, oracle_limit = 0, n = 4;

    auto *pipe = app.add_subcommand("pipeline", "Run the full construction on one graph");
    pipe->add_option("graph", file, "Graph file")->required();
    pipe->add_option("--index", index, "Which graph of the file (0-based)");
    pipe->add_option("--trace", trace, "Write frame, coloring, construction steps and certificate here");
    pipe->add_option("-o,--output", output, "Write the report here instead of stdout");
    add_common(pipe, common);

    auto *verify = app.add_subcommand("verify", "Check a certificate against a graph");
    verify->add_option("graph", file, "Graph file")->required();
    verify->add_option("certificate", cert, "Certificate JSON")->required();
    verify->add_option("--format", common.format, "Graph file format")
        ->check(CLI::IsMember({"auto", "graph6", "json"}));

    auto *corpus = app.add_subcommand("corpus", "Run the pipeline on every graph of a file or directory");
    corpus->add_option("path", file, "Graph file or directory")->required();
    corpus->add_option("--jobs", jobs, "Worker threads (default: KFRAME_JOBS or core count)")
        ->check(CLI::PositiveNumber);
    corpus->add_option("-o,--output", output, "Write the full report here");
    add_common(corpus, common);

    auto *scan = app.add_subcommand("scan-rows", "Search small 3-row graphs for eulerian non-amiable ones");
    scan->add_option("--s-max", s_max, "Largest column count");
    scan->add_option("--edge-max", edge_max, "Largest edge count");
    scan->add_option("--oracle-limit", oracle_limit, "Edge limit of the exhaustive oracle");
    scan->add_option("--archive", archive, "Append every counterexample to this JSON-lines file");

    auto *gen = app.add_subcommand("generate", "Print catalog graphs");
    auto *named = gen->add_option("--name", name, "theta, k4, k33, prism, cube or petersen");
    gen->add_option("--cubic", n, "All connected simple cubic graphs on this many vertices")->excludes(named);
    gen->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"auto", "graph6", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (*pipe)
            return cmd_pipeline(file, index, common, trace, output);
        if (*verify)
            return cmd_verify(file, cert, common.format);
        if (*corpus)
            return cmd_corpus(file, common, jobs, output);
        if (*scan)
            return cmd_scan(s_max, edge_max, oracle_limit, archive);
        if (*gen)
            return cmd_generate(name, n, common.format);
    } catch (const InvalidInput &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
