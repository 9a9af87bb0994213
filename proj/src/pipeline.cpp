#include "kframe/pipeline.hpp"

#include "kframe/construct.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

namespace kframe::pipeline {

std::string to_string(Outcome o) {
    switch (o) {
    case Outcome::Verified:
        return "verified";
    case Outcome::NoFrame:
        return "no-frame";
    case Outcome::NoWitness:
        return "no-witness";
    case Outcome::ConstructionFailed:
        return "construction-failed";
    case Outcome::VerificationFailed:
        return "verification-failed";
    case Outcome::InputError:
        return "input-error";
    }
    return "unknown";
}

int exit_code(Outcome o) {
    switch (o) {
    case Outcome::Verified:
        return 0;
    case Outcome::ConstructionFailed:
    case Outcome::VerificationFailed:
        return 1;
    case Outcome::NoFrame:
    case Outcome::NoWitness:
        return 2;
    case Outcome::InputError:
        return 3;
    }
    return 3;
}

namespace {

class Stopwatch {
  public:
    double lap() {
        auto now = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

  private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

} // namespace

InstanceReport run_pipeline(const Multigraph &g, const std::string &name, const Options &options) {
    InstanceReport rep;
    rep.name = name;
    rep.vertices = static_cast<int>(g.vertex_count());
    rep.edges = static_cast<int>(g.edge_count());
    if (!g.is_cubic()) {
        rep.message = "graph is not cubic";
        return rep;
    }
    Stopwatch clock;
    auto lap = [&](const char *stage) {
        double ms = clock.lap();
        if (options.timings)
            rep.timings_ms[stage] += ms;
    };

    std::optional<frame::Frame> chosen;
    std::optional<frame::WellConnectedColoring> wc;
    try {
        if (options.strategy.kind == frame::FrameStrategy::Kind::UserSupplied)
            frame::validate_frame(g, options.strategy.user_edges);
        frame::for_each_frame(g, options.strategy, [&](const frame::Frame &f) {
            ++rep.frames_tried;
            rep.frame_found = true;
            wc = frame::find_well_connected_frame_coloring(f);
            if (!wc)
                return true;
            chosen = f;
            return false;
        });
    } catch (const InvalidInput &e) {
        rep.message = e.what();
        return rep;
    }
    lap("frame_search");
    if (!rep.frame_found) {
        rep.outcome = Outcome::NoFrame;
        rep.message = "no frame found by strategy";
        return rep;
    }
    if (!chosen) {
        rep.outcome = Outcome::NoWitness;
        rep.message = "no frame with a well connected perfect coloring";
        return rep;
    }
    rep.well_connected = true;
    rep.frame = frame::to_json(*chosen);
    rep.alpha = frame::to_json(wc->alpha);

    try {
        rows::RowGraph r = rows::build_row_graph(*chosen, wc->alpha);
        std::vector<frame::Kind> kinds;
        for (const auto &c : chosen->components)
            kinds.push_back(c.kind);
        construct::Construction built = construct::construct_amiable_main(r, kinds, wc->witness.color);
        rep.amiable_constructed = true;
        if (options.keep_trace)
            rep.trace = {{"witness_color", wc->witness.color},
                         {"row_graph", rows::to_json(r)},
                         {"amiable", rows::to_json(r, built.coloring)},
                         {"construction", construct::to_json(built.trace)}};
        lap("construction");
        cdc::CdcConstruction cover = cdc::construct_6cdc(*chosen, wc->alpha, built.coloring);
        lap("cover");
        rep.certificate = cover.certificate;
    } catch (const Error &e) {
        rep.outcome = Outcome::ConstructionFailed;
        rep.counterexample = true;
        rep.message = e.what();
        return rep;
    }

    cdc::CdcReport check = cdc::verify_cdc(g, *rep.certificate);
    lap("verification");
    rep.cdc_verified = check.valid;
    rep.outcome = check.valid ? Outcome::Verified : Outcome::VerificationFailed;
    if (!check.valid) {
        rep.counterexample = true;
        rep.message = check.violations.front();
    }
    return rep;
}

int default_jobs() {
    if (const char *env = std::getenv("KFRAME_JOBS")) {
        int n = std::atoi(env);
        if (n > 0)
            return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

CorpusReport run_corpus(const std::vector<io::NamedGraph> &graphs, const Options &options, int jobs) {
    CorpusReport out;
    out.instances.resize(graphs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < graphs.size();)
            out.instances[k] = run_pipeline(graphs[k].graph, graphs[k].name, options);
    };
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto &t : pool)
        t.join();
    for (const auto &r : out.instances) {
        out.frame_found += r.frame_found;
        out.well_connected += r.well_connected;
        out.amiable_constructed += r.amiable_constructed;
        out.cdc_verified += r.cdc_verified;
        out.failures += r.counterexample;
        out.exit_code = std::max(out.exit_code, exit_code(r.outcome));
    }
    return out;
}

ScanReport scan_row_graphs(const ScanOptions &options, const std::function<void(const nlohmann::json &)> &archive) {
    const auto &lim = options.limits;
    if (options.s_max < 1 || options.edge_max < 0)
        throw InvalidInput("scan bounds must be positive");
    if (!lim.force && (options.s_max > lim.max_columns || options.edge_max > lim.max_edges))
        throw InvalidInput("scan bounds exceed the oracle limit");
    ScanReport rep;
    for (int s = 1; s <= options.s_max; ++s)
        rows::for_each_row_graph(3, s, options.edge_max, true, [&](const rows::RowGraph &r) {
            ++rep.enumerated;
            if (!is_eulerian(rows::row_contract(r)))
                return;
            ++rep.eulerian;
            if (rows::brute_force_amiable(r, lim)) {
                ++rep.amiable;
                return;
            }
            nlohmann::json j = rows::to_json(r);
            if (archive)
                archive(j);
            rep.counterexamples.push_back(std::move(j));
        });
    return rep;
}

nlohmann::json to_json(const InstanceReport &r) {
    nlohmann::json j = {{"name", r.name},
                        {"vertices", r.vertices},
                        {"edges", r.edges},
                        {"outcome", to_string(r.outcome)},
                        {"frame_found", r.frame_found},
                        {"well_connected", r.well_connected},
                        {"amiable_constructed", r.amiable_constructed},
                        {"cdc_verified", r.cdc_verified},
                        {"frames_tried", r.frames_tried},
                        {"counterexample", r.counterexample}};
    if (!r.message.empty())
        j["message"] = r.message;
    if (!r.timings_ms.empty())
        j["timings_ms"] = r.timings_ms;
    if (!r.frame.is_null())
        j["frame"] = r.frame;
    if (!r.alpha.is_null())
        j["alpha"] = r.alpha;
    if (!r.trace.is_null())
        j["trace"] = r.trace;
    if (r.certificate)
        j["certificate"] = cdc::to_json(*r.certificate);
    return j;
}

nlohmann::json to_json(const CorpusReport &r) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto &x : r.instances)
        list.push_back(to_json(x));
    return {{"graphs", r.instances.size()},
            {"frame_found", r.frame_found},
            {"well_connected", r.well_connected},
            {"amiable_constructed", r.amiable_constructed},
            {"cdc_verified", r.cdc_verified},
            {"failures", r.failures},
            {"instances", list}};
}

nlohmann::json to_json(const ScanReport &r) {
    return {{"enumerated", r.enumerated},
            {"eulerian", r.eulerian},
            {"amiable", r.amiable},
            {"counterexamples", r.counterexamples}};
}

} // namespace kframe::pipeline
