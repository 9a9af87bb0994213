#pragma once

#include "kframe/cdc.hpp"
#include "kframe/frame.hpp"
#include "kframe/graph_io.hpp"
#include "kframe/rowgraph.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace kframe::pipeline {

enum class Outcome { Verified, NoFrame, NoWitness, ConstructionFailed, VerificationFailed, InputError };

std::string to_string(Outcome o);

/// 0 verified, 1 construction or verification failure, 2 no frame or no
/// witness, 3 bad input.
int exit_code(Outcome o);

struct Options {
    frame::FrameStrategy strategy;
    /// Keep the row graph, amiable coloring and construction trace.
    bool keep_trace = false;
    /// Record stage timings; off for byte-identical reports.
    bool timings = true;
};

struct InstanceReport {
    std::string name;
    int vertices = 0;
    int edges = 0;
    Outcome outcome = Outcome::InputError;
    bool frame_found = false;
    bool well_connected = false;
    bool amiable_constructed = false;
    bool cdc_verified = false;
    int frames_tried = 0;
    std::string message;
    /// Set when a guaranteed step failed on valid input.
    bool counterexample = false;
    std::map<std::string, double> timings_ms;
    nlohmann::json frame;
    nlohmann::json alpha;
    nlohmann::json trace;
    std::optional<cdc::CdcCertificate> certificate;
};

/// Frame search, well connected coloring, row graph, amiable coloring, cover,
/// verification. Stage failures are reported, never thrown.
InstanceReport run_pipeline(const Multigraph &g, const std::string &name, const Options &options);

struct CorpusReport {
    std::vector<InstanceReport> instances;
    int frame_found = 0;
    int well_connected = 0;
    int amiable_constructed = 0;
    int cdc_verified = 0;
    int failures = 0;
    /// Worst exit code over all instances.
    int exit_code = 0;
};

/// Runs every graph on up to `jobs` threads. Instance order is kept.
CorpusReport run_corpus(const std::vector<io::NamedGraph> &graphs, const Options &options, int jobs);

/// Job count from KFRAME_JOBS, else the hardware concurrency.
int default_jobs();

struct ScanOptions {
    int s_max = 2;
    int edge_max = 6;
    rows::OracleLimits limits;
};

struct ScanReport {
    long enumerated = 0;
    long eulerian = 0;
    long amiable = 0;
    /// Row graph JSON of every eulerian instance without an amiable coloring.
    std::vector<nlohmann::json> counterexamples;
};

/// Every 3-row graph up to rearrangement with s <= s_max columns and at most
/// edge_max edges; instances with R_C not eulerian are skipped. Each
/// counterexample is handed to `archive` before the scan moves on.
ScanReport scan_row_graphs(const ScanOptions &options,
                            const std::function<void(const nlohmann::json &)> &archive = {});

nlohmann::json to_json(const InstanceReport &r);
nlohmann::json to_json(const CorpusReport &r);
nlohmann::json to_json(const ScanReport &r);

} // namespace kframe::pipeline
