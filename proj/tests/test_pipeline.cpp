#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kframe/catalog.hpp"
#include "kframe/pipeline.hpp"
#include "row_oracles.hpp"

using namespace kframe;
using namespace kframe::pipeline;

namespace {

// Three theta-subdivisions joined in a triangle; no perfect coloring of
// this frame is well connected.
Multigraph theta_triangle() {
    std::vector<std::pair<VertexId, VertexId>> p;
    for (int c = 0; c < 3; ++c) {
        int b = 4 * c;
        p.push_back({b, b + 1});
        p.push_back({b, b + 2});
        p.push_back({b + 2, b + 1});
        p.push_back({b, b + 3});
        p.push_back({b + 3, b + 1});
    }
    for (int c = 0; c < 3; ++c)
        p.push_back({4 * c + 2, 4 * ((c + 1) % 3) + 3});
    return Multigraph::from_pairs(12, p);
}

Options quiet() {
    Options o;
    o.timings = false;
    return o;
}

} // namespace

TEST_CASE("pipeline outcomes") {
    SUBCASE("theta") {
        InstanceReport r = run_pipeline(catalog::theta(), "theta", quiet());
        CHECK(r.outcome == Outcome::Verified);
        REQUIRE(r.certificate);
        CHECK(r.certificate->cycles.size() == 3);
        // Cold re-check from the serialized report.
        nlohmann::json j = to_json(r);
        auto cert = cdc::certificate_from_json(j["certificate"]);
        CHECK(cdc::verify_cdc(catalog::theta(), cert).valid);
        CHECK(exit_code(r.outcome) == 0);
    }
    SUBCASE("Petersen") {
        InstanceReport r = run_pipeline(catalog::petersen(), "petersen", quiet());
        CHECK(r.outcome == Outcome::Verified);
        CHECK(r.well_connected);
        CHECK(cdc::verify_cdc(catalog::petersen(), *r.certificate).valid);

        Options two = quiet();
        two.strategy.kind = frame::FrameStrategy::Kind::TwoFactor;
        InstanceReport none = run_pipeline(catalog::petersen(), "petersen", two);
        CHECK(none.outcome == Outcome::NoFrame);
        CHECK(none.message == "no frame found by strategy");
        CHECK(exit_code(none.outcome) == 2);
        CHECK_FALSE(none.certificate);
    }
    SUBCASE("frame without a well connected coloring") {
        Options o = quiet();
        o.strategy.kind = frame::FrameStrategy::Kind::UserSupplied;
        for (int e = 0; e < 15; ++e)
            o.strategy.user_edges.insert(e);
        InstanceReport r = run_pipeline(theta_triangle(), "triangle", o);
        CHECK(r.outcome == Outcome::NoWitness);
        CHECK(r.frame_found);
        CHECK(exit_code(r.outcome) == 2);
        // Other frames of the same graph do work.
        CHECK(run_pipeline(theta_triangle(), "triangle", quiet()).outcome == Outcome::Verified);
    }
    SUBCASE("bad input") {
        InstanceReport r = run_pipeline(Multigraph::from_pairs(3, {{0, 1}, {1, 2}}), "path", quiet());
        CHECK(r.outcome == Outcome::InputError);
        CHECK(exit_code(r.outcome) == 3);
        Options o = quiet();
        o.strategy.kind = frame::FrameStrategy::Kind::UserSupplied;
        o.strategy.user_edges = {0, 1};
        CHECK(run_pipeline(catalog::k4(), "k4", o).outcome == Outcome::InputError);
    }
    SUBCASE("trace") {
        Options o = quiet();
        o.keep_trace = true;
        InstanceReport r = run_pipeline(catalog::cube(), "cube", o);
        REQUIRE(r.outcome == Outcome::Verified);
        CHECK(r.trace.contains("construction"));
        CHECK(r.trace.contains("row_graph"));
    }
}

TEST_CASE("corpus reports do not depend on the worker count") {
    std::vector<io::NamedGraph> graphs{{"theta", catalog::theta()}};
    for (int n = 4; n <= 8; n += 2)
        for (const auto &g : catalog::connected_cubic_graphs(n))
            graphs.push_back({"n" + std::to_string(n) + "_" + std::to_string(graphs.size()), g});
    CorpusReport one = run_corpus(graphs, quiet(), 1);
    CorpusReport four = run_corpus(graphs, quiet(), 4);
    CHECK(to_json(one) == to_json(four));
    CHECK(one.cdc_verified == one.well_connected);
    CHECK(one.failures == 0);
    CHECK(one.instances.size() == graphs.size());
    for (std::size_t k = 0; k < graphs.size(); ++k)
        CHECK(one.instances[k].name == graphs[k].name);
}

TEST_CASE("row graph scan") {
    ScanOptions o;
    o.s_max = 2;
    o.edge_max = 4;
    std::vector<nlohmann::json> archived;
    ScanReport r = scan_row_graphs(o, [&](const nlohmann::json &j) { archived.push_back(j); });
    CHECK(r.counterexamples.empty());
    CHECK(archived.empty());
    CHECK(r.amiable == r.eulerian);

    // Independent count of the instances that reach the oracle.
    long enumerated = 0, eulerian = 0;
    for (int s = 1; s <= 2; ++s)
        rows::for_each_row_graph(3, s, 4, true, [&](const rows::RowGraph &g) {
            ++enumerated;
            eulerian += oracle::column_degrees_even(oracle::plain(g)) ? 1 : 0;
        });
    CHECK(r.enumerated == enumerated);
    CHECK(r.eulerian == eulerian);
    CHECK(r.eulerian < r.enumerated);

    o.edge_max = 40;
    CHECK_THROWS_AS(scan_row_graphs(o), InvalidInput);
}
