#include <doctest.h>

#include "support.hh"

#include <folkman/canon.hh>
#include <folkman/digest.hh>
#include <folkman/errors.hh>
#include <folkman/extend.hh>
#include <folkman/families.hh>
#include <folkman/invariants.hh>
#include <folkman/pipeline.hh>

#include <fstream>

using namespace folkman;
using namespace folkman::testing;

namespace fs = std::filesystem;

namespace
{
    auto plan(StageKind kind, FamilyParams params, fs::path output, std::vector<fs::path> inputs = {}) -> StagePlan
    {
        StagePlan p;
        p.kind = kind;
        p.params = params;
        p.output = std::move(output);
        p.inputs = std::move(inputs);
        p.shard_size = 16;
        p.generation_shards = 8;
        return p;
    }

    auto direct_members(int n, FamilyParams params) -> GraphStore
    {
        GenerationOptions options;
        options.max_clique = 3;
        options.max_independence = params.s;
        GraphStore store;
        generate_all_graphs(n, options, [&] (const Graph & g) {
                if (family_rejection(g, params) == Rejection::none)
                    store.insert(g);
            });
        return store;
    }

    auto load(const fs::path & file) -> GraphStore
    {
        return GraphStore::load_canonical(file);
    }
}

TEST_CASE("stage names")
{
    CHECK(to_string(StageKind::edges_down) == "edges-down");
    CHECK(parse_stage_kind("edges_down") == StageKind::edges_down);
    CHECK(parse_stage_kind("bh-check") == StageKind::bh_check);
    CHECK_THROWS_AS(parse_stage_kind("extend2"), PreconditionViolated);
    CHECK(manifest_path("a/b.g6") == fs::path{"a/b.manifest.json"});
}

TEST_CASE("generate and filter stages")
{
    TempDir dir;
    auto gen = plan(StageKind::generate, { 8, 0, 3, false, Variant::plus_k3 }, dir / "gen.g6");
    auto r = run_stage(gen);
    CHECK(! r.skipped);

    GenerationOptions options;
    options.max_clique = 3;
    options.max_independence = 3;
    GraphStore expected;
    generate_all_graphs(8, options, [&] (const Graph & g) {
            if (is_plus_k3(g))
                expected.insert(g);
        });
    CHECK(load(dir / "gen.g6").serialise() == expected.serialise());
    CHECK(r.manifest["count"] == expected.size());
    CHECK(r.manifest["counts"]["generated"] == expected.size());
    CHECK(r.manifest["output_digest"] == sha256_file(dir / "gen.g6"));
    CHECK(r.manifest["format"] == 1);
    CHECK(read_manifest(dir / "gen.g6") == r.manifest);
    CHECK(! fs::exists(dir / "gen.g6.ckpt"));

    FamilyParams family{ 8, 3, 3, false, Variant::plus_k3 };
    auto with_input = run_stage(plan(StageKind::filter, family, dir / "f1.g6", { dir / "gen.g6" }));
    auto without = run_stage(plan(StageKind::filter, family, dir / "f2.g6"));
    auto direct = direct_members(8, family);
    CHECK(load(dir / "f1.g6").serialise() == direct.serialise());
    CHECK(load(dir / "f2.g6").serialise() == direct.serialise());
    CHECK(with_input.manifest["family"] == "L_+K3(8;3;<=3)");
    CHECK(with_input.manifest["counts"]["accepted"] == direct.size());
    CHECK(with_input.manifest["input_digests"][0] == sha256_file(dir / "gen.g6"));
    long rejected = 0;
    for (auto & [reason, count] : with_input.manifest["counts"]["rejected"].items())
        rejected += count.get<long>();
    CHECK(rejected + long(direct.size()) == with_input.manifest["counts"]["examined"].get<long>());
}

TEST_CASE("extend, sperner and edges-down stages chain through manifests")
{
    TempDir dir;
    run_stage(plan(StageKind::filter, { 7, 3, 3, false, Variant::plus_k3 }, dir / "a.g6"));
    run_stage(plan(StageKind::filter, { 9, 2, 3, false, Variant::max }, dir / "b.g6"));

    auto ext = run_stage(plan(StageKind::extend, { 10, 2, 3, false, Variant::max }, dir / "ext.g6", { dir / "a.g6" }));
    auto spe = run_stage(plan(StageKind::sperner, { 10, 2, 3, false, Variant::max }, dir / "spe.g6", { dir / "b.g6" }));
    CHECK(ext.manifest["family"] == "L_max(10;2;3)");

    GraphStore direct_extend;
    auto inputs = load(dir / "a.g6").graphs();
    auto report = algorithm_extend(inputs, { 10, 2, 3, false }, direct_extend);
    CHECK(load(dir / "ext.g6").serialise() == direct_extend.serialise());
    CHECK(ext.manifest["counts"]["candidates"] == report.candidates);
    CHECK(ext.manifest["counts"]["after_dedup"] == report.after_dedup);
    CHECK(ext.manifest["counts"]["after_arrowing"] == report.after_arrowing);

    // every maximal member with alpha = 3 is found by one of the two
    GraphStore both = load(dir / "ext.g6");
    both.merge(load(dir / "spe.g6"));
    GraphStore expected;
    for (auto & g : direct_members(10, { 10, 2, 3, false, Variant::max }).graphs())
        if (independence_number(g) == 3)
            expected.insert(g);
    CHECK(both.serialise() == expected.serialise());

    // the closure of every maximal member gives the +K3 family
    run_stage(plan(StageKind::filter, { 10, 2, 3, false, Variant::max }, dir / "max.g6"));
    auto down_plan = plan(StageKind::edges_down, { 10, 2, 3, false, Variant::plus_k3 }, dir / "down.g6", { dir / "max.g6" });
    auto down = run_stage(down_plan);
    CHECK(load(dir / "down.g6").serialise() == direct_members(10, { 10, 2, 3, false, Variant::plus_k3 }).serialise());
    CHECK(down.manifest["counts"]["violation_count"] == 0);
    CHECK(down.manifest["counts"]["accepted"] == down.manifest["count"]);

    // parameters that do not fit the input manifest
    CHECK_THROWS_AS(run_stage(plan(StageKind::extend, { 11, 2, 3, false, Variant::max }, dir / "bad.g6", { dir / "a.g6" })),
            ManifestMismatch);
    CHECK_THROWS_AS(run_stage(plan(StageKind::sperner, { 10, 2, 3, false, Variant::max }, dir / "bad.g6", { dir / "a.g6" })),
            ManifestMismatch);
    CHECK_THROWS_AS(run_stage(plan(StageKind::edges_down, { 10, 1, 3, false, Variant::plus_k3 }, dir / "bad.g6", { dir / "max.g6" })),
            ManifestMismatch);

    // an input changed after its manifest was written
    {
        std::ofstream out{dir / "a.g6", std::ios::app};
        out << "C~\n";
    }
    CHECK_THROWS_AS(run_stage(plan(StageKind::extend, { 10, 2, 3, false, Variant::max }, dir / "ext2.g6", { dir / "a.g6" })),
            ManifestMismatch);
}

TEST_CASE("finished stages are skipped and damaged outputs recomputed")
{
    TempDir dir;
    auto p = plan(StageKind::filter, { 8, 3, 3, false, Variant::plain }, dir / "f.g6");
    auto first = run_stage(p);
    auto again = run_stage(p);
    CHECK(again.skipped);
    CHECK(again.manifest["output_digest"] == first.manifest["output_digest"]);

    {
        std::ofstream out{dir / "f.g6"};
        out << "C~\n";
    }
    auto redone = run_stage(p);
    CHECK(! redone.skipped);
    CHECK(sha256_file(dir / "f.g6") == first.manifest["output_digest"]);

    // different settings are a different run
    auto no_chi = p;
    no_chi.chi_filter = false;
    CHECK(! run_stage(no_chi).skipped);
    CHECK(sha256_file(dir / "f.g6") == first.manifest["output_digest"]);
}

TEST_CASE("interrupted stages resume from their shards")
{
    TempDir dir;
    auto p = plan(StageKind::filter, { 8, 3, 3, false, Variant::plus_k3 }, dir / "f.g6");
    auto reference = run_stage(plan(StageKind::filter, p.params, dir / "ref.g6"));

    // a directory in the way of the output makes the final write fail after every shard is done
    fs::create_directories(dir / "f.g6" / "blocker");
    CHECK_THROWS(run_stage(p));
    REQUIRE(fs::exists(dir / "f.g6.ckpt"));
    fs::remove_all(dir / "f.g6");

    // damage one shard; it is recomputed, the rest are reused
    for (auto & entry : fs::directory_iterator(dir / "f.g6.ckpt"))
        if (entry.path().filename() == "filter-0.g6") {
            std::ofstream out{entry.path()};
            out << "C~\n";
        }
    auto resumed = run_stage(p);
    CHECK(resumed.manifest["run"]["reused_checkpoints"] == p.generation_shards - 1);
    CHECK(sha256_file(dir / "f.g6") == reference.manifest["output_digest"]);
    CHECK(resumed.manifest["counts"] == reference.manifest["counts"]);
    CHECK(! fs::exists(dir / "f.g6.ckpt"));
}

TEST_CASE("interrupted closures resume from their last level")
{
    TempDir dir;
    run_stage(plan(StageKind::filter, { 9, 3, 3, false, Variant::max }, dir / "max.g6"));
    auto p = plan(StageKind::edges_down, { 9, 3, 3, false, Variant::plus_k3 }, dir / "down.g6", { dir / "max.g6" });
    auto reference = run_stage(plan(StageKind::edges_down, p.params, dir / "ref.g6", { dir / "max.g6" }));

    fs::create_directories(dir / "down.g6" / "blocker");
    CHECK_THROWS(run_stage(p));
    fs::remove_all(dir / "down.g6");
    auto resumed = run_stage(p);
    CHECK(resumed.manifest["run"]["reused_checkpoints"].get<long>() > 0);
    CHECK(sha256_file(dir / "down.g6") == reference.manifest["output_digest"]);
    CHECK(resumed.manifest["counts"]["accepted"] == reference.manifest["counts"]["accepted"]);
    CHECK(resumed.manifest["counts"]["accepted_by_edges"] == reference.manifest["counts"]["accepted_by_edges"]);
}

TEST_CASE("worker counts do not change outputs")
{
    TempDir dir;
    std::string digest;
    for (int workers : { 1, 3, 8 }) {
        auto p = plan(StageKind::filter, { 9, 3, 3, false, Variant::plus_k3 }, dir / ("w" + std::to_string(workers) + ".g6"));
        p.workers = workers;
        auto r = run_stage(p);
        if (digest.empty())
            digest = r.manifest["output_digest"];
        CHECK(r.manifest["output_digest"] == digest);
    }
}

TEST_CASE("external lists are ingested without a manifest")
{
    TempDir dir;
    {
        std::ofstream out{dir / "raw.g6"};
        // two labellings of the same graph
        out << to_graph6(cycle_graph(5)) << "\n" << to_graph6(relabel(cycle_graph(5), std::vector<int>{1, 3, 0, 4, 2})) << "\n"
            << to_graph6(join_complete(1, cycle_graph(5))) << "\n";
    }
    auto r = run_stage(plan(StageKind::filter, { 5, 3, 2, false, Variant::plain }, dir / "out.g6", { dir / "raw.g6" }));
    CHECK(r.manifest["counts"]["examined"] == 2);
    CHECK(r.manifest["count"] == 1);
    CHECK(load(dir / "out.g6").contains(cycle_graph(5)));

    CHECK_THROWS_AS(run_stage(plan(StageKind::filter, { 5, 3, 2, false, Variant::plain }, dir / "x.g6", { dir / "none.g6" })),
            StoreError);
    CHECK_THROWS_AS(run_stage(plan(StageKind::filter, { 5, 3, 2, false, Variant::plain }, "", { dir / "raw.g6" })),
            PreconditionViolated);
}

TEST_CASE("bh-check and stats stages")
{
    TempDir dir;
    {
        std::ofstream out{dir / "h.g6"};
        out << to_graph6(cycle_graph(5)) << "\n" << to_graph6(complete_graph(3)) << "\n";
    }
    auto p = plan(StageKind::bh_check, { 1, 1, 1, false, Variant::plain }, dir / "report.txt", { dir / "h.g6" });
    auto r = run_stage(p);
    CHECK(r.manifest["counts"]["inputs"] == 2);
    CHECK(r.manifest["counts"]["arrows"] == 0);
    std::ifstream in{dir / "report.txt"};
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
        CHECK(line.find("not-arrows") != std::string::npos);
    }
    CHECK(lines == 2);
    int witnesses = 0;
    for (auto & entry : fs::directory_iterator(dir / "report.txt.witnesses")) {
        (void) entry;
        ++witnesses;
    }
    CHECK(witnesses == 2);

    auto s = run_stage(plan(StageKind::stats, { 1, 1, 1, false, Variant::plain }, dir / "stats.txt", { dir / "h.g6" }));
    CHECK(s.manifest["count"] == 2);
    CHECK(fs::exists(dir / "stats.tsv"));
    CHECK(s.manifest["counts"]["edges"]["5"] == 1);
    CHECK(s.manifest["counts"]["edges"]["3"] == 1);
}

TEST_CASE("histograms")
{
    std::vector<Graph> graphs{ cycle_graph(5), join_complete(1, cycle_graph(5)), complete_graph(3) };
    auto h = compute_histograms(graphs);
    CHECK(h.edges == std::map<int, long>{ { 3, 1 }, { 5, 1 }, { 10, 1 } });
    CHECK(h.min_degree == std::map<int, long>{ { 2, 2 }, { 3, 1 } });
    CHECK(h.max_degree == std::map<int, long>{ { 2, 2 }, { 5, 1 } });
    CHECK(h.alpha == std::map<int, long>{ { 1, 1 }, { 2, 2 } });
    CHECK(compute_histograms(graphs, 3) == h);

    auto tsv = format_histograms_tsv(h);
    CHECK(tsv.rfind("invariant\tvalue\tcount\n", 0) == 0);
    CHECK(tsv.find("max_degree\t5\t1\n") != std::string::npos);
    auto text = format_histograms_text(h);
    CHECK(text.find("alpha") != std::string::npos);
    CHECK(histograms_to_json(h)["alpha"]["2"] == 2);

    auto empty = compute_histograms(std::vector<Graph>{});
    CHECK(empty.edges.empty());
    CHECK(format_histograms_tsv(empty) == "invariant\tvalue\tcount\n");
}
