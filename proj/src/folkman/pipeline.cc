#include <folkman/pipeline.hh>
#include <folkman/bh.hh>
#include <folkman/canon.hh>
#include <folkman/digest.hh>
#include <folkman/errors.hh>
#include <folkman/extend.hh>
#include <folkman/invariants.hh>
#include <folkman/parallel.hh>
#include <folkman/store.hh>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <mutex>
#include <sstream>

using std::string;
using std::vector;
using nlohmann::json;
namespace fs = std::filesystem;

namespace folkman
{
    namespace
    {
        const vector<std::pair<StageKind, string>> stage_names = {
            { StageKind::generate, "generate" },
            { StageKind::filter, "filter" },
            { StageKind::extend, "extend" },
            { StageKind::sperner, "sperner" },
            { StageKind::edges_down, "edges-down" },
            { StageKind::bh_check, "bh-check" },
            { StageKind::stats, "stats" }
        };

        auto produces_store(StageKind k) -> bool
        {
            return k != StageKind::bh_check && k != StageKind::stats;
        }

        auto params_to_json(const FamilyParams & params, bool with_p) -> json
        {
            return {
                { "n", params.n },
                { "p", with_p ? json(params.p) : json(nullptr) },
                { "s", params.s },
                { "s_exact", params.s_exact },
                { "variant", to_string(params.variant) }
            };
        }

        auto params_from_json(const json & j) -> FamilyParams
        {
            try {
                FamilyParams params;
                params.n = j.at("n").get<int>();
                params.p = j.at("p").is_null() ? -1 : j.at("p").get<int>();
                params.s = j.at("s").get<int>();
                params.s_exact = j.at("s_exact").get<bool>();
                params.variant = parse_variant(j.at("variant").get<string>());
                return params;
            }
            catch (const json::exception & e) {
                throw ManifestMismatch(string{"malformed manifest parameters: "} + e.what());
            }
        }

        // adds numbers and merges nested objects
        auto accumulate(json & total, const json & part) -> void
        {
            for (auto & [key, value] : part.items()) {
                if (value.is_object()) {
                    if (! total.contains(key))
                        total[key] = json::object();
                    accumulate(total[key], value);
                }
                else if (value.is_number_integer())
                    total[key] = total.value(key, 0L) + value.get<long>();
                else
                    total[key] = value;
            }
        }

        struct Input
        {
            GraphStore store;
            vector<string> digests;
        };

        using Expectation = std::function<auto (const FamilyParams & in) -> std::optional<string>>;

        auto load_inputs(const StagePlan & plan, const Expectation & expect) -> Input
        {
            Input result;
            for (auto & file : plan.inputs) {
                if (! fs::exists(file))
                    throw StoreError("input " + file.string() + " does not exist");
                auto digest = sha256_file(file);
                if (fs::exists(manifest_path(file))) {
                    auto manifest = read_manifest(file);
                    if (manifest.value("output_digest", "") != digest)
                        throw ManifestMismatch("input " + file.string() + " does not match the digest in its manifest");
                    StageKind kind;
                    try {
                        kind = parse_stage_kind(manifest.value("kind", ""));
                    }
                    catch (const PreconditionViolated & e) {
                        throw ManifestMismatch("input " + file.string() + ": " + e.what());
                    }
                    if (! produces_store(kind))
                        throw ManifestMismatch("input " + file.string() + " is a " + to_string(kind) + " report, not a graph store");
                    auto in = params_from_json(manifest.at("params"));
                    if (auto problem = expect(in))
                        throw ManifestMismatch("input " + file.string() + " holds " + describe(in) + ": " + *problem);
                    result.store.merge(GraphStore::load_canonical(file));
                }
                else
                    result.store.merge(GraphStore::ingest(file, plan.workers));
                result.digests.push_back(digest);
            }
            return result;
        }

        /**
         * Shard results under <output>.ckpt. Each shard is a store plus a JSON
         * record holding its digest and counts; a record whose store no longer
         * matches is discarded and the shard recomputed.
         */
        class Checkpoints
        {
            private:
                fs::path _dir;
                std::mutex _mutex;

            public:
                long reused = 0;

                Checkpoints(const fs::path & output, const string & fingerprint) :
                    _dir(output.string() + ".ckpt")
                {
                    auto plan_file = _dir / "plan";
                    bool same = false;
                    if (fs::exists(plan_file)) {
                        std::ifstream in{plan_file};
                        string recorded;
                        std::getline(in, recorded);
                        same = recorded == fingerprint;
                    }
                    if (! same) {
                        fs::remove_all(_dir);
                        fs::create_directories(_dir);
                        write_text_atomically(plan_file, fingerprint + "\n");
                    }
                }

                auto lookup(const string & name) -> std::optional<std::pair<GraphStore, json>>
                {
                    auto record_file = _dir / (name + ".json"), store_file = _dir / (name + ".g6");
                    if (! fs::exists(record_file) || ! fs::exists(store_file))
                        return std::nullopt;
                    try {
                        std::ifstream in{record_file};
                        auto record = json::parse(in);
                        if (record.at("digest").get<string>() != sha256_file(store_file))
                            throw StoreError("digest mismatch");
                        auto store = GraphStore::load_canonical(store_file);
                        std::scoped_lock lock{_mutex};
                        ++reused;
                        return std::pair{ std::move(store), record.at("counts") };
                    }
                    catch (const std::exception &) {
                        fs::remove(record_file);
                        fs::remove(store_file);
                        return std::nullopt;
                    }
                }

                auto record(const string & name, const GraphStore & store, const json & counts) -> void
                {
                    auto digest = store.save(_dir / (name + ".g6"));
                    write_text_atomically(_dir / (name + ".json"), json{ { "digest", digest }, { "counts", counts } }.dump() + "\n");
                }

                auto path(const string & name) const -> fs::path
                {
                    return _dir / name;
                }

                auto discard() -> void
                {
                    fs::remove_all(_dir);
                }
        };

        using ShardWork = std::function<auto (std::size_t shard, int inner_workers, GraphStore & out) -> json>;

        // Runs shards outer-parallel, merging each completed shard into merged. Returns the summed counts.
        auto run_shards(Checkpoints & ckpt, const string & phase, std::size_t shard_count, int workers,
                const ShardWork & work, GraphStore & merged) -> json
        {
            json totals = json::object();
            std::mutex merge_mutex;
            int outer = int(std::min<std::size_t>(std::max(1, workers), std::max<std::size_t>(1, shard_count)));
            int inner = std::max(1, workers / outer);
            parallel_for(shard_count, outer, [&] (std::size_t shard) {
                    auto name = phase + "-" + std::to_string(shard);
                    auto done = ckpt.lookup(name);
                    if (! done) {
                        GraphStore out;
                        auto counts = work(shard, inner, out);
                        ckpt.record(name, out, counts);
                        done.emplace(std::move(out), std::move(counts));
                    }
                    std::scoped_lock lock{merge_mutex};
                    merged.merge(done->first);
                    accumulate(totals, done->second);
                });
            return totals;
        }

        auto block_count(std::size_t items, std::size_t block) -> std::size_t
        {
            block = std::max<std::size_t>(1, block);
            return (items + block - 1) / block;
        }

        auto block_of(const vector<Graph> & graphs, std::size_t shard, std::size_t block) -> std::span<const Graph>
        {
            block = std::max<std::size_t>(1, block);
            auto begin = std::min(graphs.size(), shard * block);
            auto end = std::min(graphs.size(), begin + block);
            return std::span<const Graph>{graphs}.subspan(begin, end - begin);
        }

        auto generation_options(const StagePlan & plan, std::size_t shard, std::size_t shard_count) -> GenerationOptions
        {
            auto & params = plan.params;
            GenerationOptions options;
            options.max_clique = 3;
            options.max_independence = params.s;
            options.leaf_filter = [params] (const Graph & g) {
                if (params.s_exact && ! has_independent_set(g, g.vertices(), params.s))
                    return false;
                switch (params.variant) {
                    case Variant::max: return is_maximal_k4_free(g);
                    case Variant::plus_k3: return is_plus_k3(g);
                    case Variant::plain: return true;
                }
                return true;
            };
            if (shard_count > 1) {
                options.split_order = std::max(1, params.n - 3);
                options.shard_index = int(shard);
                options.shard_count = int(shard_count);
            }
            return options;
        }

        auto generation_shard_count(const StagePlan & plan) -> std::size_t
        {
            return plan.params.n >= 2 ? std::size_t(std::max(1, plan.generation_shards)) : 1;
        }

        auto tallies_to_json(const FilterTallies & t) -> json
        {
            json rejected = json::object();
            for (auto & [reason, count] : t.rejected)
                rejected[reason] = count;
            return { { "examined", t.examined }, { "accepted", t.accepted }, { "rejected", rejected } };
        }

        auto fingerprint_of(const json & identity) -> string
        {
            return sha256_hex(identity.dump());
        }

        auto check_order(int expected) -> Expectation
        {
            return [expected] (const FamilyParams & in) -> std::optional<string> {
                if (in.n != expected)
                    return "expected graphs of order " + std::to_string(expected);
                return std::nullopt;
            };
        }

        struct StageOutput
        {
            json counts = json::object();
            long count = 0;
        };

        auto run_generate(const StagePlan & plan, Checkpoints & ckpt, GraphStore & out) -> StageOutput
        {
            auto shards = generation_shard_count(plan);
            auto counts = run_shards(ckpt, "generate", shards, plan.workers,
                    [&] (std::size_t shard, int, GraphStore & part) -> json {
                        long generated = 0;
                        generate_all_graphs(plan.params.n, generation_options(plan, shard, shards), [&] (const Graph & g) {
                                ++generated;
                                part.insert(g);
                            });
                        return { { "generated", generated } };
                    }, out);
            return { counts, long(out.size()) };
        }

        auto run_filter(const StagePlan & plan, const Input * input, Checkpoints & ckpt, GraphStore & out) -> StageOutput
        {
            FilterOptions options{ plan.arrow, plan.chi_filter, 1 };
            json counts;
            if (input) {
                auto graphs = input->store.graphs();
                counts = run_shards(ckpt, "filter", block_count(graphs.size(), plan.shard_size), plan.workers,
                        [&] (std::size_t shard, int inner, GraphStore & part) -> json {
                            auto opts = options;
                            opts.workers = inner;
                            return tallies_to_json(filter_family(block_of(graphs, shard, plan.shard_size), plan.params, part, opts));
                        }, out);
            }
            else {
                auto shards = generation_shard_count(plan);
                counts = run_shards(ckpt, "filter", shards, plan.workers,
                        [&] (std::size_t shard, int inner, GraphStore & part) -> json {
                            vector<Graph> generated;
                            generate_all_graphs(plan.params.n, generation_options(plan, shard, shards),
                                    [&] (const Graph & g) { generated.push_back(g); });
                            auto opts = options;
                            opts.workers = inner;
                            auto tallies = filter_family(generated, plan.params, part, opts);
                            auto result = tallies_to_json(tallies);
                            result["generated"] = long(generated.size());
                            return result;
                        }, out);
            }
            return { counts, long(out.size()) };
        }

        auto run_extend(const StagePlan & plan, const Input & input, Checkpoints & ckpt, GraphStore & out) -> StageOutput
        {
            ExtendParams params{ plan.params.n, plan.params.p, plan.params.s, plan.delta_mode };
            auto inputs = input.store.graphs();

            GraphStore found;
            auto counts = run_shards(ckpt, "construct", block_count(inputs.size(), plan.shard_size), plan.workers,
                    [&] (std::size_t shard, int inner, GraphStore & part) -> json {
                        auto r = extend_construct(block_of(inputs, shard, plan.shard_size), params, part, { plan.arrow, inner });
                        return {
                            { "inputs", r.inputs },
                            { "inputs_after_degree_filter", r.inputs_after_degree_filter },
                            { "candidates", r.candidates },
                            { "after_step_2_3", r.after_step_2_3 }
                        };
                    }, found);
            counts["after_dedup"] = long(found.size());

            auto graphs = found.graphs();
            accumulate(counts, run_shards(ckpt, "finish", block_count(graphs.size(), plan.shard_size), plan.workers,
                    [&] (std::size_t shard, int inner, GraphStore & part) -> json {
                        auto r = extend_finish(block_of(graphs, shard, plan.shard_size), params, part, { plan.arrow, inner });
                        return { { "after_chi", r.after_chi }, { "after_arrowing", r.after_arrowing } };
                    }, out));
            return { counts, long(out.size()) };
        }

        auto run_sperner(const StagePlan & plan, const Input & input, Checkpoints & ckpt, GraphStore & out) -> StageOutput
        {
            auto inputs = input.store.graphs();

            GraphStore found;
            auto counts = run_shards(ckpt, "construct", block_count(inputs.size(), plan.shard_size), plan.workers,
                    [&] (std::size_t shard, int inner, GraphStore & part) -> json {
                        auto r = sperner_construct(block_of(inputs, shard, plan.shard_size), plan.params.s, part, { plan.arrow, inner });
                        return { { "inputs", r.inputs }, { "duplicates", r.duplicates }, { "after_structure", r.after_structure } };
                    }, found);
            counts["after_dedup"] = long(found.size());

            auto graphs = found.graphs();
            accumulate(counts, run_shards(ckpt, "finish", block_count(graphs.size(), plan.shard_size), plan.workers,
                    [&] (std::size_t shard, int inner, GraphStore & part) -> json {
                        auto r = sperner_finish(block_of(graphs, shard, plan.shard_size), plan.params.p, part, { plan.arrow, inner });
                        return { { "after_arrowing", r.after_arrowing } };
                    }, out));
            return { counts, long(out.size()) };
        }

        /**
         * Each finished level is checkpointed with the cumulative report. A
         * restart resumes from the lowest finished level, whose accepted graphs
         * are reprocessed as inputs together with the original inputs below it.
         */
        auto closure_to_json(const ClosureReport & r) -> json
        {
            json by_edges = json::object();
            for (auto & [edges, count] : r.accepted_by_edges)
                by_edges[std::to_string(edges)] = count;
            json violations = json::array();
            for (auto & k : r.violations)
                violations.push_back(k.bytes);
            return { { "visited", r.visited }, { "accepted", r.accepted }, { "rejected", r.rejected },
                { "accepted_by_edges", by_edges }, { "violations", violations } };
        }

        /**
         * Each finished level is checkpointed with the report up to it. A
         * restart resumes from the lowest finished level, whose accepted graphs
         * are reprocessed as inputs together with the original inputs below
         * it; the reprocessed level is then subtracted from the new report.
         */
        auto run_edges_down(const StagePlan & plan, const Input & input, Checkpoints & ckpt, GraphStore & out) -> StageOutput
        {
            bool pruned = plan.params.variant == Variant::plus_k3;
            ClosureOptions options;
            options.arrow = plan.arrow;
            options.workers = plan.workers;
            options.plus_k3 = pruned;
            options.alpha_bound = pruned;
            options.max_depth = plan.max_depth;

            auto inputs = input.store.graphs();
            json previous;
            std::optional<int> resume_level;
            bool resumable = plan.max_depth < 0;

            if (resumable) {
                int top = 0;
                for (auto & g : inputs)
                    top = std::max(top, g.edge_count());
                std::map<int, GraphStore> levels;
                for (int e = top ; e >= 0 ; --e)
                    if (auto done = ckpt.lookup("level-" + std::to_string(e))) {
                        levels[e] = std::move(done->first);
                        previous = done->second;
                        resume_level = e;
                    }
                // every level the resume point counted must still be present
                if (resume_level)
                    for (auto & [edges, count] : previous.at("accepted_by_edges").items())
                        if (count.get<long>() > 0 && ! levels.contains(std::stoi(edges)))
                            resume_level.reset();
                if (resume_level)
                    for (auto & [edges, level] : levels)
                        out.merge(level);
            }

            vector<Graph> seeds;
            if (resume_level) {
                seeds = GraphStore::load_canonical(ckpt.path("level-" + std::to_string(*resume_level) + ".g6")).graphs();
                for (auto & g : inputs)
                    if (g.edge_count() < *resume_level)
                        seeds.push_back(g);
            }
            else
                seeds = inputs;
            long reprocessed = resume_level ? long(seeds.size()) : 0;
            if (resume_level)
                for (auto & g : inputs)
                    if (g.edge_count() < *resume_level)
                        --reprocessed;

            auto combine = [&] (const ClosureReport & r) {
                if (! resume_level)
                    return closure_to_json(r);
                auto result = previous;
                result["visited"] = previous["visited"].get<long>() + r.visited - reprocessed;
                result["accepted"] = previous["accepted"].get<long>() + r.accepted - reprocessed;
                result["rejected"] = previous["rejected"].get<long>() + r.rejected;
                for (auto & [edges, count] : r.accepted_by_edges)
                    if (edges < *resume_level)
                        result["accepted_by_edges"][std::to_string(edges)] = count;
                for (auto & k : r.violations)
                    result["violations"].push_back(k.bytes);
                return result;
            };

            // levels are visited in descending order, so every level recorded here is complete
            if (resumable)
                options.on_level = [&] (int edges, const GraphStore & level, const ClosureReport & so_far) {
                    if (! resume_level || edges < *resume_level)
                        ckpt.record("level-" + std::to_string(edges), level, combine(so_far));
                };

            GraphStore closure_out;
            auto report = edge_removal_closure(seeds, plan.params.p, plan.params.s, closure_out, options);
            out.merge(closure_out);
            auto counts = combine(report);
            counts["violation_count"] = long(counts["violations"].size());
            return { counts, long(out.size()) };
        }

        auto histograms_file_tsv(const fs::path & output) -> fs::path
        {
            auto tsv = output;
            tsv.replace_extension(".tsv");
            if (tsv == output)
                tsv = output.string() + ".tsv";
            return tsv;
        }
    }

    auto to_string(StageKind k) -> string
    {
        for (auto & [kind, name] : stage_names)
            if (kind == k)
                return name;
        return "unknown";
    }

    auto parse_stage_kind(const string & text) -> StageKind
    {
        for (auto & [kind, name] : stage_names)
            if (name == text)
                return kind;
        if (text == "edges_down")
            return StageKind::edges_down;
        if (text == "bh_check")
            return StageKind::bh_check;
        throw PreconditionViolated("unknown stage kind '" + text + "'");
    }

    auto manifest_path(const fs::path & output) -> fs::path
    {
        auto result = output;
        result.replace_extension(".manifest.json");
        return result;
    }

    auto read_manifest(const fs::path & output) -> Manifest
    {
        auto file = manifest_path(output);
        std::ifstream in{file};
        if (! in)
            throw StoreError("cannot read manifest " + file.string());
        try {
            return json::parse(in);
        }
        catch (const json::exception & e) {
            throw StoreError("malformed manifest " + file.string() + ": " + e.what());
        }
    }

    auto run_stage(const StagePlan & plan) -> StageResult
    {
        auto started = std::chrono::steady_clock::now();
        validate(plan.params);
        if (plan.output.empty())
            throw PreconditionViolated("stage needs an output path");
        if (plan.workers < 1)
            throw PreconditionViolated("worker count must be positive");

        // extension and duplication always produce L_max(n;p;s) with alpha exactly s
        auto params = plan.params;
        if (plan.kind == StageKind::extend || plan.kind == StageKind::sperner) {
            params.variant = Variant::max;
            params.s_exact = true;
        }
        bool needs_inputs = plan.kind != StageKind::generate && plan.kind != StageKind::filter;
        if (needs_inputs && plan.inputs.empty())
            throw PreconditionViolated(to_string(plan.kind) + " needs at least one input store");
        if (plan.kind == StageKind::generate && ! plan.inputs.empty())
            throw PreconditionViolated("generate takes no inputs");

        Expectation expect = [] (const FamilyParams &) -> std::optional<string> { return std::nullopt; };
        switch (plan.kind) {
            case StageKind::filter:
                expect = check_order(params.n);
                break;
            case StageKind::extend:
                expect = [&] (const FamilyParams & in) -> std::optional<string> {
                    if (in.n != params.n - params.s || in.p != params.p + 1 || in.s > params.s
                            || (in.variant != Variant::plus_k3 && in.variant != Variant::plain))
                        return "extension needs " + describe({ params.n - params.s, params.p + 1, params.s, false, Variant::plus_k3 });
                    return std::nullopt;
                };
                break;
            case StageKind::sperner:
                expect = [&] (const FamilyParams & in) -> std::optional<string> {
                    if (in.n != params.n - 1 || in.p != params.p || in.variant != Variant::max || in.s > params.s
                            || in.s < params.s - 1)
                        return "duplication needs " + describe({ params.n - 1, params.p, params.s, false, Variant::max });
                    return std::nullopt;
                };
                break;
            case StageKind::edges_down:
                expect = [&] (const FamilyParams & in) -> std::optional<string> {
                    if (in.n != params.n || in.p != params.p || in.variant != Variant::max || in.s > params.s)
                        return "closure needs " + describe({ params.n, params.p, params.s, false, Variant::max });
                    return std::nullopt;
                };
                break;
            default:
                break;
        }

        Input input;
        if (! plan.inputs.empty())
            input = load_inputs(plan, expect);

        json identity = {
            { "kind", to_string(plan.kind) },
            { "params", params_to_json(params, plan.kind != StageKind::generate) },
            { "delta_mode", plan.delta_mode },
            { "settings", { { "chi_filter", plan.chi_filter }, { "max_depth", plan.max_depth } } },
            { "input_digests", input.digests }
        };

        if (fs::exists(plan.output) && fs::exists(manifest_path(plan.output))) {
            try {
                auto previous = read_manifest(plan.output);
                bool same = true;
                for (auto & [key, value] : identity.items())
                    same = same && previous.contains(key) && previous[key] == value;
                if (same && previous.value("output_digest", "") == sha256_file(plan.output)) {
                    previous["run"]["skipped"] = true;
                    return { previous, true };
                }
            }
            catch (const StoreError &) {
            }
        }

        Checkpoints ckpt{plan.output, fingerprint_of({ identity, plan.shard_size,
                plan.kind == StageKind::filter || plan.kind == StageKind::generate ? plan.generation_shards : 0 })};

        GraphStore out;
        StageOutput result;
        string output_digest;

        switch (plan.kind) {
            case StageKind::generate:
                result = run_generate(plan, ckpt, out);
                break;
            case StageKind::filter:
                result = run_filter(plan, plan.inputs.empty() ? nullptr : &input, ckpt, out);
                break;
            case StageKind::extend:
                result = run_extend(plan, input, ckpt, out);
                break;
            case StageKind::sperner:
                result = run_sperner(plan, input, ckpt, out);
                break;
            case StageKind::edges_down:
                result = run_edges_down(plan, input, ckpt, out);
                break;
            case StageKind::bh_check: {
                auto graphs = input.store.graphs();
                Theorem1Options options;
                options.arrow = plan.arrow;
                options.workers = plan.workers;
                options.checkpoint = ckpt.path("report.progress");
                options.checkpoint_interval = plan.shard_size;
                options.witness_directory = fs::path{plan.output.string() + ".witnesses"};
                fs::create_directories(*options.witness_directory);
                auto report = theorem1_check(graphs, options);
                string content;
                for (auto & line : report.lines)
                    content += line.to_line() + "\n";
                write_text_atomically(plan.output, content);
                output_digest = sha256_hex(content);
                result.count = long(report.lines.size());
                result.counts = { { "inputs", long(graphs.size()) }, { "arrows", long(report.positives.size()) },
                    { "not_arrows", long(graphs.size() - report.positives.size()) } };
                break;
            }
            case StageKind::stats: {
                auto graphs = input.store.graphs();
                auto h = compute_histograms(graphs, plan.workers);
                auto text = format_histograms_text(h);
                write_text_atomically(plan.output, text);
                write_text_atomically(histograms_file_tsv(plan.output), format_histograms_tsv(h));
                output_digest = sha256_hex(text);
                result.count = long(graphs.size());
                result.counts = histograms_to_json(h);
                break;
            }
        }

        if (produces_store(plan.kind))
            output_digest = out.save(plan.output);

        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        Manifest manifest = identity;
        manifest["format"] = 1;
        manifest["family"] = plan.kind == StageKind::generate ? "generated graphs" : describe(params);
        manifest["output_digest"] = output_digest;
        manifest["count"] = result.count;
        manifest["counts"] = result.counts;
        manifest["run"] = { { "workers", plan.workers }, { "wall_seconds", seconds },
            { "reused_checkpoints", ckpt.reused }, { "skipped", false } };
        write_text_atomically(manifest_path(plan.output), manifest.dump(2) + "\n");
        ckpt.discard();
        return { manifest, false };
    }

    auto compute_histograms(std::span<const Graph> graphs, int workers) -> Histograms
    {
        vector<std::array<int, 4>> values(graphs.size());
        parallel_for(graphs.size(), workers, [&] (std::size_t i) {
                auto & g = graphs[i];
                values[i] = { g.edge_count(), min_degree(g), max_degree(g), independence_number(g) };
            });
        Histograms h;
        for (auto & v : values) {
            ++h.edges[v[0]];
            ++h.min_degree[v[1]];
            ++h.max_degree[v[2]];
            ++h.alpha[v[3]];
        }
        return h;
    }

    namespace
    {
        const vector<std::pair<string, std::map<int, long> Histograms::*>> histogram_columns = {
            { "edges", &Histograms::edges },
            { "min_degree", &Histograms::min_degree },
            { "max_degree", &Histograms::max_degree },
            { "alpha", &Histograms::alpha }
        };
    }

    auto format_histograms_text(const Histograms & h) -> string
    {
        const vector<string> titles = { "|E|", "delta", "Delta", "alpha" };
        std::ostringstream out;
        for (std::size_t c = 0 ; c < histogram_columns.size() ; ++c) {
            if (c > 0)
                out << "\n";
            out << std::left << std::setw(8) << titles[c] << std::right << std::setw(12) << "graphs" << "\n";
            for (auto & [value, count] : h.*histogram_columns[c].second)
                out << std::left << std::setw(8) << value << std::right << std::setw(12) << count << "\n";
        }
        return out.str();
    }

    auto format_histograms_tsv(const Histograms & h) -> string
    {
        string out = "invariant\tvalue\tcount\n";
        for (auto & [name, member] : histogram_columns)
            for (auto & [value, count] : h.*member)
                out += name + "\t" + std::to_string(value) + "\t" + std::to_string(count) + "\n";
        return out;
    }

    auto histograms_to_json(const Histograms & h) -> json
    {
        json result = json::object();
        for (auto & [name, member] : histogram_columns) {
            json column = json::object();
            for (auto & [value, count] : h.*member)
                column[std::to_string(value)] = count;
            result[name] = column;
        }
        return result;
    }
}
