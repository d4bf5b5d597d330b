#include <folkman/folkman.h>

#include <folkman/arrow.hh>
#include <folkman/canon.hh>
#include <folkman/digest.hh>
#include <folkman/errors.hh>
#include <folkman/invariants.hh>
#include <folkman/pipeline.hh>
#include <folkman/store.hh>
#include <folkman/wide_graph.hh>
#include <folkman/witness.hh>

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

using namespace folkman;
using nlohmann::json;

struct folkman_graph
{
    AnyGraph graph;
};

struct folkman_store
{
    GraphStore store;
};

namespace
{
    thread_local std::string last_error;

    struct NullArgument : std::invalid_argument
    {
        using std::invalid_argument::invalid_argument;
    };

    auto fail(folkman_status status, const std::string & message) -> folkman_status
    {
        last_error = message;
        return status;
    }

    template <typename Body>
    auto guarded(Body && body) -> folkman_status
    {
        try {
            return body();
        }
        catch (const InvalidGraph & e) { return fail(FOLKMAN_INVALID_GRAPH, e.what()); }
        catch (const Graph6Error & e) { return fail(FOLKMAN_GRAPH6_ERROR, e.what()); }
        catch (const CapacityExceeded & e) { return fail(FOLKMAN_CAPACITY_EXCEEDED, e.what()); }
        catch (const PreconditionViolated & e) { return fail(FOLKMAN_PRECONDITION_VIOLATED, e.what()); }
        catch (const StoreError & e) { return fail(FOLKMAN_STORE_ERROR, e.what()); }
        catch (const ManifestMismatch & e) { return fail(FOLKMAN_MANIFEST_MISMATCH, e.what()); }
        catch (const WitnessError & e) { return fail(FOLKMAN_WITNESS_ERROR, e.what()); }
        catch (const SolverError & e) { return fail(FOLKMAN_SOLVER_ERROR, e.what()); }
        catch (const NullArgument & e) { return fail(FOLKMAN_INVALID_ARGUMENT, e.what()); }
        catch (const json::exception & e) { return fail(FOLKMAN_INVALID_ARGUMENT, e.what()); }
        catch (const std::filesystem::filesystem_error & e) { return fail(FOLKMAN_STORE_ERROR, e.what()); }
        catch (const std::exception & e) { return fail(FOLKMAN_INTERNAL_ERROR, e.what()); }
        catch (...) { return fail(FOLKMAN_INTERNAL_ERROR, "unknown failure"); }
    }

    auto copy_string(const std::string & s) -> char *
    {
        auto result = static_cast<char *>(std::malloc(s.size() + 1));
        if (! result)
            throw std::bad_alloc{};
        std::memcpy(result, s.c_str(), s.size() + 1);
        return result;
    }

    auto narrow_graph(const folkman_graph * g) -> const Graph &
    {
        if (auto small = std::get_if<Graph>(&g->graph))
            return *small;
        throw CapacityExceeded("this operation needs a graph of order at most " + std::to_string(max_order));
    }

    auto arrow_options(const folkman_arrow_options * options) -> ArrowOptions
    {
        ArrowOptions result;
        if (options) {
            result.engine = options->engine == FOLKMAN_ENGINE_BACKTRACK ? ArrowEngine::backtrack : ArrowEngine::sat;
            result.cross_check = options->cross_check != 0;
            if (options->external_solver)
                result.external_solver = options->external_solver;
        }
        return result;
    }

    auto parse_engine(const std::string & name) -> ArrowEngine
    {
        if (name == "sat")
            return ArrowEngine::sat;
        if (name == "backtrack")
            return ArrowEngine::backtrack;
        throw PreconditionViolated("unknown engine '" + name + "'");
    }

    auto plan_from_json(const json & j) -> StagePlan
    {
        StagePlan plan;
        plan.kind = parse_stage_kind(j.at("kind").get<std::string>());
        if (j.contains("params")) {
            auto & p = j.at("params");
            plan.params.n = p.value("n", 1);
            plan.params.p = p.contains("p") && ! p.at("p").is_null() ? p.at("p").get<int>() : 0;
            plan.params.s = p.value("s", plan.params.n);
            plan.params.s_exact = p.value("s_exact", false);
            plan.params.variant = parse_variant(p.value("variant", std::string{"plain"}));
        }
        plan.delta_mode = j.value("delta_mode", false);
        for (auto & in : j.value("inputs", json::array()))
            plan.inputs.emplace_back(in.get<std::string>());
        plan.output = j.at("output").get<std::string>();
        plan.workers = j.value("workers", 1);
        plan.arrow.engine = parse_engine(j.value("engine", std::string{"sat"}));
        plan.arrow.cross_check = j.value("cross_check", false);
        plan.arrow.external_solver = j.value("external_solver", std::string{});
        plan.chi_filter = j.value("chi_filter", true);
        plan.shard_size = j.value("shard_size", plan.shard_size);
        plan.generation_shards = j.value("generation_shards", plan.generation_shards);
        plan.max_depth = j.value("max_depth", -1);
        return plan;
    }

    auto require(bool condition, const char * what) -> void
    {
        if (! condition)
            throw NullArgument(std::string{what} + " must not be null");
    }
}

extern "C" {

const char * folkman_version(void)
{
    return "1.0.0";
}

const char * folkman_last_error(void)
{
    return last_error.c_str();
}

const char * folkman_status_name(folkman_status status)
{
    switch (status) {
        case FOLKMAN_OK: return "ok";
        case FOLKMAN_INVALID_ARGUMENT: return "invalid argument";
        case FOLKMAN_INVALID_GRAPH: return "invalid graph";
        case FOLKMAN_GRAPH6_ERROR: return "graph6 error";
        case FOLKMAN_CAPACITY_EXCEEDED: return "capacity exceeded";
        case FOLKMAN_PRECONDITION_VIOLATED: return "precondition violated";
        case FOLKMAN_STORE_ERROR: return "store error";
        case FOLKMAN_MANIFEST_MISMATCH: return "manifest mismatch";
        case FOLKMAN_WITNESS_ERROR: return "witness error";
        case FOLKMAN_SOLVER_ERROR: return "solver error";
        case FOLKMAN_INTERNAL_ERROR: return "internal error";
    }
    return "unknown status";
}

void folkman_string_free(char * text)
{
    std::free(text);
}

void folkman_arrow_options_init(folkman_arrow_options * options)
{
    if (options)
        *options = folkman_arrow_options{ FOLKMAN_ENGINE_SAT, 0, nullptr };
}

folkman_status folkman_graph_from_graph6(const char * line, folkman_graph ** out)
{
    return guarded([&] {
        require(line && out, "graph6 line and result");
        *out = new folkman_graph{ parse_graph6_any(line) };
        return FOLKMAN_OK;
    });
}

folkman_status folkman_graph_from_edges(int order, const int * pairs, size_t edge_count, folkman_graph ** out)
{
    return guarded([&] {
        require(out && (pairs || edge_count == 0), "edge array and result");
        std::vector<Edge> edges;
        for (size_t i = 0 ; i < edge_count ; ++i)
            edges.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
        *out = new folkman_graph{ make_any_graph(order, edges) };
        return FOLKMAN_OK;
    });
}

void folkman_graph_free(folkman_graph * graph)
{
    delete graph;
}

int folkman_graph_order(const folkman_graph * graph)
{
    return graph ? any_order(graph->graph) : 0;
}

long folkman_graph_edge_count(const folkman_graph * graph)
{
    return graph ? long(any_edge_list(graph->graph).size()) : 0;
}

folkman_status folkman_graph_to_graph6(const folkman_graph * graph, char ** out)
{
    return guarded([&] {
        require(graph && out, "graph and result");
        *out = copy_string(to_graph6(graph->graph));
        return FOLKMAN_OK;
    });
}

folkman_status folkman_graph_canonical(const folkman_graph * graph, char ** out)
{
    return guarded([&] {
        require(graph && out, "graph and result");
        *out = copy_string(canonical_form(narrow_graph(graph)).bytes);
        return FOLKMAN_OK;
    });
}

folkman_status folkman_graph_invariants(const folkman_graph * graph, folkman_invariants * out)
{
    return guarded([&] {
        require(graph && out, "graph and result");
        auto & g = narrow_graph(graph);
        auto r = compute_invariants(g);
        *out = folkman_invariants{ g.order(), r.edge_count, r.omega, r.alpha, r.chi, r.min_degree, r.max_degree,
            is_plus_k3(g) ? 1 : 0, is_maximal_k4_free(g) ? 1 : 0, is_sperner(g) ? 1 : 0 };
        return FOLKMAN_OK;
    });
}

folkman_status folkman_graph_join_complete(const folkman_graph * graph, int p, folkman_graph ** out)
{
    return guarded([&] {
        require(graph && out, "graph and result");
        if (p < 0)
            throw PreconditionViolated("join size must be non-negative");
        auto joined = std::visit([&] (auto & g) -> AnyGraph {
                if constexpr (std::is_same_v<std::decay_t<decltype(g)>, Graph>) {
                    if (g.order() + p <= max_order)
                        return join_complete(p, g);
                    return join_complete(p, widen(g));
                }
                else
                    return join_complete(p, g);
            }, graph->graph);
        *out = new folkman_graph{ std::move(joined) };
        return FOLKMAN_OK;
    });
}

folkman_status folkman_arrows_edge(const folkman_graph * graph, const folkman_arrow_options * options,
        int * arrows, char ** witness)
{
    return guarded([&] {
        require(graph && arrows, "graph and result");
        auto verdict = arrows_edge(graph->graph, arrow_options(options));
        *arrows = verdict.arrows ? 1 : 0;
        if (witness)
            *witness = verdict.witness ? copy_string(format_witness(make_witness(graph->graph, *verdict.witness))) : nullptr;
        return FOLKMAN_OK;
    });
}

folkman_status folkman_arrows_vertex(const folkman_graph * graph, const int * targets, int target_count,
        int * arrows, char ** colouring)
{
    return guarded([&] {
        require(graph && targets && arrows, "graph, targets and result");
        if (target_count < 0)
            throw PreconditionViolated("target count must be non-negative");
        auto verdict = arrows_vertex(narrow_graph(graph), std::span<const int>{targets, std::size_t(target_count)});
        *arrows = verdict.arrows ? 1 : 0;
        if (colouring) {
            *colouring = nullptr;
            if (verdict.witness) {
                std::string text;
                for (int c : *verdict.witness)
                    text += char('0' + c);
                *colouring = copy_string(text);
            }
        }
        return FOLKMAN_OK;
    });
}

folkman_status folkman_member_l(const folkman_graph * graph, int p, const folkman_arrow_options * options, int * member)
{
    return guarded([&] {
        require(graph && member, "graph and result");
        *member = member_L(narrow_graph(graph), p, arrow_options(options)) ? 1 : 0;
        return FOLKMAN_OK;
    });
}

folkman_status folkman_export_dimacs(const folkman_graph * graph, char ** out)
{
    return guarded([&] {
        require(graph && out, "graph and result");
        auto f = std::visit([] (auto & g) { return encode_cnf_33(g); }, graph->graph);
        *out = copy_string(export_dimacs(f));
        return FOLKMAN_OK;
    });
}

folkman_status folkman_verify_witness(const char * witness_text, const char * expected_graph6, int * good)
{
    return guarded([&] {
        require(witness_text && good, "witness text and result");
        auto w = parse_witness(witness_text);
        std::optional<std::string> expected;
        if (expected_graph6)
            expected = expected_graph6;
        *good = verify_witness(w, expected) ? 1 : 0;
        return FOLKMAN_OK;
    });
}

folkman_status folkman_store_new(folkman_store ** out)
{
    return guarded([&] {
        require(out, "result");
        *out = new folkman_store{};
        return FOLKMAN_OK;
    });
}

folkman_status folkman_store_load(const char * path, int canonical, int workers, folkman_store ** out)
{
    return guarded([&] {
        require(path && out, "path and result");
        auto store = canonical ? GraphStore::load_canonical(path) : GraphStore::ingest(path, std::max(1, workers));
        *out = new folkman_store{ std::move(store) };
        return FOLKMAN_OK;
    });
}

void folkman_store_free(folkman_store * store)
{
    delete store;
}

size_t folkman_store_size(const folkman_store * store)
{
    return store ? store->store.size() : 0;
}

folkman_status folkman_store_insert(folkman_store * store, const folkman_graph * graph, int * inserted)
{
    return guarded([&] {
        require(store && graph, "store and graph");
        bool fresh = store->store.insert(narrow_graph(graph));
        if (inserted)
            *inserted = fresh ? 1 : 0;
        return FOLKMAN_OK;
    });
}

folkman_status folkman_store_contains(const folkman_store * store, const folkman_graph * graph, int * found)
{
    return guarded([&] {
        require(store && graph && found, "store, graph and result");
        *found = store->store.contains(narrow_graph(graph)) ? 1 : 0;
        return FOLKMAN_OK;
    });
}

folkman_status folkman_store_serialise(const folkman_store * store, char ** out)
{
    return guarded([&] {
        require(store && out, "store and result");
        *out = copy_string(store->store.serialise());
        return FOLKMAN_OK;
    });
}

folkman_status folkman_store_save(const folkman_store * store, const char * path, char ** digest)
{
    return guarded([&] {
        require(store && path, "store and path");
        auto d = store->store.save(path);
        if (digest)
            *digest = copy_string(d);
        return FOLKMAN_OK;
    });
}

folkman_status folkman_run_stage(const char * plan_json, char ** result)
{
    return guarded([&] {
        require(plan_json && result, "plan and result");
        auto plan = plan_from_json(json::parse(plan_json));
        auto r = run_stage(plan);
        *result = copy_string(json{ { "manifest", r.manifest }, { "skipped", r.skipped } }.dump());
        return FOLKMAN_OK;
    });
}

folkman_status folkman_histograms(const char * store_path, int workers, char ** json_out, char ** text, char ** tsv)
{
    return guarded([&] {
        require(store_path, "store path");
        auto store = GraphStore::ingest(store_path, std::max(1, workers));
        auto graphs = store.graphs();
        auto h = compute_histograms(graphs, std::max(1, workers));
        if (json_out)
            *json_out = copy_string(histograms_to_json(h).dump());
        if (text)
            *text = copy_string(format_histograms_text(h));
        if (tsv)
            *tsv = copy_string(format_histograms_tsv(h));
        return FOLKMAN_OK;
    });
}

folkman_status folkman_sha256_file(const char * path, char ** digest)
{
    return guarded([&] {
        require(path && digest, "path and result");
        *digest = copy_string(sha256_file(path));
        return FOLKMAN_OK;
    });
}

}
