#include <folkman/folkman.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
namespace fs = std::filesystem;

namespace
{
    struct Failure
    {
        folkman_status status;
        std::string message;
    };

    auto check(folkman_status status) -> void
    {
        if (status != FOLKMAN_OK)
            throw Failure{ status, folkman_last_error() };
    }

    auto take(char * text) -> std::string
    {
        std::string result = text ? text : "";
        folkman_string_free(text);
        return result;
    }

    using GraphHandle = std::unique_ptr<folkman_graph, decltype(&folkman_graph_free)>;

    auto parse(const std::string & line) -> GraphHandle
    {
        folkman_graph * g = nullptr;
        check(folkman_graph_from_graph6(line.c_str(), &g));
        return GraphHandle{ g, folkman_graph_free };
    }

    struct Globals
    {
        int workers = 1;
        std::string store;
        std::string external_solver;
        bool cross_check = false;
        std::string engine = "sat";
    };

    auto resolve(const Globals & g, const std::string & path) -> std::string
    {
        if (g.store.empty() || fs::path{path}.is_absolute())
            return path;
        return (fs::path{g.store} / path).string();
    }

    auto arrow_options(const Globals & g) -> folkman_arrow_options
    {
        folkman_arrow_options options;
        folkman_arrow_options_init(&options);
        options.engine = g.engine == "backtrack" ? FOLKMAN_ENGINE_BACKTRACK : FOLKMAN_ENGINE_SAT;
        options.cross_check = g.cross_check;
        options.external_solver = g.external_solver.empty() ? nullptr : g.external_solver.c_str();
        return options;
    }

    struct StageArgs
    {
        int n = 0, p = 0, s = 0;
        bool exact = false;
        std::string variant = "plain";
        bool delta = false;
        bool no_chi_filter = false;
        int max_depth = -1;
        std::size_t shard_size = 4096;
        int generation_shards = 64;
        std::vector<std::string> inputs;
        std::string output;
    };

    auto run_stage(const Globals & g, const std::string & kind, const StageArgs & a) -> int
    {
        if (! g.store.empty())
            fs::create_directories(g.store);
        json plan = {
            { "kind", kind },
            { "params", { { "n", a.n }, { "p", a.p }, { "s", a.s }, { "s_exact", a.exact }, { "variant", a.variant } } },
            { "delta_mode", a.delta },
            { "output", resolve(g, a.output) },
            { "workers", g.workers },
            { "engine", g.engine },
            { "cross_check", g.cross_check },
            { "external_solver", g.external_solver },
            { "chi_filter", ! a.no_chi_filter },
            { "shard_size", a.shard_size },
            { "generation_shards", a.generation_shards },
            { "max_depth", a.max_depth }
        };
        json inputs = json::array();
        for (auto & in : a.inputs)
            inputs.push_back(resolve(g, in));
        plan["inputs"] = inputs;

        char * result = nullptr;
        check(folkman_run_stage(plan.dump().c_str(), &result));
        auto r = json::parse(take(result));
        auto & m = r["manifest"];
        std::cout << kind << " " << m.value("family", "") << ": " << m["count"] << " graphs -> " << plan["output"].get<std::string>()
            << (r["skipped"].get<bool>() ? " (already complete)" : "") << "\n";
        std::cout << m["counts"].dump() << "\n";
        return 0;
    }

    auto add_family_options(CLI::App * cmd, StageArgs & a, bool with_p) -> void
    {
        cmd->add_option("-n,--order", a.n, "graph order")->required();
        if (with_p)
            cmd->add_option("-p,--join", a.p, "size of the complete graph joined to each graph")->required();
        cmd->add_option("-s,--alpha", a.s, "independence bound")->required();
        cmd->add_option("-o,--output", a.output, "output store")->required();
        cmd->add_option("--shard-size", a.shard_size, "inputs per checkpoint shard");
    }

    auto read_lines(const std::string & file) -> std::vector<std::string>
    {
        std::ifstream in{file};
        if (! in)
            throw Failure{ FOLKMAN_STORE_ERROR, "cannot read " + file };
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line)) {
            while (! line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (! line.empty() && line.rfind(">>graph6<<", 0) != 0)
                lines.push_back(line);
        }
        return lines;
    }

    auto write_file(const std::string & file, const std::string & content) -> void
    {
        std::ofstream out{file, std::ios::binary};
        out << content;
        if (! out)
            throw Failure{ FOLKMAN_STORE_ERROR, "cannot write " + file };
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Exhaustive search tools for (3,3) edge arrowing graphs"};
    app.require_subcommand(1);

    Globals g;
    app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--store", g.store, "directory for relative store paths");
    app.add_option("--external-solver", g.external_solver, "DIMACS solver command used for arrowing");
    app.add_flag("--cross-check", g.cross_check, "decide arrowing with both built-in procedures");
    app.add_option("--engine", g.engine, "built-in arrowing procedure")->check(CLI::IsMember({ "sat", "backtrack" }));

    StageArgs gen_args;
    auto gen = app.add_subcommand("gen", "generate order-n graphs with no K4 and bounded independence");
    gen->add_option("-n,--order", gen_args.n, "graph order")->required();
    gen->add_option("-s,--alpha", gen_args.s, "independence bound")->required();
    gen->add_option("-o,--output", gen_args.output, "output store")->required();
    gen->add_option("--variant", gen_args.variant, "plain, max or plusk3");
    gen->add_flag("--exact", gen_args.exact, "independence number exactly s");
    gen->add_option("--shards", gen_args.generation_shards, "generation checkpoint shards");

    StageArgs filter_args;
    auto filter = app.add_subcommand("filter", "select members of L(n;p;s) from stores or from built-in generation");
    add_family_options(filter, filter_args, true);
    filter->add_option("inputs", filter_args.inputs, "input stores; none means built-in generation");
    filter->add_option("--variant", filter_args.variant, "plain, max or plusk3");
    filter->add_flag("--exact", filter_args.exact, "independence number exactly s");
    filter->add_flag("--no-chi-filter", filter_args.no_chi_filter, "skip the chromatic number filter");
    filter->add_option("--shards", filter_args.generation_shards, "generation checkpoint shards");

    StageArgs extend_args;
    auto extend = app.add_subcommand("extend", "non-Sperner graphs of L_max(n;p;s) from L_+K3(n-s;p+1;<=s)");
    add_family_options(extend, extend_args, true);
    extend->add_option("inputs", extend_args.inputs, "input stores")->required();
    extend->add_flag("--delta", extend_args.delta, "apply the minimum degree conditions");

    StageArgs sperner_args;
    auto sperner = app.add_subcommand("sperner", "Sperner graphs of L_max(n;p;s) by vertex duplication");
    add_family_options(sperner, sperner_args, true);
    sperner->add_option("inputs", sperner_args.inputs, "stores of L_max(n-1;p;s-1) and L_max(n-1;p;s)")->required();

    StageArgs down_args;
    auto down = app.add_subcommand("edges-down", "close a store of maximal graphs under edge removal");
    add_family_options(down, down_args, true);
    down->add_option("inputs", down_args.inputs, "input stores")->required();
    down->add_option("--variant", down_args.variant, "plusk3 keeps +K3 graphs with alpha <= s; plain keeps every member");
    down->add_option("--max-depth", down_args.max_depth, "limit on removed edges");

    StageArgs bh_args;
    auto bh = app.add_subcommand("bh-check", "decide whether B(H) arrows for every graph H of a store");
    bh->add_option("inputs", bh_args.inputs, "input stores")->required();
    bh->add_option("-o,--output", bh_args.output, "report file")->required();
    bh->add_option("--shard-size", bh_args.shard_size, "graphs per checkpoint");

    std::vector<std::string> arrow_graphs;
    std::string arrow_file, arrow_witness, arrow_dimacs, arrow_vertex;
    int arrow_join = 0;
    auto arrow = app.add_subcommand("arrow", "decide arrowing for graph6 graphs");
    arrow->add_option("graphs", arrow_graphs, "graph6 strings");
    arrow->add_option("-f,--file", arrow_file, "file of graph6 lines");
    arrow->add_option("--join", arrow_join, "join K_p first");
    arrow->add_option("--vertex", arrow_vertex, "vertex arrowing targets, such as 3,3");
    arrow->add_option("--witness", arrow_witness, "write the colouring of a negative verdict here (single graph)");
    arrow->add_option("--dimacs", arrow_dimacs, "write the CNF here instead of deciding (single graph)");

    std::string stats_store, stats_output;
    bool stats_tsv = false;
    auto stats = app.add_subcommand("stats", "histograms of |E|, min degree, max degree and alpha");
    stats->add_option("store", stats_store, "store")->required();
    stats->add_option("-o,--output", stats_output, "write the text table here, with a .tsv beside it, through a stage");
    stats->add_flag("--tsv", stats_tsv, "print tab-separated values");

    std::string witness_file, witness_graph;
    auto verify = app.add_subcommand("verify-witness", "re-check a stored good colouring");
    verify->add_option("witness", witness_file, "witness file")->required();
    verify->add_option("--graph", witness_graph, "graph6 the witness must refer to");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen)
            return run_stage(g, "generate", gen_args);
        if (*filter)
            return run_stage(g, "filter", filter_args);
        if (*extend)
            return run_stage(g, "extend", extend_args);
        if (*sperner)
            return run_stage(g, "sperner", sperner_args);
        if (*down)
            return run_stage(g, "edges-down", down_args);
        if (*bh) {
            bh_args.n = 1;
            bh_args.s = 1;
            return run_stage(g, "bh-check", bh_args);
        }

        if (*stats) {
            if (! stats_output.empty()) {
                StageArgs a;
                a.n = 1;
                a.s = 1;
                a.inputs = { stats_store };
                a.output = stats_output;
                run_stage(g, "stats", a);
            }
            char * text = nullptr, * tsv = nullptr;
            check(folkman_histograms(resolve(g, stats_store).c_str(), g.workers, nullptr, &text, &tsv));
            auto t = take(text), v = take(tsv);
            std::cout << (stats_tsv ? v : t);
            return 0;
        }

        if (*verify) {
            std::ifstream in{witness_file};
            if (! in)
                throw Failure{ FOLKMAN_STORE_ERROR, "cannot read " + witness_file };
            std::stringstream content;
            content << in.rdbuf();
            int good = 0;
            check(folkman_verify_witness(content.str().c_str(), witness_graph.empty() ? nullptr : witness_graph.c_str(), &good));
            std::cout << (good ? "valid" : "invalid") << "\n";
            return good ? 0 : 1;
        }

        if (*arrow) {
            auto lines = arrow_graphs;
            if (! arrow_file.empty())
                for (auto & l : read_lines(arrow_file))
                    lines.push_back(l);
            if (lines.empty())
                throw Failure{ FOLKMAN_INVALID_ARGUMENT, "no graphs given" };
            if ((! arrow_witness.empty() || ! arrow_dimacs.empty()) && lines.size() != 1)
                throw Failure{ FOLKMAN_INVALID_ARGUMENT, "--witness and --dimacs take a single graph" };

            std::vector<int> targets;
            if (! arrow_vertex.empty()) {
                std::stringstream in{arrow_vertex};
                std::string part;
                while (std::getline(in, part, ','))
                    targets.push_back(std::stoi(part));
            }

            auto options = arrow_options(g);
            for (auto & line : lines) {
                auto graph = parse(line);
                if (arrow_join > 0) {
                    folkman_graph * joined = nullptr;
                    check(folkman_graph_join_complete(graph.get(), arrow_join, &joined));
                    graph = GraphHandle{ joined, folkman_graph_free };
                }
                if (! arrow_dimacs.empty()) {
                    char * cnf = nullptr;
                    check(folkman_export_dimacs(graph.get(), &cnf));
                    write_file(arrow_dimacs, take(cnf));
                    std::cout << "wrote " << arrow_dimacs << "\n";
                    continue;
                }
                int arrows = 0;
                if (! targets.empty()) {
                    char * colouring = nullptr;
                    check(folkman_arrows_vertex(graph.get(), targets.data(), int(targets.size()), &arrows, &colouring));
                    auto c = take(colouring);
                    std::cout << line << "\t" << (arrows ? "arrows" : "not-arrows") << (c.empty() ? "" : "\t" + c) << "\n";
                    continue;
                }
                char * witness = nullptr;
                check(folkman_arrows_edge(graph.get(), &options, &arrows, &witness));
                auto w = take(witness);
                std::cout << line << "\t" << (arrows ? "arrows" : "not-arrows") << "\n";
                if (! arrow_witness.empty() && ! w.empty())
                    write_file(arrow_witness, w);
            }
            return 0;
        }
    }
    catch (const Failure & f) {
        std::cerr << "folkman: " << folkman_status_name(f.status) << ": " << f.message << "\n";
        return 2;
    }
    catch (const std::exception & e) {
        std::cerr << "folkman: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
