#include <folkman/bh.hh>
#include <folkman/canon.hh>
#include <folkman/errors.hh>
#include <folkman/invariants.hh>
#include <folkman/parallel.hh>
#include <folkman/store.hh>
#include <folkman/witness.hh>

#include <fstream>
#include <sstream>

using std::span;
using std::string;
using std::vector;

namespace folkman
{
    auto build_bh(const Graph & h) -> BhGraph
    {
        BhGraph result;
        result.base_order = h.order();
        result.neighbourhoods = maximal_triangle_free_subsets(h);
        result.added = int(result.neighbourhoods.size());

        int order = result.base_order + result.added;
        if (order <= max_order) {
            Graph g = h;
            for (auto m : result.neighbourhoods)
                g = add_vertex_with_neighbourhood(g, m);
            result.graph = g;
        }
        else {
            auto edges = edge_list(h);
            for (int i = 0 ; i < result.added ; ++i)
                for (int v : result.neighbourhoods[i])
                    edges.emplace_back(v, h.order() + i);
            result.graph = WideGraph::from_edges(order, edges);
        }
        return result;
    }

    auto BhReportLine::to_line() const -> string
    {
        return key + "\t" + std::to_string(order) + "\t" + (arrows ? "arrows" : "not-arrows") + "\t"
            + (witness_digest.empty() ? "-" : witness_digest);
    }

    auto BhReportLine::parse(const string & line) -> BhReportLine
    {
        std::istringstream in{line};
        BhReportLine result;
        string verdict;
        if (! std::getline(in, result.key, '\t') || ! (in >> result.order >> verdict >> result.witness_digest))
            throw StoreError("malformed report line: " + line);
        if (verdict != "arrows" && verdict != "not-arrows")
            throw StoreError("malformed verdict in report line: " + line);
        result.arrows = verdict == "arrows";
        if (result.witness_digest == "-")
            result.witness_digest.clear();
        return result;
    }

    namespace
    {
        auto read_checkpoint(const std::filesystem::path & file) -> vector<BhReportLine>
        {
            vector<BhReportLine> lines;
            std::ifstream in{file};
            if (! in)
                return lines;
            string header;
            std::size_t expected = 0;
            if (! std::getline(in, header) || 1 != std::sscanf(header.c_str(), "processed %zu", &expected))
                throw StoreError("checkpoint " + file.string() + " has a malformed header");
            string line;
            while (std::getline(in, line))
                if (! line.empty())
                    lines.push_back(BhReportLine::parse(line));
            if (lines.size() != expected)
                throw StoreError("checkpoint " + file.string() + " is truncated");
            return lines;
        }

        auto write_checkpoint(const std::filesystem::path & file, const vector<BhReportLine> & lines) -> void
        {
            string content = "processed " + std::to_string(lines.size()) + "\n";
            for (auto & l : lines)
                content += l.to_line() + "\n";
            write_text_atomically(file, content);
        }
    }

    auto theorem1_check(span<const Graph> inputs, const Theorem1Options & options) -> Theorem1Result
    {
        Theorem1Result result;
        if (options.checkpoint) {
            try {
                result.lines = read_checkpoint(*options.checkpoint);
            }
            catch (const StoreError &) {
                // unusable checkpoint: start over
                result.lines.clear();
            }
            if (result.lines.size() > inputs.size())
                result.lines.clear();
            for (std::size_t i = 0 ; i < result.lines.size() ; ++i)
                if (result.lines[i].key != canonical_form(inputs[i]).bytes) {
                    result.lines.clear();
                    break;
                }
            result.resumed_from = result.lines.size();
        }

        auto interval = std::max<std::size_t>(1, options.checkpoint_interval);
        for (std::size_t start = result.lines.size() ; start < inputs.size() ; start += interval) {
            auto end = std::min(inputs.size(), start + interval);
            vector<BhReportLine> chunk(end - start);
            parallel_for(chunk.size(), options.workers, [&] (std::size_t i) {
                    auto & h = inputs[start + i];
                    auto bh = build_bh(h);
                    auto verdict = arrows_edge(bh.graph, options.arrow);
                    auto & line = chunk[i];
                    line.key = canonical_form(h).bytes;
                    line.order = any_order(bh.graph);
                    line.arrows = verdict.arrows;
                    if (verdict.witness) {
                        auto w = make_witness(bh.graph, *verdict.witness);
                        line.witness_digest = witness_digest(w);
                        if (options.witness_directory)
                            write_witness(*options.witness_directory / (line.witness_digest.substr(0, 16) + "-"
                                        + std::to_string(start + i) + ".witness"), w);
                    }
                });
            result.lines.insert(result.lines.end(), chunk.begin(), chunk.end());
            if (options.checkpoint)
                write_checkpoint(*options.checkpoint, result.lines);
        }

        for (auto & line : result.lines)
            if (line.arrows)
                result.positives.push_back(line.key);
        return result;
    }

    auto lemma41_shadow_check(const Graph & g, VertexSet a, const ArrowOptions & options) -> bool
    {
        if (clique_number(g) != 3)
            throw PreconditionViolated("the implication needs clique number exactly 3");
        if (! a.subset_of(g.vertices()) || ! is_independent(g, a))
            throw PreconditionViolated("vertex set is not independent");
        if (! arrows_edge(g, options).arrows)
            return true;
        return arrows_edge(build_bh(delete_vertices(g, a)).graph, options).arrows;
    }
}
