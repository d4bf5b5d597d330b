#ifndef FOLKMAN_GUARD_BH_HH
#define FOLKMAN_GUARD_BH_HH 1

#include <folkman/arrow.hh>
#include <folkman/graph.hh>
#include <folkman/wide_graph.hh>

#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace folkman
{
    /**
     * H with one new vertex u_i per maximal triangle-free subset M_i of V(H),
     * N(u_i) = M_i, the u_i pairwise non-adjacent and appended in the order
     * of maximal_triangle_free_subsets.
     */
    struct BhGraph
    {
        AnyGraph graph;
        int base_order = 0;
        int added = 0;
        std::vector<VertexSet> neighbourhoods;
    };

    /// Picks the one-word representation when the result has at most 64 vertices.
    auto build_bh(const Graph & h) -> BhGraph;

    struct BhReportLine
    {
        std::string key;
        int order = 0;
        bool arrows = false;
        std::string witness_digest;

        auto to_line() const -> std::string;
        static auto parse(const std::string & line) -> BhReportLine;
    };

    struct Theorem1Options
    {
        ArrowOptions arrow;
        int workers = 1;

        /// Progress file rewritten at each checkpoint; resumed from when present.
        std::optional<std::filesystem::path> checkpoint;
        std::size_t checkpoint_interval = 10000;

        /// Directory receiving one witness file per negative verdict.
        std::optional<std::filesystem::path> witness_directory;
    };

    struct Theorem1Result
    {
        std::vector<BhReportLine> lines;
        std::vector<std::string> positives;
        std::size_t resumed_from = 0;
    };

    /// arrows_edge(B(H)) for every H. A positive verdict would contradict the expected result.
    auto theorem1_check(std::span<const Graph> inputs, const Theorem1Options & options = {}) -> Theorem1Result;

    /**
     * Evaluates "g arrows implies B(g - a) arrows". Throws
     * PreconditionViolated unless omega(g) = 3 and a is independent.
     */
    auto lemma41_shadow_check(const Graph & g, VertexSet a, const ArrowOptions & options = {}) -> bool;
}

#endif
