#ifndef FOLKMAN_GUARD_EXTEND_HH
#define FOLKMAN_GUARD_EXTEND_HH 1

#include <folkman/arrow.hh>
#include <folkman/graph.hh>
#include <folkman/store.hh>

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace folkman
{
    struct ExtensionCandidate
    {
        Graph base;
        std::vector<VertexSet> chosen;
    };

    /**
     * Every s-element family N of maximal triangle-free subsets of h meeting:
     * (a) no member equals a neighbourhood N_h(v); (b) every two members share
     * an edge of h; (c) alpha(h - union N') <= s - |N'| for every N' in N.
     * delta_mode adds (d) every member has at least 8 vertices and (e) for
     * every N', each vertex outside union N' has degree >= 8 - s + |N'| in h.
     *
     * Families are produced in lexicographic order of member indices within
     * the sorted family returned by maximal_triangle_free_subsets.
     */
    auto candidate_subsets(const Graph & h, int s, bool delta_mode,
            const std::function<auto (const ExtensionCandidate &) -> void> & emit) -> void;

    auto candidate_subsets(const Graph & h, int s, bool delta_mode) -> std::vector<ExtensionCandidate>;

    /// The base plus one new vertex per chosen set, appended in order, adjacent to exactly that set.
    auto build_extension(const ExtensionCandidate & c) -> Graph;

    struct ExtendParams
    {
        int n = 0;
        int p = 0;
        int s = 0;
        bool delta_mode = false;
    };

    struct ExtendOptions
    {
        ArrowOptions arrow;
        int workers = 1;
    };

    /// Survivor counts after each step, in the order the steps run.
    struct ExtendReport
    {
        long inputs = 0;
        long inputs_after_degree_filter = 0;
        long candidates = 0;
        long after_step_2_3 = 0;
        long after_dedup = 0;
        long after_chi = 0;
        long after_arrowing = 0;
    };

    /**
     * Adds to out the non-Sperner graphs of L_max(n;p;s) obtained from the
     * input graphs, which should be L_+K3(n-s;p+1;<=s). In delta_mode inputs
     * with minimum degree below 8 - s are dropped first and conditions (d),
     * (e) apply. Throws PreconditionViolated for inputs of the wrong order.
     */
    auto algorithm_extend(std::span<const Graph> inputs, const ExtendParams & params, GraphStore & out,
            const ExtendOptions & options = {}) -> ExtendReport;

    /// Steps 1 to 3: the deduplicated step 2.3 graphs go to found. Fills the counts up to after_dedup.
    auto extend_construct(std::span<const Graph> inputs, const ExtendParams & params, GraphStore & found,
            const ExtendOptions & options = {}) -> ExtendReport;

    /// Steps 4 and 5 over deduplicated graphs. Fills after_chi and after_arrowing.
    auto extend_finish(std::span<const Graph> graphs, const ExtendParams & params, GraphStore & out,
            const ExtendOptions & options = {}) -> ExtendReport;

    struct SpernerReport
    {
        long inputs = 0;
        long duplicates = 0;
        long after_structure = 0;
        long after_dedup = 0;
        long after_arrowing = 0;
    };

    /**
     * Duplicates every vertex of every input (graphs of L_max(n-1;p;s') for
     * s' in {s-1, s}) and keeps the maximal K4-free results with alpha = s
     * whose join with K_p arrows.
     */
    auto sperner_extensions(std::span<const Graph> inputs, int p, int s, GraphStore & out,
            const ExtendOptions & options = {}) -> SpernerReport;

    /// Duplication and structural filters; survivors go to found. Fills the counts up to after_dedup.
    auto sperner_construct(std::span<const Graph> inputs, int s, GraphStore & found,
            const ExtendOptions & options = {}) -> SpernerReport;

    /// Arrowing over deduplicated graphs. Fills after_arrowing.
    auto sperner_finish(std::span<const Graph> graphs, int p, GraphStore & out,
            const ExtendOptions & options = {}) -> SpernerReport;

    struct ClosureReport
    {
        long visited = 0;
        long accepted = 0;
        long rejected = 0;
        std::map<int, long> accepted_by_edges;
        std::vector<CanonicalKey> violations;
    };

    struct ClosureOptions
    {
        ArrowOptions arrow;
        int workers = 1;

        /// Prune and filter on the +K3 property.
        bool plus_k3 = true;

        /// Prune and filter on alpha <= s.
        bool alpha_bound = true;

        /// Stop after this many edge removals from the inputs. Negative for no limit.
        int max_depth = -1;

        /**
         * Continue this many levels below rejected graphs. Any graph found
         * there that passes every predicate is recorded as a violation; with
         * valid prunes there are none.
         */
        int slack = 0;

        /// When set, each finished level is written to level-<edges>.g6 here.
        std::optional<std::filesystem::path> spill_directory;

        /// Called after each level with its edge count, accepted graphs and the report so far.
        std::function<auto (int edges, const GraphStore & level, const ClosureReport & so_far) -> void> on_level;
    };

    /**
     * Downward closure under single edge removal. Each visited graph is
     * accepted when K_p + G arrows and, if enabled, it is +K3 and has
     * alpha <= s. Only accepted graphs are expanded (outside the slack
     * region). Accepted graphs, including accepted inputs, go to out.
     */
    auto edge_removal_closure(std::span<const Graph> inputs, int p, int s, GraphStore & out,
            const ClosureOptions & options = {}) -> ClosureReport;
}

#endif
