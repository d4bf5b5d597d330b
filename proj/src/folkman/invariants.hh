#ifndef FOLKMAN_GUARD_INVARIANTS_HH
#define FOLKMAN_GUARD_INVARIANTS_HH 1

#include <folkman/graph.hh>

#include <optional>
#include <utility>
#include <vector>

namespace folkman
{
    struct InvariantRecord
    {
        int omega = 0;
        int alpha = 0;
        int chi = 0;
        int min_degree = 0;
        int max_degree = 0;
        int edge_count = 0;

        auto operator==(const InvariantRecord &) const -> bool = default;
    };

    /// Exact clique number, branch and bound with a greedy colouring bound.
    auto clique_number(const Graph & g) -> int;

    /// Clique number of the subgraph induced by within.
    auto clique_number(const Graph & g, VertexSet within) -> int;

    /// Whether the subgraph induced by within contains a k-clique.
    auto has_clique(const Graph & g, VertexSet within, int k) -> bool;

    auto independence_number(const Graph & g) -> int;
    auto independence_number(const Graph & g, VertexSet within) -> int;

    /// Whether within contains an independent set of size k.
    auto has_independent_set(const Graph & g, VertexSet within, int k) -> bool;

    auto is_k_colourable(const Graph & g, int k) -> bool;
    auto chromatic_number(const Graph & g) -> int;

    /// Both throw PreconditionViolated on the order-0 graph.
    auto min_degree(const Graph & g) -> int;
    auto max_degree(const Graph & g) -> int;

    auto is_triangle_free(const Graph & g, VertexSet within) -> bool;

    /// Every non-adjacent pair has a common neighbour.
    auto is_plus_k3(const Graph & g) -> bool;

    /// Lexicographically smallest pair u != v with N(u) a subset of N(v), if any.
    auto is_sperner(const Graph & g) -> std::optional<std::pair<int, int>>;

    /// No K4, and adding any missing edge creates one.
    auto is_maximal_k4_free(const Graph & g) -> bool;

    /// The family M(g) of inclusion-maximal triangle-free vertex subsets, sorted by bits.
    auto maximal_triangle_free_subsets(const Graph & g) -> std::vector<VertexSet>;

    auto is_independent(const Graph & g, VertexSet s) -> bool;

    auto compute_invariants(const Graph & g) -> InvariantRecord;
}

#endif
