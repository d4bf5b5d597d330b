#ifndef FOLKMAN_GUARD_CANON_HH
#define FOLKMAN_GUARD_CANON_HH 1

#include <folkman/graph.hh>

#include <array>
#include <functional>
#include <string>

namespace folkman
{
    /**
     * Canonical graph6 line of a graph. Two graphs have equal keys exactly
     * when they are isomorphic.
     */
    struct CanonicalKey
    {
        std::string bytes;

        auto operator<=>(const CanonicalKey &) const = default;
    };

    struct CanonicalLabelling
    {
        /// position_of[v] is the canonical label of vertex v.
        std::array<int, max_order> position_of{};

        /// vertex_at[i] is the vertex that receives canonical label i.
        std::array<int, max_order> vertex_at{};

        Graph canonical;
    };

    /**
     * Individualisation-refinement search for the labelling whose relabelled
     * graph has the lexicographically least graph6 bit string.
     *
     * Subtrees are skipped only when an automorphism fixing the current node
     * maps them onto an explored one (twin vertices anywhere, and orbits of
     * discovered automorphisms along the first path), so the minimum is taken
     * over every leaf graph.
     */
    auto canonical_labelling(const Graph & g) -> CanonicalLabelling;

    auto canonical_form(const Graph & g) -> CanonicalKey;

    auto are_isomorphic(const Graph & g, const Graph & h) -> bool;

    /**
     * Pruning for isomorph-free generation.
     *
     * The clique and independence bounds are applied while choosing the new
     * vertex's neighbourhood. keep, when set, must be hereditary: if it rejects
     * a graph it must reject every graph containing it as an induced subgraph.
     * leaf_filter is applied only to graphs of the final order, before any
     * canonical labelling, and need not be hereditary.
     */
    struct GenerationOptions
    {
        int max_clique = max_order;
        int max_independence = max_order;
        std::function<auto (const Graph &) -> bool> keep;
        std::function<auto (const Graph &) -> bool> leaf_filter;

        /// Work is split among parents at this order; shard_index selects parents i with i % shard_count == shard_index.
        int split_order = 0;
        int shard_index = 0;
        int shard_count = 1;
    };

    /**
     * Calls emit once for a canonically labelled representative of every
     * isomorphism class of order-n graphs passing the options.
     *
     * Canonical construction path: a child P + v is accepted when deleting its
     * canonically chosen last vertex gives a graph isomorphic to P, and
     * accepted children of one parent are deduplicated by canonical key.
     */
    auto generate_all_graphs(int n, const GenerationOptions & options,
            const std::function<auto (const Graph &) -> void> & emit) -> void;
}

#endif
