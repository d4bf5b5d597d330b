#ifndef FOLKMAN_GUARD_WIDE_GRAPH_HH
#define FOLKMAN_GUARD_WIDE_GRAPH_HH 1

#include <folkman/graph.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace folkman
{
    /// Row bit set of arbitrary width, one bit per vertex.
    using WideSet = std::vector<std::uint64_t>;

    auto wide_set_words(int order) -> int;
    auto wide_set_of(int order, std::span<const int> members) -> WideSet;
    auto wide_set_members(const WideSet & set) -> std::vector<int>;

    /**
     * Simple graph with multi-word adjacency rows and no fixed order cap.
     *
     * Same contracts as Graph. Used where orders exceed 64, chiefly B(H).
     */
    class WideGraph
    {
        private:
            int _order = 0;
            int _words = 0;
            std::vector<std::uint64_t> _bits;

            auto row_ptr(int v) -> std::uint64_t * { return _bits.data() + std::size_t(v) * _words; }

        public:
            WideGraph() = default;
            explicit WideGraph(int order);

            static auto from_edges(int order, std::span<const Edge> edges) -> WideGraph;

            auto order() const -> int { return _order; }
            auto words() const -> int { return _words; }
            auto row(int v) const -> std::span<const std::uint64_t>
            {
                return {_bits.data() + std::size_t(v) * _words, std::size_t(_words)};
            }
            auto adjacent(int u, int v) const -> bool
            {
                return (_bits[std::size_t(u) * _words + (v >> 6)] >> (v & 63)) & 1;
            }
            auto degree(int v) const -> int;
            auto edge_count() const -> long;
            auto neighbours(int v) const -> std::vector<int>;

            auto with_edge(int u, int v) const -> WideGraph;
            auto without_edge(int u, int v) const -> WideGraph;

            auto operator==(const WideGraph & other) const -> bool = default;

            friend auto add_vertex_with_neighbourhood(const WideGraph &, std::span<const int>) -> WideGraph;
            friend auto join_complete(int, const WideGraph &) -> WideGraph;
            friend auto induced_subgraph(const WideGraph &, std::span<const int>) -> WideGraph;
    };

    auto widen(const Graph & g) -> WideGraph;
    auto narrow(const WideGraph & g) -> std::optional<Graph>;

    auto edge_list(const WideGraph & g) -> std::vector<Edge>;
    auto join_complete(int p, const WideGraph & g) -> WideGraph;
    auto induced_subgraph(const WideGraph & g, std::span<const int> kept) -> WideGraph;
    auto delete_vertices(const WideGraph & g, std::span<const int> removed) -> WideGraph;
    auto add_vertex_with_neighbourhood(const WideGraph & g, std::span<const int> neighbours) -> WideGraph;

    auto parse_graph6_wide(std::string_view line) -> WideGraph;
    auto to_graph6(const WideGraph & g) -> std::string;

    /// Either representation, picked by order: Graph up to 64 vertices, WideGraph beyond.
    using AnyGraph = std::variant<Graph, WideGraph>;

    auto make_any_graph(int order, std::span<const Edge> edges) -> AnyGraph;
    auto parse_graph6_any(std::string_view line) -> AnyGraph;
    auto any_order(const AnyGraph & g) -> int;
    auto any_edge_list(const AnyGraph & g) -> std::vector<Edge>;
    auto to_graph6(const AnyGraph & g) -> std::string;
}

#endif
