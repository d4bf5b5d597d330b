#ifndef FOLKMAN_GUARD_GRAPH_HH
#define FOLKMAN_GUARD_GRAPH_HH 1

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace folkman
{
    inline constexpr int max_order = 64;

    using Edge = std::pair<int, int>;

    /// Mask with the low n bits set, valid for 0 <= n <= 64.
    constexpr auto low_bits(int n) -> std::uint64_t
    {
        return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

    /**
     * A subset of {0, ..., 63}, one bit per vertex.
     *
     * Iterating yields members in increasing order.
     */
    class VertexSet
    {
        private:
            std::uint64_t _bits = 0;

        public:
            class Iterator
            {
                private:
                    std::uint64_t _rest;

                public:
                    using value_type = int;
                    using difference_type = std::ptrdiff_t;

                    constexpr explicit Iterator(std::uint64_t rest = 0) : _rest(rest) {}
                    constexpr auto operator*() const -> int { return std::countr_zero(_rest); }
                    constexpr auto operator++() -> Iterator & { _rest &= _rest - 1; return *this; }
                    constexpr auto operator++(int) -> Iterator { auto old = *this; ++*this; return old; }
                    constexpr auto operator==(const Iterator &) const -> bool = default;
            };

            constexpr VertexSet() = default;
            constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits) {}
            static auto of(std::initializer_list<int> members) -> VertexSet;

            static constexpr auto first(int n) -> VertexSet { return VertexSet{low_bits(n)}; }
            static constexpr auto single(int v) -> VertexSet { return VertexSet{std::uint64_t{1} << v}; }

            constexpr auto bits() const -> std::uint64_t { return _bits; }
            constexpr auto contains(int v) const -> bool { return (_bits >> v) & 1; }
            constexpr auto size() const -> int { return std::popcount(_bits); }
            constexpr auto empty() const -> bool { return 0 == _bits; }
            constexpr auto subset_of(VertexSet other) const -> bool { return 0 == (_bits & ~other._bits); }

            constexpr auto with(int v) const -> VertexSet { return VertexSet{_bits | (std::uint64_t{1} << v)}; }
            constexpr auto without(int v) const -> VertexSet { return VertexSet{_bits & ~(std::uint64_t{1} << v)}; }

            constexpr auto operator|(VertexSet o) const -> VertexSet { return VertexSet{_bits | o._bits}; }
            constexpr auto operator&(VertexSet o) const -> VertexSet { return VertexSet{_bits & o._bits}; }
            constexpr auto operator-(VertexSet o) const -> VertexSet { return VertexSet{_bits & ~o._bits}; }
            constexpr auto operator==(const VertexSet &) const -> bool = default;
            constexpr auto operator<(VertexSet o) const -> bool { return _bits < o._bits; }

            constexpr auto begin() const -> Iterator { return Iterator{_bits}; }
            constexpr auto end() const -> Iterator { return Iterator{0}; }

            auto to_vector() const -> std::vector<int>;
    };

    /**
     * Immutable simple graph on vertices 0, ..., order - 1 with order at most 64.
     *
     * Row v holds the neighbourhood of v as a bit set. Rows are kept symmetric
     * and irreflexive, and bits at or above the order are always clear.
     */
    class Graph
    {
        private:
            int _order = 0;
            std::array<std::uint64_t, max_order> _rows{};

        public:
            Graph() = default;

            /// Edgeless graph of the given order.
            explicit Graph(int order);

            /// Throws InvalidGraph for out-of-range endpoints or loops. Duplicate pairs collapse.
            static auto from_edges(int order, std::span<const Edge> edges) -> Graph;
            static auto from_edges(int order, std::initializer_list<Edge> edges) -> Graph;

            /// Validated construction from adjacency rows.
            static auto from_rows(int order, std::span<const std::uint64_t> rows) -> Graph;

            /// Rows must already satisfy the class invariants. Used on hot paths.
            static auto from_rows_unchecked(int order, std::span<const std::uint64_t> rows) -> Graph;

            auto order() const -> int { return _order; }
            auto vertices() const -> VertexSet { return VertexSet::first(_order); }
            auto row(int v) const -> std::uint64_t { return _rows[v]; }
            auto rows() const -> std::span<const std::uint64_t> { return {_rows.data(), std::size_t(_order)}; }
            auto neighbours(int v) const -> VertexSet { return VertexSet{_rows[v]}; }
            auto adjacent(int u, int v) const -> bool { return (_rows[u] >> v) & 1; }
            auto degree(int v) const -> int { return std::popcount(_rows[v]); }
            auto edge_count() const -> int;

            /// Throws InvalidGraph if the edge is already present.
            auto with_edge(int u, int v) const -> Graph;

            /// Throws InvalidGraph if the edge is absent.
            auto without_edge(int u, int v) const -> Graph;

            auto operator==(const Graph & other) const -> bool;
    };

    auto make_graph(int order, std::span<const Edge> edges) -> Graph;

    /// Edges (u, v) with u < v in lexicographic order. This order defines edge indices everywhere.
    auto edge_list(const Graph & g) -> std::vector<Edge>;

    auto complement(const Graph & g) -> Graph;

    /// K_p + g: p new vertices 0..p-1 forming a clique joined to all of g, which is shifted up by p.
    auto join_complete(int p, const Graph & g) -> Graph;

    /// Induced subgraph on the remaining vertices, relabelled preserving order.
    auto delete_vertices(const Graph & g, VertexSet removed) -> Graph;

    auto induced_subgraph(const Graph & g, VertexSet kept) -> Graph;

    /// Appends vertex order(g) adjacent to exactly the given set.
    auto add_vertex_with_neighbourhood(const Graph & g, VertexSet neighbours) -> Graph;

    /// Appends a non-adjacent twin of v.
    auto duplicate_vertex(const Graph & g, int v) -> Graph;

    auto degree_sequence(const Graph & g) -> std::vector<int>;

    auto relabel(const Graph & g, std::span<const int> new_label_of) -> Graph;

    auto parse_graph6(std::string_view line) -> Graph;
    auto to_graph6(const Graph & g) -> std::string;
}

#endif
