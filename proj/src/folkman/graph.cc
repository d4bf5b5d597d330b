#include <folkman/graph.hh>
#include <folkman/errors.hh>

#include <string>

using std::span;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace folkman
{
    namespace
    {
        auto check_order(int order) -> void
        {
            if (order < 0 || order > max_order)
                throw CapacityExceeded("graph order " + to_string(order) + " outside 0.." + to_string(max_order));
        }

        auto check_vertex(const Graph & g, int v) -> void
        {
            if (v < 0 || v >= g.order())
                throw InvalidGraph("vertex " + to_string(v) + " out of range for order " + to_string(g.order()));
        }
    }

    auto VertexSet::of(std::initializer_list<int> members) -> VertexSet
    {
        uint64_t bits = 0;
        for (int v : members)
            bits |= uint64_t{1} << v;
        return VertexSet{bits};
    }

    auto VertexSet::to_vector() const -> vector<int>
    {
        return vector<int>(begin(), end());
    }

    Graph::Graph(int order) :
        _order(order)
    {
        check_order(order);
    }

    auto Graph::from_edges(int order, span<const Edge> edges) -> Graph
    {
        Graph result{order};
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= order || v >= order)
                throw InvalidGraph("edge (" + to_string(u) + "," + to_string(v) + ") has an endpoint outside order " + to_string(order));
            if (u == v)
                throw InvalidGraph("loop at vertex " + to_string(u));
            result._rows[u] |= uint64_t{1} << v;
            result._rows[v] |= uint64_t{1} << u;
        }
        return result;
    }

    auto Graph::from_edges(int order, std::initializer_list<Edge> edges) -> Graph
    {
        return from_edges(order, span<const Edge>(edges.begin(), edges.size()));
    }

    auto Graph::from_rows(int order, span<const uint64_t> rows) -> Graph
    {
        check_order(order);
        if (rows.size() != std::size_t(order))
            throw InvalidGraph("expected " + to_string(order) + " rows");
        for (int u = 0 ; u < order ; ++u) {
            if (rows[u] & ~low_bits(order))
                throw InvalidGraph("row " + to_string(u) + " has bits beyond the order");
            if ((rows[u] >> u) & 1)
                throw InvalidGraph("loop at vertex " + to_string(u));
            for (int v : VertexSet{rows[u]})
                if (! ((rows[v] >> u) & 1))
                    throw InvalidGraph("adjacency is not symmetric");
        }
        return from_rows_unchecked(order, rows);
    }

    auto Graph::from_rows_unchecked(int order, span<const uint64_t> rows) -> Graph
    {
        Graph result;
        result._order = order;
        for (int v = 0 ; v < order ; ++v)
            result._rows[v] = rows[v];
        return result;
    }

    auto Graph::edge_count() const -> int
    {
        int twice = 0;
        for (int v = 0 ; v < _order ; ++v)
            twice += std::popcount(_rows[v]);
        return twice / 2;
    }

    auto Graph::with_edge(int u, int v) const -> Graph
    {
        check_vertex(*this, u);
        check_vertex(*this, v);
        if (u == v)
            throw InvalidGraph("loop at vertex " + to_string(u));
        if (adjacent(u, v))
            throw InvalidGraph("edge (" + to_string(u) + "," + to_string(v) + ") already present");
        Graph result = *this;
        result._rows[u] |= uint64_t{1} << v;
        result._rows[v] |= uint64_t{1} << u;
        return result;
    }

    auto Graph::without_edge(int u, int v) const -> Graph
    {
        check_vertex(*this, u);
        check_vertex(*this, v);
        if (u == v || ! adjacent(u, v))
            throw InvalidGraph("edge (" + to_string(u) + "," + to_string(v) + ") not present");
        Graph result = *this;
        result._rows[u] &= ~(uint64_t{1} << v);
        result._rows[v] &= ~(uint64_t{1} << u);
        return result;
    }

    auto Graph::operator==(const Graph & other) const -> bool
    {
        if (_order != other._order)
            return false;
        for (int v = 0 ; v < _order ; ++v)
            if (_rows[v] != other._rows[v])
                return false;
        return true;
    }

    auto make_graph(int order, span<const Edge> edges) -> Graph
    {
        return Graph::from_edges(order, edges);
    }

    auto edge_list(const Graph & g) -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(g.edge_count());
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v : VertexSet{g.row(u) & ~low_bits(u + 1)})
                result.emplace_back(u, v);
        return result;
    }

    auto complement(const Graph & g) -> Graph
    {
        std::array<uint64_t, max_order> rows{};
        auto all = low_bits(g.order());
        for (int v = 0 ; v < g.order() ; ++v)
            rows[v] = ~g.row(v) & all & ~(uint64_t{1} << v);
        return Graph::from_rows_unchecked(g.order(), rows);
    }

    auto join_complete(int p, const Graph & g) -> Graph
    {
        if (p < 0)
            throw InvalidGraph("negative join size");
        int n = g.order() + p;
        if (n > max_order)
            throw CapacityExceeded("join K_" + to_string(p) + " + G would have " + to_string(n) + " vertices");
        std::array<uint64_t, max_order> rows{};
        auto all = low_bits(n);
        for (int v = 0 ; v < p ; ++v)
            rows[v] = all & ~(uint64_t{1} << v);
        for (int v = 0 ; v < g.order() ; ++v)
            rows[v + p] = (g.row(v) << p) | low_bits(p);
        return Graph::from_rows_unchecked(n, rows);
    }

    auto induced_subgraph(const Graph & g, VertexSet kept) -> Graph
    {
        kept = kept & g.vertices();
        std::array<int, max_order> new_index{};
        int n = 0;
        for (int v : kept)
            new_index[v] = n++;

        std::array<uint64_t, max_order> rows{};
        for (int v : kept) {
            uint64_t row = 0;
            for (int w : g.neighbours(v) & kept)
                row |= uint64_t{1} << new_index[w];
            rows[new_index[v]] = row;
        }
        return Graph::from_rows_unchecked(n, rows);
    }

    auto delete_vertices(const Graph & g, VertexSet removed) -> Graph
    {
        return induced_subgraph(g, g.vertices() - removed);
    }

    auto add_vertex_with_neighbourhood(const Graph & g, VertexSet neighbours) -> Graph
    {
        int n = g.order();
        if (n + 1 > max_order)
            throw CapacityExceeded("adding a vertex would exceed order " + to_string(max_order));
        if (! neighbours.subset_of(g.vertices()))
            throw InvalidGraph("neighbourhood is not a subset of the vertex set");
        std::array<uint64_t, max_order> rows{};
        for (int v = 0 ; v < n ; ++v)
            rows[v] = g.row(v) | (neighbours.contains(v) ? uint64_t{1} << n : 0);
        rows[n] = neighbours.bits();
        return Graph::from_rows_unchecked(n + 1, rows);
    }

    auto duplicate_vertex(const Graph & g, int v) -> Graph
    {
        check_vertex(g, v);
        return add_vertex_with_neighbourhood(g, g.neighbours(v));
    }

    auto degree_sequence(const Graph & g) -> vector<int>
    {
        vector<int> result;
        for (int v = 0 ; v < g.order() ; ++v)
            result.push_back(g.degree(v));
        return result;
    }

    auto relabel(const Graph & g, span<const int> new_label_of) -> Graph
    {
        if (new_label_of.size() != std::size_t(g.order()))
            throw InvalidGraph("relabelling has " + to_string(new_label_of.size()) + " entries for order " + to_string(g.order()));
        uint64_t seen = 0;
        for (int l : new_label_of) {
            if (l < 0 || l >= g.order() || ((seen >> l) & 1))
                throw InvalidGraph("relabelling is not a permutation");
            seen |= uint64_t{1} << l;
        }
        std::array<uint64_t, max_order> rows{};
        for (int v = 0 ; v < g.order() ; ++v) {
            uint64_t row = 0;
            for (int w : g.neighbours(v))
                row |= uint64_t{1} << new_label_of[w];
            rows[new_label_of[v]] = row;
        }
        return Graph::from_rows_unchecked(g.order(), rows);
    }
}
