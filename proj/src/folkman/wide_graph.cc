#include <folkman/wide_graph.hh>
#include <folkman/errors.hh>
#include <folkman/graph6_codec.hh>

#include <algorithm>

using std::optional;
using std::span;
using std::string;
using std::string_view;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace folkman
{
    auto wide_set_words(int order) -> int
    {
        return (order + 63) / 64;
    }

    auto wide_set_of(int order, span<const int> members) -> WideSet
    {
        WideSet result(wide_set_words(order), 0);
        for (int v : members) {
            if (v < 0 || v >= order)
                throw InvalidGraph("vertex " + to_string(v) + " out of range for order " + to_string(order));
            result[v >> 6] |= uint64_t{1} << (v & 63);
        }
        return result;
    }

    auto wide_set_members(const WideSet & set) -> vector<int>
    {
        vector<int> result;
        for (std::size_t w = 0 ; w < set.size() ; ++w)
            for (auto bits = set[w] ; bits ; bits &= bits - 1)
                result.push_back(int(w * 64) + std::countr_zero(bits));
        return result;
    }

    WideGraph::WideGraph(int order) :
        _order(order),
        _words(wide_set_words(order))
    {
        if (order < 0 || order > graph6::max_encodable_order)
            throw CapacityExceeded("wide graph order " + to_string(order) + " out of range");
        _bits.assign(std::size_t(order) * _words, 0);
    }

    auto WideGraph::from_edges(int order, span<const Edge> edges) -> WideGraph
    {
        WideGraph result{order};
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= order || v >= order)
                throw InvalidGraph("edge (" + to_string(u) + "," + to_string(v) + ") has an endpoint outside order " + to_string(order));
            if (u == v)
                throw InvalidGraph("loop at vertex " + to_string(u));
            result.row_ptr(u)[v >> 6] |= uint64_t{1} << (v & 63);
            result.row_ptr(v)[u >> 6] |= uint64_t{1} << (u & 63);
        }
        return result;
    }

    auto WideGraph::degree(int v) const -> int
    {
        int d = 0;
        for (auto w : row(v))
            d += std::popcount(w);
        return d;
    }

    auto WideGraph::edge_count() const -> long
    {
        long twice = 0;
        for (auto w : _bits)
            twice += std::popcount(w);
        return twice / 2;
    }

    auto WideGraph::neighbours(int v) const -> vector<int>
    {
        return wide_set_members(WideSet(row(v).begin(), row(v).end()));
    }

    auto WideGraph::with_edge(int u, int v) const -> WideGraph
    {
        if (u < 0 || v < 0 || u >= _order || v >= _order || u == v)
            throw InvalidGraph("invalid edge (" + to_string(u) + "," + to_string(v) + ")");
        if (adjacent(u, v))
            throw InvalidGraph("edge (" + to_string(u) + "," + to_string(v) + ") already present");
        WideGraph result = *this;
        result.row_ptr(u)[v >> 6] |= uint64_t{1} << (v & 63);
        result.row_ptr(v)[u >> 6] |= uint64_t{1} << (u & 63);
        return result;
    }

    auto WideGraph::without_edge(int u, int v) const -> WideGraph
    {
        if (u < 0 || v < 0 || u >= _order || v >= _order || u == v || ! adjacent(u, v))
            throw InvalidGraph("edge (" + to_string(u) + "," + to_string(v) + ") not present");
        WideGraph result = *this;
        result.row_ptr(u)[v >> 6] &= ~(uint64_t{1} << (v & 63));
        result.row_ptr(v)[u >> 6] &= ~(uint64_t{1} << (u & 63));
        return result;
    }

    auto widen(const Graph & g) -> WideGraph
    {
        return WideGraph::from_edges(g.order(), edge_list(g));
    }

    auto narrow(const WideGraph & g) -> optional<Graph>
    {
        if (g.order() > max_order)
            return std::nullopt;
        return Graph::from_edges(g.order(), edge_list(g));
    }

    auto edge_list(const WideGraph & g) -> vector<Edge>
    {
        vector<Edge> result;
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v : g.neighbours(u))
                if (v > u)
                    result.emplace_back(u, v);
        return result;
    }

    auto join_complete(int p, const WideGraph & g) -> WideGraph
    {
        if (p < 0)
            throw InvalidGraph("negative join size");
        vector<Edge> edges;
        for (int u = 0 ; u < p ; ++u) {
            for (int v = u + 1 ; v < p ; ++v)
                edges.emplace_back(u, v);
            for (int v = 0 ; v < g.order() ; ++v)
                edges.emplace_back(u, v + p);
        }
        for (auto [u, v] : edge_list(g))
            edges.emplace_back(u + p, v + p);
        return WideGraph::from_edges(g.order() + p, edges);
    }

    auto induced_subgraph(const WideGraph & g, span<const int> kept) -> WideGraph
    {
        vector<int> sorted(kept.begin(), kept.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        vector<int> new_index(g.order(), -1);
        for (std::size_t i = 0 ; i < sorted.size() ; ++i) {
            if (sorted[i] < 0 || sorted[i] >= g.order())
                throw InvalidGraph("vertex " + to_string(sorted[i]) + " out of range");
            new_index[sorted[i]] = int(i);
        }
        vector<Edge> edges;
        for (auto [u, v] : edge_list(g))
            if (new_index[u] >= 0 && new_index[v] >= 0)
                edges.emplace_back(new_index[u], new_index[v]);
        return WideGraph::from_edges(int(sorted.size()), edges);
    }

    auto delete_vertices(const WideGraph & g, span<const int> removed) -> WideGraph
    {
        vector<bool> gone(g.order(), false);
        for (int v : removed)
            if (v >= 0 && v < g.order())
                gone[v] = true;
        vector<int> kept;
        for (int v = 0 ; v < g.order() ; ++v)
            if (! gone[v])
                kept.push_back(v);
        return induced_subgraph(g, kept);
    }

    auto add_vertex_with_neighbourhood(const WideGraph & g, span<const int> neighbours) -> WideGraph
    {
        int n = g.order();
        WideGraph result{n + 1};
        for (int v = 0 ; v < n ; ++v)
            std::copy(g.row(v).begin(), g.row(v).end(), result.row_ptr(v));
        for (int v : neighbours) {
            if (v < 0 || v >= n)
                throw InvalidGraph("neighbourhood is not a subset of the vertex set");
            result.row_ptr(n)[v >> 6] |= uint64_t{1} << (v & 63);
            result.row_ptr(v)[n >> 6] |= uint64_t{1} << (n & 63);
        }
        return result;
    }

    auto parse_graph6_wide(string_view line) -> WideGraph
    {
        line = graph6::strip(line);
        long n = graph6::read_header(line);
        vector<Edge> edges;
        graph6::decode_body(n, line, [&] (long i, long j) { edges.emplace_back(int(i), int(j)); });
        return WideGraph::from_edges(int(n), edges);
    }

    auto to_graph6(const WideGraph & g) -> string
    {
        return graph6::encode(g.order(), [&] (long i, long j) { return g.adjacent(int(i), int(j)); });
    }

    auto make_any_graph(int order, span<const Edge> edges) -> AnyGraph
    {
        if (order <= max_order)
            return Graph::from_edges(order, edges);
        return WideGraph::from_edges(order, edges);
    }

    auto parse_graph6_any(string_view line) -> AnyGraph
    {
        auto stripped = graph6::strip(line);
        auto header = stripped;
        long n = graph6::read_header(header);
        if (n <= max_order)
            return parse_graph6(stripped);
        return parse_graph6_wide(stripped);
    }

    auto any_order(const AnyGraph & g) -> int
    {
        return std::visit([] (const auto & x) { return x.order(); }, g);
    }

    auto any_edge_list(const AnyGraph & g) -> vector<Edge>
    {
        return std::visit([] (const auto & x) { return edge_list(x); }, g);
    }

    auto to_graph6(const AnyGraph & g) -> string
    {
        return std::visit([] (const auto & x) { return to_graph6(x); }, g);
    }
}
