#include <folkman/invariants.hh>
#include <folkman/errors.hh>

#include <algorithm>
#include <array>

using std::array;
using std::optional;
using std::pair;
using std::uint64_t;
using std::vector;

namespace folkman
{
    namespace
    {
        using Rows = array<uint64_t, max_order>;

        auto bit(int v) -> uint64_t
        {
            return uint64_t{1} << v;
        }

        auto complement_rows(const Graph & g, VertexSet within) -> Rows
        {
            Rows rows{};
            for (int v : within)
                rows[v] = within.bits() & ~g.row(v) & ~bit(v);
            return rows;
        }

        struct CliqueSearch
        {
            const uint64_t * rows;
            int best = 0;

            auto expand(uint64_t candidates, int size) -> void
            {
                if (0 == candidates) {
                    best = std::max(best, size);
                    return;
                }

                array<int, max_order> order{}, colour{};
                int count = 0, c = 0;
                uint64_t uncoloured = candidates;
                while (uncoloured) {
                    ++c;
                    uint64_t q = uncoloured;
                    while (q) {
                        int v = std::countr_zero(q);
                        q &= ~rows[v] & ~bit(v);
                        uncoloured &= ~bit(v);
                        order[count] = v;
                        colour[count] = c;
                        ++count;
                    }
                }

                for (int i = count - 1 ; i >= 0 ; --i) {
                    if (size + colour[i] <= best)
                        return;
                    int v = order[i];
                    expand(candidates & rows[v], size + 1);
                    candidates &= ~bit(v);
                }
            }
        };

        auto has_clique_in(const uint64_t * rows, uint64_t candidates, int k) -> bool
        {
            if (k <= 0)
                return true;
            if (k == 1)
                return candidates != 0;
            if (std::popcount(candidates) < k)
                return false;
            while (candidates) {
                int v = std::countr_zero(candidates);
                candidates &= candidates - 1;
                if (has_clique_in(rows, candidates & rows[v], k - 1))
                    return true;
            }
            return false;
        }

        struct ColouringSearch
        {
            const Graph & g;
            int k;
            array<uint64_t, max_order> classes{};
            int used = 0;

            auto solve(uint64_t uncoloured) -> bool
            {
                if (0 == uncoloured)
                    return true;

                int chosen = -1, chosen_sat = -1, chosen_deg = -1;
                uint64_t chosen_forbidden = 0;
                for (int v : VertexSet{uncoloured}) {
                    uint64_t forbidden = 0;
                    for (int c = 0 ; c < used ; ++c)
                        if (g.row(v) & classes[c])
                            forbidden |= bit(c);
                    int sat = std::popcount(forbidden);
                    int deg = std::popcount(g.row(v) & uncoloured);
                    if (sat > chosen_sat || (sat == chosen_sat && deg > chosen_deg)) {
                        chosen = v;
                        chosen_sat = sat;
                        chosen_deg = deg;
                        chosen_forbidden = forbidden;
                    }
                }

                int limit = std::min(k, used + 1);
                for (int c = 0 ; c < limit ; ++c) {
                    if (chosen_forbidden & bit(c))
                        continue;
                    bool fresh = (c == used);
                    classes[c] |= bit(chosen);
                    if (fresh)
                        ++used;
                    bool ok = solve(uncoloured & ~bit(chosen));
                    classes[c] &= ~bit(chosen);
                    if (fresh)
                        --used;
                    if (ok)
                        return true;
                }
                return false;
            }
        };

        struct TriangleFreeEnumeration
        {
            const Graph & g;
            int n;
            vector<VertexSet> found;

            auto run(int v, uint64_t chosen) -> void
            {
                if (v == n) {
                    // maximal iff every outsider sees an edge inside the set
                    uint64_t outside = low_bits(n) & ~chosen;
                    for (int w : VertexSet{outside}) {
                        uint64_t seen = g.row(w) & chosen;
                        bool has_edge = false;
                        for (int x : VertexSet{seen})
                            if (g.row(x) & seen) {
                                has_edge = true;
                                break;
                            }
                        if (! has_edge)
                            return;
                    }
                    found.emplace_back(chosen);
                    return;
                }

                uint64_t seen = g.row(v) & chosen;
                bool closes_triangle = false;
                for (int x : VertexSet{seen})
                    if (g.row(x) & seen) {
                        closes_triangle = true;
                        break;
                    }
                if (! closes_triangle)
                    run(v + 1, chosen | bit(v));
                run(v + 1, chosen);
            }
        };
    }

    auto clique_number(const Graph & g, VertexSet within) -> int
    {
        within = within & g.vertices();
        CliqueSearch search{g.rows().data()};
        search.expand(within.bits(), 0);
        return search.best;
    }

    auto clique_number(const Graph & g) -> int
    {
        return clique_number(g, g.vertices());
    }

    auto has_clique(const Graph & g, VertexSet within, int k) -> bool
    {
        return has_clique_in(g.rows().data(), (within & g.vertices()).bits(), k);
    }

    auto independence_number(const Graph & g, VertexSet within) -> int
    {
        within = within & g.vertices();
        auto rows = complement_rows(g, within);
        CliqueSearch search{rows.data()};
        search.expand(within.bits(), 0);
        return search.best;
    }

    auto independence_number(const Graph & g) -> int
    {
        return independence_number(g, g.vertices());
    }

    auto has_independent_set(const Graph & g, VertexSet within, int k) -> bool
    {
        within = within & g.vertices();
        auto rows = complement_rows(g, within);
        return has_clique_in(rows.data(), within.bits(), k);
    }

    auto is_k_colourable(const Graph & g, int k) -> bool
    {
        if (g.order() == 0)
            return true;
        if (k <= 0)
            return false;
        if (k >= g.order())
            return true;
        ColouringSearch search{g, k};
        return search.solve(g.vertices().bits());
    }

    auto chromatic_number(const Graph & g) -> int
    {
        if (g.order() == 0)
            return 0;
        int k = std::max(1, clique_number(g));
        while (! is_k_colourable(g, k))
            ++k;
        return k;
    }

    auto min_degree(const Graph & g) -> int
    {
        if (g.order() == 0)
            throw PreconditionViolated("minimum degree of the order-0 graph");
        int result = g.order();
        for (int v = 0 ; v < g.order() ; ++v)
            result = std::min(result, g.degree(v));
        return result;
    }

    auto max_degree(const Graph & g) -> int
    {
        if (g.order() == 0)
            throw PreconditionViolated("maximum degree of the order-0 graph");
        int result = 0;
        for (int v = 0 ; v < g.order() ; ++v)
            result = std::max(result, g.degree(v));
        return result;
    }

    auto is_triangle_free(const Graph & g, VertexSet within) -> bool
    {
        for (int v : within) {
            uint64_t seen = g.row(v) & within.bits();
            for (int x : VertexSet{seen})
                if (g.row(x) & seen)
                    return false;
        }
        return true;
    }

    auto is_plus_k3(const Graph & g) -> bool
    {
        int n = g.order();
        for (int u = 0 ; u < n ; ++u) {
            uint64_t non_adjacent_later = low_bits(n) & ~low_bits(u + 1) & ~g.row(u);
            for (int v : VertexSet{non_adjacent_later})
                if (0 == (g.row(u) & g.row(v)))
                    return false;
        }
        return true;
    }

    auto is_sperner(const Graph & g) -> optional<pair<int, int>>
    {
        int n = g.order();
        for (int u = 0 ; u < n ; ++u)
            for (int v = 0 ; v < n ; ++v)
                if (u != v && 0 == (g.row(u) & ~g.row(v)))
                    return pair{u, v};
        return std::nullopt;
    }

    auto is_maximal_k4_free(const Graph & g) -> bool
    {
        if (has_clique(g, g.vertices(), 4))
            return false;
        int n = g.order();
        for (int u = 0 ; u < n ; ++u) {
            uint64_t non_adjacent_later = low_bits(n) & ~low_bits(u + 1) & ~g.row(u);
            for (int v : VertexSet{non_adjacent_later}) {
                uint64_t common = g.row(u) & g.row(v);
                bool has_edge = false;
                for (int x : VertexSet{common})
                    if (g.row(x) & common) {
                        has_edge = true;
                        break;
                    }
                if (! has_edge)
                    return false;
            }
        }
        return true;
    }

    auto maximal_triangle_free_subsets(const Graph & g) -> vector<VertexSet>
    {
        TriangleFreeEnumeration e{g, g.order(), {}};
        e.run(0, 0);
        std::sort(e.found.begin(), e.found.end());
        return std::move(e.found);
    }

    auto is_independent(const Graph & g, VertexSet s) -> bool
    {
        for (int v : s)
            if (g.row(v) & s.bits())
                return false;
        return true;
    }

    auto compute_invariants(const Graph & g) -> InvariantRecord
    {
        InvariantRecord r;
        r.omega = clique_number(g);
        r.alpha = independence_number(g);
        r.chi = chromatic_number(g);
        if (g.order() > 0) {
            r.min_degree = min_degree(g);
            r.max_degree = max_degree(g);
        }
        r.edge_count = g.edge_count();
        return r;
    }
}
