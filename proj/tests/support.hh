#ifndef FOLKMAN_GUARD_TESTS_SUPPORT_HH
#define FOLKMAN_GUARD_TESTS_SUPPORT_HH 1

#include <folkman/graph.hh>

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace folkman::testing
{
    inline auto complete_graph(int n) -> Graph
    {
        std::vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }

    inline auto cycle_graph(int n) -> Graph
    {
        std::vector<Edge> edges;
        for (int v = 0 ; v < n ; ++v)
            edges.emplace_back(v, (v + 1) % n);
        return Graph::from_edges(n, edges);
    }

    inline auto path_graph(int n) -> Graph
    {
        std::vector<Edge> edges;
        for (int v = 0 ; v + 1 < n ; ++v)
            edges.emplace_back(v, v + 1);
        return Graph::from_edges(n, edges);
    }

    inline auto random_graph(std::mt19937 & rng, int n, double density) -> Graph
    {
        std::bernoulli_distribution coin{density};
        std::vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }

    inline auto random_permutation(std::mt19937 & rng, int n) -> std::vector<int>
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    }

    inline auto subset_is_clique(const Graph & g, std::uint64_t s) -> bool
    {
        for (int u = 0 ; u < g.order() ; ++u)
            if ((s >> u) & 1)
                if ((g.row(u) & s) != (s & ~(std::uint64_t{1} << u)))
                    return false;
        return true;
    }

    inline auto subset_is_independent(const Graph & g, std::uint64_t s) -> bool
    {
        for (int u = 0 ; u < g.order() ; ++u)
            if (((s >> u) & 1) && (g.row(u) & s))
                return false;
        return true;
    }

    inline auto subset_is_triangle_free(const Graph & g, std::uint64_t s) -> bool
    {
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v = u + 1 ; v < g.order() ; ++v)
                for (int w = v + 1 ; w < g.order() ; ++w)
                    if (((s >> u) & 1) && ((s >> v) & 1) && ((s >> w) & 1)
                            && g.adjacent(u, v) && g.adjacent(u, w) && g.adjacent(v, w))
                        return false;
        return true;
    }

    // exhaustive oracles over all vertex subsets; small orders only

    inline auto brute_clique_number(const Graph & g) -> int
    {
        int best = 0;
        for (std::uint64_t s = 0 ; s < (std::uint64_t{1} << g.order()) ; ++s)
            if (subset_is_clique(g, s))
                best = std::max(best, std::popcount(s));
        return best;
    }

    inline auto brute_independence_number(const Graph & g) -> int
    {
        int best = 0;
        for (std::uint64_t s = 0 ; s < (std::uint64_t{1} << g.order()) ; ++s)
            if (subset_is_independent(g, s))
                best = std::max(best, std::popcount(s));
        return best;
    }

    inline auto brute_chromatic_number(const Graph & g) -> int
    {
        int n = g.order();
        for (int k = 0 ; k <= n ; ++k) {
            std::vector<int> c(n, 0);
            // odometer over all k^n colourings
            if (k == 0) {
                if (n == 0)
                    return 0;
                continue;
            }
            while (true) {
                bool proper = true;
                for (int u = 0 ; u < n && proper ; ++u)
                    for (int v = u + 1 ; v < n && proper ; ++v)
                        if (g.adjacent(u, v) && c[u] == c[v])
                            proper = false;
                if (proper)
                    return k;
                int i = 0;
                while (i < n && ++c[i] == k)
                    c[i++] = 0;
                if (i == n)
                    break;
            }
        }
        return n;
    }

    inline auto brute_maximal_triangle_free(const Graph & g) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> result;
        int n = g.order();
        for (std::uint64_t s = 0 ; s < (std::uint64_t{1} << n) ; ++s) {
            if (! subset_is_triangle_free(g, s))
                continue;
            bool maximal = true;
            for (int v = 0 ; v < n && maximal ; ++v)
                if (! ((s >> v) & 1) && subset_is_triangle_free(g, s | (std::uint64_t{1} << v)))
                    maximal = false;
            if (maximal)
                result.push_back(s);
        }
        return result;
    }

    /// Every 2-colouring of the edges has a monochromatic triangle. Edge counts up to about 24.
    inline auto brute_arrows_edge(const Graph & g) -> bool
    {
        auto edges = edge_list(g);
        int m = int(edges.size());
        std::vector<std::array<int, 3>> triangles;
        auto index = [&] (int u, int v) {
            return int(std::find(edges.begin(), edges.end(), Edge{std::min(u, v), std::max(u, v)}) - edges.begin());
        };
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v = u + 1 ; v < g.order() ; ++v)
                for (int w = v + 1 ; w < g.order() ; ++w)
                    if (g.adjacent(u, v) && g.adjacent(u, w) && g.adjacent(v, w))
                        triangles.push_back({ index(u, v), index(u, w), index(v, w) });
        for (std::uint64_t c = 0 ; c < (std::uint64_t{1} << m) ; ++c) {
            bool good = true;
            for (auto & t : triangles) {
                int a = (c >> t[0]) & 1, b = (c >> t[1]) & 1, d = (c >> t[2]) & 1;
                if (a == b && b == d) {
                    good = false;
                    break;
                }
            }
            if (good)
                return false;
        }
        return true;
    }

    /// Minimum graph6 over all relabellings. Orders up to 7.
    inline auto brute_canonical(const Graph & g) -> std::string
    {
        std::vector<int> p(g.order());
        std::iota(p.begin(), p.end(), 0);
        std::string best;
        do {
            auto s = to_graph6(relabel(g, p));
            if (best.empty() || s < best)
                best = s;
        } while (std::next_permutation(p.begin(), p.end()));
        return best;
    }

    class TempDir
    {
        private:
            std::filesystem::path _path;

        public:
            TempDir()
            {
                auto base = std::filesystem::temp_directory_path();
                std::random_device rd;
                do
                    _path = base / ("folkman-test-" + std::to_string(rd()));
                while (std::filesystem::exists(_path));
                std::filesystem::create_directories(_path);
            }

            ~TempDir()
            {
                std::error_code ec;
                std::filesystem::remove_all(_path, ec);
            }

            TempDir(const TempDir &) = delete;
            auto operator=(const TempDir &) -> TempDir & = delete;

            auto path() const -> const std::filesystem::path & { return _path; }
            auto operator/(const std::string & name) const -> std::filesystem::path { return _path / name; }
    };
}

#endif
