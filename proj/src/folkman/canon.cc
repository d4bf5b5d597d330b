#include <folkman/canon.hh>
#include <folkman/errors.hh>

#include <algorithm>
#include <unordered_set>

using std::array;
using std::string;
using std::uint64_t;

namespace folkman
{
    namespace
    {
        auto bit(int v) -> uint64_t
        {
            return uint64_t{1} << v;
        }

        // Ordered partition of the vertex set. Cells are contiguous runs of
        // lab; cell_end is meaningful at cell starts only.
        struct Partition
        {
            array<int, max_order> lab{};
            array<int, max_order> cell_end{};
            array<int, max_order> cell_of{};
            int cells = 0;
        };

        struct Search
        {
            const Graph & g;
            int n;

            bool have_first = false;
            array<int, max_order> first_lab{}, best_lab{};
            array<uint64_t, max_order> first_key{}, best_key{};
            array<int, max_order> first_path{};
            int first_path_length = 0;
            array<array<int, max_order>, max_order> orbit_parent{};

            auto refine(Partition & p, uint64_t queued) const -> void
            {
                array<int, max_order> count{};
                while (queued && p.cells < n) {
                    int s = std::countr_zero(queued);
                    queued &= queued - 1;

                    uint64_t splitter = 0;
                    for (int i = s ; i < p.cell_end[s] ; ++i)
                        splitter |= bit(p.lab[i]);

                    for (int c = 0, next = 0 ; c < n ; c = next) {
                        int e = p.cell_end[c];
                        next = e;
                        if (e - c == 1)
                            continue;

                        bool differ = false;
                        for (int i = c ; i < e ; ++i) {
                            count[i] = std::popcount(g.row(p.lab[i]) & splitter);
                            differ = differ || count[i] != count[c];
                        }
                        if (! differ)
                            continue;

                        for (int i = c + 1 ; i < e ; ++i) {
                            int v = p.lab[i], k = count[i], j = i - 1;
                            while (j >= c && count[j] > k) {
                                p.lab[j + 1] = p.lab[j];
                                count[j + 1] = count[j];
                                --j;
                            }
                            p.lab[j + 1] = v;
                            count[j + 1] = k;
                        }

                        bool was_queued = (queued >> c) & 1;
                        int largest_start = c, largest_size = 0;
                        for (int f = c ; f < e ; ) {
                            int g_end = f + 1;
                            while (g_end < e && count[g_end] == count[f])
                                ++g_end;
                            p.cell_end[f] = g_end;
                            for (int i = f ; i < g_end ; ++i)
                                p.cell_of[p.lab[i]] = f;
                            if (g_end - f > largest_size) {
                                largest_size = g_end - f;
                                largest_start = f;
                            }
                            if (f != c)
                                ++p.cells;
                            queued |= bit(f);
                            f = g_end;
                        }
                        if (! was_queued)
                            queued &= ~bit(largest_start);
                    }
                }
            }

            auto individualise(Partition & p, int v) const -> void
            {
                int s = p.cell_of[v], e = p.cell_end[s];
                int at = s;
                while (p.lab[at] != v)
                    ++at;
                std::swap(p.lab[at], p.lab[s]);
                p.cell_end[s] = s + 1;
                p.cell_end[s + 1] = e;
                for (int i = s + 1 ; i < e ; ++i)
                    p.cell_of[p.lab[i]] = s + 1;
                ++p.cells;
                refine(p, bit(s));
            }

            // Column j of the relabelled upper triangle, position 0 in the most significant bit.
            auto leaf_key(const Partition & p, array<uint64_t, max_order> & key) const -> void
            {
                array<int, max_order> pos{};
                for (int i = 0 ; i < n ; ++i)
                    pos[p.lab[i]] = i;
                for (int j = 0 ; j < n ; ++j) {
                    uint64_t column = 0;
                    for (int w : g.neighbours(p.lab[j]))
                        if (pos[w] < j)
                            column |= uint64_t{1} << (63 - pos[w]);
                    key[j] = column;
                }
            }

            auto compare(const array<uint64_t, max_order> & a, const array<uint64_t, max_order> & b) const -> int
            {
                for (int j = 1 ; j < n ; ++j)
                    if (a[j] != b[j])
                        return a[j] < b[j] ? -1 : 1;
                return 0;
            }

            auto find(int level, int v) -> int
            {
                auto & parent = orbit_parent[level];
                while (parent[v] != v) {
                    parent[v] = parent[parent[v]];
                    v = parent[v];
                }
                return v;
            }

            auto record_automorphism(const array<int, max_order> & from, const array<int, max_order> & to) -> void
            {
                array<int, max_order> gamma{};
                for (int i = 0 ; i < n ; ++i)
                    gamma[from[i]] = to[i];

                for (int level = 0 ; level < first_path_length ; ++level) {
                    if (level > 0 && gamma[first_path[level - 1]] != first_path[level - 1])
                        break;
                    for (int v = 0 ; v < n ; ++v) {
                        int a = find(level, v), b = find(level, gamma[v]);
                        if (a != b)
                            orbit_parent[level][std::max(a, b)] = std::min(a, b);
                    }
                }
            }

            auto leaf(const Partition & p) -> void
            {
                array<uint64_t, max_order> key{};
                leaf_key(p, key);
                if (! have_first) {
                    have_first = true;
                    first_lab = best_lab = p.lab;
                    first_key = best_key = key;
                    return;
                }
                if (0 == compare(key, first_key)) {
                    record_automorphism(first_lab, p.lab);
                    return;
                }
                int c = compare(key, best_key);
                if (c < 0) {
                    best_lab = p.lab;
                    best_key = key;
                }
                else if (c == 0)
                    record_automorphism(best_lab, p.lab);
            }

            auto search(const Partition & p, int level, bool on_first_path) -> void
            {
                if (p.cells == n) {
                    if (on_first_path)
                        first_path_length = level;
                    leaf(p);
                    return;
                }

                int target = 0;
                while (p.cell_end[target] - target == 1)
                    target = p.cell_end[target];

                if (on_first_path)
                    for (int v = 0 ; v < n ; ++v)
                        orbit_parent[level][v] = v;

                uint64_t cell = 0;
                for (int i = target ; i < p.cell_end[target] ; ++i)
                    cell |= bit(p.lab[i]);

                array<int, max_order> explored{};
                int explored_count = 0;
                for (int v : VertexSet{cell}) {
                    bool skip = false;
                    for (int k = 0 ; k < explored_count && ! skip ; ++k) {
                        int u = explored[k];
                        if ((g.row(u) & ~bit(v)) == (g.row(v) & ~bit(u)))
                            skip = true;
                        else if (on_first_path && find(level, u) == find(level, v))
                            skip = true;
                    }
                    if (skip)
                        continue;

                    Partition child = p;
                    individualise(child, v);
                    bool child_on_first_path = on_first_path && explored_count == 0;
                    if (child_on_first_path)
                        first_path[level] = v;
                    search(child, level + 1, child_on_first_path);
                    explored[explored_count++] = v;
                }
            }
        };

        auto has_independent(const Graph & g, uint64_t candidates, int k) -> bool
        {
            if (k <= 0)
                return true;
            if (std::popcount(candidates) < k)
                return false;
            while (candidates) {
                int v = std::countr_zero(candidates);
                candidates &= candidates - 1;
                if (has_independent(g, candidates & ~g.row(v), k - 1))
                    return true;
            }
            return false;
        }

        auto has_clique(const Graph & g, uint64_t candidates, int k) -> bool
        {
            if (k <= 0)
                return true;
            if (std::popcount(candidates) < k)
                return false;
            while (candidates) {
                int v = std::countr_zero(candidates);
                candidates &= candidates - 1;
                if (has_clique(g, candidates & g.row(v), k - 1))
                    return true;
            }
            return false;
        }

        // Invariant used to preselect the vertex removed on the canonical construction path.
        auto deletion_score(const Graph & g, int v) -> long
        {
            uint64_t nb = g.row(v);
            int inside = 0;
            for (int x : VertexSet{nb})
                inside += std::popcount(g.row(x) & nb);
            return long(std::popcount(nb)) * 4096 + inside / 2;
        }

        struct Generator
        {
            int target;
            const GenerationOptions & options;
            const std::function<auto (const Graph &) -> void> & emit;
            long split_seen = 0;

            auto accept(const Graph & g, const string & key) -> void
            {
                if (g.order() == target) {
                    emit(g);
                    return;
                }
                if (options.shard_count > 1 && g.order() == options.split_order) {
                    long index = split_seen++;
                    if (index % options.shard_count != options.shard_index)
                        return;
                }
                extend(g, key);
            }

            auto try_child(const Graph & parent, const string & parent_key, uint64_t neighbours,
                    std::unordered_set<string> & seen) -> void
            {
                int m = parent.order();
                array<uint64_t, max_order> rows{};
                for (int v = 0 ; v < m ; ++v)
                    rows[v] = parent.row(v) | (((neighbours >> v) & 1) << m);
                rows[m] = neighbours;
                Graph child = Graph::from_rows_unchecked(m + 1, rows);

                int new_degree = std::popcount(neighbours);
                int max_degree = 0;
                for (int v = 0 ; v <= m ; ++v)
                    max_degree = std::max(max_degree, child.degree(v));
                if (new_degree < max_degree)
                    return;

                long new_score = deletion_score(child, m);
                long best_score = new_score;
                uint64_t best_vertices = 0;
                for (int v = 0 ; v <= m ; ++v)
                    if (child.degree(v) == max_degree) {
                        long s = v == m ? new_score : deletion_score(child, v);
                        if (s > best_score)
                            return;
                        if (s == best_score)
                            best_vertices |= bit(v);
                    }

                if (options.keep && ! options.keep(child))
                    return;
                if (m + 1 == target && options.leaf_filter && ! options.leaf_filter(child))
                    return;

                auto labelling = canonical_labelling(child);
                int deleted = m;
                for (int i = m ; i >= 0 ; --i)
                    if ((best_vertices >> labelling.vertex_at[i]) & 1) {
                        deleted = labelling.vertex_at[i];
                        break;
                    }

                if (deleted != m) {
                    auto reduced = canonical_form(delete_vertices(child, VertexSet::single(deleted)));
                    if (reduced.bytes != parent_key)
                        return;
                }

                string key = to_graph6(labelling.canonical);
                if (! seen.insert(key).second)
                    return;
                accept(labelling.canonical, key);
            }

            auto choose(const Graph & parent, const string & parent_key, int v, uint64_t in, uint64_t out,
                    std::unordered_set<string> & seen) -> void
            {
                if (v == parent.order()) {
                    try_child(parent, parent_key, in, seen);
                    return;
                }
                if (! has_clique(parent, in & parent.row(v), options.max_clique - 1))
                    choose(parent, parent_key, v + 1, in | bit(v), out, seen);
                if (! has_independent(parent, out & ~parent.row(v), options.max_independence - 1))
                    choose(parent, parent_key, v + 1, in, out | bit(v), seen);
            }

            auto extend(const Graph & parent, const string & parent_key) -> void
            {
                std::unordered_set<string> seen;
                choose(parent, parent_key, 0, 0, 0, seen);
            }
        };
    }

    auto canonical_labelling(const Graph & g) -> CanonicalLabelling
    {
        int n = g.order();
        CanonicalLabelling result;
        if (n == 0) {
            result.canonical = g;
            return result;
        }

        Search search{g, n};
        Partition root;
        for (int v = 0 ; v < n ; ++v)
            root.lab[v] = v;

        // Initial cells by degree, in increasing order.
        std::stable_sort(root.lab.begin(), root.lab.begin() + n,
                [&] (int a, int b) { return g.degree(a) < g.degree(b); });
        uint64_t queued = 0;
        for (int s = 0 ; s < n ; ) {
            int e = s + 1;
            while (e < n && g.degree(root.lab[e]) == g.degree(root.lab[s]))
                ++e;
            root.cell_end[s] = e;
            for (int i = s ; i < e ; ++i)
                root.cell_of[root.lab[i]] = s;
            ++root.cells;
            queued |= bit(s);
            s = e;
        }
        search.refine(root, queued);
        search.search(root, 0, true);

        array<uint64_t, max_order> rows{};
        for (int i = 0 ; i < n ; ++i) {
            result.vertex_at[i] = search.best_lab[i];
            result.position_of[search.best_lab[i]] = i;
        }
        for (int v = 0 ; v < n ; ++v) {
            uint64_t row = 0;
            for (int w : g.neighbours(v))
                row |= bit(result.position_of[w]);
            rows[result.position_of[v]] = row;
        }
        result.canonical = Graph::from_rows_unchecked(n, rows);
        return result;
    }

    auto canonical_form(const Graph & g) -> CanonicalKey
    {
        return CanonicalKey{to_graph6(canonical_labelling(g).canonical)};
    }

    auto are_isomorphic(const Graph & g, const Graph & h) -> bool
    {
        if (g.order() != h.order() || g.edge_count() != h.edge_count())
            return false;
        return canonical_form(g) == canonical_form(h);
    }

    auto generate_all_graphs(int n, const GenerationOptions & options,
            const std::function<auto (const Graph &) -> void> & emit) -> void
    {
        if (n < 0 || n > max_order)
            throw CapacityExceeded("cannot generate graphs of order " + std::to_string(n));
        if (options.shard_count < 1 || options.shard_index < 0 || options.shard_index >= options.shard_count)
            throw PreconditionViolated("invalid shard selection");
        if (options.shard_count > 1 && (options.split_order < 1 || options.split_order >= n))
            throw PreconditionViolated("split order must lie strictly between 0 and the target order when sharding");

        if (n == 0) {
            Graph empty;
            if ((! options.keep || options.keep(empty)) && (! options.leaf_filter || options.leaf_filter(empty)))
                emit(empty);
            return;
        }

        if (options.max_clique < 1 || options.max_independence < 1)
            return;
        Graph k1{1};
        if (options.keep && ! options.keep(k1))
            return;
        if (n == 1) {
            if (! options.leaf_filter || options.leaf_filter(k1))
                emit(k1);
            return;
        }

        Generator generator{n, options, emit};
        generator.accept(k1, to_graph6(k1));
    }
}
