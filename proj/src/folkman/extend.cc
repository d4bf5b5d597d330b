#include <folkman/extend.hh>
#include <folkman/errors.hh>
#include <folkman/invariants.hh>
#include <folkman/parallel.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <unordered_map>

using std::span;
using std::uint64_t;
using std::vector;

namespace folkman
{
    namespace
    {
        auto shares_edge(const Graph & h, VertexSet a, VertexSet b) -> bool
        {
            auto common = a & b;
            for (int u : common)
                if (! (h.neighbours(u) & common).empty())
                    return true;
            return false;
        }

        class CandidateSearch
        {
            private:
                const Graph & _h;
                int _s;
                bool _delta_mode;
                const std::function<auto (const ExtensionCandidate &) -> void> & _emit;
                vector<VertexSet> _sets;
                std::unordered_map<uint64_t, int> _alpha_memo;
                vector<int> _chosen;
                // union of the chosen members selected by each bit mask over chosen positions
                vector<uint64_t> _unions;

                auto alpha_without(uint64_t removed) -> int
                {
                    auto [it, inserted] = _alpha_memo.try_emplace(removed, 0);
                    if (inserted)
                        it->second = independence_number(_h, _h.vertices() - VertexSet{removed});
                    return it->second;
                }

                auto min_degree_outside(uint64_t removed) const -> int
                {
                    int result = max_order;
                    for (int v : _h.vertices() - VertexSet{removed})
                        result = std::min(result, _h.degree(v));
                    return result;
                }

                // conditions (c) and (e) for one sub-collection
                auto sub_collection_ok(uint64_t removed, int size) -> bool
                {
                    if (alpha_without(removed) > _s - size)
                        return false;
                    if (_delta_mode && min_degree_outside(removed) < 8 - _s + size)
                        return false;
                    return true;
                }

                auto search(std::size_t start) -> void
                {
                    int k = int(_chosen.size());
                    if (k == _s) {
                        ExtensionCandidate c{_h, {}};
                        for (int i : _chosen)
                            c.chosen.push_back(_sets[i]);
                        _emit(c);
                        return;
                    }
                    for (std::size_t i = start ; i + (_s - k) <= _sets.size() ; ++i) {
                        bool ok = true;
                        for (int j : _chosen)
                            if (! shares_edge(_h, _sets[i], _sets[j])) {
                                ok = false;
                                break;
                            }
                        if (! ok)
                            continue;

                        // every sub-collection containing the new member
                        uint64_t fresh = uint64_t{1} << k;
                        for (uint64_t mask = 0 ; mask < fresh && ok ; ++mask) {
                            uint64_t removed = _unions[mask] | _sets[i].bits();
                            _unions[mask | fresh] = removed;
                            ok = sub_collection_ok(removed, std::popcount(mask) + 1);
                        }
                        if (! ok)
                            continue;

                        _chosen.push_back(int(i));
                        search(i + 1);
                        _chosen.pop_back();
                    }
                }

            public:
                CandidateSearch(const Graph & h, int s, bool delta_mode,
                        const std::function<auto (const ExtensionCandidate &) -> void> & emit) :
                    _h(h),
                    _s(s),
                    _delta_mode(delta_mode),
                    _emit(emit)
                {
                    for (auto m : maximal_triangle_free_subsets(h)) {
                        bool is_neighbourhood = false;
                        for (int v = 0 ; v < h.order() ; ++v)
                            if (h.neighbours(v) == m)
                                is_neighbourhood = true;
                        if (is_neighbourhood)
                            continue;
                        if (delta_mode && m.size() < 8)
                            continue;
                        _sets.push_back(m);
                    }
                }

                auto run() -> void
                {
                    if (_s < 0 || _s > 16)
                        throw PreconditionViolated("extension size must lie in 0..16");
                    _unions.assign(std::size_t{1} << _s, 0);
                    if (! sub_collection_ok(0, 0))
                        return;
                    search(0);
                }
        };

        auto not_colourable_below(const Graph & g, int p) -> bool
        {
            int k = 5 - p;
            return k < 1 || ! is_k_colourable(g, k);
        }

        auto check_orders(span<const Graph> inputs, int order) -> void
        {
            for (auto & g : inputs)
                if (g.order() != order)
                    throw PreconditionViolated("input graph of order " + std::to_string(g.order()) + ", expected "
                            + std::to_string(order));
        }
    }

    auto candidate_subsets(const Graph & h, int s, bool delta_mode,
            const std::function<auto (const ExtensionCandidate &) -> void> & emit) -> void
    {
        if (clique_number(h) > 3)
            throw PreconditionViolated("extension base must be K4-free");
        CandidateSearch{h, s, delta_mode, emit}.run();
    }

    auto candidate_subsets(const Graph & h, int s, bool delta_mode) -> vector<ExtensionCandidate>
    {
        vector<ExtensionCandidate> result;
        candidate_subsets(h, s, delta_mode, [&] (const ExtensionCandidate & c) { result.push_back(c); });
        return result;
    }

    auto build_extension(const ExtensionCandidate & c) -> Graph
    {
        Graph g = c.base;
        for (auto m : c.chosen) {
            if (! m.subset_of(c.base.vertices()))
                throw PreconditionViolated("chosen set is not contained in the base graph");
            g = add_vertex_with_neighbourhood(g, m);
        }
        return g;
    }

    auto extend_construct(span<const Graph> inputs, const ExtendParams & params, GraphStore & found,
            const ExtendOptions & options) -> ExtendReport
    {
        if (params.s < 0 || params.p < 0 || params.n - params.s < 1)
            throw PreconditionViolated("extension parameters need p >= 0 and 0 <= s < n");
        check_orders(inputs, params.n - params.s);

        ExtendReport report;
        report.inputs = long(inputs.size());

        vector<const Graph *> bases;
        for (auto & h : inputs)
            if (! params.delta_mode || min_degree(h) >= 8 - params.s)
                bases.push_back(&h);
        report.inputs_after_degree_filter = long(bases.size());

        GraphStore local;
        std::atomic<long> candidates{0}, kept{0};
        parallel_for(bases.size(), options.workers, [&] (std::size_t i) {
                candidate_subsets(*bases[i], params.s, params.delta_mode, [&] (const ExtensionCandidate & c) {
                        ++candidates;
                        auto g = build_extension(c);
                        if (! is_sperner(g) && is_maximal_k4_free(g)) {
                            ++kept;
                            local.insert(g);
                        }
                    });
            });
        report.candidates = candidates;
        report.after_step_2_3 = kept;
        report.after_dedup = long(local.size());
        found.merge(local);
        return report;
    }

    auto extend_finish(span<const Graph> graphs, const ExtendParams & params, GraphStore & out,
            const ExtendOptions & options) -> ExtendReport
    {
        ExtendReport report;
        vector<char> chromatic_ok(graphs.size()), arrows(graphs.size());
        parallel_for(graphs.size(), options.workers, [&] (std::size_t i) {
                chromatic_ok[i] = not_colourable_below(graphs[i], params.p);
                if (chromatic_ok[i])
                    arrows[i] = arrows_edge(join_complete(params.p, graphs[i]), options.arrow).arrows;
            });
        for (std::size_t i = 0 ; i < graphs.size() ; ++i) {
            report.after_chi += chromatic_ok[i];
            if (arrows[i]) {
                ++report.after_arrowing;
                out.insert(graphs[i]);
            }
        }
        return report;
    }

    auto algorithm_extend(span<const Graph> inputs, const ExtendParams & params, GraphStore & out,
            const ExtendOptions & options) -> ExtendReport
    {
        GraphStore found;
        auto report = extend_construct(inputs, params, found, options);
        auto graphs = found.graphs();
        auto finish = extend_finish(graphs, params, out, options);
        report.after_chi = finish.after_chi;
        report.after_arrowing = finish.after_arrowing;
        return report;
    }

    auto sperner_construct(span<const Graph> inputs, int s, GraphStore & found,
            const ExtendOptions & options) -> SpernerReport
    {
        SpernerReport report;
        report.inputs = long(inputs.size());
        if (! inputs.empty())
            check_orders(inputs, inputs.front().order());

        GraphStore local;
        std::atomic<long> duplicates{0}, structural{0};
        parallel_for(inputs.size(), options.workers, [&] (std::size_t i) {
                auto & h = inputs[i];
                for (int v = 0 ; v < h.order() ; ++v) {
                    ++duplicates;
                    auto g = duplicate_vertex(h, v);
                    if (is_maximal_k4_free(g) && independence_number(g) == s) {
                        ++structural;
                        local.insert(g);
                    }
                }
            });
        report.duplicates = duplicates;
        report.after_structure = structural;
        report.after_dedup = long(local.size());
        found.merge(local);
        return report;
    }

    auto sperner_finish(span<const Graph> graphs, int p, GraphStore & out, const ExtendOptions & options) -> SpernerReport
    {
        SpernerReport report;
        vector<char> member(graphs.size());
        parallel_for(graphs.size(), options.workers, [&] (std::size_t i) {
                member[i] = member_L(graphs[i], p, options.arrow);
            });
        for (std::size_t i = 0 ; i < graphs.size() ; ++i)
            if (member[i]) {
                ++report.after_arrowing;
                out.insert(graphs[i]);
            }
        return report;
    }

    auto sperner_extensions(span<const Graph> inputs, int p, int s, GraphStore & out,
            const ExtendOptions & options) -> SpernerReport
    {
        GraphStore found;
        auto report = sperner_construct(inputs, s, found, options);
        auto graphs = found.graphs();
        report.after_arrowing = sperner_finish(graphs, p, out, options).after_arrowing;
        return report;
    }

    namespace
    {
        struct ClosureNode
        {
            Graph graph;
            bool accepted = false;
            bool reached_from_accepted = false;
            int budget = 0;
            int depth = 0;
        };

        using Level = std::map<std::string, ClosureNode>;
    }

    auto edge_removal_closure(span<const Graph> inputs, int p, int s, GraphStore & out,
            const ClosureOptions & options) -> ClosureReport
    {
        ClosureReport report;

        auto passes = [&] (const Graph & g) {
            if (options.plus_k3 && ! is_plus_k3(g))
                return false;
            if (options.alpha_bound && has_independent_set(g, g.vertices(), s + 1))
                return false;
            return member_L(g, p, options.arrow);
        };

        std::map<int, Level, std::greater<>> levels;
        for (auto & g : inputs) {
            auto key = canonical_form(g);
            auto & level = levels[g.edge_count()];
            if (level.contains(key.bytes))
                continue;
            bool ok = passes(g);
            level.emplace(key.bytes, ClosureNode{parse_graph6(key.bytes), ok, ok, options.slack, 0});
        }

        while (! levels.empty()) {
            auto edges = levels.begin()->first;
            Level current = std::move(levels.begin()->second);
            levels.erase(levels.begin());

            GraphStore accepted_here;
            vector<const ClosureNode *> nodes;
            for (auto & [key, node] : current) {
                ++report.visited;
                bool counted = node.accepted && node.reached_from_accepted;
                if (node.accepted && ! node.reached_from_accepted)
                    report.violations.push_back(CanonicalKey{key});
                if (counted) {
                    ++report.accepted;
                    ++report.accepted_by_edges[edges];
                    accepted_here.insert_key(CanonicalKey{key});
                }
                else
                    ++report.rejected;

                bool expand = (counted || node.budget > 0) && (options.max_depth < 0 || node.depth < options.max_depth);
                if (expand && edges > 0)
                    nodes.push_back(&node);
            }

            out.merge(accepted_here);
            if (options.spill_directory)
                accepted_here.save(*options.spill_directory / ("level-" + std::to_string(edges) + ".g6"));
            if (options.on_level)
                options.on_level(edges, accepted_here, report);

            if (nodes.empty())
                continue;

            Level next;
            std::mutex next_mutex;
            parallel_for(nodes.size(), options.workers, [&] (std::size_t i) {
                    auto & parent = *nodes[i];
                    bool parent_ok = parent.accepted && parent.reached_from_accepted;
                    for (auto [u, v] : edge_list(parent.graph)) {
                        auto child = parent.graph.without_edge(u, v);
                        auto key = canonical_form(child).bytes;
                        int child_budget_if_rejected = parent_ok ? options.slack : parent.budget - 1;

                        auto update = [&] (ClosureNode & node) {
                            node.reached_from_accepted = node.reached_from_accepted || parent_ok;
                            node.budget = std::max(node.budget, node.accepted ? options.slack : child_budget_if_rejected);
                            node.depth = std::min(node.depth, parent.depth + 1);
                        };

                        {
                            std::scoped_lock lock{next_mutex};
                            auto it = next.find(key);
                            if (it != next.end()) {
                                update(it->second);
                                continue;
                            }
                        }

                        bool ok = passes(child);
                        std::scoped_lock lock{next_mutex};
                        auto [it, inserted] = next.try_emplace(key);
                        if (inserted) {
                            it->second.graph = parse_graph6(key);
                            it->second.accepted = ok;
                            it->second.budget = ok ? options.slack : child_budget_if_rejected;
                            it->second.depth = parent.depth + 1;
                            it->second.reached_from_accepted = parent_ok;
                        }
                        else
                            update(it->second);
                    }
                });

            auto & target = levels[edges - 1];
            for (auto & [key, node] : next) {
                auto [it, inserted] = target.try_emplace(key, node);
                if (! inserted) {
                    it->second.reached_from_accepted = it->second.reached_from_accepted || node.reached_from_accepted;
                    it->second.budget = std::max(it->second.budget, node.budget);
                    it->second.depth = std::min(it->second.depth, node.depth);
                }
            }
        }
        return report;
    }
}
