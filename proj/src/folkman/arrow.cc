#include <folkman/arrow.hh>
#include <folkman/errors.hh>
#include <folkman/invariants.hh>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using std::array;
using std::optional;
using std::span;
using std::string;
using std::vector;

namespace folkman
{
    namespace
    {
        struct TriangleSystem
        {
            int edge_count = 0;
            vector<array<int, 3>> triangles;
        };

        // Triangles in lexicographic vertex order, each as its three edge indices.
        auto triangles_of(const Graph & g) -> TriangleSystem
        {
            int n = g.order();
            array<array<int, max_order>, max_order> index{};
            int e = 0;
            for (auto [u, v] : edge_list(g)) {
                index[u][v] = e;
                index[v][u] = e;
                ++e;
            }
            TriangleSystem result{e, {}};
            for (int u = 0 ; u < n ; ++u)
                for (int v : VertexSet{g.row(u) & ~low_bits(u + 1)})
                    for (int w : VertexSet{g.row(u) & g.row(v) & ~low_bits(v + 1)})
                        result.triangles.push_back({index[u][v], index[u][w], index[v][w]});
            return result;
        }

        auto triangles_of(const WideGraph & g) -> TriangleSystem
        {
            int n = g.order();
            vector<int> index(std::size_t(n) * n, -1);
            int e = 0;
            for (auto [u, v] : edge_list(g)) {
                index[std::size_t(u) * n + v] = e;
                index[std::size_t(v) * n + u] = e;
                ++e;
            }
            TriangleSystem result{e, {}};
            for (int u = 0 ; u < n ; ++u) {
                auto ru = g.row(u);
                for (int v = u + 1 ; v < n ; ++v) {
                    if (! g.adjacent(u, v))
                        continue;
                    auto rv = g.row(v);
                    for (int word = (v + 1) >> 6 ; word < g.words() ; ++word) {
                        auto common = ru[word] & rv[word];
                        if (word == (v + 1) >> 6)
                            common &= ~low_bits((v + 1) & 63);
                        for (int w : VertexSet{common}) {
                            int x = word * 64 + w;
                            result.triangles.push_back({index[std::size_t(u) * n + v], index[std::size_t(u) * n + x],
                                    index[std::size_t(v) * n + x]});
                        }
                    }
                }
            }
            return result;
        }

        auto encode(const TriangleSystem & t) -> CnfFormula
        {
            CnfFormula f;
            f.variable_count = t.edge_count;
            f.clauses.reserve(2 * t.triangles.size());
            for (auto & [a, b, c] : t.triangles) {
                f.clauses.push_back({a + 1, b + 1, c + 1});
                f.clauses.push_back({-(a + 1), -(b + 1), -(c + 1)});
            }
            return f;
        }

        auto good_colouring(const TriangleSystem & t, span<const int> colours) -> bool
        {
            if (colours.size() != std::size_t(t.edge_count))
                throw WitnessError("colouring has " + std::to_string(colours.size()) + " entries for "
                        + std::to_string(t.edge_count) + " edges");
            for (int c : colours)
                if (c != 0 && c != 1)
                    throw WitnessError("edge colours must be 0 or 1");
            for (auto & [a, b, c] : t.triangles)
                if (colours[a] == colours[b] && colours[b] == colours[c])
                    return false;
            return true;
        }

        // Direct search over edge colourings with forced-colour propagation along triangles.
        class EdgeColouringSearch
        {
            private:
                const TriangleSystem & _t;
                vector<vector<int>> _triangles_at;
                vector<int> _colour;
                vector<int> _trail;
                vector<int> _order;

                auto assign(int e, int c) -> bool
                {
                    vector<int> queue{e};
                    _colour[e] = c;
                    _trail.push_back(e);
                    for (std::size_t q = 0 ; q < queue.size() ; ++q) {
                        int x = queue[q];
                        int cx = _colour[x];
                        for (int ti : _triangles_at[x]) {
                            auto & tri = _t.triangles[ti];
                            int f = -1, g = -1;
                            for (int y : tri)
                                if (y != x)
                                    (f < 0 ? f : g) = y;
                            int cf = _colour[f], cg = _colour[g];
                            if (cf == cx && cg == cx)
                                return false;
                            if (cf == cx && cg < 0) {
                                _colour[g] = 1 - cx;
                                _trail.push_back(g);
                                queue.push_back(g);
                            }
                            else if (cg == cx && cf < 0) {
                                _colour[f] = 1 - cx;
                                _trail.push_back(f);
                                queue.push_back(f);
                            }
                        }
                    }
                    return true;
                }

                auto undo(std::size_t mark) -> void
                {
                    while (_trail.size() > mark) {
                        _colour[_trail.back()] = -1;
                        _trail.pop_back();
                    }
                }

                auto search(std::size_t position) -> bool
                {
                    while (position < _order.size() && _colour[_order[position]] >= 0)
                        ++position;
                    if (position == _order.size())
                        return true;
                    int e = _order[position];
                    for (int c = 0 ; c < 2 ; ++c) {
                        auto mark = _trail.size();
                        if (assign(e, c) && search(position + 1))
                            return true;
                        undo(mark);
                    }
                    return false;
                }

            public:
                explicit EdgeColouringSearch(const TriangleSystem & t) :
                    _t(t),
                    _triangles_at(t.edge_count),
                    _colour(t.edge_count, -1)
                {
                    for (int i = 0 ; i < int(t.triangles.size()) ; ++i)
                        for (int e : t.triangles[i])
                            _triangles_at[e].push_back(i);
                    for (int e = 0 ; e < t.edge_count ; ++e)
                        _order.push_back(e);
                    std::stable_sort(_order.begin(), _order.end(), [&] (int a, int b) {
                            return _triangles_at[a].size() > _triangles_at[b].size(); });
                }

                auto run() -> optional<vector<int>>
                {
                    // swapping the two colours maps good colourings to good colourings
                    if (! _order.empty()) {
                        if (! assign(_order[0], 0))
                            return std::nullopt;
                    }
                    if (! search(0))
                        return std::nullopt;
                    return _colour;
                }
        };

        auto decide_backtrack(const TriangleSystem & t) -> ArrowVerdict
        {
            auto colouring = EdgeColouringSearch{t}.run();
            if (! colouring)
                return ArrowVerdict{true, std::nullopt};
            return ArrowVerdict{false, std::move(colouring)};
        }

        auto decide_sat(const TriangleSystem & t) -> ArrowVerdict
        {
            Solver solver{t.edge_count};
            for (auto & [a, b, c] : t.triangles) {
                array<int, 3> positive{a + 1, b + 1, c + 1};
                array<int, 3> negative{-(a + 1), -(b + 1), -(c + 1)};
                solver.add_clause(positive);
                solver.add_clause(negative);
            }
            if (t.edge_count > 0) {
                array<int, 1> unit{1};
                solver.add_clause(unit);
            }
            if (! solver.solve())
                return ArrowVerdict{true, std::nullopt};
            vector<int> colours(t.edge_count);
            for (int e = 0 ; e < t.edge_count ; ++e)
                colours[e] = solver.value(e + 1) ? 1 : 0;
            return ArrowVerdict{false, std::move(colours)};
        }

        auto decide_external(const TriangleSystem & t, const string & command) -> ArrowVerdict
        {
            auto model = solve_external(encode(t), command);
            if (! model)
                return ArrowVerdict{true, std::nullopt};
            vector<int> colours(t.edge_count);
            for (int e = 0 ; e < t.edge_count ; ++e)
                colours[e] = (*model)[e + 1] ? 1 : 0;
            return ArrowVerdict{false, std::move(colours)};
        }

        auto decide(const TriangleSystem & t, const ArrowOptions & options) -> ArrowVerdict
        {
            ArrowVerdict verdict;
            if (! options.external_solver.empty())
                verdict = decide_external(t, options.external_solver);
            else if (options.engine == ArrowEngine::backtrack)
                verdict = decide_backtrack(t);
            else
                verdict = decide_sat(t);

            if (verdict.witness && ! good_colouring(t, *verdict.witness))
                throw SolverError("solver returned a colouring with a monochromatic triangle");

            if (options.cross_check) {
                auto other = options.engine == ArrowEngine::backtrack && options.external_solver.empty()
                    ? decide_sat(t) : decide_backtrack(t);
                if (other.arrows != verdict.arrows)
                    throw SolverError("arrowing procedures disagree");
                if (other.witness && ! good_colouring(t, *other.witness))
                    throw SolverError("cross-check produced a colouring with a monochromatic triangle");
            }
            return verdict;
        }

        // Vertex colouring search: colour classes must avoid a targets[c]-clique.
        class VertexColouringSearch
        {
            private:
                const Graph & _g;
                span<const int> _targets;
                vector<VertexSet> _classes;
                vector<int> _colour;

                auto search(int v) -> bool
                {
                    if (v == _g.order())
                        return true;
                    for (int c = 0 ; c < int(_targets.size()) ; ++c) {
                        // empty classes with equal targets are interchangeable
                        bool redundant = false;
                        if (_classes[c].empty())
                            for (int d = 0 ; d < c ; ++d)
                                if (_classes[d].empty() && _targets[d] == _targets[c])
                                    redundant = true;
                        if (redundant)
                            continue;
                        if (has_clique(_g, _classes[c] & _g.neighbours(v), _targets[c] - 1))
                            continue;
                        _classes[c] = _classes[c].with(v);
                        _colour[v] = c;
                        if (search(v + 1))
                            return true;
                        _classes[c] = _classes[c].without(v);
                    }
                    return false;
                }

            public:
                VertexColouringSearch(const Graph & g, span<const int> targets) :
                    _g(g),
                    _targets(targets),
                    _classes(targets.size()),
                    _colour(g.order(), -1)
                {
                }

                auto run() -> optional<vector<int>>
                {
                    if (! search(0))
                        return std::nullopt;
                    return _colour;
                }
        };

        auto check_criticality_precondition(const Graph & g, int q, const ArrowOptions & options) -> void
        {
            if (clique_number(g) >= q)
                throw PreconditionViolated("graph has a clique of size " + std::to_string(q));
            if (! arrows_edge(g, options).arrows)
                throw PreconditionViolated("graph does not arrow (3,3)");
        }
    }

    auto encode_cnf_33(const Graph & g) -> CnfFormula
    {
        return encode(triangles_of(g));
    }

    auto encode_cnf_33(const WideGraph & g) -> CnfFormula
    {
        return encode(triangles_of(g));
    }

    auto export_dimacs(const CnfFormula & f) -> string
    {
        return to_dimacs(f);
    }

    auto arrows_edge(const Graph & g, const ArrowOptions & options) -> ArrowVerdict
    {
        return decide(triangles_of(g), options);
    }

    auto arrows_edge(const WideGraph & g, const ArrowOptions & options) -> ArrowVerdict
    {
        return decide(triangles_of(g), options);
    }

    auto arrows_edge(const AnyGraph & g, const ArrowOptions & options) -> ArrowVerdict
    {
        return std::visit([&] (const auto & h) { return arrows_edge(h, options); }, g);
    }

    auto arrows_vertex(const Graph & g, span<const int> targets) -> ArrowVerdict
    {
        if (targets.size() < 2 || targets.size() > 3)
            throw PreconditionViolated("vertex arrowing supports 2 or 3 colours");
        for (int a : targets)
            if (a < 2 || a > 4)
                throw PreconditionViolated("vertex arrowing targets must lie in 2..4");
        auto colouring = VertexColouringSearch{g, targets}.run();
        if (! colouring)
            return ArrowVerdict{true, std::nullopt};
        return ArrowVerdict{false, std::move(colouring)};
    }

    auto arrows(const Graph & g, const ArrowSpec & spec, const ArrowOptions & options) -> ArrowVerdict
    {
        if (spec.mode == ArrowMode::vertex)
            return arrows_vertex(g, spec.targets);
        if (spec.targets != vector<int>{3, 3})
            throw PreconditionViolated("edge arrowing supports only the targets (3,3)");
        return arrows_edge(g, options);
    }

    auto is_good_edge_colouring(const Graph & g, span<const int> colours) -> bool
    {
        return good_colouring(triangles_of(g), colours);
    }

    auto is_good_edge_colouring(const WideGraph & g, span<const int> colours) -> bool
    {
        return good_colouring(triangles_of(g), colours);
    }

    auto is_good_vertex_colouring(const Graph & g, span<const int> targets, span<const int> colours) -> bool
    {
        if (colours.size() != std::size_t(g.order()))
            throw WitnessError("vertex colouring length does not match the order");
        vector<VertexSet> classes(targets.size());
        for (int v = 0 ; v < g.order() ; ++v) {
            if (colours[v] < 0 || colours[v] >= int(targets.size()))
                throw WitnessError("vertex colour out of range");
            classes[colours[v]] = classes[colours[v]].with(v);
        }
        for (std::size_t c = 0 ; c < targets.size() ; ++c)
            if (has_clique(g, classes[c], targets[c]))
                return false;
        return true;
    }

    auto member_L(const Graph & g, int p, const ArrowOptions & options) -> bool
    {
        if (clique_number(g) > 3)
            return false;
        if (chromatic_number(g) < 6 - p)
            return false;
        if (g.order() + p > max_order)
            return arrows_edge(join_complete(p, widen(g)), options).arrows;
        return arrows_edge(join_complete(p, g), options).arrows;
    }

    auto is_vertex_critical(const Graph & g, int q, const ArrowOptions & options) -> bool
    {
        check_criticality_precondition(g, q, options);
        for (int v = 0 ; v < g.order() ; ++v)
            if (arrows_edge(delete_vertices(g, VertexSet::single(v)), options).arrows)
                return false;
        return true;
    }

    auto is_edge_critical(const Graph & g, int q, const ArrowOptions & options) -> bool
    {
        check_criticality_precondition(g, q, options);
        for (auto [u, v] : edge_list(g))
            if (arrows_edge(g.without_edge(u, v), options).arrows)
                return false;
        return true;
    }

    auto parse_solver_output(const string & text, int variable_count) -> optional<vector<bool>>
    {
        std::istringstream in{text};
        string line;
        optional<bool> satisfiable;
        vector<bool> model(std::size_t(variable_count) + 1, false);
        while (std::getline(in, line)) {
            std::istringstream words{line};
            string first;
            if (! (words >> first))
                continue;
            if (first == "s") {
                words >> first;
            }
            if (first == "SAT" || first == "SATISFIABLE") {
                satisfiable = true;
                continue;
            }
            if (first == "UNSAT" || first == "UNSATISFIABLE") {
                satisfiable = false;
                continue;
            }
            long lit;
            // some solvers print the model as bare literals
            if (first != "v") {
                char * end = nullptr;
                lit = std::strtol(first.c_str(), &end, 10);
                if (first.empty() || *end || ! satisfiable)
                    continue;
                words.clear();
                words.str(line);
            }
            while (words >> lit) {
                if (lit == 0)
                    break;
                if (std::labs(lit) > variable_count)
                    throw SolverError("model literal " + std::to_string(lit) + " out of range");
                model[std::labs(lit)] = lit > 0;
            }
        }
        if (! satisfiable)
            throw SolverError("solver output contains no SAT/UNSAT answer");
        if (! *satisfiable)
            return std::nullopt;
        return model;
    }

    auto solve_external(const CnfFormula & f, const string & command) -> optional<vector<bool>>
    {
        auto pattern = (std::filesystem::temp_directory_path() / "folkman-XXXXXX.cnf").string();
        int fd = mkstemps(pattern.data(), 4);
        if (fd < 0)
            throw SolverError("cannot create temporary DIMACS file");
        ::close(fd);
        {
            std::ofstream out{pattern};
            out << to_dimacs(f);
            if (! out)
                throw SolverError("cannot write temporary DIMACS file");
        }

        string output;
        auto full_command = command + " '" + pattern + "' 2>/dev/null";
        FILE * pipe = ::popen(full_command.c_str(), "r");
        if (! pipe) {
            std::filesystem::remove(pattern);
            throw SolverError("cannot run external solver: " + command);
        }
        array<char, 4096> buffer;
        std::size_t got;
        while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
            output.append(buffer.data(), got);
        ::pclose(pipe);
        std::filesystem::remove(pattern);
        return parse_solver_output(output, f.variable_count);
    }
}
