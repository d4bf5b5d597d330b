#ifndef FOLKMAN_GUARD_ARROW_HH
#define FOLKMAN_GUARD_ARROW_HH 1

#include <folkman/graph.hh>
#include <folkman/sat.hh>
#include <folkman/wide_graph.hh>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace folkman
{
    enum class ArrowMode
    {
        edge,
        vertex
    };

    struct ArrowSpec
    {
        ArrowMode mode = ArrowMode::edge;
        std::vector<int> targets = {3, 3};

        static auto edge_33() -> ArrowSpec { return ArrowSpec{ArrowMode::edge, {3, 3}}; }
        static auto vertex(std::vector<int> targets) -> ArrowSpec { return ArrowSpec{ArrowMode::vertex, std::move(targets)}; }
    };

    /**
     * Outcome of an arrowing decision. When the graph does not arrow, witness
     * holds a good colouring: one colour per edge in edge_list order for edge
     * mode, one colour per vertex for vertex mode.
     */
    struct ArrowVerdict
    {
        bool arrows = false;
        std::optional<std::vector<int>> witness;
    };

    enum class ArrowEngine
    {
        sat,
        backtrack
    };

    struct ArrowOptions
    {
        ArrowEngine engine = ArrowEngine::sat;

        // Run both built-in procedures and throw SolverError if they disagree.
        bool cross_check = false;

        // When set, the CNF is handed to this command instead of the built-in solver.
        std::string external_solver;
    };

    auto encode_cnf_33(const Graph & g) -> CnfFormula;
    auto encode_cnf_33(const WideGraph & g) -> CnfFormula;

    auto export_dimacs(const CnfFormula & f) -> std::string;

    /// Decides g -> (3,3) on edges. arrows is true exactly when the encoding is unsatisfiable.
    auto arrows_edge(const Graph & g, const ArrowOptions & options = {}) -> ArrowVerdict;
    auto arrows_edge(const WideGraph & g, const ArrowOptions & options = {}) -> ArrowVerdict;
    auto arrows_edge(const AnyGraph & g, const ArrowOptions & options = {}) -> ArrowVerdict;

    /// Vertex arrowing for 2 or 3 colours with targets in 2..4. Throws PreconditionViolated otherwise.
    auto arrows_vertex(const Graph & g, std::span<const int> targets) -> ArrowVerdict;

    auto arrows(const Graph & g, const ArrowSpec & spec, const ArrowOptions & options = {}) -> ArrowVerdict;

    /// True iff no colour class contains a triangle. Throws WitnessError on a length mismatch.
    auto is_good_edge_colouring(const Graph & g, std::span<const int> colours) -> bool;
    auto is_good_edge_colouring(const WideGraph & g, std::span<const int> colours) -> bool;

    /// True iff colour class i contains no targets[i]-clique.
    auto is_good_vertex_colouring(const Graph & g, std::span<const int> targets, std::span<const int> colours) -> bool;

    /// omega(g) <= 3 and K_p + g -> (3,3). chi(g) >= 6 - p is tested first as a shortcut.
    auto member_L(const Graph & g, int p, const ArrowOptions & options = {}) -> bool;

    /**
     * Criticality within H_e(3,3;q). Throws PreconditionViolated unless
     * omega(g) < q and g -> (3,3).
     */
    auto is_vertex_critical(const Graph & g, int q = 4, const ArrowOptions & options = {}) -> bool;
    auto is_edge_critical(const Graph & g, int q = 4, const ArrowOptions & options = {}) -> bool;

    /**
     * Runs "command file.cnf" and reads a SAT/UNSAT answer plus "v" model
     * lines. Returns the model (index 0 unused) or nullopt when unsatisfiable.
     */
    auto solve_external(const CnfFormula & f, const std::string & command) -> std::optional<std::vector<bool>>;

    /// Parses solver output text in the same protocol. Throws SolverError when no answer is found.
    auto parse_solver_output(const std::string & text, int variable_count) -> std::optional<std::vector<bool>>;
}

#endif
