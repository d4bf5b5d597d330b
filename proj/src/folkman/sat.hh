#ifndef FOLKMAN_GUARD_SAT_HH
#define FOLKMAN_GUARD_SAT_HH 1

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace folkman
{
    /// CNF with DIMACS-style literals: variable v is +v, its negation -v, v in 1..variable_count.
    struct CnfFormula
    {
        int variable_count = 0;
        std::vector<std::vector<int>> clauses;

        auto operator==(const CnfFormula &) const -> bool = default;
    };

    /// "p cnf V C" header, one clause per line terminated by 0.
    auto to_dimacs(const CnfFormula & f) -> std::string;

    /// Accepts comment lines and clauses spanning lines. Throws SolverError when malformed.
    auto parse_dimacs(std::string_view text) -> CnfFormula;

    struct SolverStatistics
    {
        long decisions = 0;
        long propagations = 0;
        long conflicts = 0;
        long restarts = 0;
    };

    /**
     * Conflict-driven clause learning solver: two watched literals, first-UIP
     * learning with local minimisation, VSIDS branching with phase saving,
     * Luby restarts and activity-based learnt clause reduction.
     */
    class Solver
    {
        private:
            struct Imp;
            std::unique_ptr<Imp> _imp;

        public:
            explicit Solver(int variable_count);
            ~Solver();
            Solver(const Solver &) = delete;
            auto operator=(const Solver &) -> Solver & = delete;

            auto add_clause(std::span<const int> literals) -> void;

            /// True when satisfiable. The model is then available through value.
            auto solve() -> bool;

            auto value(int variable) const -> bool;
            auto statistics() const -> SolverStatistics;
    };

    /// Model indexed by variable (entry 0 unused), or nullopt when unsatisfiable.
    auto solve(const CnfFormula & f) -> std::optional<std::vector<bool>>;
}

#endif
