#include <folkman/sat.hh>
#include <folkman/errors.hh>

#include <algorithm>
#include <cmath>
#include <sstream>

using std::optional;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace folkman
{
    auto to_dimacs(const CnfFormula & f) -> string
    {
        std::ostringstream out;
        out << "p cnf " << f.variable_count << " " << f.clauses.size() << "\n";
        for (auto & clause : f.clauses) {
            for (int lit : clause)
                out << lit << " ";
            out << "0\n";
        }
        return out.str();
    }

    auto parse_dimacs(string_view text) -> CnfFormula
    {
        std::istringstream in{string(text)};
        CnfFormula f;
        long declared_clauses = -1;
        string line;
        vector<int> current;
        while (std::getline(in, line)) {
            std::istringstream words{line};
            string first;
            if (! (words >> first) || first[0] == 'c' || first[0] == '%')
                continue;
            if (first == "p") {
                string format;
                if (! (words >> format >> f.variable_count >> declared_clauses) || format != "cnf")
                    throw SolverError("malformed DIMACS problem line: " + line);
                continue;
            }
            if (declared_clauses < 0)
                throw SolverError("DIMACS clause before problem line");
            std::istringstream lits{line};
            long lit;
            while (lits >> lit) {
                if (lit == 0) {
                    f.clauses.push_back(current);
                    current.clear();
                }
                else {
                    if (std::abs(lit) > f.variable_count)
                        throw SolverError("DIMACS literal " + std::to_string(lit) + " exceeds variable count");
                    current.push_back(int(lit));
                }
            }
            if (! lits.eof())
                throw SolverError("non-numeric token in DIMACS clause: " + line);
        }
        if (! current.empty())
            throw SolverError("unterminated DIMACS clause");
        if (declared_clauses < 0)
            throw SolverError("missing DIMACS problem line");
        if (long(f.clauses.size()) != declared_clauses)
            throw SolverError("DIMACS header declares " + std::to_string(declared_clauses) + " clauses, found "
                    + std::to_string(f.clauses.size()));
        return f;
    }

    namespace
    {
        using Lit = int;

        constexpr signed char value_false = 0, value_true = 1, value_undef = 2;

        auto lit_of(int dimacs) -> Lit
        {
            return dimacs > 0 ? 2 * (dimacs - 1) : 2 * (-dimacs - 1) + 1;
        }

        auto var_of(Lit l) -> int { return l >> 1; }
        auto negate(Lit l) -> Lit { return l ^ 1; }
        auto is_negative(Lit l) -> bool { return l & 1; }

        struct Clause
        {
            vector<Lit> lits;
            bool learnt = false;
            bool deleted = false;
            double activity = 0.0;
        };

        struct Watch
        {
            int clause;
            Lit blocker;
        };

        auto luby(double y, int x) -> double
        {
            int size = 1, seq = 0;
            while (size < x + 1) {
                ++seq;
                size = 2 * size + 1;
            }
            while (size - 1 != x) {
                size = (size - 1) >> 1;
                --seq;
                x = x % size;
            }
            return std::pow(y, seq);
        }
    }

    struct Solver::Imp
    {
        int n;
        vector<Clause> clauses;
        vector<vector<Watch>> watches;
        vector<signed char> assigns;
        vector<int> level;
        vector<int> reason;
        vector<char> polarity;
        vector<double> activity;
        vector<Lit> trail;
        vector<int> trail_limits;
        int propagated = 0;
        bool inconsistent = false;

        double var_increment = 1.0, clause_increment = 1.0;
        static constexpr double var_decay = 0.95, clause_decay = 0.999;

        vector<int> heap, heap_index;
        vector<char> seen;
        vector<int> to_clear;
        long learnt_count = 0;
        double max_learnts = 0;

        SolverStatistics stats;

        explicit Imp(int variables) :
            n(variables),
            watches(2 * std::size_t(variables)),
            assigns(variables, value_undef),
            level(variables, 0),
            reason(variables, -1),
            polarity(variables, 1),
            activity(variables, 0.0),
            heap_index(variables, -1),
            seen(variables, 0)
        {
            for (int v = 0 ; v < n ; ++v)
                heap_insert(v);
        }

        auto value(Lit l) const -> signed char
        {
            signed char a = assigns[var_of(l)];
            return a == value_undef ? value_undef : static_cast<signed char>(a ^ (is_negative(l) ? 1 : 0));
        }

        auto decision_level() const -> int { return int(trail_limits.size()); }

        // max-heap on activity
        auto heap_less(int a, int b) const -> bool { return activity[a] > activity[b]; }

        auto heap_up(int i) -> void
        {
            int v = heap[i];
            while (i > 0) {
                int parent = (i - 1) >> 1;
                if (! heap_less(v, heap[parent]))
                    break;
                heap[i] = heap[parent];
                heap_index[heap[i]] = i;
                i = parent;
            }
            heap[i] = v;
            heap_index[v] = i;
        }

        auto heap_down(int i) -> void
        {
            int v = heap[i];
            int size = int(heap.size());
            while (true) {
                int child = 2 * i + 1;
                if (child >= size)
                    break;
                if (child + 1 < size && heap_less(heap[child + 1], heap[child]))
                    ++child;
                if (! heap_less(heap[child], v))
                    break;
                heap[i] = heap[child];
                heap_index[heap[i]] = i;
                i = child;
            }
            heap[i] = v;
            heap_index[v] = i;
        }

        auto heap_insert(int v) -> void
        {
            if (heap_index[v] >= 0)
                return;
            heap.push_back(v);
            heap_index[v] = int(heap.size()) - 1;
            heap_up(heap_index[v]);
        }

        auto heap_pop() -> int
        {
            int top = heap[0];
            heap[0] = heap.back();
            heap_index[heap[0]] = 0;
            heap.pop_back();
            heap_index[top] = -1;
            if (! heap.empty())
                heap_down(0);
            return top;
        }

        auto bump_variable(int v) -> void
        {
            if ((activity[v] += var_increment) > 1e100) {
                for (auto & a : activity)
                    a *= 1e-100;
                var_increment *= 1e-100;
            }
            if (heap_index[v] >= 0)
                heap_up(heap_index[v]);
        }

        auto bump_clause(Clause & c) -> void
        {
            if ((c.activity += clause_increment) > 1e20) {
                for (auto & other : clauses)
                    if (other.learnt)
                        other.activity *= 1e-20;
                clause_increment *= 1e-20;
            }
        }

        auto enqueue(Lit l, int from) -> void
        {
            int v = var_of(l);
            assigns[v] = is_negative(l) ? value_false : value_true;
            level[v] = decision_level();
            reason[v] = from;
            trail.push_back(l);
        }

        auto attach(int ci) -> void
        {
            auto & c = clauses[ci];
            watches[negate(c.lits[0])].push_back({ci, c.lits[1]});
            watches[negate(c.lits[1])].push_back({ci, c.lits[0]});
        }

        auto add_clause(vector<Lit> lits) -> void
        {
            if (inconsistent)
                return;
            std::sort(lits.begin(), lits.end());
            lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
            vector<Lit> kept;
            for (std::size_t i = 0 ; i < lits.size() ; ++i) {
                if (i + 1 < lits.size() && lits[i + 1] == negate(lits[i]))
                    return;
                auto val = value(lits[i]);
                if (val == value_true)
                    return;
                if (val == value_undef)
                    kept.push_back(lits[i]);
            }
            if (kept.empty()) {
                inconsistent = true;
                return;
            }
            if (kept.size() == 1) {
                enqueue(kept[0], -1);
                if (propagate() >= 0)
                    inconsistent = true;
                return;
            }
            clauses.push_back(Clause{std::move(kept)});
            attach(int(clauses.size()) - 1);
        }

        // Returns the index of a conflicting clause, or -1.
        auto propagate() -> int
        {
            int conflict = -1;
            while (propagated < int(trail.size())) {
                Lit p = trail[propagated++];
                ++stats.propagations;
                auto & ws = watches[p];
                Lit false_lit = negate(p);
                std::size_t i = 0, j = 0;
                while (i < ws.size()) {
                    Watch w = ws[i];
                    if (value(w.blocker) == value_true) {
                        ws[j++] = ws[i++];
                        continue;
                    }
                    auto & c = clauses[w.clause];
                    if (c.deleted) {
                        ++i;
                        continue;
                    }
                    auto & lits = c.lits;
                    if (lits[0] == false_lit)
                        std::swap(lits[0], lits[1]);
                    ++i;
                    Lit first = lits[0];
                    if (first != w.blocker && value(first) == value_true) {
                        ws[j++] = {w.clause, first};
                        continue;
                    }
                    bool moved = false;
                    for (std::size_t k = 2 ; k < lits.size() ; ++k)
                        if (value(lits[k]) != value_false) {
                            std::swap(lits[1], lits[k]);
                            watches[negate(lits[1])].push_back({w.clause, first});
                            moved = true;
                            break;
                        }
                    if (moved)
                        continue;
                    ws[j++] = {w.clause, first};
                    if (value(first) == value_false) {
                        conflict = w.clause;
                        propagated = int(trail.size());
                        while (i < ws.size())
                            ws[j++] = ws[i++];
                    }
                    else
                        enqueue(first, w.clause);
                }
                ws.resize(j);
                if (conflict >= 0)
                    break;
            }
            return conflict;
        }

        auto analyse(int conflict, vector<Lit> & learnt, int & backtrack_level) -> void
        {
            learnt.clear();
            learnt.push_back(-1);
            int pending = 0;
            Lit p = -1;
            int index = int(trail.size()) - 1;
            int ci = conflict;
            do {
                auto & c = clauses[ci];
                if (c.learnt)
                    bump_clause(c);
                for (Lit q : c.lits) {
                    if (q == p)
                        continue;
                    int v = var_of(q);
                    if (! seen[v] && level[v] > 0) {
                        seen[v] = 1;
                        bump_variable(v);
                        if (level[v] >= decision_level())
                            ++pending;
                        else
                            learnt.push_back(q);
                    }
                }
                while (! seen[var_of(trail[index])])
                    --index;
                p = trail[index--];
                ci = reason[var_of(p)];
                seen[var_of(p)] = 0;
                --pending;
            } while (pending > 0);
            learnt[0] = negate(p);

            // local minimisation: drop literals implied by others in the clause
            to_clear.clear();
            for (std::size_t i = 1 ; i < learnt.size() ; ++i)
                to_clear.push_back(var_of(learnt[i]));
            std::size_t keep = 1;
            for (std::size_t i = 1 ; i < learnt.size() ; ++i) {
                int r = reason[var_of(learnt[i])];
                bool redundant = r >= 0;
                if (redundant)
                    for (Lit q : clauses[r].lits)
                        if (var_of(q) != var_of(learnt[i]) && ! seen[var_of(q)] && level[var_of(q)] > 0) {
                            redundant = false;
                            break;
                        }
                if (! redundant)
                    learnt[keep++] = learnt[i];
            }
            for (int v : to_clear)
                seen[v] = 0;
            learnt.resize(keep);

            backtrack_level = 0;
            if (learnt.size() > 1) {
                std::size_t max_i = 1;
                for (std::size_t i = 2 ; i < learnt.size() ; ++i)
                    if (level[var_of(learnt[i])] > level[var_of(learnt[max_i])])
                        max_i = i;
                std::swap(learnt[1], learnt[max_i]);
                backtrack_level = level[var_of(learnt[1])];
            }
        }

        auto cancel_until(int target) -> void
        {
            if (decision_level() <= target)
                return;
            for (int i = int(trail.size()) - 1 ; i >= trail_limits[target] ; --i) {
                int v = var_of(trail[i]);
                assigns[v] = value_undef;
                reason[v] = -1;
                polarity[v] = is_negative(trail[i]) ? 1 : 0;
                heap_insert(v);
            }
            trail.resize(trail_limits[target]);
            trail_limits.resize(target);
            propagated = int(trail.size());
        }

        auto locked(int ci) const -> bool
        {
            auto & c = clauses[ci];
            int v = var_of(c.lits[0]);
            return reason[v] == ci && value(c.lits[0]) == value_true;
        }

        auto reduce_learnts() -> void
        {
            vector<int> candidates;
            for (int ci = 0 ; ci < int(clauses.size()) ; ++ci)
                if (clauses[ci].learnt && ! clauses[ci].deleted && clauses[ci].lits.size() > 2 && ! locked(ci))
                    candidates.push_back(ci);
            std::sort(candidates.begin(), candidates.end(),
                    [&] (int a, int b) { return clauses[a].activity < clauses[b].activity; });
            for (std::size_t i = 0 ; i < candidates.size() / 2 ; ++i) {
                clauses[candidates[i]].deleted = true;
                clauses[candidates[i]].lits.clear();
                clauses[candidates[i]].lits.shrink_to_fit();
                --learnt_count;
            }
            for (auto & ws : watches)
                std::erase_if(ws, [&] (const Watch & w) { return clauses[w.clause].deleted; });
        }

        auto pick_branch() -> Lit
        {
            while (! heap.empty()) {
                int v = heap_pop();
                if (assigns[v] == value_undef)
                    return 2 * v + polarity[v];
            }
            return -1;
        }

        // true = sat, false = unsat, nullopt = budget exhausted
        auto search(long conflict_budget) -> optional<bool>
        {
            vector<Lit> learnt;
            long conflicts_here = 0;
            while (true) {
                int conflict = propagate();
                if (conflict >= 0) {
                    ++stats.conflicts;
                    ++conflicts_here;
                    if (decision_level() == 0)
                        return false;
                    int backtrack_level;
                    analyse(conflict, learnt, backtrack_level);
                    cancel_until(backtrack_level);
                    if (learnt.size() == 1)
                        enqueue(learnt[0], -1);
                    else {
                        clauses.push_back(Clause{learnt, true});
                        int ci = int(clauses.size()) - 1;
                        attach(ci);
                        bump_clause(clauses[ci]);
                        ++learnt_count;
                        enqueue(learnt[0], ci);
                    }
                    var_increment /= var_decay;
                    clause_increment /= clause_decay;
                }
                else {
                    if (conflicts_here >= conflict_budget) {
                        cancel_until(0);
                        return std::nullopt;
                    }
                    if (learnt_count - long(trail.size()) >= max_learnts)
                        reduce_learnts();
                    Lit next = pick_branch();
                    if (next < 0)
                        return true;
                    ++stats.decisions;
                    trail_limits.push_back(int(trail.size()));
                    enqueue(next, -1);
                }
            }
        }

        auto solve() -> bool
        {
            if (inconsistent)
                return false;
            if (propagate() >= 0) {
                inconsistent = true;
                return false;
            }
            max_learnts = std::max(1000.0, double(clauses.size()) / 3.0);
            for (int restart = 0 ; ; ++restart) {
                auto outcome = search(long(luby(2.0, restart) * 100));
                if (outcome) {
                    if (! *outcome)
                        inconsistent = true;
                    return *outcome;
                }
                ++stats.restarts;
                max_learnts *= 1.1;
            }
        }
    };

    Solver::Solver(int variable_count) :
        _imp(std::make_unique<Imp>(variable_count))
    {
    }

    Solver::~Solver() = default;

    auto Solver::add_clause(span<const int> literals) -> void
    {
        vector<Lit> lits;
        lits.reserve(literals.size());
        for (int d : literals) {
            if (d == 0 || std::abs(d) > _imp->n)
                throw SolverError("literal " + std::to_string(d) + " out of range");
            lits.push_back(lit_of(d));
        }
        _imp->add_clause(std::move(lits));
    }

    auto Solver::solve() -> bool
    {
        return _imp->solve();
    }

    auto Solver::value(int variable) const -> bool
    {
        return _imp->assigns[variable - 1] == value_true;
    }

    auto Solver::statistics() const -> SolverStatistics
    {
        return _imp->stats;
    }

    auto solve(const CnfFormula & f) -> optional<vector<bool>>
    {
        Solver solver{f.variable_count};
        for (auto & clause : f.clauses)
            solver.add_clause(clause);
        if (! solver.solve())
            return std::nullopt;
        vector<bool> model(f.variable_count + 1, false);
        for (int v = 1 ; v <= f.variable_count ; ++v)
            model[v] = solver.value(v);
        return model;
    }
}
