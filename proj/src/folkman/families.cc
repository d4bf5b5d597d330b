#include <folkman/families.hh>
#include <folkman/errors.hh>
#include <folkman/invariants.hh>
#include <folkman/parallel.hh>

#include <mutex>

using std::optional;
using std::span;
using std::string;

namespace folkman
{
    auto to_string(Variant v) -> string
    {
        switch (v) {
            case Variant::plain: return "plain";
            case Variant::max: return "max";
            case Variant::plus_k3: return "plusk3";
        }
        return "plain";
    }

    auto parse_variant(const string & text) -> Variant
    {
        if (text == "plain")
            return Variant::plain;
        if (text == "max")
            return Variant::max;
        if (text == "plusk3" || text == "+K3" || text == "+k3")
            return Variant::plus_k3;
        throw PreconditionViolated("unknown family variant '" + text + "'");
    }

    auto validate(const FamilyParams & params) -> void
    {
        if (params.n < 1 || params.n > max_order)
            throw PreconditionViolated("family order must lie in 1.." + std::to_string(max_order));
        if (params.p < 0)
            throw PreconditionViolated("join size p must be non-negative");
        if (params.s < 0 || params.s > params.n)
            throw PreconditionViolated("independence bound s must lie in 0..n");
    }

    auto describe(const FamilyParams & params) -> string
    {
        string name = "L";
        if (params.variant == Variant::max)
            name += "_max";
        else if (params.variant == Variant::plus_k3)
            name += "_+K3";
        return name + "(" + std::to_string(params.n) + ";" + std::to_string(params.p) + ";"
            + (params.s_exact ? "" : "<=") + std::to_string(params.s) + ")";
    }

    auto classify(const Graph & g, int p, const ArrowOptions & options) -> Classification
    {
        Classification result;
        result.omega = clique_number(g);
        result.alpha = independence_number(g);
        result.plus_k3 = is_plus_k3(g);
        result.maximal = is_maximal_k4_free(g);
        result.member = member_L(g, p, options);
        return result;
    }

    auto to_string(Rejection r) -> string
    {
        switch (r) {
            case Rejection::none: return "accepted";
            case Rejection::order: return "order";
            case Rejection::omega: return "omega";
            case Rejection::alpha: return "alpha";
            case Rejection::variant: return "variant";
            case Rejection::chi: return "chi";
            case Rejection::arrowing: return "arrowing";
        }
        return "accepted";
    }

    auto family_rejection(const Graph & g, const FamilyParams & params, const FilterOptions & options) -> Rejection
    {
        if (g.order() != params.n)
            return Rejection::order;
        if (has_clique(g, g.vertices(), 4))
            return Rejection::omega;
        if (params.s_exact) {
            if (independence_number(g) != params.s)
                return Rejection::alpha;
        }
        else if (has_independent_set(g, g.vertices(), params.s + 1))
            return Rejection::alpha;
        if (params.variant == Variant::max && ! is_maximal_k4_free(g))
            return Rejection::variant;
        if (params.variant == Variant::plus_k3 && ! is_plus_k3(g))
            return Rejection::variant;
        if (options.chi_filter && 5 - params.p >= 1 && is_k_colourable(g, 5 - params.p))
            return Rejection::chi;
        if (! arrows_edge(join_complete(params.p, g), options.arrow).arrows)
            return Rejection::arrowing;
        return Rejection::none;
    }

    auto FilterTallies::merge(const FilterTallies & other) -> void
    {
        examined += other.examined;
        accepted += other.accepted;
        for (auto & [reason, count] : other.rejected)
            rejected[reason] += count;
    }

    auto filter_family(span<const Graph> src, const FamilyParams & params, GraphStore & out,
            const FilterOptions & options) -> FilterTallies
    {
        validate(params);
        FilterTallies tallies;
        for (auto r : {Rejection::order, Rejection::omega, Rejection::alpha, Rejection::variant, Rejection::chi, Rejection::arrowing})
            tallies.rejected[to_string(r)] = 0;

        std::mutex mutex;
        parallel_for(src.size(), options.workers, [&] (std::size_t i) {
                auto verdict = family_rejection(src[i], params, options);
                if (verdict == Rejection::none)
                    out.insert(src[i]);
                std::scoped_lock lock{mutex};
                ++tallies.examined;
                if (verdict == Rejection::none)
                    ++tallies.accepted;
                else
                    ++tallies.rejected[to_string(verdict)];
            });
        return tallies;
    }

    auto reduce_by_independent_set(const Graph & g, VertexSet a, int) -> Graph
    {
        if (! a.subset_of(g.vertices()))
            throw PreconditionViolated("vertex set is not contained in the graph");
        if (! is_independent(g, a))
            throw PreconditionViolated("vertex set is not independent");
        return delete_vertices(g, a);
    }

    auto ramsey_constants() -> RamseyConstants
    {
        return RamseyConstants{};
    }

    auto ramsey_number(int a, int b) -> optional<int>
    {
        if (a > b)
            std::swap(a, b);
        auto r = ramsey_constants();
        if (a == 3 && b == 3)
            return r.r33;
        if (a == 3 && b == 4)
            return r.r34;
        if (a == 4 && b == 4)
            return r.r44;
        if (a == 4 && b == 5)
            return r.r45;
        return std::nullopt;
    }
}
