#ifndef FOLKMAN_GUARD_FAMILIES_HH
#define FOLKMAN_GUARD_FAMILIES_HH 1

#include <folkman/arrow.hh>
#include <folkman/graph.hh>
#include <folkman/store.hh>

#include <map>
#include <optional>
#include <span>
#include <string>

namespace folkman
{
    enum class Variant
    {
        plain,
        max,
        plus_k3
    };

    auto to_string(Variant v) -> std::string;

    /// Accepts "plain", "max" and "plusk3" (also "+K3"). Throws PreconditionViolated otherwise.
    auto parse_variant(const std::string & text) -> Variant;

    /**
     * Names L(n;p;s), L_max(n;p;s) or L_+K3(n;p;s). With s_exact false the
     * independence constraint is alpha <= s, otherwise alpha = s.
     */
    struct FamilyParams
    {
        int n = 1;
        int p = 0;
        int s = 1;
        bool s_exact = false;
        Variant variant = Variant::plain;

        auto operator==(const FamilyParams &) const -> bool = default;
    };

    /// Throws PreconditionViolated unless n >= 1, p >= 0 and 0 <= s <= n.
    auto validate(const FamilyParams & params) -> void;

    auto describe(const FamilyParams & params) -> std::string;

    struct Classification
    {
        int omega = 0;
        int alpha = 0;
        bool member = false;
        bool maximal = false;
        bool plus_k3 = false;
    };

    /// Membership in L(n;p) plus the structural flags. maximal implies plus_k3.
    auto classify(const Graph & g, int p, const ArrowOptions & options = {}) -> Classification;

    enum class Rejection
    {
        none,
        order,
        omega,
        alpha,
        variant,
        chi,
        arrowing
    };

    auto to_string(Rejection r) -> std::string;

    struct FilterOptions
    {
        ArrowOptions arrow;

        /// chi >= 6 - p before arrowing. Only ever removes non-members.
        bool chi_filter = true;

        int workers = 1;
    };

    /// Applies the filters in order: order, omega, alpha, variant, chi, arrowing.
    auto family_rejection(const Graph & g, const FamilyParams & params, const FilterOptions & options = {}) -> Rejection;

    struct FilterTallies
    {
        long examined = 0;
        long accepted = 0;
        std::map<std::string, long> rejected;

        auto merge(const FilterTallies & other) -> void;
    };

    /// Adds every member of src to out. Parallel over src according to options.workers.
    auto filter_family(std::span<const Graph> src, const FamilyParams & params, GraphStore & out,
            const FilterOptions & options = {}) -> FilterTallies;

    /// g - a. Throws PreconditionViolated if a is not independent.
    auto reduce_by_independent_set(const Graph & g, VertexSet a, int p) -> Graph;

    struct RamseyConstants
    {
        int r33 = 6;
        int r34 = 9;
        int r44 = 18;
        int r45 = 25;
    };

    auto ramsey_constants() -> RamseyConstants;

    /// R(a,b) for the tabulated pairs (either order), or nullopt.
    auto ramsey_number(int a, int b) -> std::optional<int>;
}

#endif
