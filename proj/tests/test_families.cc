#include <doctest.h>

#include "support.hh"

#include <folkman/canon.hh>
#include <folkman/errors.hh>
#include <folkman/families.hh>
#include <folkman/invariants.hh>

using namespace folkman;
using namespace folkman::testing;

TEST_CASE("variant names")
{
    CHECK(to_string(Variant::plus_k3) == "plusk3");
    CHECK(parse_variant("+K3") == Variant::plus_k3);
    CHECK(parse_variant("max") == Variant::max);
    CHECK(parse_variant("plain") == Variant::plain);
    CHECK_THROWS_AS(parse_variant("maximal"), PreconditionViolated);
}

TEST_CASE("family parameters")
{
    CHECK(describe({ 12, 2, 4, false, Variant::max }) == "L_max(12;2;<=4)");
    CHECK(describe({ 14, 1, 4, true, Variant::plain }) == "L(14;1;4)");
    CHECK_NOTHROW(validate({ 8, 3, 4, false, Variant::plus_k3 }));
    CHECK_THROWS_AS(validate({ 0, 1, 0, false, Variant::plain }), PreconditionViolated);
    CHECK_THROWS_AS(validate({ 5, -1, 2, false, Variant::plain }), PreconditionViolated);
    CHECK_THROWS_AS(validate({ 5, 1, 6, false, Variant::plain }), PreconditionViolated);
}

TEST_CASE("classification flags")
{
    std::mt19937 rng{51};
    for (int i = 0 ; i < 150 ; ++i) {
        auto g = random_graph(rng, 8, 0.6);
        auto c = classify(g, 3);
        CHECK(c.omega == clique_number(g));
        CHECK(c.alpha == independence_number(g));
        CHECK(c.plus_k3 == is_plus_k3(g));
        CHECK(c.maximal == is_maximal_k4_free(g));
        if (c.maximal)
            CHECK(c.plus_k3);
        CHECK(c.member == member_L(g, 3));
    }

    // the clique gate looks at C5, not at the join; K3 + C5 is K8 - C5, which arrows
    auto c5 = classify(cycle_graph(5), 3);
    CHECK(c5.omega == 2);
    CHECK(c5.member);
    ArrowOptions backtrack;
    backtrack.engine = ArrowEngine::backtrack;
    CHECK(arrows_edge(join_complete(3, cycle_graph(5)), backtrack).arrows);
}

TEST_CASE("rejection order")
{
    FamilyParams params{ 6, 3, 2, false, Variant::plain };
    CHECK(family_rejection(complete_graph(5), params) == Rejection::order);
    CHECK(family_rejection(complete_graph(6), params) == Rejection::omega);
    CHECK(family_rejection(Graph(6), params) == Rejection::alpha);

    FamilyParams exact{ 5, 3, 3, true, Variant::plain };
    CHECK(family_rejection(cycle_graph(5), exact) == Rejection::alpha);

    FamilyParams plus{ 6, 3, 3, false, Variant::plus_k3 };
    CHECK(family_rejection(cycle_graph(6), plus) == Rejection::variant);

    // two disjoint triangles: chi = 3 < 6 - 1, and K1 + G is two K4s sharing a vertex
    FamilyParams chi{ 6, 1, 2, false, Variant::plain };
    auto two_triangles = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(family_rejection(two_triangles, chi) == Rejection::chi);
    FilterOptions no_chi;
    no_chi.chi_filter = false;
    CHECK(family_rejection(two_triangles, chi, no_chi) == Rejection::arrowing);

    CHECK(family_rejection(complete_graph(3), { 3, 3, 1, false, Variant::max }) == Rejection::none);
    CHECK(to_string(Rejection::arrowing) == "arrowing");
}

TEST_CASE("filtering with and without the chromatic filter gives the same members")
{
    std::vector<Graph> graphs;
    generate_all_graphs(7, {}, [&] (const Graph & g) { graphs.push_back(g); });
    FamilyParams params{ 7, 3, 7, false, Variant::plain };
    GraphStore with, without;
    FilterOptions off;
    off.chi_filter = false;
    auto t1 = filter_family(graphs, params, with);
    auto t2 = filter_family(graphs, params, without, off);
    CHECK(with.serialise() == without.serialise());
    CHECK(t1.examined == 1044);
    CHECK(t1.accepted == long(with.size()));
    CHECK(t1.accepted == t2.accepted);
    long rejected = 0;
    for (auto & [reason, count] : t1.rejected)
        rejected += count;
    CHECK(rejected + t1.accepted == t1.examined);

    // membership decided by the other engine without any prefilter
    ArrowOptions backtrack;
    backtrack.engine = ArrowEngine::backtrack;
    long expected = 0;
    for (auto & g : graphs)
        if (clique_number(g) < 4 && arrows_edge(join_complete(3, g), backtrack).arrows)
            ++expected;
    CHECK(expected == t1.accepted);
}

TEST_CASE("workers do not change the filtered store")
{
    std::vector<Graph> graphs;
    generate_all_graphs(7, {}, [&] (const Graph & g) { graphs.push_back(g); });
    FamilyParams params{ 7, 3, 4, false, Variant::plus_k3 };
    GraphStore one, four;
    FilterOptions f1, f4;
    f4.workers = 4;
    filter_family(graphs, params, one, f1);
    filter_family(graphs, params, four, f4);
    CHECK(one.serialise() == four.serialise());
}

TEST_CASE("R(3,4) = 9 leaves no members with alpha <= 2 at order 12")
{
    GenerationOptions options;
    options.max_clique = 3;
    options.max_independence = 2;
    long count = 0;
    generate_all_graphs(12, options, [&] (const Graph &) { ++count; });
    CHECK(count == 0);
}

TEST_CASE("reduction by an independent set")
{
    auto g = join_complete(1, cycle_graph(5));
    CHECK(reduce_by_independent_set(g, VertexSet{}, 2) == g);
    auto h = reduce_by_independent_set(g, VertexSet::of({1, 3}), 2);
    CHECK(h.order() == 4);
    CHECK_THROWS_AS(reduce_by_independent_set(g, VertexSet::of({0, 1}), 2), PreconditionViolated);
}

TEST_CASE("Ramsey constants")
{
    auto r = ramsey_constants();
    CHECK(r.r44 == 18);
    CHECK(r.r34 == 9);
    CHECK(r.r45 == 25);
    CHECK(ramsey_number(4, 3) == 9);
    CHECK(ramsey_number(3, 3) == 6);
    CHECK(! ramsey_number(5, 5));
}
