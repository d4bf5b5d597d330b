// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails. Usage: acceptance [work-dir]

#include "support.hh"

#include <folkman/arrow.hh>
#include <folkman/bh.hh>
#include <folkman/canon.hh>
#include <folkman/digest.hh>
#include <folkman/errors.hh>
#include <folkman/extend.hh>
#include <folkman/families.hh>
#include <folkman/invariants.hh>
#include <folkman/pipeline.hh>
#include <folkman/witness.hh>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace folkman;
using namespace folkman::testing;

namespace fs = std::filesystem;

namespace
{
    using Table = std::map<int, long>;

    fs::path work;
    int failed = 0;

    struct Check
    {
        bool ok = true;
        std::ostringstream detail;

        auto expect(bool condition, const std::string & what) -> void
        {
            if (! condition) {
                ok = false;
                detail << " [failed: " << what << "]";
            }
        }
    };

    auto seconds_since(std::chrono::steady_clock::time_point start) -> double
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    auto criterion(const std::string & id, const std::string & title, const std::function<auto (Check &) -> void> & body) -> void
    {
        Check c;
        auto start = std::chrono::steady_clock::now();
        try {
            body(c);
        }
        catch (const std::exception & e) {
            c.ok = false;
            c.detail << " [exception: " << e.what() << "]";
        }
        char time[32];
        std::snprintf(time, sizeof time, "%.1f s", seconds_since(start));
        std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << ";" << c.detail.str()
            << " (" << time << ")" << std::endl;
        if (! c.ok)
            ++failed;
    }

    auto stage(StageKind kind, FamilyParams params, const std::string & output, std::vector<std::string> inputs = {},
            int workers = 1, const std::function<void (StagePlan &)> & adjust = {}) -> Manifest
    {
        StagePlan plan;
        plan.kind = kind;
        plan.params = params;
        plan.output = work / output;
        for (auto & in : inputs)
            plan.inputs.push_back(work / in);
        plan.workers = workers;
        if (adjust)
            adjust(plan);
        return run_stage(plan).manifest;
    }

    auto graphs_of(const std::string & name) -> std::vector<Graph>
    {
        return GraphStore::load_canonical(work / name).graphs();
    }

    auto describe_table(const Table & t) -> std::string
    {
        std::ostringstream out;
        bool first = true;
        for (auto [value, count] : t) {
            out << (first ? "" : " ") << value << ":" << count;
            first = false;
        }
        return out.str();
    }

    // Histograms recomputed from adjacency rows and exhaustive alpha.
    auto oracle_histograms(const std::vector<Graph> & graphs) -> Histograms
    {
        Histograms h;
        for (auto & g : graphs) {
            int low = g.order(), high = 0;
            long twice = 0;
            for (int v = 0 ; v < g.order() ; ++v) {
                int d = std::popcount(g.row(v));
                low = std::min(low, d);
                high = std::max(high, d);
                twice += d;
            }
            ++h.edges[int(twice / 2)];
            ++h.min_degree[low];
            ++h.max_degree[high];
            ++h.alpha[brute_independence_number(g)];
        }
        return h;
    }

    auto check_tables(Check & c, const Histograms & got, const Histograms & want) -> void
    {
        c.expect(got.edges == want.edges, "|E| table " + describe_table(got.edges));
        c.expect(got.min_degree == want.min_degree, "delta table " + describe_table(got.min_degree));
        c.expect(got.max_degree == want.max_degree, "Delta table " + describe_table(got.max_degree));
        c.expect(got.alpha == want.alpha, "alpha table " + describe_table(got.alpha));
    }

    auto oracle_plus_k3(const Graph & g) -> bool
    {
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v = u + 1 ; v < g.order() ; ++v)
                if (! g.adjacent(u, v) && ! (g.row(u) & g.row(v)))
                    return false;
        return true;
    }

    auto without_run(Manifest m) -> Manifest
    {
        m.erase("run");
        return m;
    }

    // negative verdicts collected across criteria for the witness re-check
    long witnesses_checked = 0, witnesses_bad = 0;

    auto record_witness(const Graph & g, const ArrowVerdict & v) -> void
    {
        ++witnesses_checked;
        if (! v.witness || ! verify_witness(make_witness(AnyGraph{g}, *v.witness), to_graph6(g)))
            ++witnesses_bad;
    }

    std::vector<Graph> closure_153;
    std::vector<Graph> seeds_8;
}

auto main(int argc, char * argv[]) -> int
{
    work = argc > 1 ? fs::path{argv[1]} : fs::current_path() / "acceptance-work";
    fs::remove_all(work);
    fs::create_directories(work);

    criterion("1", "K6 arrows, K6 - e does not", [] (Check & c) {
            auto start = std::chrono::steady_clock::now();
            auto k6 = complete_graph(6);
            auto k6e = k6.without_edge(0, 1);
            auto a = arrows_edge(k6);
            auto b = arrows_edge(k6e);
            double took = seconds_since(start);
            c.expect(a.arrows, "K6 should arrow");
            c.expect(! b.arrows, "K6 - e should not arrow");
            c.expect(b.witness && verify_witness(make_witness(AnyGraph{k6e}, *b.witness), to_graph6(k6e)), "witness");
            record_witness(k6e, b);
            c.expect(took < 1.0, "under one second");
            c.detail << " witness verified, decided in " << took * 1000 << " ms";
        });

    criterion("2", "smallest order of a K6-free (3,3)-arrowing graph is 8", [] (Check & c) {
            long count7 = 0, arrowing7 = 0, count8 = 0, arrowing8 = 0;
            std::string example;
            generate_all_graphs(7, {}, [&] (const Graph & g) {
                    ++count7;
                    if (clique_number(g) >= 6)
                        return;
                    auto v = arrows_edge(g);
                    if (v.arrows)
                        ++arrowing7;
                    else
                        record_witness(g, v);
                });
            generate_all_graphs(8, {}, [&] (const Graph & g) {
                    ++count8;
                    if (clique_number(g) >= 6)
                        return;
                    auto v = arrows_edge(g);
                    if (v.arrows) {
                        ++arrowing8;
                        example = to_graph6(g);
                    }
                    else
                        record_witness(g, v);
                });
            c.expect(count7 == 1044, "1044 graphs of order 7");
            c.expect(count8 == 12346, "12346 graphs of order 8");
            c.expect(arrowing7 == 0, "no order-7 arrowing graph");
            c.expect(arrowing8 >= 1, "an order-8 arrowing graph");
            auto graham = join_complete(3, cycle_graph(5));
            c.expect(arrowing8 == 0 || arrows_edge(graham).arrows, "K8 - C5 arrows");
            c.detail << " order 7: " << count7 << " graphs, " << arrowing7 << " arrow; order 8: " << count8
                << " graphs, " << arrowing8 << " arrow with clique number < 6 (" << example << ")";
        });

    criterion("3", "|L_+K3(8;3;<=4)| = 1178 with its table", [] (Check & c) {
            auto m = stage(StageKind::filter, { 8, 3, 4, false, Variant::plus_k3 }, "l8.g6");
            c.expect(m["count"] == 1178, "1178 graphs");
            auto graphs = graphs_of("l8.g6");
            Histograms want;
            want.edges = { { 10, 1 }, { 11, 3 }, { 12, 28 }, { 13, 114 }, { 14, 258 }, { 15, 328 }, { 16, 253 },
                { 17, 127 }, { 18, 47 }, { 19, 14 }, { 20, 4 }, { 21, 1 } };
            want.min_degree = { { 1, 15 }, { 2, 552 }, { 3, 560 }, { 4, 49 }, { 5, 2 } };
            want.max_degree = { { 3, 2 }, { 4, 108 }, { 5, 610 }, { 6, 387 }, { 7, 71 } };
            want.alpha = { { 2, 3 }, { 3, 705 }, { 4, 470 } };
            auto h = compute_histograms(graphs);
            check_tables(c, h, want);
            check_tables(c, oracle_histograms(graphs), want);
            c.detail << " " << m["count"] << " graphs; alpha " << describe_table(h.alpha) << "; delta "
                << describe_table(h.min_degree);
        });

    criterion("4", "|L_max(12;2;<=4)| = 321 + 1341 + 815 = 2477", [] (Check & c) {
            auto a3 = stage(StageKind::filter, { 12, 2, 3, true, Variant::max }, "a3.g6");
            auto l11 = stage(StageKind::filter, { 11, 2, 4, false, Variant::max }, "l11.g6");
            auto ns = stage(StageKind::extend, { 12, 2, 4, false, Variant::max }, "ns.g6", { "l8.g6" });
            auto sp = stage(StageKind::sperner, { 12, 2, 4, false, Variant::max }, "sp.g6", { "l11.g6" });
            auto all = stage(StageKind::filter, { 12, 2, 4, false, Variant::max }, "l12.g6", { "a3.g6", "sp.g6", "ns.g6" });
            c.expect(a3["count"] == 321, "321 maximal graphs with alpha 3");
            c.expect(l11["count"] == 372, "372 graphs in L_max(11;2;<=4)");
            c.expect(sp["count"] == 1341, "1341 Sperner graphs");
            c.expect(ns["count"] == 815, "815 non-Sperner graphs");
            c.expect(all["count"] == 2477, "2477 in total");
            c.expect(all["counts"]["examined"] == 2477, "the three parts are disjoint");

            // recount the split: alpha 3, then Sperner and non-Sperner among alpha 4
            long alpha3 = 0, sperner4 = 0, other4 = 0;
            for (auto & g : graphs_of("l12.g6")) {
                c.expect(is_maximal_k4_free(g), "maximal");
                int alpha = brute_independence_number(g);
                if (alpha == 3)
                    ++alpha3;
                else if (is_sperner(g))
                    ++sperner4;
                else
                    ++other4;
            }
            c.expect(alpha3 == 321 && sperner4 == 1341 && other4 == 815, "recounted split");
            c.detail << " " << a3["count"] << " + " << sp["count"] << " (from " << l11["count"] << ") + " << ns["count"]
                << " = " << all["count"] << "; recount " << alpha3 << " + " << sperner4 << " + " << other4;
        });

    criterion("5", "L(10;2;<=4) -> 8 maximal -> 153 graphs of L(14;1) with their table", [] (Check & c) {
            auto base = stage(StageKind::filter, { 10, 2, 4, false, Variant::plain }, "l10.g6");
            c.expect(base["count"] == 547524, "547524 input graphs");

            // the +K3 members of the same family, counted independently
            auto inputs = graphs_of("l10.g6");
            GraphStore plus;
            for (auto & g : inputs)
                if (oracle_plus_k3(g))
                    plus.insert(g);
            plus.save(work / "l10plus.g6");
            inputs.clear();

            auto ext = stage(StageKind::extend, { 14, 1, 4, false, Variant::max }, "l14max.g6", { "l10.g6" });
            auto ext_plus = stage(StageKind::extend, { 14, 1, 4, false, Variant::max }, "l14max-plus.g6", { "l10plus.g6" });
            c.expect(ext["count"] == 8, "8 maximal graphs");
            c.expect(sha256_file(work / "l14max.g6") == sha256_file(work / "l14max-plus.g6"), "same 8 from the +K3 inputs");

            auto down = stage(StageKind::edges_down, { 14, 1, 4, false, Variant::plain }, "l14.g6", { "l14max.g6" });
            c.expect(down["count"] == 153, "153 graphs");

            closure_153 = graphs_of("l14.g6");
            seeds_8 = graphs_of("l14max.g6");
            long vertex_arrowing = 0, chi5 = 0, members = 0;
            int targets[] = { 3, 3 };
            for (auto & g : closure_153) {
                if (arrows_vertex(g, targets).arrows)
                    ++vertex_arrowing;
                if (chromatic_number(g) >= 5)
                    ++chi5;
                if (member_L(g, 1) && clique_number(g) < 4)
                    ++members;
            }
            c.expect(vertex_arrowing == 153, "every graph arrows (3,3) on vertices");
            c.expect(chi5 == 153, "chromatic number at least 5");
            c.expect(members == 153, "each is a member");

            Histograms want;
            want.edges = { { 42, 1 }, { 43, 2 }, { 44, 7 }, { 45, 20 }, { 46, 37 }, { 47, 45 }, { 48, 28 }, { 49, 11 }, { 50, 2 } };
            want.min_degree = { { 4, 91 }, { 5, 58 }, { 6, 4 } };
            want.max_degree = { { 7, 3 }, { 8, 90 }, { 10, 60 } };
            want.alpha = { { 4, 111 }, { 5, 39 }, { 6, 2 }, { 7, 1 } };
            auto h = compute_histograms(closure_153);
            check_tables(c, h, want);
            check_tables(c, oracle_histograms(closure_153), want);
            c.detail << " |L(10;2;<=4)| = " << base["count"] << " (+K3 members: " << plus.size() << ", giving the same "
                << ext_plus["count"] << "); extend candidates " << ext["counts"]["candidates"] << " -> " << ext["count"]
                << "; closure " << down["count"] << "; |E| " << describe_table(h.edges) << "; alpha " << describe_table(h.alpha);
        });

    criterion("6a", "implication suite, 200 instances", [] (Check & c) {
            std::mt19937 rng{4101};
            long holds = 0, premises = 0, embedded = 0, embedding_ok = 0;
            for (int i = 0 ; i < 200 ; ++i) {
                int n = std::uniform_int_distribution<int>{6, 12}(rng);
                Graph g;
                do
                    g = random_graph(rng, n, std::uniform_real_distribution<double>{0.35, 0.6}(rng));
                while (clique_number(g) != 3);
                VertexSet a;
                int want = std::uniform_int_distribution<int>{0, 3}(rng);
                for (int v : random_permutation(rng, n))
                    if (int(a.size()) < want && (g.neighbours(v) & a).empty())
                        a = a.with(v);
                if (lemma41_shadow_check(g, a))
                    ++holds;
                if (arrows_edge(g).arrows)
                    ++premises;

                // the embedding of g into B(g - a) behind the implication
                auto bh = build_bh(delete_vertices(g, a));
                if (! std::holds_alternative<Graph>(bh.graph))
                    continue;
                auto & b = std::get<Graph>(bh.graph);
                std::vector<int> image(n, -1);
                int next = 0;
                for (int v = 0 ; v < n ; ++v)
                    if (! a.contains(v))
                        image[v] = next++;
                std::set<int> used;
                bool distinct = true;
                for (int v : a) {
                    VertexSet mapped;
                    for (int w : g.neighbours(v))
                        mapped = mapped.with(image[w]);
                    int j = 0;
                    while (j < bh.added && ! mapped.subset_of(bh.neighbourhoods[j]))
                        ++j;
                    image[v] = bh.base_order + j;
                    distinct = used.insert(j).second && distinct;
                }
                if (! distinct)
                    continue;
                ++embedded;
                bool ok = true;
                for (auto [u, v] : edge_list(g))
                    ok = ok && b.adjacent(image[u], image[v]);
                if (ok)
                    ++embedding_ok;
            }
            c.expect(holds == 200, "no falsification");
            c.expect(embedding_ok == embedded, "g embeds in B(g - a)");
            c.detail << " " << holds << "/200 hold, " << premises << " with an arrowing premise (no K4-free graph of order <= 12 arrows); "
                << embedding_ok << "/" << embedded << " injective embeddings into B(g - a) verified";
        });

    criterion("6b", "SAT decisions agree with exhaustive colouring on 300 graphs with at most 20 edges", [] (Check & c) {
            std::mt19937 rng{4102};
            long agree = 0, positives = 0;
            for (int i = 0 ; i < 300 ; ++i) {
                int n = std::uniform_int_distribution<int>{6, 9}(rng);
                std::vector<Edge> pairs = edge_list(complete_graph(n));
                std::shuffle(pairs.begin(), pairs.end(), rng);
                std::vector<Edge> edges;
                if (i % 3 == 0) {
                    // a planted K6 plus a few edges
                    auto p = random_permutation(rng, n);
                    for (int x = 0 ; x < 6 ; ++x)
                        for (int y = x + 1 ; y < 6 ; ++y)
                            edges.emplace_back(std::min(p[x], p[y]), std::max(p[x], p[y]));
                    int extra = std::uniform_int_distribution<int>{0, 5}(rng);
                    for (auto e : pairs)
                        if (extra > 0 && std::find(edges.begin(), edges.end(), e) == edges.end()) {
                            edges.push_back(e);
                            --extra;
                        }
                }
                else {
                    int m = std::uniform_int_distribution<int>{0, std::min<int>(20, int(pairs.size()))}(rng);
                    edges.assign(pairs.begin(), pairs.begin() + m);
                }
                auto g = Graph::from_edges(n, edges);
                c.expect(g.edge_count() <= 20, "at most 20 edges");
                auto v = arrows_edge(g);
                bool brute = brute_arrows_edge(g);
                if (v.arrows == brute)
                    ++agree;
                if (brute)
                    ++positives;
                else
                    record_witness(g, v);
            }
            c.expect(agree == 300, "full agreement");
            c.detail << " " << agree << "/300 agree, " << positives << " arrowing";
        });

    criterion("6c", "every negative verdict carries a valid witness", [] (Check & c) {
            // criterion 5's closure boundary: one edge less than a member of L(14;1) often stops arrowing
            for (auto & g : closure_153)
                for (auto [u, v] : edge_list(g)) {
                    auto h = join_complete(1, g.without_edge(u, v));
                    auto verdict = arrows_edge(h);
                    if (! verdict.arrows)
                        record_witness(h, verdict);
                }
            c.expect(witnesses_checked > 0, "some negatives");
            c.expect(witnesses_bad == 0, std::to_string(witnesses_bad) + " bad witnesses");
            c.detail << " " << witnesses_checked - witnesses_bad << "/" << witnesses_checked << " witnesses verified";
        });

    criterion("6d", "canonical keys survive 1000 random relabellings", [] (Check & c) {
            std::mt19937 rng{4104};
            long same = 0;
            std::vector<Graph> pool = closure_153;
            for (int i = 0 ; i < 20 ; ++i)
                pool.push_back(random_graph(rng, std::uniform_int_distribution<int>{5, 40}(rng), 0.4));
            for (int i = 0 ; i < 1000 ; ++i) {
                auto & g = pool[std::size_t(i) % pool.size()];
                if (canonical_form(relabel(g, random_permutation(rng, g.order()))) == canonical_form(g))
                    ++same;
            }
            c.expect(same == 1000, "invariant keys");
            c.detail << " " << same << "/1000 relabellings give the same key";
        });

    criterion("6e", "stores are byte-identical for 1, 4 and 8 workers (criteria 3 and 5)", [] (Check & c) {
            auto digest = [] (const std::string & name) { return sha256_file(work / name); };
            auto m1 = read_manifest(work / "l8.g6");
            for (int w : { 4, 8 }) {
                auto tag = std::to_string(w);
                auto m = stage(StageKind::filter, { 8, 3, 4, false, Variant::plus_k3 }, "l8-w" + tag + ".g6", {}, w);
                c.expect(digest("l8-w" + tag + ".g6") == digest("l8.g6"), "criterion 3 store at " + tag + " workers");
                c.expect(without_run(m)["counts"] == without_run(m1)["counts"], "criterion 3 counts at " + tag + " workers");

                stage(StageKind::filter, { 10, 2, 4, false, Variant::plain }, "l10-w" + tag + ".g6", {}, w);
                stage(StageKind::extend, { 14, 1, 4, false, Variant::max }, "l14max-w" + tag + ".g6", { "l10-w" + tag + ".g6" }, w);
                auto d = stage(StageKind::edges_down, { 14, 1, 4, false, Variant::plain }, "l14-w" + tag + ".g6",
                        { "l14max-w" + tag + ".g6" }, w);
                c.expect(digest("l10-w" + tag + ".g6") == digest("l10.g6"), "L(10;2;<=4) at " + tag + " workers");
                c.expect(digest("l14max-w" + tag + ".g6") == digest("l14max.g6"), "extend output at " + tag + " workers");
                c.expect(digest("l14-w" + tag + ".g6") == digest("l14.g6"), "closure at " + tag + " workers");
                c.expect(d["counts"] == read_manifest(work / "l14.g6")["counts"], "closure counts at " + tag + " workers");
            }
            c.detail << " 4 stores x 3 worker counts";
        });

    criterion("6f", "pruned and unpruned closures agree on the 8 maximal graphs", [] (Check & c) {
            // +K3 and alpha prunes: pruned closure = arrowing-only closure filtered afterwards
            GraphStore pruned;
            ClosureOptions both;
            edge_removal_closure(seeds_8, 1, 4, pruned, both);
            GraphStore filtered;
            for (auto & g : closure_153)
                if (oracle_plus_k3(g) && brute_independence_number(g) <= 4)
                    filtered.insert(g);
            c.expect(pruned.serialise() == filtered.serialise(), "+K3 and alpha prunes");

            // arrowing prune: keep descending below rejected graphs and look for members
            ClosureOptions slack;
            slack.plus_k3 = false;
            slack.alpha_bound = false;
            slack.slack = 2;
            GraphStore wide;
            auto r = edge_removal_closure(seeds_8, 1, 4, wide, slack);
            c.expect(r.violations.empty(), "no member below a rejected graph");
            c.expect(wide.size() == 153, "153 again");
            c.detail << " pruned " << pruned.size() << " = filtered " << filtered.size() << "; 2 levels below rejections: "
                << r.visited << " visited, " << r.violations.size() << " violations";
        });

    criterion("7", "(16,1,4) extension of 1000 sampled members of L_+K3(12;2;<=4)", [] (Check & c) {
            auto pool_manifest = stage(StageKind::edges_down, { 12, 2, 4, false, Variant::plus_k3 }, "l12plus-d1.g6",
                    { "l12.g6" }, 1, [] (StagePlan & p) { p.max_depth = 1; });
            auto pool = graphs_of("l12plus-d1.g6");
            std::mt19937 rng{16014};
            std::vector<Graph> sample;
            std::sample(pool.begin(), pool.end(), std::back_inserter(sample), 1000, rng);
            GraphStore sampled;
            for (auto & g : sample) {
                sampled.insert(g);
                c.expect(is_plus_k3(g) && clique_number(g) <= 3 && independence_number(g) <= 4 && member_L(g, 2),
                        "sampled graph is a member");
            }
            c.expect(sampled.size() == 1000, "1000 distinct graphs");
            sampled.save(work / "sample.g6");

            auto m = stage(StageKind::extend, { 16, 1, 4, false, Variant::max }, "l16.g6", { "sample.g6" });
            long checked = 0;
            for (auto & g : graphs_of("l16.g6")) {
                c.expect(g.order() == 16, "order 16");
                c.expect(! is_sperner(g), "non-Sperner");
                c.expect(is_maximal_k4_free(g), "maximal K4-free");
                c.expect(independence_number(g) == 4, "alpha = 4");
                c.expect(chromatic_number(g) >= 5, "chromatic number >= 5");
                c.expect(member_L(g, 1), "member");
                ++checked;
            }
            c.expect(checked == m["count"].get<long>(), "count");
            c.detail << " pool " << pool_manifest["count"] << " after one removal level; " << m["counts"]["candidates"]
                << " candidates -> " << m["count"] << " graphs, each checked";
        });

    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string{"all criteria passed"}) << std::endl;
    return failed ? 1 : 0;
}
