#include <doctest.h>

#include "dpcolor/coloring.hpp"
#include "dpcolor/generator.hpp"
#include "dpcolor/oracle.hpp"
#include "test_support.hpp"

using namespace dpc;

TEST_CASE("hypothesis checks")
{
    SUBCASE("crossed cycle fails only the bidirection check")
    {
        HypothesisReport r = check_hypotheses(crossed_c4_instance(), CheckMode::Certified);
        CHECK(r.derangement_ok);
        CHECK(!r.twisted_bidirected_ok);
        CHECK(r.twisted_bidirected_violations == std::vector<EdgeId>{3});
        CHECK(r.list_sizes_ok);
        CHECK(r.certificate == StraightCertificate::NoOddCycle);
        CHECK(!r.certified());
    }
    SUBCASE("the repaired instance is fully certified")
    {
        CorrespondenceInstance inst = crossed_c4_repaired();
        HypothesisReport r = check_hypotheses(inst, CheckMode::Certified);
        CHECK(r.certified_polynomial());
        // bidirecting the crossed edge raises the out-degrees to (2,1,1,1)
        CHECK(inst.orientation->out_degree(0) == 2);
        CHECK(inst.orientation->out_degree(1) == 1);
        CHECK(inst.orientation->out_degree(2) == 1);
        CHECK(inst.orientation->out_degree(3) == 1);
    }
    SUBCASE("straight odd cycle is rejected with a witness")
    {
        CorrespondenceInstance inst = make_instance(
            {{1, 2}, {1, 2}, {1, 2}},
            {{0, 1, {}, true}, {1, 2, {}, true}, {2, 0, {}, true}});
        HypothesisReport r = check_hypotheses(inst, CheckMode::Certified);
        CHECK(r.derangement_ok);
        CHECK(r.twisted_bidirected_ok);
        CHECK(r.list_sizes_ok);
        CHECK(r.certificate == StraightCertificate::Unverified);
        REQUIRE(r.odd_cycle);
        CHECK(r.odd_cycle->arc_count() == 3);
        CHECK(!r.certified());
    }
    SUBCASE("exhaustive mode certifies a kernel-perfect straight part with odd cycles")
    {
        // fully bidirected triangle: contains directed odd cycles yet every
        // induced subdigraph has a kernel
        CorrespondenceInstance inst = make_instance(
            {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}},
            {{0, 1, {}, true, EdgeDir::Both}, {1, 2, {}, true, EdgeDir::Both},
                {2, 0, {}, true, EdgeDir::Both}});
        HypothesisReport certified_only = check_hypotheses(inst, CheckMode::Certified);
        CHECK(certified_only.certificate == StraightCertificate::Unverified);
        HypothesisReport exhaustive = check_hypotheses(inst, CheckMode::GeneralSmall);
        CHECK(exhaustive.certificate == StraightCertificate::KernelPerfectVerified);
        CHECK(exhaustive.certified());
        CHECK(!exhaustive.certified_polynomial());

        Coloring phi = dp_color(inst, CheckMode::GeneralSmall);
        CHECK(verify_coloring(inst, phi).empty());
    }
    SUBCASE("missing orientation is an input error")
    {
        CorrespondenceInstance inst = make_instance({{1}}, {}, false);
        inst.orientation.reset();
        CHECK_THROWS_AS(check_hypotheses(inst, CheckMode::Certified), InputError);
    }
    SUBCASE("exhaustive certification is size-guarded")
    {
        GenParams params;
        params.n = 9;
        params.seed = 3;
        CorrespondenceInstance inst = gen_certified_instance(params);
        SizeGuards guards;
        guards.kernel_perfect_max_vertices = 4;
        // the guard only fires when the exhaustive fallback actually runs
        CorrespondenceInstance odd = make_instance(
            {{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}},
            {{0, 1, {}, true}, {1, 2, {}, true}, {2, 0, {}, true}, {3, 4, {}, true}});
        CHECK_THROWS_AS(check_hypotheses(odd, CheckMode::GeneralSmall, guards),
            ResourceLimitError);
        CHECK(check_hypotheses(inst, CheckMode::GeneralSmall, guards).certified());
    }
}

TEST_CASE("constructive coloring")
{
    SUBCASE("all-straight even cycle with two colors")
    {
        CorrespondenceInstance inst = make_instance(
            {{1, 2}, {1, 2}, {1, 2}, {1, 2}},
            {{0, 1, {}, true}, {1, 2, {}, true}, {2, 3, {}, true}, {3, 0, {}, true}});
        REQUIRE(brute_force_color(inst)); // oracle: the instance is colorable
        Coloring phi = dp_color(inst, CheckMode::Certified);
        CHECK(verify_coloring(inst, phi).empty());
    }
    SUBCASE("repaired crossed cycle gets the expected coloring")
    {
        CorrespondenceInstance inst = crossed_c4_repaired();
        REQUIRE(count_colorings(inst) >= 1); // oracle over the 24 assignments
        std::vector<TraceRound> trace;
        Coloring phi = dp_color(inst, CheckMode::Certified, false, &trace);
        CHECK(verify_coloring(inst, phi).empty());
        // deterministic run: rounds color 1 on {v1,v3}, then 2 on v2, then 3 on v0
        Coloring expected{{0, 3}, {1, 1}, {2, 2}, {3, 1}};
        CHECK(phi == expected);
        REQUIRE(trace.size() == 3);
        CHECK(trace[0].color == 1);
        CHECK(trace[0].kernel == ids({1, 3}));
        REQUIRE(trace[0].removed.size() == 2);
        CHECK(trace[0].removed[0].first == 0);
        CHECK(trace[0].removed[0].second == std::vector<int>{1, 2});
        CHECK(trace[0].removed[1].first == 2);
        CHECK(trace[0].removed[1].second == std::vector<int>{1});
    }
    SUBCASE("single vertex takes its lowest color")
    {
        CorrespondenceInstance inst = make_instance({{7, 9}}, {});
        Coloring phi = dp_color(inst, CheckMode::Certified);
        CHECK(phi == Coloring{{0, 7}});
    }
    SUBCASE("uncertified instances are rejected with the report")
    {
        try {
            dp_color(crossed_c4_instance(), CheckMode::Certified);
            FAIL("expected HypothesisViolation");
        } catch (const HypothesisViolation& e) {
            REQUIRE(e.report());
            CHECK(!e.report()->twisted_bidirected_ok);
        }
    }
    SUBCASE("override surfaces the failure mid-run")
    {
        CHECK_THROWS_AS(dp_color(crossed_c4_instance(), CheckMode::Certified, true),
            HypothesisViolation);
    }
    SUBCASE("parallel edges restrict in unison")
    {
        // straight and twisted edges between the same endpoints
        CorrespondenceInstance inst = make_instance(
            {{1, 2, 3}, {1, 2, 3}},
            {{0, 1, {}, true, EdgeDir::Forward},
                {0, 1, {{1, 2}, {2, 3}, {3, 1}}, false, EdgeDir::Both}});
        HypothesisReport r = check_hypotheses(inst, CheckMode::Certified);
        REQUIRE(r.certified_polynomial());
        Coloring phi = dp_color(inst, CheckMode::Certified);
        CHECK(verify_coloring(inst, phi).empty());
    }
    SUBCASE("complete graph on four vertices from three-color lists")
    {
        // sides straight around a directed 4-cycle, diagonals bidirected
        // with cyclic derangement matchings: colorable from 3 colors even
        // though the graph needs 4 with identity matchings everywhere
        std::vector<std::pair<int, int>> cyc{{1, 2}, {2, 3}, {3, 1}};
        CorrespondenceInstance inst = make_instance(
            {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}},
            {
                {0, 1, {}, true, EdgeDir::Forward},
                {1, 2, {}, true, EdgeDir::Forward},
                {2, 3, {}, true, EdgeDir::Forward},
                {3, 0, {}, true, EdgeDir::Forward},
                {0, 2, cyc, false, EdgeDir::Both},
                {1, 3, cyc, false, EdgeDir::Both},
            });
        REQUIRE(check_hypotheses(inst, CheckMode::Certified).certified_polynomial());
        Coloring phi = dp_color(inst, CheckMode::Certified);
        CHECK(verify_coloring(inst, phi).empty());
        CHECK(brute_force_color(inst).has_value());

        // the identity counterpart is the classic non-colorable case
        CorrespondenceInstance identity_k4 = make_instance(
            {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}},
            {
                {0, 1, {}, true}, {1, 2, {}, true}, {2, 3, {}, true},
                {3, 0, {}, true}, {0, 2, {}, true}, {1, 3, {}, true},
            });
        CHECK(!brute_force_color(identity_k4));
    }
    SUBCASE("sound on generated certified instances")
    {
        for (std::uint64_t seed = 1; seed <= 150; ++seed) {
            GenParams params;
            params.n = 3 + static_cast<int>(seed % 8);
            params.twisted_edge_prob = seed % 3 == 0 ? 0.3 : 0.15;
            params.extra_colors = static_cast<int>(seed % 2);
            params.bipartite_straight = seed % 5 == 0;
            params.seed = seed;
            CorrespondenceInstance inst = gen_certified_instance(params);
            Coloring phi = dp_color(inst, CheckMode::Certified);
            CHECK(verify_coloring(inst, phi).empty());
        }
    }
    SUBCASE("agrees with the oracle on small instances")
    {
        for (std::uint64_t seed = 1; seed <= 60; ++seed) {
            GenParams params;
            params.n = 3 + static_cast<int>(seed % 6);
            params.seed = seed * 13;
            CorrespondenceInstance inst = gen_certified_instance(params);
            CHECK(brute_force_color(inst).has_value()); // existence is guaranteed
            Coloring phi = dp_color(inst, CheckMode::Certified);
            CHECK(verify_coloring(inst, phi).empty());
        }
    }
    SUBCASE("each round alone is a legal partial coloring")
    {
        // replay the trace: in every round, coloring the kernel with that
        // round's color must satisfy the matchings induced on the kernel
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            GenParams params;
            params.n = 7;
            params.twisted_edge_prob = 0.35;
            params.seed = seed * 101;
            CorrespondenceInstance inst = gen_certified_instance(params);
            std::vector<TraceRound> trace;
            dp_color(inst, CheckMode::Certified, false, &trace);
            CorrespondenceInstance current = inst;
            for (const TraceRound& round : trace) {
                CorrespondenceInstance on_kernel = current.restricted(
                    [&] {
                        std::vector<VertexId> others;
                        for (VertexId v : current.graph.vertices())
                            if (std::find(round.kernel.begin(), round.kernel.end(), v)
                                == round.kernel.end())
                                others.push_back(v);
                        return others;
                    }(),
                    {});
                Coloring partial;
                for (VertexId u : round.kernel)
                    partial[u] = round.color;
                CHECK(verify_coloring(on_kernel, partial).empty());

                std::vector<std::vector<int>> removed(current.graph.vertex_id_bound());
                for (const auto& [v, colors] : round.removed)
                    removed[static_cast<std::size_t>(v)] = colors;
                current = current.restricted(round.kernel, removed);
            }
            CHECK(current.graph.vertex_count() == 0);
        }
    }
    SUBCASE("rounds make progress")
    {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            GenParams params;
            params.n = 8;
            params.seed = seed * 7;
            CorrespondenceInstance inst = gen_certified_instance(params);
            std::size_t max_list = 0;
            for (VertexId v : inst.graph.vertices())
                max_list = std::max(max_list, inst.lists.at(v).size());
            std::vector<TraceRound> trace;
            dp_color(inst, CheckMode::Certified, false, &trace);
            CHECK(trace.size() <= inst.graph.vertex_count() * max_list);
            for (const TraceRound& round : trace)
                CHECK(!round.kernel.empty());
        }
    }
}

TEST_CASE("list-coloring special case on the six-cycle")
{
    // identity instances over the cyclic orientation, lists of size
    // out-degree + 1 = 2; a sample here, the exhaustive sweep lives in the
    // acceptance suite
    std::vector<std::vector<int>> pairs;
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            pairs.push_back({a, b});
    TestRng rng(99);
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<std::vector<int>> lists;
        for (int i = 0; i < 6; ++i)
            lists.push_back(pairs[static_cast<std::size_t>(rng.below(6))]);
        CorrespondenceInstance inst = make_instance(lists,
            {{0, 1, {}, true}, {1, 2, {}, true}, {2, 3, {}, true}, {3, 4, {}, true},
                {4, 5, {}, true}, {5, 0, {}, true}});
        Coloring phi = dp_color(inst, CheckMode::Certified);
        CHECK(verify_coloring(inst, phi).empty());
    }
}

TEST_CASE("coloring verification")
{
    SUBCASE("crossed pair is caught")
    {
        CorrespondenceInstance inst = crossed_c4_instance();
        // proper around the cycle, but (2,1) is a matched pair on the
        // crossed edge e3 = {v3, v0}
        Coloring phi{{0, 1}, {1, 2}, {2, 1}, {3, 2}};
        auto violations = verify_coloring(inst, phi);
        REQUIRE(violations.size() == 1);
        CHECK(violations[0].kind == "matched-pair");
        CHECK(violations[0].subject == "e3");
    }
    SUBCASE("colors outside the lists are caught")
    {
        CorrespondenceInstance inst = make_instance({{1, 2}}, {});
        auto violations = verify_coloring(inst, Coloring{{0, 5}});
        REQUIRE(violations.size() == 1);
        CHECK(violations[0].kind == "list-membership");
    }
    SUBCASE("valid coloring passes")
    {
        CorrespondenceInstance inst = make_instance(
            {{1, 2}, {1, 2}},
            {{0, 1, {}, true}});
        CHECK(verify_coloring(inst, Coloring{{0, 1}, {1, 2}}).empty());
    }
    SUBCASE("partial or bogus colorings are input errors")
    {
        CorrespondenceInstance inst = make_instance(
            {{1, 2}, {1, 2}},
            {{0, 1, {}, true}});
        CHECK_THROWS_AS(verify_coloring(inst, Coloring{{0, 1}}), InputError);
        CHECK_THROWS_AS(verify_coloring(inst, Coloring{{0, 1}, {1, 2}, {9, 1}}), InputError);
    }
}

TEST_CASE("joining an orientation with bidirected edges")
{
    SUBCASE("4-cycle plus both diagonals")
    {
        Biorientation sides = directed_cycle(4);
        Multigraph diagonals;
        for (int i = 0; i < 4; ++i)
            diagonals.add_vertex("v" + std::to_string(i));
        diagonals.add_edge("d0", 0, 2);
        diagonals.add_edge("d1", 1, 3);
        Biorientation joined = add_bidirected_edges(sides, diagonals);
        CHECK(joined.graph().edge_count() == 6);
        for (VertexId v : joined.graph().vertices())
            CHECK(joined.out_degree(v) == 2);
        CHECK(joined.bidirected_edges().size() == 2);
    }
    SUBCASE("no extra edges leaves the orientation alone")
    {
        Biorientation sides = directed_cycle(4);
        Multigraph none;
        for (int i = 0; i < 4; ++i)
            none.add_vertex("v" + std::to_string(i));
        CHECK(add_bidirected_edges(sides, none) == sides);
    }
    SUBCASE("single bidirected edge over an edgeless orientation")
    {
        Biorientation empty = make_digraph(2, {});
        Multigraph one = make_graph(2, {{0, 1}});
        Biorientation joined = add_bidirected_edges(empty, one);
        CHECK(joined.out_degree(0) == 1);
        CHECK(joined.out_degree(1) == 1);
    }
    SUBCASE("out-degrees add up")
    {
        TestRng rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            Biorientation base = random_digraph(7, 0.4, rng.next());
            Multigraph extra;
            for (VertexId v : base.graph().vertices())
                extra.add_vertex(base.graph().vertex_label(v));
            int counter = 0;
            for (int i = 0; i < 7; ++i)
                for (int j = i + 1; j < 7; ++j)
                    if (rng.chance(0.3))
                        extra.add_edge("x" + std::to_string(counter++), i, j);
            Biorientation joined = add_bidirected_edges(base, extra);
            for (VertexId v : base.graph().vertices())
                CHECK(joined.out_degree(*joined.graph().find_vertex(
                          base.graph().vertex_label(v)))
                    == base.out_degree(v) + extra.degree(v));
        }
    }
    SUBCASE("edge id collisions are rejected")
    {
        Biorientation sides = directed_cycle(4);
        Multigraph clash;
        for (int i = 0; i < 4; ++i)
            clash.add_vertex("v" + std::to_string(i));
        clash.add_edge("e0", 0, 2); // label already used by the cycle
        CHECK_THROWS_AS(add_bidirected_edges(sides, clash), InputError);
    }
    SUBCASE("vertex set mismatches are rejected")
    {
        Biorientation sides = directed_cycle(4);
        Multigraph other = make_graph(3, {});
        CHECK_THROWS_AS(add_bidirected_edges(sides, other), InputError);
    }
}
