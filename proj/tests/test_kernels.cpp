#include <doctest.h>

#include <set>

#include "dpcolor/generator.hpp"
#include "dpcolor/kernels.hpp"
#include "test_support.hpp"

using namespace dpc;

namespace {

// Independent oracle: every subset, checked against the kernel definition
// directly (no pruning, no shared code with the search).
std::vector<std::vector<VertexId>> all_kernels_by_enumeration(const Biorientation& d)
{
    std::vector<VertexId> verts(d.graph().vertices().begin(), d.graph().vertices().end());
    std::sort(verts.begin(), verts.end());
    std::vector<std::vector<VertexId>> kernels;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << verts.size()); ++mask) {
        std::vector<VertexId> subset;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (mask & (std::uint64_t{1} << i))
                subset.push_back(verts[i]);
        bool independent = true;
        for (VertexId x : subset)
            for (VertexId y : subset)
                if (x != y && d.has_arc(x, y))
                    independent = false;
        bool dominating = true;
        for (VertexId v : verts) {
            if (std::find(subset.begin(), subset.end(), v) != subset.end())
                continue;
            bool covered = false;
            for (VertexId u : subset)
                covered = covered || d.has_arc(v, u);
            dominating = dominating && covered;
        }
        if (independent && dominating)
            kernels.push_back(subset);
    }
    return kernels;
}

} // namespace

TEST_CASE("kernel predicate")
{
    Biorientation c4 = directed_cycle(4);
    CHECK(is_kernel(c4, ids({0, 2})));
    CHECK(is_kernel(c4, ids({1, 3})));
    CHECK(!is_kernel(c4, ids({0, 1}))); // arc 0->1 breaks independence
    CHECK(!is_kernel(c4, ids({0})));    // vertex 1 has no arc into {0}

    Biorientation edgeless = make_digraph(3, {});
    CHECK(is_kernel(edgeless, ids({0, 1, 2})));
    CHECK(!is_kernel(edgeless, ids({0, 1})));

    CHECK_THROWS_AS(is_kernel(c4, ids({7})), InputError);
}

TEST_CASE("odd cycle detection")
{
    SUBCASE("directed triangle")
    {
        auto witness = find_odd_directed_cycle(directed_cycle(3));
        REQUIRE(witness);
        CHECK(witness->arc_count() == 3);
        CHECK(genuine_odd_cycle(directed_cycle(3), *witness));
    }
    SUBCASE("even cycles are clean")
    {
        CHECK(!find_odd_directed_cycle(directed_cycle(4)));
        CHECK(!find_odd_directed_cycle(directed_cycle(6)));
    }
    SUBCASE("a bidirected edge is an even 2-cycle")
    {
        CHECK(!find_odd_directed_cycle(make_digraph(2, {{0, 1, EdgeDir::Both}})));
    }
    SUBCASE("odd cycle reachable only through a detour")
    {
        // pentagon with a chord: parity conflict sits away from the BFS root
        Biorientation d = make_digraph(5,
            {{0, 1, EdgeDir::Forward}, {1, 2, EdgeDir::Forward}, {2, 3, EdgeDir::Forward},
                {3, 4, EdgeDir::Forward}, {4, 0, EdgeDir::Forward}, {2, 0, EdgeDir::Forward}});
        auto witness = find_odd_directed_cycle(d);
        REQUIRE(witness);
        CHECK(genuine_odd_cycle(d, *witness));
    }
    SUBCASE("planted odd cycles always produce genuine witnesses")
    {
        for (std::uint64_t seed = 1; seed <= 60; ++seed) {
            Biorientation d = plant_odd_cycle_digraph(4 + static_cast<int>(seed % 7), seed);
            auto witness = find_odd_directed_cycle(d);
            REQUIRE(witness);
            CHECK(genuine_odd_cycle(d, *witness));
        }
    }
    SUBCASE("generated bipartition-crossing digraphs are clean")
    {
        for (std::uint64_t seed = 1; seed <= 40; ++seed)
            CHECK(!find_odd_directed_cycle(
                gen_no_odd_cycle_digraph(3 + static_cast<int>(seed % 8), 0.5, seed)));
    }
}

TEST_CASE("polynomial kernel construction")
{
    SUBCASE("directed 4-cycle: picks the class of the lowest vertex")
    {
        Biorientation c4 = directed_cycle(4);
        auto all = all_kernels_by_enumeration(c4);
        REQUIRE(all.size() == 2);
        CHECK(all[0] == ids({0, 2}));
        CHECK(all[1] == ids({1, 3}));
        CHECK(richardson_kernel(c4) == ids({0, 2}));
    }
    SUBCASE("edgeless digraph keeps every vertex")
    {
        CHECK(richardson_kernel(make_digraph(5, {})) == ids({0, 1, 2, 3, 4}));
    }
    SUBCASE("directed path peels terminal vertices")
    {
        Biorientation path = make_digraph(3,
            {{0, 1, EdgeDir::Forward}, {1, 2, EdgeDir::Forward}});
        CHECK(richardson_kernel(path) == ids({0, 2}));
    }
    SUBCASE("odd cycle raises a witnessed precondition error")
    {
        Biorientation tri = directed_cycle(3);
        try {
            richardson_kernel(tri);
            FAIL("expected OddCycleError");
        } catch (const OddCycleError& e) {
            CHECK(genuine_odd_cycle(tri, e.witness()));
        }
    }
    SUBCASE("sound on random odd-cycle-free digraphs")
    {
        for (std::uint64_t seed = 1; seed <= 300; ++seed) {
            Biorientation d = gen_no_odd_cycle_digraph(2 + static_cast<int>(seed % 11), 0.4, seed);
            auto kernel = richardson_kernel(d);
            CHECK(is_kernel(d, kernel));
            CHECK(richardson_kernel(d) == kernel); // deterministic
        }
    }
    SUBCASE("agrees with exhaustive search about existence")
    {
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            Biorientation d = gen_no_odd_cycle_digraph(2 + static_cast<int>(seed % 9), 0.5, seed);
            CHECK(brute_force_kernel(d).has_value());
        }
    }
}

TEST_CASE("exhaustive kernel search")
{
    SUBCASE("directed triangle has no kernel")
    {
        CHECK(!brute_force_kernel(directed_cycle(3)));
    }
    SUBCASE("lexicographically first kernel of the 4-cycle")
    {
        CHECK(brute_force_kernel(directed_cycle(4)) == ids({0, 2}));
    }
    SUBCASE("single vertex")
    {
        CHECK(brute_force_kernel(make_digraph(1, {})) == ids({0}));
    }
    SUBCASE("matches full enumeration on random digraphs")
    {
        TestRng rng(5);
        for (int trial = 0; trial < 40; ++trial) {
            Biorientation d = random_digraph(7, 0.4, rng.next());
            auto found = brute_force_kernel(d);
            auto all = all_kernels_by_enumeration(d);
            if (all.empty()) {
                CHECK(!found);
            } else {
                REQUIRE(found);
                // vector comparison is lexicographic, matching the contract
                CHECK(*found == *std::min_element(all.begin(), all.end()));
                CHECK(is_kernel(d, *found));
            }
        }
    }
    SUBCASE("size guard")
    {
        CHECK_THROWS_AS(brute_force_kernel(make_digraph(6, {}), 5), ResourceLimitError);
    }
}

TEST_CASE("kernel-perfectness certification")
{
    SUBCASE("cyclic 4-cycle is kernel-perfect")
    {
        CHECK(is_kernel_perfect(directed_cycle(4)).kernel_perfect);
    }
    SUBCASE("directed triangle fails on itself")
    {
        auto result = is_kernel_perfect(directed_cycle(3));
        CHECK(!result.kernel_perfect);
        CHECK(result.failing_subset == ids({0, 1, 2}));
    }
    SUBCASE("acyclic digraphs are kernel-perfect")
    {
        TestRng rng(17);
        for (int trial = 0; trial < 10; ++trial) {
            // DAG: arcs only from lower to higher id
            std::vector<std::tuple<int, int, EdgeDir>> edges;
            for (int i = 0; i < 8; ++i)
                for (int j = i + 1; j < 8; ++j)
                    if (rng.chance(0.3))
                        edges.emplace_back(i, j, EdgeDir::Forward);
            CHECK(is_kernel_perfect(make_digraph(8, edges)).kernel_perfect);
        }
    }
    SUBCASE("odd-cycle-free digraphs are kernel-perfect")
    {
        for (std::uint64_t seed = 1; seed <= 15; ++seed)
            CHECK(is_kernel_perfect(
            gen_no_odd_cycle_digraph(2 + static_cast<int>(seed % 9), 0.5, seed))
                      .kernel_perfect);
    }
    SUBCASE("size guard")
    {
        CHECK_THROWS_AS(is_kernel_perfect(make_digraph(16, {})), ResourceLimitError);
    }
}
