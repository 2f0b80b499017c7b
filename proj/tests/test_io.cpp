#include <doctest.h>

#include <json.hpp>

#include "dpcolor/io.hpp"
#include "test_support.hpp"

using namespace dpc;

namespace {

const char* kMinimalInstance = R"({
  "vertices": ["a", "b"],
  "lists": {"a": [1, 2], "b": [2, 3]},
  "edges": [
    {"id": "ab", "u": "a", "v": "b", "matching": [[1, 2], [2, 3]], "orientation": "uv"}
  ]
})";

} // namespace

TEST_CASE("instance parsing")
{
    SUBCASE("minimal document")
    {
        CorrespondenceInstance inst = instance_from_json(kMinimalInstance);
        CHECK(inst.graph.vertex_count() == 2);
        CHECK(inst.graph.edge_count() == 1);
        CHECK(inst.lists.at(0) == std::vector<int>{1, 2});
        CHECK(inst.matching(0).pairs
            == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
        REQUIRE(inst.orientation);
        CHECK(inst.orientation->direction(0) == EdgeDir::Forward);
    }
    SUBCASE("identity shorthand expands against the lists")
    {
        CorrespondenceInstance inst = instance_from_json(R"({
          "vertices": ["a", "b"],
          "lists": {"a": [1, 2, 5], "b": [2, 5, 9]},
          "edges": [{"id": "e", "u": "a", "v": "b", "matching": "identity"}]
        })");
        CHECK(inst.matching(0).pairs
            == std::vector<std::pair<int, int>>{{2, 2}, {5, 5}});
        CHECK(!inst.orientation); // no orientation keys anywhere
    }
    SUBCASE("diagnostics carry the JSON path")
    {
        auto expect_mentions = [](const char* text, const std::string& needle) {
            try {
                instance_from_json(text);
                FAIL("expected InputError for ", needle);
            } catch (const InputError& e) {
                CHECK(std::string(e.what()).find(needle) != std::string::npos);
            }
        };
        expect_mentions("{", "JSON parse error");
        expect_mentions(R"({"vertices": ["a", "a"], "lists": {}, "edges": []})",
            "$.vertices[1]");
        expect_mentions(R"({"vertices": ["a"], "lists": {}, "edges": []})", "$.lists");
        expect_mentions(R"({"vertices": ["a"], "lists": {"a": [1]}, "edges":
            [{"id": "e", "u": "a", "v": "z", "matching": []}]})",
            "$.edges[0].v");
        expect_mentions(R"({"vertices": ["a"], "lists": {"a": [1]}, "edges":
            [{"id": "e", "u": "a", "v": "a", "matching": []}]})",
            "loop");
        expect_mentions(R"({"vertices": ["a", "b"], "lists": {"a": [1], "b": [1]}, "edges":
            [{"id": "e", "u": "a", "v": "b", "matching": [[1]]}]})",
            "$.edges[0].matching[0]");
        expect_mentions(R"({"vertices": ["a", "b"], "lists": {"a": [1], "b": [1]},
            "edges": [{"id": "e", "u": "a", "v": "b", "matching": [], "orientation": "up"}]})",
            "orientation");
    }
    SUBCASE("orientation must cover all edges or none")
    {
        CHECK_THROWS_AS(instance_from_json(R"({
          "vertices": ["a", "b", "c"],
          "lists": {"a": [1], "b": [1], "c": [1]},
          "edges": [
            {"id": "e1", "u": "a", "v": "b", "matching": [], "orientation": "uv"},
            {"id": "e2", "u": "b", "v": "c", "matching": []}
          ]
        })"),
            InputError);
    }
    SUBCASE("duplicate edge ids are rejected")
    {
        CHECK_THROWS_AS(instance_from_json(R"({
          "vertices": ["a", "b", "c"],
          "lists": {"a": [1], "b": [1], "c": [1]},
          "edges": [
            {"id": "e", "u": "a", "v": "b", "matching": []},
            {"id": "e", "u": "b", "v": "c", "matching": []}
          ]
        })"),
            InputError);
    }
    SUBCASE("an edgeless document is trivially oriented")
    {
        CorrespondenceInstance inst = instance_from_json(R"({
          "vertices": ["only"], "lists": {"only": [7, 9]}, "edges": []
        })");
        CHECK(inst.orientation.has_value());
    }
    SUBCASE("matched colors must come from the lists")
    {
        CHECK_THROWS_AS(instance_from_json(R"({
          "vertices": ["a", "b"],
          "lists": {"a": [1], "b": [1]},
          "edges": [{"id": "e", "u": "a", "v": "b", "matching": [[4, 1]]}]
        })"),
            InputError);
    }
}

TEST_CASE("round trips")
{
    SUBCASE("instances survive emit/parse")
    {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            GenParams params;
            params.n = 2 + static_cast<int>(seed % 8);
            params.twisted_edge_prob = 0.3;
            params.seed = seed;
            CorrespondenceInstance inst = gen_certified_instance(params);
            CHECK(instance_from_json(instance_to_json(inst)) == inst);
        }
    }
    SUBCASE("emission is deterministic")
    {
        GenParams params;
        params.n = 6;
        params.seed = 9;
        CorrespondenceInstance inst = gen_certified_instance(params);
        CHECK(instance_to_json(inst) == instance_to_json(inst));
    }
    SUBCASE("signed documents survive emit/parse")
    {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            GenParams params;
            params.n = 2 + static_cast<int>(seed % 6);
            params.seed = seed;
            SignedInput input = gen_certified_signed(params);
            SignedInput back = signed_from_json(signed_to_json(input));
            CHECK(back.graph.graph == input.graph.graph);
            for (const Edge& e : input.graph.graph.edges())
                CHECK(back.graph.sign(e.id) == input.graph.sign(e.id));
            for (VertexId v : input.graph.graph.vertices())
                CHECK(back.lists.at(v) == input.lists.at(v));
            REQUIRE(back.orientation);
            CHECK(*back.orientation == *input.orientation);
        }
    }
    SUBCASE("colorings survive emit/parse")
    {
        CorrespondenceInstance inst = crossed_c4_repaired();
        Coloring phi{{0, 3}, {1, 1}, {2, 2}, {3, 1}};
        CHECK(coloring_from_json(inst.graph, coloring_to_json(inst.graph, phi)) == phi);
    }
}

TEST_CASE("signed parsing rejects zero colors")
{
    CHECK_THROWS_AS(signed_from_json(R"({
      "vertices": ["a", "b"],
      "lists": {"a": [0, 1], "b": [1]},
      "edges": [{"id": "e", "u": "a", "v": "b", "sign": -1}]
    })"),
        InputError);
}

TEST_CASE("digraph documents")
{
    Biorientation d = digraph_from_json(R"({
      "vertices": ["x", "y", "z"],
      "edges": [
        {"id": "a", "u": "x", "v": "y", "orientation": "uv"},
        {"id": "b", "u": "y", "v": "z", "orientation": "both"}
      ]
    })");
    CHECK(d.out_degree(0) == 1);
    CHECK(d.out_degree(1) == 1);
    CHECK(d.out_degree(2) == 1);
    CHECK(d.bidirected_edges().size() == 1);
    CHECK(!looks_like_instance(R"({"vertices": [], "edges": []})"));
    CHECK(looks_like_instance(kMinimalInstance));

    // digraph documents demand orientations
    CHECK_THROWS_AS(digraph_from_json(R"({
      "vertices": ["x", "y"],
      "edges": [{"id": "a", "u": "x", "v": "y"}]
    })"),
        InputError);
}

TEST_CASE("report serialization names the offenders")
{
    CorrespondenceInstance inst = crossed_c4_instance();
    HypothesisReport report = check_hypotheses(inst, CheckMode::Certified);
    std::string json_text = report_to_json(inst.graph, report);
    auto doc = nlohmann::json::parse(json_text);
    CHECK(doc["twisted_bidirected_ok"] == false);
    CHECK(doc["twisted_bidirected_violations"][0] == "e3");
    CHECK(doc["certified"] == false);
    CHECK(doc["straight_certificate"] == "no_odd_cycle");
}

TEST_CASE("coloring files reject unknown vertices")
{
    CorrespondenceInstance inst = crossed_c4_instance();
    CHECK_THROWS_AS(coloring_from_json(inst.graph, R"({"nope": 1})"), InputError);
}
