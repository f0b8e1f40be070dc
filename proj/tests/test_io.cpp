#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "thinset/errors.hpp"
#include "thinset/io.hpp"
#include "thinset/sequences.hpp"

using namespace thinset;
using thinset::test::affine_table;
using thinset::test::late_staircase;

TEST_CASE("graph json round trip") {
    auto g = LargenessGraph::from_edges(4, {{0, 2}, {0, 3}, {1, 3}});
    nlohmann::json j = graph_to_json(g);
    REQUIRE(j["n"] == 4);
    REQUIRE(j["edges"] == nlohmann::json::parse("[[0,2],[0,3],[1,3]]"));
    REQUIRE(graph_from_json(j) == g);

    // loading skips validation so broken graphs can be inspected
    auto invalid = graph_from_json(nlohmann::json::parse(R"({"n":3,"edges":[[1,2]]})"));
    REQUIRE_FALSE(is_valid(invalid));

    REQUIRE_THROWS_AS(graph_from_json(nlohmann::json::parse("[]")), InputError);
    REQUIRE_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":3})")), InputError);
    REQUIRE_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":-1,"edges":[]})")),
                      InputError);
    REQUIRE_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":3,"edges":[[0,3]]})")),
                      InputError);
    REQUIRE_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":3,"edges":[[1,1]]})")),
                      InputError);
    REQUIRE_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":3,"edges":[[0]]})")),
                      InputError);
}

TEST_CASE("graph dot output") {
    auto g = LargenessGraph::from_edges(3, {{0, 2}, {1, 2}});
    REQUIRE(graph_to_dot(g) ==
            "graph largeness {\n"
            "  {rank=same; 0; 1; 2}\n"
            "  0 -- 2;\n"
            "  1 -- 2;\n"
            "}\n");
}

TEST_CASE("staged table json round trip") {
    StagedTable s = late_staircase();
    nlohmann::json j = staged_to_json(s);
    StagedTable back = staged_from_json(j);
    REQUIRE(back.stages == s.stages);
    REQUIRE(back.domain == s.domain);
    REQUIRE(back.stable_bound == s.stable_bound);
    REQUIRE(back.values == s.values);

    ApproxTable t = affine_table(2, 1, 4);
    REQUIRE(table_to_json(t) == staged_to_json(t.data()));

    REQUIRE_THROWS_AS(staged_from_json(nlohmann::json::parse("[]")), InputError);
    REQUIRE_THROWS_AS(staged_from_json(nlohmann::json::parse(R"({"stages":1})")), InputError);
    REQUIRE_THROWS_AS(
        staged_from_json(nlohmann::json::parse(
            R"({"stages":1,"domain":1,"stable_bound":1,"values":[[0.5]]})")),
        InputError);
}

TEST_CASE("sequence csv") {
    std::ostringstream os;
    write_sequence_csv(os, catalan_sequence(4));
    REQUIRE(os.str() == "index,value\n0,1\n1,1\n2,2\n3,5\n4,14\n");

    std::ostringstream ell;
    write_sequence_csv(ell, ell_sequence(3));
    REQUIRE(ell.str() == "index,value\n1,1\n2,1\n3,2\n");
}

TEST_CASE("coloring jsonl round trip") {
    Coloring f = gap3_coloring(affine_table(1, 2, 8), {0, 1, 2, 3, 4});
    std::stringstream buf;
    write_coloring_jsonl(buf, f);

    Coloring back = read_coloring_jsonl(buf);
    REQUIRE(back.kind() == f.kind());
    REQUIRE(back.arity() == f.arity());
    REQUIRE(back.domain() == f.domain());
    REQUIRE(back.palette().size() == f.palette().size());
    REQUIRE(back.palette().kind() == f.palette().kind());
    f.for_each_tuple([&](std::span<const int> t, int c) {
        REQUIRE(back.color_of(t) == c);
    });
    // the stored codec keeps the structured colors
    REQUIRE(back.palette().color_json(2) == f.palette().color_json(2));

    // tuples that were never stored are refused rather than guessed
    std::istringstream partial_src(
        R"({"kind":"k","arity":2,"domain":[0,1,2],"palette":{"kind":"int","colors":[0,1]}})" "\n"
        R"({"t":[0,1],"c":1})" "\n");
    Coloring partial = read_coloring_jsonl(partial_src);
    REQUIRE(partial.color_of(std::vector<int>{0, 1}) == 1);
    REQUIRE_THROWS_AS(partial.color_of(std::vector<int>{0, 2}), InputError);
}

TEST_CASE("coloring jsonl read errors") {
    auto reject = [](const std::string& text, const std::string& needle) {
        std::istringstream is(text);
        REQUIRE_THROWS_MATCHES(read_coloring_jsonl(is), InputError,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::ContainsSubstring(needle)));
    };
    reject("", "empty");
    reject("not json\n", "bad coloring header");
    reject(R"({"kind":"k","arity":2,"domain":[0,1]})" "\n", "missing palette");
    reject(R"({"kind":"k","arity":2,"domain":[0,1],"palette":{"kind":"int"}})" "\n",
           "kind and colors");
    std::string header =
        R"({"kind":"k","arity":2,"domain":[0,1],"palette":{"kind":"int","colors":[0,1]}})" "\n";
    reject(header + "nope\n", "line 2");
    reject(header + R"({"t":[0,1]})" "\n", "needs fields t and c");
    reject(header + R"({"t":[0,1],"c":7})" "\n", "out of palette range on line 2");
}

TEST_CASE("witness json") {
    ThinWitness w;
    w.set = {0, 1, 3};
    w.used_colors = {1};
    w.avoided_colors = {0, 2, 3, 4};
    w.bound = 2;
    nlohmann::json j = thin_witness_to_json(w);
    REQUIRE(j["kind"] == "thin");
    ThinWitness back = thin_witness_from_json(j);
    REQUIRE(back.set == w.set);
    REQUIRE(back.used_colors == w.used_colors);
    REQUIRE(back.avoided_colors == w.avoided_colors);
    REQUIRE(back.bound == w.bound);

    // only H is mandatory on the way in
    ThinWitness bare = thin_witness_from_json(nlohmann::json::parse(R"({"H":[1,2]})"));
    REQUIRE(bare.set == std::vector<int>{1, 2});
    REQUIRE(bare.bound == 0);
    REQUIRE_THROWS_AS(thin_witness_from_json(nlohmann::json::parse(R"({"set":[1]})")),
                      InputError);

    TransitiveWitness tw{{0, 3, 18}, TransitiveKind::all_large};
    REQUIRE(transitive_witness_to_json(tw) ==
            nlohmann::json::parse(R"({"H":[0,3,18],"kind":"all-large"})"));
    tw.kind = TransitiveKind::transitive_with_small;
    REQUIRE(transitive_witness_to_json(tw)["kind"] == "transitive-with-small");

    DominationWitness dw;
    dw.certificate = {{0, 18, 2}, {1, 38, 4}};
    REQUIRE(domination_witness_to_json(dw) ==
            nlohmann::json::parse(R"({"kind":"domination","certificate":[[0,18,2],[1,38,4]]})"));
}

TEST_CASE("json file loading") {
    REQUIRE_THROWS_AS(json_from_file("/nonexistent/q.json"), InputError);

    std::string path = "io_test_tmp.json";
    {
        std::ofstream out(path);
        out << "{\"a\": 1}";
    }
    REQUIRE(json_from_file(path) == nlohmann::json::parse(R"({"a":1})"));
    {
        std::ofstream out(path);
        out << "{bad";
    }
    REQUIRE_THROWS_AS(json_from_file(path), InputError);
    std::remove(path.c_str());
}
