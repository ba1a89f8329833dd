#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "mindr/gen.hpp"
#include "mindr/io.hpp"

using namespace mindr;

TEST_CASE("parse_instance basics") {
    SECTION("minimal instance with one set") {
        auto inst = parse_instance("n 2\ne 0 1\ns 1 0\n");
        REQUIRE(inst.set_count() == 1);
        REQUIRE(inst.graph.vertex_count() == 2);
        REQUIRE(inst.sets[0] == std::vector<int>{0});
    }
    SECTION("repeated anchor lines keep multiset semantics") {
        auto inst = parse_instance("n 5\ne 0 1\ns 1 0 1\na 3 2.5\na 3 2.5\n");
        REQUIRE(inst.anchors.size() == 2);
        REQUIRE(inst.anchors[0].vertex == 3);
        REQUIRE(inst.anchors[1].weight == 2.5);
    }
    SECTION("comments and blank lines are ignored") {
        auto inst = parse_instance("# header\n\nn 3\n e 0 1 # tail comment\ns 1 2\n");
        REQUIRE(inst.graph.edge_count() == 1);
    }
    SECTION("fair subsets attach to their sets") {
        auto inst = parse_instance("n 4\ne 0 1\ns 1 0 1\ns 2 2 3\nf 2 3\n");
        REQUIRE(inst.fair[0].empty());
        REQUIRE(inst.fair[1] == std::vector<int>{3});
    }
}

TEST_CASE("parse_instance errors carry line numbers") {
    auto expect_error_line = [](const std::string& text, int line) {
        try {
            parse_instance(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            REQUIRE(e.line() == line);
        }
    };
    SECTION("malformed record") { expect_error_line("n 3\ne 0\ns 1 0\n", 2); }
    SECTION("out-of-range vertex") { expect_error_line("n 3\ne 0 7\ns 1 0\n", 2); }
    SECTION("duplicate set index") { expect_error_line("n 3\ns 1 0\ns 1 1\n", 3); }
    SECTION("fair vertex outside its set") { expect_error_line("n 3\ns 1 0\nf 1 2\n", 3); }
    SECTION("n must come first") { expect_error_line("e 0 1\nn 3\ns 1 0\n", 1); }
    SECTION("unknown record") { expect_error_line("n 3\nq 1\ns 1 0\n", 2); }
    SECTION("negative weight") { expect_error_line("n 3\ne 0 1 -2\ns 1 0\n", 2); }
    SECTION("non-contiguous set indices") {
        REQUIRE_THROWS_AS(parse_instance("n 3\ns 1 0\ns 3 1\n"), ParseError);
    }
    SECTION("missing sets") { REQUIRE_THROWS_AS(parse_instance("n 3\ne 0 1\n"), ParseError); }
}

TEST_CASE("instance round-trip") {
    SECTION("hand instance") {
        std::string text = "n 6\ne 0 1\ne 1 2 2.5\ns 1 0 1\ns 2 4 5\nf 1 0\na 3 2.5\na 3 1\n";
        auto inst = parse_instance(text);
        std::string canonical = serialize_instance(inst);
        REQUIRE(serialize_instance(parse_instance(canonical)) == canonical);
    }
    SECTION("generated instances reach a serialization fixpoint") {
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            DecomposableGenOptions opts;
            opts.n = 24;
            opts.k = 3;
            opts.set_size = 2;
            opts.seed = seed;
            opts.anchor_count = 2;
            opts.real_weights = seed % 2 == 1;
            auto inst = gen_decomposable(opts);
            std::string canonical = serialize_instance(inst);
            REQUIRE(serialize_instance(parse_instance(canonical)) == canonical);
        }
    }
}

TEST_CASE("solution files") {
    Solution sol;
    sol.choices = {4, 7, 1};
    sol.cost = 12.5;
    std::string text = serialize_solution(sol);
    REQUIRE(text == "1 4\n2 7\n3 1\ncost 12.5\n");
    auto parsed = parse_solution(text);
    REQUIRE(parsed.choices == sol.choices);
    REQUIRE(parsed.cost == sol.cost);
    REQUIRE_THROWS_AS(parse_solution("1 4\n3 5\ncost 2\n"), ParseError);
    REQUIRE_THROWS_AS(parse_solution("1 4\n"), ParseError);
}

TEST_CASE("maxcrs files") {
    SECTION("round trip of a small instance") {
        auto mc = parse_maxcrs("s 1 10 11\ns 2 20\nc 10 20 5\nc 11 20 2\n");
        REQUIRE(mc.sets.size() == 2);
        REQUIRE(mc.capacity_of(20, 10) == 5.0);
        REQUIRE(mc.capacity_of(11, 20) == 2.0);
        REQUIRE(mc.capacity_of(10, 11) == 0.0);
    }
    SECTION("errors") {
        REQUIRE_THROWS_AS(parse_maxcrs("s 1 1 2\nc 1 2 5\n"), ParseError); // same-set capacity
        REQUIRE_THROWS_AS(parse_maxcrs("s 1 1\ns 2 2\nc 1 9 5\n"), ParseError);
        REQUIRE_THROWS_AS(parse_maxcrs("s 1 1\ns 2 2\nc 1 2 5\nc 2 1 6\n"), ParseError);
        REQUIRE_THROWS_AS(parse_maxcrs("s 1 1\ns 2 1\n"), ParseError); // overlapping sets
    }
}

TEST_CASE("validate") {
    SECTION("separated path instance is decomposable") {
        auto inst = parse_instance("n 6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ns 1 0 1\ns 2 4 5\n");
        auto report = validate(inst);
        REQUIRE(report.connected_graph);
        REQUIRE(report.sets_disjoint);
        REQUIRE(report.cross_biconnected_clean);
        REQUIRE(report.decomposable);
    }
    SECTION("triangle with two singleton sets shares a cycle block") {
        auto inst = parse_instance("n 3\ne 0 1\ne 1 2\ne 0 2\ns 1 0\ns 2 1\n");
        auto report = validate(inst);
        REQUIRE_FALSE(report.cross_biconnected_clean);
        REQUIRE_FALSE(report.decomposable);
    }
    SECTION("a split set is reported disconnected") {
        auto inst = parse_instance("n 3\ne 0 1\ne 1 2\ns 1 0 2\ns 2 1\n");
        auto report = validate(inst);
        REQUIRE_FALSE(report.sets_connected[0]);
        REQUIRE_FALSE(report.decomposable);
    }
    SECTION("overlapping sets are never decomposable") {
        auto inst = parse_instance("n 4\ne 0 1\ne 1 2\ne 2 3\ns 1 1\ns 2 1 2\n");
        auto report = validate(inst);
        REQUIRE_FALSE(report.sets_disjoint);
        REQUIRE_FALSE(report.decomposable);
    }
    SECTION("fair subsets outside the largest component are flagged") {
        auto inst = parse_instance("n 5\ne 0 1\ne 1 2\ne 3 4\ns 1 0\ns 2 3 4\nf 1 0\nf 2 4\n");
        auto report = validate(inst);
        REQUIRE_FALSE(report.connected_graph);
        REQUIRE(report.fair_in_largest_component == std::vector<bool>{true, false});
    }
}

TEST_CASE("connect_maximal") {
    SECTION("fills in all missing intra-set edges") {
        auto inst = parse_instance("n 4\ne 0 3\ne 1 3\ne 2 3\ns 1 0 1 2\n");
        auto out = connect_maximal(inst);
        REQUIRE(out.graph.edge_count() == inst.graph.edge_count() + 3);
        REQUIRE(out.graph.has_edge(0, 1));
        REQUIRE(out.graph.has_edge(0, 2));
        REQUIRE(out.graph.has_edge(1, 2));
    }
    SECTION("idempotent on cliques") {
        auto inst = parse_instance("n 3\ne 0 1\ne 1 2\ne 0 2\ns 1 0 1 2\n");
        auto out = connect_maximal(inst);
        REQUIRE(out.graph.edges() == inst.graph.edges());
    }
    SECTION("always yields connected sets") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            GeneralGenOptions opts;
            opts.n = 18;
            opts.k = 3;
            opts.set_size = 3;
            opts.overlap = 0.3;
            opts.seed = seed;
            auto inst = gen_general(opts);
            // Break set connectivity by deleting every intra-set edge.
            std::vector<Edge> kept;
            for (const Edge& e : inst.graph.edges()) {
                bool intra = false;
                for (const auto& set : inst.sets) {
                    bool u_in = std::binary_search(set.begin(), set.end(), e.u);
                    bool v_in = std::binary_search(set.begin(), set.end(), e.v);
                    if (u_in && v_in) intra = true;
                }
                if (!intra) kept.push_back(e);
            }
            inst.graph = Graph(inst.graph.vertex_count(), kept);
            auto maximal = validate(connect_maximal(inst));
            for (bool connected : maximal.sets_connected) REQUIRE(connected);
            auto minimal = validate(connect_minimal(inst));
            for (bool connected : minimal.sets_connected) REQUIRE(connected);
        }
    }
}

TEST_CASE("connect_minimal") {
    SECTION("bridges each extra component to the hub") {
        // X = {0, 1, 5}: G[X] components {0, 1} and {5}; vertex 1 has the
        // highest full-graph degree in the largest component.
        auto inst = parse_instance("n 6\ne 0 1\ne 1 2\ne 1 3\ne 4 5\ns 1 0 1 5\n");
        auto out = connect_minimal(inst);
        REQUIRE(out.graph.edge_count() == inst.graph.edge_count() + 1);
        REQUIRE(out.graph.has_edge(1, 5));
    }
    SECTION("connected sets are untouched") {
        auto inst = parse_instance("n 3\ne 0 1\ne 1 2\ns 1 0 1\n");
        auto out = connect_minimal(inst);
        REQUIRE(out.graph.edges() == inst.graph.edges());
    }
    SECTION("adds exactly components-minus-one edges") {
        auto inst = parse_instance("n 7\ne 0 1\ne 2 3\ne 5 6\ns 1 0 1 2 3 4 5 6\n");
        auto out = connect_minimal(inst);
        // Components {0,1}, {2,3}, {4}, {5,6} -> 3 new edges.
        REQUIRE(out.graph.edge_count() == inst.graph.edge_count() + 3);
        REQUIRE(validate(out).sets_connected[0]);
    }
    SECTION("transforms never remove edges and are idempotent") {
        auto inst = parse_instance("n 8\ne 0 1\ne 2 3\ne 4 5\ne 0 6\ne 6 7\ns 1 0 1 2 3\ns 2 4 5\n");
        for (auto transform : {connect_minimal, connect_maximal}) {
            auto once = transform(inst);
            for (const Edge& e : inst.graph.edges()) REQUIRE(once.graph.has_edge(e.u, e.v));
            auto twice = transform(once);
            REQUIRE(twice.graph.edges() == once.graph.edges());
        }
    }
}

TEST_CASE("preprocess_graph") {
    SECTION("keeps the larger component") {
        auto result = preprocess_graph({{0, 1}, {2, 3}, {3, 2}, {3, 4}});
        REQUIRE(result.graph.vertex_count() == 3);
        REQUIRE(result.original_id == std::vector<std::int64_t>{2, 3, 4});
        REQUIRE(result.graph.has_edge(0, 1)); // 2-3
        REQUIRE(result.graph.has_edge(1, 2)); // 3-4
    }
    SECTION("already symmetric connected input survives whole") {
        auto result = preprocess_graph({{10, 20}, {20, 10}, {20, 30}});
        REQUIRE(result.graph.vertex_count() == 3);
        REQUIRE(result.original_id == std::vector<std::int64_t>{10, 20, 30});
        REQUIRE(result.graph.edge_count() == 2);
    }
    SECTION("size ties keep the component with the smallest original id") {
        auto result = preprocess_graph({{5, 6}, {1, 2}});
        REQUIRE(result.original_id == std::vector<std::int64_t>{1, 2});
    }
    SECTION("empty input is an error") {
        REQUIRE_THROWS_AS(preprocess_graph({}), InputError);
    }
    SECTION("output is connected") {
        RandomSource rng(77);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::pair<std::int64_t, std::int64_t>> arcs;
            int m = 5 + static_cast<int>(rng.next_below(20));
            for (int i = 0; i < m; ++i) {
                arcs.emplace_back(static_cast<std::int64_t>(rng.next_below(15)),
                                  static_cast<std::int64_t>(rng.next_below(15)));
            }
            auto result = preprocess_graph(arcs);
            REQUIRE(is_connected(result.graph));
            REQUIRE(std::is_sorted(result.original_id.begin(), result.original_id.end()));
        }
    }
}
