#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "mindr/gen.hpp"
#include "mindr/io.hpp"
#include "mindr/oracle.hpp"

using namespace mindr;

namespace {

MaxCrsInstance random_maxcrs(RandomSource& rng, int k, int max_set, double max_cap) {
    MaxCrsInstance mc;
    std::int64_t next_element = 0;
    for (int i = 0; i < k; ++i) {
        int size = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_set)));
        std::vector<std::int64_t> set;
        for (int j = 0; j < size; ++j) set.push_back(next_element++);
        mc.sets.push_back(std::move(set));
    }
    for (std::size_t i = 0; i < mc.sets.size(); ++i) {
        for (std::size_t j = i + 1; j < mc.sets.size(); ++j) {
            for (std::int64_t x : mc.sets[i]) {
                for (std::int64_t y : mc.sets[j]) {
                    if (rng.next_unit() < 0.8) {
                        double c = static_cast<double>(rng.next_below(
                            static_cast<std::uint64_t>(max_cap) + 1));
                        mc.capacity.emplace(std::pair<std::int64_t, std::int64_t>(std::minmax(x, y)), c);
                    }
                }
            }
        }
    }
    if (mc.capacity.empty()) {
        mc.capacity.emplace(std::make_pair(mc.sets[0][0], mc.sets[1][0]), 1.0);
    }
    return mc;
}

} // namespace

TEST_CASE("solve_bruteforce") {
    SECTION("singleton sets are forced") {
        auto inst = parse_instance("n 3\ne 0 1\ne 1 2\ns 1 0\ns 2 2\n");
        auto sol = solve_bruteforce(inst);
        REQUIRE(sol.choices == std::vector<int>{0, 2});
        REQUIRE(sol.cost == 4.0);
    }
    SECTION("separated path instance enumerates all four tuples") {
        auto inst = parse_instance("n 6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ns 1 0 1\ns 2 4 5\n");
        // Hand enumeration: 2*d for the pairs (0,4)=8 (1,4)=6 (0,5)=10 (1,5)=8.
        auto sol = solve_bruteforce(inst);
        REQUIRE(sol.choices == std::vector<int>{1, 4});
        REQUIRE(sol.cost == 6.0);
    }
    SECTION("repetition across sets is allowed") {
        auto inst = parse_instance("n 2\ne 0 1\ns 1 0\ns 2 0\n");
        REQUIRE(solve_bruteforce(inst).cost == 0.0);
    }
    SECTION("ties resolve to the lexicographically smallest tuple") {
        // Symmetric path: (0, 1) and (2, 1) both cost 2; enumeration order
        // must keep (0, 1).
        auto inst = parse_instance("n 3\ne 0 1\ne 1 2\ns 1 0 2\ns 2 1\n");
        auto sol = solve_bruteforce(inst);
        REQUIRE(sol.choices == std::vector<int>{0, 1});
        REQUIRE(sol.cost == 2.0);
    }
    SECTION("cap refusal reports the product") {
        auto inst = parse_instance("n 4\ne 0 1\ne 1 2\ne 2 3\ns 1 0 1\ns 2 2 3\n");
        try {
            solve_bruteforce(inst, {2});
            FAIL("expected CapExceededError");
        } catch (const CapExceededError& e) {
            REQUIRE(e.product() == 4);
        }
    }
    SECTION("anchors enter the objective") {
        auto inst = parse_instance("n 4\ne 0 1\ne 1 2\ne 2 3\ns 1 0 3\na 1 2\n");
        // Objectives: x=0 -> 2*d(0,1)=2; x=3 -> 2*d(3,1)=4.
        auto sol = solve_bruteforce(inst);
        REQUIRE(sol.choices == std::vector<int>{0});
        REQUIRE(sol.cost == 2.0);
    }
}

TEST_CASE("reduce_to_mindir") {
    SECTION("single cross pair") {
        MaxCrsInstance mc;
        mc.sets = {{100}, {200}};
        mc.capacity[{100, 200}] = 5.0;
        auto inst = reduce_to_mindir(mc);
        REQUIRE(inst.graph.vertex_count() == 2);
        REQUIRE(inst.graph.edge_count() == 1);
        REQUIRE(inst.graph.edges()[0].w == 5.0); // alpha 10 minus capacity 5
    }
    SECTION("uniformly zero capacities degenerate to zero weights") {
        MaxCrsInstance mc;
        mc.sets = {{0}, {1}};
        mc.capacity[{0, 1}] = 0.0;
        auto inst = reduce_to_mindir(mc);
        REQUIRE(inst.graph.edges()[0].w == 0.0);
    }
    SECTION("edge weights stay within [max, 2*max]") {
        RandomSource rng(17);
        for (int trial = 0; trial < 10; ++trial) {
            auto mc = random_maxcrs(rng, 3, 3, 9.0);
            double max_cap = 0.0;
            for (const auto& [key, c] : mc.capacity) max_cap = std::max(max_cap, c);
            auto inst = reduce_to_mindir(mc);
            for (const Edge& e : inst.graph.edges()) {
                REQUIRE(e.w >= max_cap);
                REQUIRE(e.w <= 2.0 * max_cap);
            }
        }
    }
    SECTION("cross-set distances equal the direct edge weight") {
        RandomSource rng(19);
        for (int trial = 0; trial < 10; ++trial) {
            auto mc = random_maxcrs(rng, 3, 3, 7.0);
            auto inst = reduce_to_mindir(mc);
            for (std::size_t i = 0; i < inst.sets.size(); ++i) {
                for (int u : inst.sets[i]) {
                    auto row = shortest_paths(inst.graph, u);
                    for (std::size_t j = 0; j < inst.sets.size(); ++j) {
                        if (i == j) continue;
                        for (int v : inst.sets[j]) {
                            REQUIRE(row.dist[static_cast<std::size_t>(v)] ==
                                    inst.graph.edge_weight(u, v));
                        }
                    }
                }
            }
        }
    }
    SECTION("no capacities at all leaves alpha undefined") {
        MaxCrsInstance mc;
        mc.sets = {{0}, {1}};
        REQUIRE_THROWS_AS(reduce_to_mindir(mc), InputError);
    }
    SECTION("needs two sets") {
        MaxCrsInstance mc;
        mc.sets = {{0, 1}};
        mc.capacity[{0, 1}] = 1.0;
        REQUIRE_THROWS_AS(reduce_to_mindir(mc), InputError);
    }
}

TEST_CASE("check_reduction_equivalence") {
    SECTION("single-pair arithmetic") {
        MaxCrsInstance mc;
        mc.sets = {{0}, {1}};
        mc.capacity[{0, 1}] = 5.0;
        // Capacity of the only system is 10; alpha = 10; cost = 10.
        // h = 9: capacity 10 > 9 and cost 10 < 2*10 - 9 = 11.
        REQUIRE(check_reduction_equivalence(mc, 9.0));
    }
    SECTION("boundary threshold: both sides false") {
        MaxCrsInstance mc;
        mc.sets = {{0}, {1}};
        mc.capacity[{0, 1}] = 5.0;
        REQUIRE(check_reduction_equivalence(mc, 10.0));
    }
    SECTION("random instances and thresholds") {
        RandomSource rng(23);
        for (int trial = 0; trial < 50; ++trial) {
            int k = 2 + static_cast<int>(rng.next_below(2));
            auto mc = random_maxcrs(rng, k, 3, 20.0);
            for (int t = 0; t < 5; ++t) {
                double h = static_cast<double>(rng.next_below(200)) / 2.0;
                REQUIRE(check_reduction_equivalence(mc, h));
            }
        }
    }
}

TEST_CASE("naive_useful_edges") {
    SECTION("separated path lists every separating bridge") {
        auto inst = parse_instance("n 6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ns 1 0 1\ns 2 4 5\n");
        REQUIRE(naive_useful_edges(inst.graph, inst.sets) ==
                std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
    }
    SECTION("one set has none") {
        Graph g(3, {{0, 1, 1}, {1, 2, 1}});
        REQUIRE(naive_useful_edges(g, {{0, 1, 2}}).empty());
    }
    SECTION("bridgeless graphs have none") {
        Graph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
        REQUIRE(naive_useful_edges(g, {{0}, {2}}).empty());
    }
}
