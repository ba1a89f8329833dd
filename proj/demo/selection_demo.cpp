// Generates a synthetic instance and compares every algorithm on it.
// Usage: selection_demo [seed]

#include <cstdlib>
#include <iostream>
#include <vector>

#include "mindr/mindr.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;

    mindr::GeneralGenOptions opts;
    opts.n = 40;
    opts.k = 4;
    opts.set_size = 4;
    opts.overlap = 0.2;
    opts.seed = seed;
    mindr::MindrInstance inst = mindr::gen_general(opts);

    // Plant the brute-force optimum as the fair choice so `value` measures
    // how often each heuristic recovers it.
    mindr::Solution optimum = mindr::solve_bruteforce(inst);
    for (std::size_t i = 0; i < inst.sets.size(); ++i) {
        inst.fair[i] = {optimum.choices[i]};
    }

    mindr::RandomSource rng(seed);
    std::vector<mindr::AlgorithmRun> runs;
    runs.push_back({"brute", optimum});
    runs.push_back({"spanning-tree", mindr::solve_spanning_tree(inst)});
    runs.push_back({"hitting", mindr::solve_hitting(inst)});
    runs.push_back({"greedy", mindr::solve_greedy(inst, rng)});
    runs.push_back({"degree", mindr::solve_degree(inst)});
    runs.push_back({"pagerank", mindr::solve_pagerank(inst)});

    auto report = mindr::evaluate_instance("demo-" + std::to_string(seed), inst, runs);
    std::cout << mindr::report_text(report);
    return 0;
}
