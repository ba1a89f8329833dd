#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <vector>

#include "mindr/instance.hpp"

namespace mindr {

/// Seeded deterministic random stream. Backed by std::mt19937_64, whose
/// output sequence is fixed by the standard, with bounded draws done by
/// rejection sampling; the same seed therefore yields the same draws on
/// every platform and build.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw InputError("RandomSource: bound must be positive");
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() / bound * bound;
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % bound;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

/// Greedy baseline: draw a start index and a start vertex uniformly, then
/// walk the remaining sets in cyclic order picking the candidate with the
/// smallest distance sum to everything selected so far; finally re-select
/// the start set against the other k-1 choices, discarding the only purely
/// random pick. Ties go to the lowest vertex id.
inline Solution solve_greedy(const MindrInstance& inst, RandomSource& rng) {
    const Graph& g = inst.graph;
    if (!is_connected(g)) {
        throw InputError("greedy: graph must be connected");
    }
    const int k = inst.set_count();
    if (k == 0) throw InputError("greedy: instance has no candidate sets");

    std::map<int, std::vector<double>> rows;
    auto row_of = [&](int v) -> const std::vector<double>& {
        auto it = rows.find(v);
        if (it == rows.end()) it = rows.emplace(v, shortest_paths(g, v).dist).first;
        return it->second;
    };

    std::vector<int> chosen(static_cast<std::size_t>(k), -1);
    int start = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k)));
    const auto& start_set = inst.sets[static_cast<std::size_t>(start)];
    chosen[static_cast<std::size_t>(start)] =
        start_set[static_cast<std::size_t>(rng.next_below(start_set.size()))];

    auto pick = [&](int j) {
        const auto& set = inst.sets[static_cast<std::size_t>(j)];
        int best = set.front();
        double best_score = kUnreachable;
        for (int x : set) {
            double score = 0.0;
            for (int i = 0; i < k; ++i) {
                if (i == j || chosen[static_cast<std::size_t>(i)] == -1) continue;
                score += row_of(chosen[static_cast<std::size_t>(i)])[static_cast<std::size_t>(x)];
            }
            if (score < best_score) {
                best_score = score;
                best = x;
            }
        }
        return best;
    };

    for (int off = 1; off < k; ++off) {
        int j = (start + off) % k;
        chosen[static_cast<std::size_t>(j)] = pick(j);
    }
    chosen[static_cast<std::size_t>(start)] = pick(start);

    Solution out;
    out.choices = std::move(chosen);
    out.cost = objective(inst, out.choices);
    return out;
}

/// Per set, the vertex of maximum degree in the instance graph; ties go to
/// the lowest id.
inline Solution solve_degree(const MindrInstance& inst) {
    Solution out;
    out.choices.reserve(inst.sets.size());
    for (const auto& set : inst.sets) {
        int best = set.front();
        for (int v : set) {
            if (inst.graph.degree(v) > inst.graph.degree(best)) best = v;
        }
        out.choices.push_back(best);
    }
    out.cost = objective(inst, out.choices);
    return out;
}

struct PageRankOptions {
    double damping = 0.85;
    double tolerance = 1e-9; // L1 change between iterations
    int max_iterations = 200;
};

/// Power-iteration PageRank on the undirected graph: every edge acts in
/// both directions and a vertex spreads its mass uniformly over its
/// incident edges (edge weights do not bias the walk). Teleport is uniform;
/// isolated vertices distribute their mass uniformly. Scores sum to 1.
inline std::vector<double> pagerank(const Graph& g, const PageRankOptions& opts = {}) {
    const int n = g.vertex_count();
    if (n == 0) throw InputError("pagerank: empty graph");
    if (!(opts.damping >= 0.0 && opts.damping < 1.0)) {
        throw InputError("pagerank: damping must be in [0, 1)");
    }
    if (!(opts.tolerance > 0.0) || opts.max_iterations < 1) {
        throw InputError("pagerank: bad tolerance or iteration limit");
    }
    std::vector<double> score(static_cast<std::size_t>(n), 1.0 / n);
    std::vector<double> next(static_cast<std::size_t>(n));
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        double dangling = 0.0;
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) == 0) dangling += score[static_cast<std::size_t>(v)];
        }
        double base = (1.0 - opts.damping) / n + opts.damping * dangling / n;
        std::fill(next.begin(), next.end(), base);
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) == 0) continue;
            double share = opts.damping * score[static_cast<std::size_t>(v)] / g.degree(v);
            for (int to : g.neighbors(v)) {
                next[static_cast<std::size_t>(to)] += share;
            }
        }
        double l1 = 0.0;
        for (int v = 0; v < n; ++v) {
            if (!std::isfinite(next[static_cast<std::size_t>(v)])) {
                throw NumericalError("pagerank: non-finite score");
            }
            l1 += std::abs(next[static_cast<std::size_t>(v)] - score[static_cast<std::size_t>(v)]);
        }
        score.swap(next);
        if (l1 < opts.tolerance) break;
    }
    return score;
}

/// Per set, the vertex with the highest PageRank score; ties go to the
/// lowest id.
inline Solution solve_pagerank(const MindrInstance& inst, const PageRankOptions& opts = {}) {
    auto scores = pagerank(inst.graph, opts);
    Solution out;
    out.choices.reserve(inst.sets.size());
    for (const auto& set : inst.sets) {
        int best = set.front();
        for (int v : set) {
            if (scores[static_cast<std::size_t>(v)] > scores[static_cast<std::size_t>(best)]) best = v;
        }
        out.choices.push_back(best);
    }
    out.cost = objective(inst, out.choices);
    return out;
}

} // namespace mindr
