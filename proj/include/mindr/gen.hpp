#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "mindr/baselines.hpp"
#include "mindr/instance.hpp"

namespace mindr {

struct DecomposableGenOptions {
    int n = 0;
    int k = 1;
    int set_size = 1;
    std::uint64_t seed = 0;
    std::size_t edge_target = 0;      // total edge budget; 0 = use extra_edge_fraction
    double extra_edge_fraction = 0.3; // extra intra-blob edges as a fraction of n
    bool clique_blobs = false;        // every blob becomes a clique
    bool sets_cover_blobs = false;    // candidate set = entire blob
    int anchor_count = 0;
    bool real_weights = false;        // random weights in [0.5, 2.5) instead of unit
};

/// Generates a decomposable instance: k connected blobs joined into a tree
/// through dedicated junction vertices, one candidate set per blob. The
/// junctions keep every inter-blob bridge free of set vertices on at least
/// one endpoint, so the instance always validates as decomposable.
/// Deterministic per seed.
inline MindrInstance gen_decomposable(const DecomposableGenOptions& opts) {
    const int k = opts.k;
    const int junctions = k - 1;
    if (k < 1 || opts.set_size < 1) {
        throw InputError("gen_decomposable: k and set_size must be positive");
    }
    if (opts.n < k * opts.set_size + junctions) {
        throw InputError("gen_decomposable: need n >= k*set_size + (k-1), got n=" +
                         std::to_string(opts.n));
    }
    RandomSource rng(opts.seed);
    const int blob_budget = opts.n - junctions;
    std::vector<int> blob_size(static_cast<std::size_t>(k), blob_budget / k);
    for (int b = 0; b < blob_budget % k; ++b) ++blob_size[static_cast<std::size_t>(b)];
    std::vector<int> blob_start(static_cast<std::size_t>(k), 0);
    for (int b = 1; b < k; ++b) {
        blob_start[static_cast<std::size_t>(b)] =
            blob_start[static_cast<std::size_t>(b - 1)] + blob_size[static_cast<std::size_t>(b - 1)];
    }
    const int junction_base = blob_budget;

    auto weight = [&]() { return opts.real_weights ? 0.5 + 2.0 * rng.next_unit() : 1.0; };

    std::vector<Edge> edges;
    std::set<std::pair<int, int>> present;
    auto add_edge = [&](int u, int v, double w) {
        std::pair<int, int> key = std::minmax(u, v);
        if (present.insert(key).second) {
            edges.push_back({key.first, key.second, w});
            return true;
        }
        return false;
    };

    for (int b = 0; b < k; ++b) {
        int start = blob_start[static_cast<std::size_t>(b)];
        int size = blob_size[static_cast<std::size_t>(b)];
        if (opts.clique_blobs) {
            for (int i = 0; i < size; ++i) {
                for (int j = i + 1; j < size; ++j) add_edge(start + i, start + j, weight());
            }
        } else {
            // Random tree: each vertex hangs off an earlier one, so any
            // prefix of the blob stays connected.
            for (int i = 1; i < size; ++i) {
                int parent = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i)));
                add_edge(start + parent, start + i, weight());
            }
        }
    }
    for (int b = 1; b < k; ++b) {
        int parent = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(b)));
        int junction = junction_base + b - 1;
        int port_parent = blob_start[static_cast<std::size_t>(parent)] +
                          static_cast<int>(rng.next_below(
                              static_cast<std::uint64_t>(blob_size[static_cast<std::size_t>(parent)])));
        int port_child = blob_start[static_cast<std::size_t>(b)] +
                         static_cast<int>(rng.next_below(
                             static_cast<std::uint64_t>(blob_size[static_cast<std::size_t>(b)])));
        add_edge(port_parent, junction, weight());
        add_edge(junction, port_child, weight());
    }
    if (!opts.clique_blobs) {
        std::size_t extra = opts.edge_target > edges.size()
                                ? opts.edge_target - edges.size()
                                : (opts.edge_target == 0
                                       ? static_cast<std::size_t>(opts.extra_edge_fraction * opts.n)
                                       : 0);
        std::size_t attempts = extra * 8 + 16;
        while (extra > 0 && attempts-- > 0) {
            int b = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k)));
            int size = blob_size[static_cast<std::size_t>(b)];
            if (size < 2) continue;
            int u = blob_start[static_cast<std::size_t>(b)] +
                    static_cast<int>(rng.next_below(static_cast<std::uint64_t>(size)));
            int v = blob_start[static_cast<std::size_t>(b)] +
                    static_cast<int>(rng.next_below(static_cast<std::uint64_t>(size)));
            if (u == v) continue;
            if (add_edge(u, v, weight())) --extra;
        }
    }

    MindrInstance inst;
    inst.graph = Graph(opts.n, std::move(edges));
    inst.sets.reserve(static_cast<std::size_t>(k));
    for (int b = 0; b < k; ++b) {
        int start = blob_start[static_cast<std::size_t>(b)];
        int count = opts.sets_cover_blobs ? blob_size[static_cast<std::size_t>(b)] : opts.set_size;
        std::vector<int> set(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) set[static_cast<std::size_t>(i)] = start + i;
        inst.sets.push_back(std::move(set));
    }
    inst.fair.assign(static_cast<std::size_t>(k), {});
    for (int a = 0; a < opts.anchor_count; ++a) {
        int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(opts.n)));
        double w = opts.real_weights ? 0.25 + 2.0 * rng.next_unit()
                                     : static_cast<double>(1 + rng.next_below(3));
        inst.anchors.push_back({v, w});
    }
    return inst;
}

struct GeneralGenOptions {
    int n = 0;
    int k = 1;
    int set_size = 1;
    double overlap = 0.0;             // chance a set is seeded inside an earlier one
    double extra_edge_fraction = 0.5; // random edges beyond the spanning tree, times n
    std::uint64_t seed = 0;
};

/// Generates a general connected instance: a random connected graph with k
/// connected candidate sets grown by BFS. With overlap 0 the sets are
/// pairwise disjoint; otherwise each later set overlaps an earlier one with
/// the given probability. Deterministic per seed.
inline MindrInstance gen_general(const GeneralGenOptions& opts) {
    if (opts.k < 1 || opts.set_size < 1) {
        throw InputError("gen_general: k and set_size must be positive");
    }
    if (opts.n < opts.k * opts.set_size) {
        throw InputError("gen_general: need n >= k*set_size");
    }
    RandomSource rng(opts.seed);
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> present;
    for (int i = 1; i < opts.n; ++i) {
        int parent = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i)));
        present.emplace(std::pair<int, int>(std::minmax(parent, i)));
        edges.push_back({std::min(parent, i), std::max(parent, i), 1.0});
    }
    std::size_t extra = static_cast<std::size_t>(opts.extra_edge_fraction * opts.n);
    std::size_t attempts = extra * 8 + 16;
    while (extra > 0 && attempts-- > 0) {
        int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(opts.n)));
        int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(opts.n)));
        if (u == v) continue;
        std::pair<int, int> key = std::minmax(u, v);
        if (present.insert(key).second) {
            edges.push_back({key.first, key.second, 1.0});
            --extra;
        }
    }
    Graph g(opts.n, edges);

    std::vector<char> used(static_cast<std::size_t>(opts.n), 0);
    MindrInstance inst;
    inst.graph = g;

    auto grow = [&](int seed_vertex, bool unused_only) {
        std::vector<int> picked;
        std::vector<char> seen(static_cast<std::size_t>(opts.n), 0);
        std::vector<int> queue{seed_vertex};
        seen[static_cast<std::size_t>(seed_vertex)] = 1;
        for (std::size_t head = 0; head < queue.size() && picked.size() <
                                       static_cast<std::size_t>(opts.set_size); ++head) {
            int v = queue[head];
            picked.push_back(v);
            for (int to : g.neighbors(v)) {
                if (seen[static_cast<std::size_t>(to)]) continue;
                if (unused_only && used[static_cast<std::size_t>(to)]) continue;
                seen[static_cast<std::size_t>(to)] = 1;
                queue.push_back(to);
            }
        }
        return picked;
    };

    for (int i = 0; i < opts.k; ++i) {
        std::vector<int> picked;
        bool want_overlap = i > 0 && rng.next_unit() < opts.overlap;
        if (want_overlap) {
            const auto& donor = inst.sets[static_cast<std::size_t>(
                rng.next_below(static_cast<std::uint64_t>(i)))];
            int seed_vertex =
                donor[static_cast<std::size_t>(rng.next_below(donor.size()))];
            picked = grow(seed_vertex, false);
        } else {
            std::vector<int> unused;
            for (int v = 0; v < opts.n; ++v) {
                if (!used[static_cast<std::size_t>(v)]) unused.push_back(v);
            }
            if (!unused.empty()) {
                std::size_t offset = static_cast<std::size_t>(rng.next_below(unused.size()));
                for (std::size_t t = 0; t < unused.size(); ++t) {
                    int start = unused[(offset + t) % unused.size()];
                    auto attempt = grow(start, true);
                    if (attempt.size() == static_cast<std::size_t>(opts.set_size)) {
                        picked = std::move(attempt);
                        break;
                    }
                }
            }
        }
        if (picked.size() != static_cast<std::size_t>(opts.set_size)) {
            throw InputError("gen_general: could not place set " + std::to_string(i + 1) +
                             "; increase n or reduce k*set_size");
        }
        for (int v : picked) used[static_cast<std::size_t>(v)] = 1;
        std::sort(picked.begin(), picked.end());
        inst.sets.push_back(std::move(picked));
    }
    inst.fair.assign(static_cast<std::size_t>(opts.k), {});
    return inst;
}

/// Tree of cliques with the candidate sets covering whole cliques: the
/// quotient of the spanning-tree reduction is itself a tree, so the
/// reduction preserves the graph and the heuristic returns the optimum.
inline MindrInstance gen_tree_of_cliques(int k, int clique_size, std::uint64_t seed) {
    DecomposableGenOptions opts;
    opts.n = k * clique_size + (k - 1);
    opts.k = k;
    opts.set_size = clique_size;
    opts.seed = seed;
    opts.clique_blobs = true;
    opts.sets_cover_blobs = true;
    return gen_decomposable(opts);
}

} // namespace mindr
