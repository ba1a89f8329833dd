#pragma once

#include <algorithm>
#include <numeric>
#include <queue>
#include <span>
#include <vector>

#include "mindr/exact.hpp"
#include "mindr/instance.hpp"

namespace mindr {

/// Partition of the set indices into maximal overlap-connected groups,
/// together with the merged vertex set of each group.
struct IndexGrouping {
    std::vector<std::vector<int>> groups;      // 0-based set indices, each ascending
    std::vector<std::vector<int>> merged_sets; // union of the group's sets, ascending
};

/// Groups set indices by the transitive closure of "shares a vertex".
/// Groups are ordered by their smallest set index.
inline IndexGrouping group_overlapping_sets(const MindrInstance& inst) {
    const int k = inst.set_count();
    std::vector<int> parent(static_cast<std::size_t>(k));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };
    std::vector<int> owner(static_cast<std::size_t>(inst.graph.vertex_count()), -1);
    for (int i = 0; i < k; ++i) {
        for (int v : inst.sets[static_cast<std::size_t>(i)]) {
            if (owner[static_cast<std::size_t>(v)] == -1) {
                owner[static_cast<std::size_t>(v)] = i;
            } else {
                unite(owner[static_cast<std::size_t>(v)], i);
            }
        }
    }
    std::vector<std::vector<int>> by_root(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) by_root[static_cast<std::size_t>(find(i))].push_back(i);
    IndexGrouping out;
    for (int r = 0; r < k; ++r) {
        if (by_root[static_cast<std::size_t>(r)].empty()) continue;
        std::vector<int> merged;
        for (int i : by_root[static_cast<std::size_t>(r)]) {
            merged.insert(merged.end(), inst.sets[static_cast<std::size_t>(i)].begin(),
                          inst.sets[static_cast<std::size_t>(i)].end());
        }
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        out.groups.push_back(std::move(by_root[static_cast<std::size_t>(r)]));
        out.merged_sets.push_back(std::move(merged));
    }
    return out;
}

/// The reduced instance built by the spanning-tree transform, plus the
/// surviving tree edges and the vertex-to-class map used for the quotient.
struct ReducedInstance {
    MindrInstance merged;                       // (G', {Y_t}), anchors carried over
    std::vector<std::pair<int, int>> tree_edges; // representative g-edges, BFS order
    std::vector<int> vertex_class;               // dense class id per vertex
};

/// Quotients the graph by "same merged set" (vertices in no set stay
/// singletons), runs a breadth-first traversal over the quotient rooted at
/// the class of vertex 0, keeps one representative g-edge per tree edge
/// (the lexicographically smallest of its preimage), and assembles
/// G' = representatives + all intra-merged-set edges. The result is
/// decomposable by construction.
inline ReducedInstance reduce_to_decomposable(const MindrInstance& inst,
                                              const IndexGrouping& grouping) {
    const Graph& g = inst.graph;
    if (!is_connected(g)) {
        throw InputError("spanning-tree reduction: graph must be connected");
    }
    for (const auto& merged : grouping.merged_sets) {
        if (!detail::induced_connected(g, merged)) {
            throw InputError("spanning-tree reduction: a merged set is not connected "
                             "(apply a connection transform first)");
        }
    }
    std::vector<int> merged_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t t = 0; t < grouping.merged_sets.size(); ++t) {
        for (int v : grouping.merged_sets[t]) merged_of[static_cast<std::size_t>(v)] = static_cast<int>(t);
    }
    std::vector<int> classes(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        int t = merged_of[static_cast<std::size_t>(v)];
        classes[static_cast<std::size_t>(v)] =
            t == -1 ? v : grouping.merged_sets[static_cast<std::size_t>(t)].front();
    }
    QuotientGraph quotient = quotient_graph(g, classes);

    // BFS spanning tree over the quotient, neighbors in ascending class id.
    const int classes_n = quotient.graph.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(classes_n), 0);
    std::vector<std::pair<int, int>> class_tree;
    std::vector<int> queue;
    int root = quotient.class_of[0];
    seen[static_cast<std::size_t>(root)] = 1;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int c = queue[head];
        for (int to : quotient.graph.neighbors(c)) {
            if (!seen[static_cast<std::size_t>(to)]) {
                seen[static_cast<std::size_t>(to)] = 1;
                class_tree.emplace_back(c, to);
                queue.push_back(to);
            }
        }
    }
    if (static_cast<int>(queue.size()) != classes_n) {
        throw InputError("spanning-tree reduction: quotient graph is disconnected");
    }

    ReducedInstance out;
    out.vertex_class = quotient.class_of;
    std::vector<Edge> reduced_edges;
    for (const auto& [a, b] : class_tree) {
        std::pair<int, int> key = std::minmax(a, b);
        auto it = std::lower_bound(quotient.class_edges.begin(), quotient.class_edges.end(), key);
        const auto& pre = quotient.edge_preimage[static_cast<std::size_t>(
            it - quotient.class_edges.begin())];
        auto rep = pre.front(); // preimages are sorted; smallest pair wins
        out.tree_edges.push_back(rep);
        reduced_edges.push_back({rep.first, rep.second, g.edge_weight(rep.first, rep.second)});
    }
    for (const Edge& e : g.edges()) {
        int tu = merged_of[static_cast<std::size_t>(e.u)];
        int tv = merged_of[static_cast<std::size_t>(e.v)];
        if (tu != -1 && tu == tv) reduced_edges.push_back(e);
    }
    out.merged.graph = Graph(g.vertex_count(), std::move(reduced_edges));
    out.merged.sets = grouping.merged_sets;
    out.merged.anchors = inst.anchors;
    out.merged.fair.assign(grouping.merged_sets.size(), {});
    return out;
}

/// Spanning-tree heuristic: reduce to a decomposable instance, solve it
/// exactly, and expand merged groups by re-running the base-case rule per
/// original set inside the subgraph where the group bottomed out. The
/// reported cost is measured in the original graph.
inline Solution solve_spanning_tree(const MindrInstance& inst) {
    if (!is_connected(inst.graph)) {
        throw InputError("spanning-tree heuristic: graph must be connected");
    }
    for (const auto& set : inst.sets) {
        if (!detail::induced_connected(inst.graph, set)) {
            throw InputError("spanning-tree heuristic: every candidate set must induce a "
                             "connected subgraph (apply a connection transform first)");
        }
    }
    IndexGrouping grouping = group_overlapping_sets(inst);
    ReducedInstance reduced = reduce_to_decomposable(inst, grouping);
    DecomposableResult exact = solve_decomposable_detailed(reduced.merged);

    Solution out;
    out.choices.assign(inst.sets.size(), -1);
    for (std::size_t t = 0; t < grouping.groups.size(); ++t) {
        const auto& group = grouping.groups[t];
        if (group.size() == 1) {
            out.choices[static_cast<std::size_t>(group.front())] = exact.solution.choices[t];
            continue;
        }
        const BaseCaseRecord& record = exact.base_cases[t];
        for (int i : group) {
            out.choices[static_cast<std::size_t>(i)] = detail::base_case_in_mask(
                reduced.merged.graph, inst.sets[static_cast<std::size_t>(i)], record.anchors,
                record.mask);
        }
    }
    out.cost = objective(inst, out.choices);
    return out;
}

/// Minimum distance from x to any vertex of the target set, found by a
/// traversal from x that stops at the first target reached. Returns
/// kUnreachable when no target can be reached.
inline double hitting_distance(const Graph& g, int x, std::span<const int> targets) {
    if (targets.empty()) throw InputError("hitting_distance: empty target set");
    if (x < 0 || x >= g.vertex_count()) throw InputError("hitting_distance: vertex out of range");
    std::vector<int> sorted(targets.begin(), targets.end());
    std::sort(sorted.begin(), sorted.end());
    auto is_target = [&](int v) { return std::binary_search(sorted.begin(), sorted.end(), v); };
    if (g.unit_weights()) {
        if (is_target(x)) return 0.0;
        std::vector<double> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
        std::vector<int> queue{x};
        dist[static_cast<std::size_t>(x)] = 0.0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int to : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(to)] != kUnreachable) continue;
                dist[static_cast<std::size_t>(to)] = dist[static_cast<std::size_t>(v)] + 1.0;
                if (is_target(to)) return dist[static_cast<std::size_t>(to)];
                queue.push_back(to);
            }
        }
        return kUnreachable;
    }
    std::vector<double> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[static_cast<std::size_t>(x)] = 0.0;
    heap.emplace(0.0, x);
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[static_cast<std::size_t>(v)]) continue;
        if (is_target(v)) return d; // settled: d is final
        auto nbs = g.neighbors(v);
        auto ws = g.neighbor_weights(v);
        for (std::size_t i = 0; i < nbs.size(); ++i) {
            double nd = d + ws[i];
            if (nd < dist[static_cast<std::size_t>(nbs[i])]) {
                dist[static_cast<std::size_t>(nbs[i])] = nd;
                heap.emplace(nd, nbs[i]);
            }
        }
    }
    return kUnreachable;
}

namespace detail {

/// Hitting distances from x to every set at once: one traversal that stops
/// as soon as all sets have been reached.
inline std::vector<double> hitting_profile(const Graph& g, int x,
                                           const std::vector<std::vector<int>>& sets_of_vertex,
                                           std::size_t set_count) {
    std::vector<double> hit(set_count, kUnreachable);
    std::size_t remaining = set_count;
    auto visit = [&](int v, double d) {
        for (int s : sets_of_vertex[static_cast<std::size_t>(v)]) {
            if (hit[static_cast<std::size_t>(s)] == kUnreachable) {
                hit[static_cast<std::size_t>(s)] = d;
                --remaining;
            }
        }
        return remaining == 0;
    };
    std::vector<double> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
    if (g.unit_weights()) {
        std::vector<int> queue{x};
        dist[static_cast<std::size_t>(x)] = 0.0;
        if (visit(x, 0.0)) return hit;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int to : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(to)] != kUnreachable) continue;
                dist[static_cast<std::size_t>(to)] = dist[static_cast<std::size_t>(v)] + 1.0;
                if (visit(to, dist[static_cast<std::size_t>(to)])) return hit;
                queue.push_back(to);
            }
        }
        return hit;
    }
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[static_cast<std::size_t>(x)] = 0.0;
    heap.emplace(0.0, x);
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[static_cast<std::size_t>(v)]) continue;
        if (visit(v, d)) return hit;
        auto nbs = g.neighbors(v);
        auto ws = g.neighbor_weights(v);
        for (std::size_t i = 0; i < nbs.size(); ++i) {
            double nd = d + ws[i];
            if (nd < dist[static_cast<std::size_t>(nbs[i])]) {
                dist[static_cast<std::size_t>(nbs[i])] = nd;
                heap.emplace(nd, nbs[i]);
            }
        }
    }
    return hit;
}

} // namespace detail

/// Hitting-distance heuristic: independently per set, pick the candidate
/// minimizing the sum of hitting distances to every set (its own set
/// contributes 0; the 1/k normalization cannot change the argmin). Ties go
/// to the lowest vertex id. The cost is the objective of the chosen vector.
inline Solution solve_hitting(const MindrInstance& inst) {
    const Graph& g = inst.graph;
    if (!is_connected(g)) {
        throw InputError("hitting heuristic: graph must be connected");
    }
    for (const auto& set : inst.sets) {
        if (!detail::induced_connected(g, set)) {
            throw InputError("hitting heuristic: every candidate set must induce a connected "
                             "subgraph (apply a connection transform first)");
        }
    }
    std::vector<std::vector<int>> sets_of_vertex(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < inst.sets.size(); ++i) {
        for (int v : inst.sets[i]) sets_of_vertex[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }
    Solution out;
    out.choices.reserve(inst.sets.size());
    for (const auto& set : inst.sets) {
        int best = set.front();
        double best_score = kUnreachable;
        for (int x : set) {
            auto hit = detail::hitting_profile(g, x, sets_of_vertex, inst.sets.size());
            double score = 0.0;
            for (double d : hit) score += d;
            if (score < best_score) {
                best_score = score;
                best = x;
            }
        }
        out.choices.push_back(best);
    }
    out.cost = objective(inst, out.choices);
    return out;
}

} // namespace mindr
