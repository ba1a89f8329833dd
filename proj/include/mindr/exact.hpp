#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mindr/instance.hpp"

namespace mindr {

/// A bridge whose removal separates at least two candidate sets and whose
/// endpoints do not share a set. u lies on the search-root side, v on the
/// subtree side. side_u_sets / side_v_sets list the sets fully contained in
/// each side; on decomposable inputs they partition all set indices.
struct UsefulEdge {
    int u = -1;
    int v = -1;
    std::vector<int> side_u_sets;
    std::vector<int> side_v_sets;
};

namespace detail {

struct UsefulSearchOutcome {
    bool reached_all = false; // DFS covered the whole masked subgraph
    bool found = false;
    int parent_vertex = -1;
    int child_vertex = -1;
    std::vector<int> inside_sets;  // positions into `sets`, fully in the child subtree
    std::vector<int> outside_sets; // positions with no vertex in the child subtree
};

/// One DFS over the masked subgraph, then a root-to-leaf scan of the tree
/// edges for the first edge that is a bridge, joins no single set's two
/// vertices, and has at least one set fully inside and one fully outside
/// the split. Every bridge is a DFS tree edge, so scanning tree edges in
/// discovery order examines each candidate exactly once.
inline UsefulSearchOutcome find_useful_edge_in_mask(const Graph& g,
                                                    const std::vector<std::span<const int>>& sets,
                                                    std::span<const std::uint8_t> mask, int root,
                                                    std::size_t mask_count) {
    const int n = g.vertex_count();
    UsefulSearchOutcome out;
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<int> subtree(static_cast<std::size_t>(n), 1);
    std::vector<std::pair<int, int>> tree_edges; // (parent, child) in discovery order
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        std::size_t next;
    };
    std::vector<Frame> stack;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        auto nbs = g.neighbors(f.v);
        if (f.next < nbs.size()) {
            int to = nbs[f.next++];
            if (to == f.parent) continue;
            if (!mask.empty() && !mask[static_cast<std::size_t>(to)]) continue;
            if (disc[static_cast<std::size_t>(to)] == -1) {
                disc[static_cast<std::size_t>(to)] = low[static_cast<std::size_t>(to)] = timer++;
                tree_edges.emplace_back(f.v, to);
                int parent = f.v;
                stack.push_back({to, parent, 0});
            } else {
                low[static_cast<std::size_t>(f.v)] =
                    std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(to)]);
            }
        } else {
            int v = f.v;
            int p = f.parent;
            stack.pop_back();
            if (p != -1) {
                low[static_cast<std::size_t>(p)] =
                    std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                subtree[static_cast<std::size_t>(p)] += subtree[static_cast<std::size_t>(v)];
            }
        }
    }
    out.reached_all = static_cast<std::size_t>(timer) == mask_count;

    const int k = static_cast<int>(sets.size());
    std::vector<int> set_of(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> member_disc(static_cast<std::size_t>(k));
    for (int s = 0; s < k; ++s) {
        member_disc[static_cast<std::size_t>(s)].reserve(sets[static_cast<std::size_t>(s)].size());
        for (int v : sets[static_cast<std::size_t>(s)]) {
            if (set_of[static_cast<std::size_t>(v)] != -1) {
                throw InputError("useful-edge search: a vertex belongs to two sets");
            }
            set_of[static_cast<std::size_t>(v)] = s;
            member_disc[static_cast<std::size_t>(s)].push_back(disc[static_cast<std::size_t>(v)]);
        }
        std::sort(member_disc[static_cast<std::size_t>(s)].begin(),
                  member_disc[static_cast<std::size_t>(s)].end());
    }

    for (const auto& [u, v] : tree_edges) {
        if (low[static_cast<std::size_t>(v)] <= disc[static_cast<std::size_t>(u)]) continue; // not a bridge
        int su = set_of[static_cast<std::size_t>(u)];
        int sv = set_of[static_cast<std::size_t>(v)];
        if (su != -1 && su == sv) continue;
        int lo = disc[static_cast<std::size_t>(v)];
        int hi = lo + subtree[static_cast<std::size_t>(v)] - 1;
        std::vector<int> inside, outside;
        for (int s = 0; s < k; ++s) {
            const auto& md = member_disc[static_cast<std::size_t>(s)];
            auto begin = std::lower_bound(md.begin(), md.end(), lo);
            auto end = std::upper_bound(md.begin(), md.end(), hi);
            std::size_t count = static_cast<std::size_t>(end - begin);
            if (count == md.size()) {
                inside.push_back(s);
            } else if (count == 0) {
                outside.push_back(s);
            }
        }
        if (!inside.empty() && !outside.empty()) {
            out.found = true;
            out.parent_vertex = u;
            out.child_vertex = v;
            out.inside_sets = std::move(inside);
            out.outside_sets = std::move(outside);
            return out;
        }
    }
    return out;
}

/// Base-case selection: the candidate minimizing the weighted distance sum
/// to every anchor entry, distances measured inside the masked subgraph.
/// One sweep per distinct anchor vertex; ties go to the lowest vertex id.
inline int base_case_in_mask(const Graph& g, std::span<const int> candidates,
                             std::span<const AnchorEntry> anchors,
                             std::span<const std::uint8_t> mask) {
    if (candidates.empty()) {
        throw InputError("base case: empty candidate set");
    }
    std::vector<int> order(candidates.begin(), candidates.end());
    std::sort(order.begin(), order.end());
    if (anchors.empty()) {
        return order.front();
    }
    std::map<int, double> weight_by_vertex;
    for (const AnchorEntry& z : anchors) {
        weight_by_vertex[z.vertex] += z.weight;
    }
    std::vector<double> score(order.size(), 0.0);
    for (const auto& [vertex, weight] : weight_by_vertex) {
        auto row = distances_in_mask(g, vertex, mask);
        for (std::size_t i = 0; i < order.size(); ++i) {
            score[i] += weight * row[static_cast<std::size_t>(order[i])];
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (score[i] < score[best]) best = i;
    }
    return order[best];
}

} // namespace detail

/// Searches for a useful edge of the whole graph with respect to the given
/// candidate sets. Deterministic: the DFS is rooted at the lowest-id vertex
/// of the first set, children are explored in ascending id order, and the
/// first qualifying tree edge on the walk from the root is returned.
inline std::optional<UsefulEdge> find_useful_edge(const Graph& g,
                                                  const std::vector<std::vector<int>>& sets) {
    if (g.vertex_count() == 0) {
        throw InputError("find_useful_edge: empty graph");
    }
    if (sets.empty()) {
        return std::nullopt;
    }
    for (const auto& set : sets) {
        if (set.empty()) throw InputError("find_useful_edge: empty candidate set");
    }
    int root = *std::min_element(sets.front().begin(), sets.front().end());
    std::vector<std::span<const int>> spans(sets.begin(), sets.end());
    auto res = detail::find_useful_edge_in_mask(g, spans, {}, root,
                                                static_cast<std::size_t>(g.vertex_count()));
    if (!res.reached_all) {
        throw InputError("find_useful_edge: graph must be connected");
    }
    if (!res.found) return std::nullopt;
    return UsefulEdge{res.parent_vertex, res.child_vertex, std::move(res.outside_sets),
                      std::move(res.inside_sets)};
}

/// Single-set selection: the element of the candidate set minimizing the
/// weighted distance sum over all anchor entries (lowest id among ties;
/// lowest id outright when there are no anchors).
inline int solve_base_case(const Graph& g, const std::vector<int>& candidates,
                           const std::vector<AnchorEntry>& anchors) {
    for (int v : candidates) {
        if (v < 0 || v >= g.vertex_count()) throw InputError("base case: candidate out of range");
    }
    for (const AnchorEntry& z : anchors) {
        if (z.vertex < 0 || z.vertex >= g.vertex_count()) {
            throw InputError("base case: anchor out of range");
        }
    }
    return detail::base_case_in_mask(g, candidates, anchors, {});
}

/// Where each candidate set ended up when the recursion bottomed out: the
/// masked subgraph it was solved in and the anchor multiset accumulated on
/// the way down. The spanning-tree heuristic re-runs the base-case rule per
/// original set inside this context.
struct BaseCaseRecord {
    int set_index = -1;
    int chosen = -1;
    std::vector<std::uint8_t> mask;
    std::vector<AnchorEntry> anchors;
};

struct DecomposableResult {
    Solution solution;
    std::vector<BaseCaseRecord> base_cases; // indexed by set
};

/// Exact solver for decomposable instances. Splits at a useful edge, pushes
/// the two sides (with the cut endpoint added to each side's anchors at
/// weight 2 * |other side's sets| + total anchor weight beyond the cut) onto
/// an explicit work stack, and solves single-set subinstances by the base
/// case. Subinstances keep global vertex ids and carry a membership mask.
/// Fails with NotDecomposableError when some subinstance with two or more
/// sets has no useful edge. The returned cost is recomputed from scratch on
/// the original instance.
inline DecomposableResult solve_decomposable_detailed(const MindrInstance& inst) {
    const Graph& g = inst.graph;
    const int k = inst.set_count();
    if (k == 0) throw InputError("solver: instance has no candidate sets");
    for (const auto& set : inst.sets) {
        if (set.empty()) throw InputError("solver: empty candidate set");
        for (int v : set) {
            if (v < 0 || v >= g.vertex_count()) throw InputError("solver: set vertex out of range");
        }
    }
    for (const AnchorEntry& z : inst.anchors) {
        if (z.vertex < 0 || z.vertex >= g.vertex_count()) {
            throw InputError("solver: anchor vertex out of range");
        }
    }
    if (!is_connected(g)) {
        throw InputError("solver: graph must be connected");
    }
    {
        std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
        for (const auto& set : inst.sets) {
            for (int v : set) {
                if (seen[static_cast<std::size_t>(v)]) {
                    throw NotDecomposableError("solver: candidate sets overlap");
                }
                seen[static_cast<std::size_t>(v)] = 1;
            }
        }
    }

    struct Sub {
        std::vector<std::uint8_t> mask;
        std::size_t mask_count;
        std::vector<int> set_ids; // ascending global set indices
        std::vector<AnchorEntry> anchors;
    };
    std::vector<Sub> work;
    {
        Sub top;
        top.mask.assign(static_cast<std::size_t>(g.vertex_count()), 1);
        top.mask_count = static_cast<std::size_t>(g.vertex_count());
        top.set_ids.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) top.set_ids[static_cast<std::size_t>(i)] = i;
        top.anchors = inst.anchors;
        work.push_back(std::move(top));
    }

    DecomposableResult result;
    result.solution.choices.assign(static_cast<std::size_t>(k), -1);
    result.base_cases.resize(static_cast<std::size_t>(k));

    while (!work.empty()) {
        Sub sub = std::move(work.back());
        work.pop_back();
        if (sub.set_ids.size() == 1) {
            int sid = sub.set_ids.front();
            int chosen = detail::base_case_in_mask(g, inst.sets[static_cast<std::size_t>(sid)],
                                                   sub.anchors, sub.mask);
            result.solution.choices[static_cast<std::size_t>(sid)] = chosen;
            result.base_cases[static_cast<std::size_t>(sid)] =
                BaseCaseRecord{sid, chosen, std::move(sub.mask), std::move(sub.anchors)};
            continue;
        }

        std::vector<std::span<const int>> spans;
        spans.reserve(sub.set_ids.size());
        for (int sid : sub.set_ids) spans.emplace_back(inst.sets[static_cast<std::size_t>(sid)]);
        const auto& first_set = inst.sets[static_cast<std::size_t>(sub.set_ids.front())];
        int root = *std::min_element(first_set.begin(), first_set.end());
        auto res = detail::find_useful_edge_in_mask(g, spans, sub.mask, root, sub.mask_count);
        if (!res.reached_all) {
            throw InputError("solver: subinstance graph is disconnected");
        }
        if (!res.found) {
            throw NotDecomposableError("no useful edge separates the " +
                                       std::to_string(sub.set_ids.size()) + " remaining sets");
        }
        if (res.inside_sets.size() + res.outside_sets.size() != sub.set_ids.size()) {
            throw NotDecomposableError("a candidate set straddles the separating bridge");
        }
        const int t0 = res.parent_vertex; // outside / parent side
        const int t1 = res.child_vertex;  // inside / subtree side

        // Component of t0 in the masked subgraph minus the useful edge.
        std::vector<std::uint8_t> mask0(sub.mask.size(), 0);
        std::size_t count0 = 0;
        {
            std::vector<int> queue{t0};
            mask0[static_cast<std::size_t>(t0)] = 1;
            ++count0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                int v = queue[head];
                for (int to : g.neighbors(v)) {
                    if (!sub.mask[static_cast<std::size_t>(to)]) continue;
                    if ((v == t0 && to == t1) || (v == t1 && to == t0)) continue;
                    if (!mask0[static_cast<std::size_t>(to)]) {
                        mask0[static_cast<std::size_t>(to)] = 1;
                        ++count0;
                        queue.push_back(to);
                    }
                }
            }
        }
        std::vector<std::uint8_t> mask1(sub.mask.size(), 0);
        for (std::size_t v = 0; v < sub.mask.size(); ++v) {
            mask1[v] = static_cast<std::uint8_t>(sub.mask[v] && !mask0[v]);
        }
        std::size_t count1 = sub.mask_count - count0;

        std::vector<AnchorEntry> anchors0, anchors1;
        double weight_sum0 = 0.0, weight_sum1 = 0.0;
        for (const AnchorEntry& z : sub.anchors) {
            if (mask0[static_cast<std::size_t>(z.vertex)]) {
                anchors0.push_back(z);
                weight_sum0 += z.weight;
            } else {
                anchors1.push_back(z);
                weight_sum1 += z.weight;
            }
        }
        std::vector<int> ids0, ids1;
        ids0.reserve(res.outside_sets.size());
        ids1.reserve(res.inside_sets.size());
        for (int pos : res.outside_sets) ids0.push_back(sub.set_ids[static_cast<std::size_t>(pos)]);
        for (int pos : res.inside_sets) ids1.push_back(sub.set_ids[static_cast<std::size_t>(pos)]);

        // Cut endpoints absorb the far side: weight 2 * |far sets| + far anchor mass.
        anchors0.push_back({t0, 2.0 * static_cast<double>(ids1.size()) + weight_sum1});
        anchors1.push_back({t1, 2.0 * static_cast<double>(ids0.size()) + weight_sum0});

        work.push_back({std::move(mask1), count1, std::move(ids1), std::move(anchors1)});
        work.push_back({std::move(mask0), count0, std::move(ids0), std::move(anchors0)});
    }

    result.solution.cost = objective(inst, result.solution.choices);
    return result;
}

inline Solution solve_decomposable(const MindrInstance& inst) {
    return solve_decomposable_detailed(inst).solution;
}

} // namespace mindr
