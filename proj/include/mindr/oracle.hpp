#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mindr/instance.hpp"

namespace mindr {

/// Maximum Capacity Representatives instance: disjoint element sets with a
/// symmetric nonnegative capacity on cross-set pairs. Pairs without an
/// explicit capacity count as capacity 0.
struct MaxCrsInstance {
    std::vector<std::vector<std::int64_t>> sets;                 // each sorted ascending
    std::map<std::pair<std::int64_t, std::int64_t>, double> capacity; // key (min, max)

    double capacity_of(std::int64_t x, std::int64_t y) const {
        auto it = capacity.find(std::pair<std::int64_t, std::int64_t>(std::minmax(x, y)));
        return it == capacity.end() ? 0.0 : it->second;
    }
};

struct BruteForceOptions {
    std::uint64_t cap = 1'000'000; // refuse searches larger than this many tuples
};

namespace detail {

// Product of the set sizes, saturating well below the uint64 limit.
inline std::uint64_t choice_product(const std::vector<std::vector<int>>& sets) {
    constexpr std::uint64_t limit = std::uint64_t(1) << 62;
    std::uint64_t product = 1;
    for (const auto& set : sets) {
        if (set.empty()) throw InputError("brute force: empty candidate set");
        if (product > limit / set.size()) return limit;
        product *= set.size();
    }
    return product;
}

} // namespace detail

/// Exhaustive exact solver. Enumerates the full Cartesian product of the
/// candidate sets in lexicographic order and keeps the strictly best tuple,
/// so ties resolve to the lexicographically smallest choice vector.
inline Solution solve_bruteforce(const MindrInstance& inst, const BruteForceOptions& opts = {}) {
    std::uint64_t product = detail::choice_product(inst.sets);
    if (product > opts.cap) {
        throw CapExceededError("brute force: candidate product " + std::to_string(product) +
                                   " exceeds cap " + std::to_string(opts.cap),
                               product);
    }
    // Distance rows from every distinct candidate vertex.
    std::vector<int> candidates;
    for (const auto& set : inst.sets) candidates.insert(candidates.end(), set.begin(), set.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::map<int, std::vector<double>> rows;
    std::map<int, double> anchor_term;
    for (int c : candidates) {
        auto row = shortest_paths(inst.graph, c).dist;
        double term = 0.0;
        for (const AnchorEntry& z : inst.anchors) {
            term += z.weight * row[static_cast<std::size_t>(z.vertex)];
        }
        anchor_term[c] = term;
        rows.emplace(c, std::move(row));
    }

    const int k = inst.set_count();
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    std::vector<int> tuple(static_cast<std::size_t>(k));
    Solution best;
    bool have_best = false;
    while (true) {
        for (int i = 0; i < k; ++i) tuple[static_cast<std::size_t>(i)] = inst.sets[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
        double cost = 0.0;
        for (int i = 0; i < k; ++i) {
            const auto& row = rows.at(tuple[static_cast<std::size_t>(i)]);
            for (int j = 0; j < k; ++j) {
                cost += row[static_cast<std::size_t>(tuple[static_cast<std::size_t>(j)])];
            }
            cost += anchor_term.at(tuple[static_cast<std::size_t>(i)]);
        }
        if (!have_best || cost < best.cost) {
            best.choices = tuple;
            best.cost = cost;
            have_best = true;
        }
        int pos = k - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == inst.sets[static_cast<std::size_t>(pos)].size()) {
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return best;
}

inline double maxcrs_alpha(const MaxCrsInstance& mc) {
    if (mc.sets.size() < 2) {
        throw InputError("MaxCRS reduction: need at least two sets");
    }
    if (mc.capacity.empty()) {
        throw InputError("MaxCRS reduction: no capacities given, alpha undefined");
    }
    double max_cap = 0.0; // missing pairs count as 0, so the max is at least 0
    for (const auto& [key, c] : mc.capacity) max_cap = std::max(max_cap, c);
    return 2.0 * max_cap;
}

/// Builds the weighted selection instance of the capacity-to-distance
/// reduction: one vertex per element, and for every cross-set pair (x, y)
/// an edge of weight alpha - c(x, y) with alpha twice the maximum capacity.
/// Elements are renumbered densely in ascending order of their original ids.
inline MindrInstance reduce_to_mindir(const MaxCrsInstance& mc) {
    double alpha = maxcrs_alpha(mc);
    std::vector<std::int64_t> elements;
    for (const auto& set : mc.sets) elements.insert(elements.end(), set.begin(), set.end());
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
        throw InputError("MaxCRS reduction: sets are not disjoint");
    }
    auto dense = [&](std::int64_t x) {
        return static_cast<int>(std::lower_bound(elements.begin(), elements.end(), x) -
                                elements.begin());
    };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < mc.sets.size(); ++i) {
        for (std::size_t j = i + 1; j < mc.sets.size(); ++j) {
            for (std::int64_t x : mc.sets[i]) {
                for (std::int64_t y : mc.sets[j]) {
                    edges.push_back({std::min(dense(x), dense(y)), std::max(dense(x), dense(y)),
                                     alpha - mc.capacity_of(x, y)});
                }
            }
        }
    }
    MindrInstance out;
    out.graph = Graph(static_cast<int>(elements.size()), std::move(edges));
    out.sets.reserve(mc.sets.size());
    for (const auto& set : mc.sets) {
        std::vector<int> mapped;
        mapped.reserve(set.size());
        for (std::int64_t x : set) mapped.push_back(dense(x));
        std::sort(mapped.begin(), mapped.end());
        out.sets.push_back(std::move(mapped));
    }
    out.fair.assign(out.sets.size(), {});
    return out;
}

/// Exhaustive maximum capacity of a system of representatives, measured as
/// the sum over ordered pairs (each unordered pair counts twice).
inline double solve_maxcrs_bruteforce(const MaxCrsInstance& mc,
                                      const BruteForceOptions& opts = {}) {
    std::uint64_t product = 1;
    for (const auto& set : mc.sets) {
        if (set.empty()) throw InputError("MaxCRS brute force: empty set");
        if (product > opts.cap / set.size()) {
            throw CapExceededError("MaxCRS brute force: tuple count over cap", opts.cap + 1);
        }
        product *= set.size();
    }
    const std::size_t k = mc.sets.size();
    std::vector<std::size_t> idx(k, 0);
    double best = -1.0;
    while (true) {
        double total = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                if (i == j) continue;
                total += mc.capacity_of(mc.sets[i][idx[i]], mc.sets[j][idx[j]]);
            }
        }
        best = std::max(best, total);
        std::size_t pos = k;
        while (pos > 0 && ++idx[pos - 1] == mc.sets[pos - 1].size()) {
            idx[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return best;
}

/// Test predicate for the capacity reduction: a system of representatives
/// with capacity above h exists iff the reduced selection instance has a
/// solution cheaper than k(k-1)*alpha - h. Both sides are evaluated by
/// independent brute force.
inline bool check_reduction_equivalence(const MaxCrsInstance& mc, double threshold_h) {
    double alpha = maxcrs_alpha(mc);
    double best_capacity = solve_maxcrs_bruteforce(mc);
    MindrInstance reduced = reduce_to_mindir(mc);
    double best_cost = solve_bruteforce(reduced).cost;
    double k = static_cast<double>(mc.sets.size());
    bool capacity_side = best_capacity > threshold_h;
    bool cost_side = best_cost < k * (k - 1.0) * alpha - threshold_h;
    return capacity_side == cost_side;
}

/// Removal-and-recount bridge oracle: an edge is reported iff deleting it
/// increases the number of connected components.
inline std::vector<std::pair<int, int>> naive_bridges(const Graph& g) {
    int base = connected_components(g).count;
    std::vector<std::pair<int, int>> out;
    for (const Edge& removed : g.edges()) {
        std::vector<Edge> rest;
        for (const Edge& e : g.edges()) {
            if (e.u == removed.u && e.v == removed.v) continue;
            rest.push_back(e);
        }
        if (connected_components(Graph(g.vertex_count(), std::move(rest))).count > base) {
            out.emplace_back(removed.u, removed.v);
        }
    }
    return out;
}

/// Floyd-Warshall reachability closure turned into component labels.
inline std::vector<int> naive_component_labels(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n),
                                         std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int v = 0; v < n; ++v) reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = true;
    for (const Edge& e : g.edges()) {
        reach[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
        reach[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
    }
    for (int mid = 0; mid < n; ++mid) {
        for (int a = 0; a < n; ++a) {
            if (!reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(mid)]) continue;
            for (int b = 0; b < n; ++b) {
                if (reach[static_cast<std::size_t>(mid)][static_cast<std::size_t>(b)]) {
                    reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
                }
            }
        }
    }
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (label[static_cast<std::size_t>(v)] != -1) continue;
        for (int w = v; w < n; ++w) {
            if (reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) {
                label[static_cast<std::size_t>(w)] = next;
            }
        }
        ++next;
    }
    return label;
}

/// Direct check of the useful-edge definition on every bridge: the edge is a
/// bridge, its endpoints are not in one common set, and at least one set
/// lies fully in each of the two components left by its removal.
inline std::vector<std::pair<int, int>> naive_useful_edges(
    const Graph& g, const std::vector<std::vector<int>>& sets) {
    if (!is_connected(g)) {
        throw InputError("naive_useful_edges: graph must be connected");
    }
    std::vector<int> set_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (int v : sets[i]) set_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> out;
    for (const Edge& removed : g.edges()) {
        int su = set_of[static_cast<std::size_t>(removed.u)];
        int sv = set_of[static_cast<std::size_t>(removed.v)];
        if (su != -1 && su == sv) continue;
        std::vector<Edge> rest;
        for (const Edge& e : g.edges()) {
            if (e.u == removed.u && e.v == removed.v) continue;
            rest.push_back(e);
        }
        auto labels = connected_components(Graph(g.vertex_count(), std::move(rest)));
        if (labels.count < 2) continue; // not a bridge
        bool side_u = false, side_v = false;
        int label_u = labels.label[static_cast<std::size_t>(removed.u)];
        int label_v = labels.label[static_cast<std::size_t>(removed.v)];
        for (const auto& set : sets) {
            bool all_u = true, all_v = true;
            for (int x : set) {
                all_u = all_u && labels.label[static_cast<std::size_t>(x)] == label_u;
                all_v = all_v && labels.label[static_cast<std::size_t>(x)] == label_v;
            }
            side_u = side_u || all_u;
            side_v = side_v || all_v;
        }
        if (side_u && side_v) out.emplace_back(removed.u, removed.v);
    }
    return out;
}

} // namespace mindr
