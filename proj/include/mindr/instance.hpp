#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "mindr/graph.hpp"

namespace mindr {

/// One weighted anchor entry. The anchor collection is a multiset: the same
/// vertex may appear in several entries, each contributing its own weight.
struct AnchorEntry {
    int vertex;
    double weight;
};

inline bool operator==(const AnchorEntry& a, const AnchorEntry& b) {
    return a.vertex == b.vertex && a.weight == b.weight;
}

/// A selection problem: pick one vertex per candidate set minimizing the sum
/// of pairwise distances plus the weighted distances to every anchor entry.
struct MindrInstance {
    Graph graph;
    std::vector<std::vector<int>> sets;  // candidate sets, each sorted ascending
    std::vector<AnchorEntry> anchors;    // optional weighted anchor multiset
    std::vector<std::vector<int>> fair;  // per set; empty vector = no fair subset

    int set_count() const { return static_cast<int>(sets.size()); }
};

struct Solution {
    std::vector<int> choices; // choices[i] is the vertex picked from sets[i]
    double cost = 0.0;
};

/// Objective value of a choice vector: sum of distances over all ordered
/// pairs (each unordered pair counts twice) plus the anchor term
/// sum_i sum_entries weight * d(choice_i, anchor).
inline double objective(const MindrInstance& inst, std::span<const int> choices) {
    if (choices.size() != inst.sets.size()) {
        throw InputError("objective: choice count does not match set count");
    }
    std::vector<int> distinct(choices.begin(), choices.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::map<int, std::vector<double>> rows;
    for (int v : distinct) {
        rows.emplace(v, shortest_paths(inst.graph, v).dist);
    }
    double pairwise = 0.0;
    for (int a : choices) {
        const auto& row = rows.at(a);
        for (int b : choices) {
            double d = row[static_cast<std::size_t>(b)];
            if (d == kUnreachable) {
                throw InputError("objective: chosen vertices are not mutually reachable");
            }
            pairwise += d;
        }
    }
    double anchor_term = 0.0;
    for (int a : choices) {
        const auto& row = rows.at(a);
        for (const AnchorEntry& z : inst.anchors) {
            double d = row[static_cast<std::size_t>(z.vertex)];
            if (d == kUnreachable) {
                throw InputError("objective: anchor unreachable from a chosen vertex");
            }
            anchor_term += z.weight * d;
        }
    }
    return pairwise + anchor_term;
}

struct ValidationReport {
    bool connected_graph = false;
    std::vector<bool> sets_connected;            // G[X_i] connected, per set
    bool sets_disjoint = false;
    bool cross_biconnected_clean = false;        // no cycle block mixes two sets
    bool decomposable = false;
    std::vector<bool> fair_in_largest_component; // per set; empty when no fair data
};

namespace detail {

inline bool induced_connected(const Graph& g, std::span<const int> verts) {
    if (verts.empty()) return false;
    if (verts.size() == 1) return true;
    std::set<int> members(verts.begin(), verts.end());
    std::vector<int> queue{verts.front()};
    std::set<int> seen{verts.front()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int to : g.neighbors(queue[head])) {
            if (members.count(to) && !seen.count(to)) {
                seen.insert(to);
                queue.push_back(to);
            }
        }
    }
    return seen.size() == members.size();
}

} // namespace detail

/// Checks the structural preconditions of the exact algorithm: every
/// candidate set induces a connected subgraph, the sets are pairwise
/// disjoint, and no two vertices of different sets lie on a common cycle
/// (share a biconnected block of three or more vertices). Two-vertex bridge
/// blocks are exempt from the cross check: a bridge directly joining two
/// sets still splits them, so it does not obstruct decomposition.
inline ValidationReport validate(const MindrInstance& inst) {
    ValidationReport report;
    const Graph& g = inst.graph;
    auto components = connected_components(g);
    report.connected_graph = components.count <= 1;

    report.sets_connected.reserve(inst.sets.size());
    for (const auto& set : inst.sets) {
        report.sets_connected.push_back(detail::induced_connected(g, set));
    }

    std::vector<int> set_of(static_cast<std::size_t>(g.vertex_count()), -1);
    report.sets_disjoint = true;
    for (std::size_t i = 0; i < inst.sets.size(); ++i) {
        for (int v : inst.sets[i]) {
            if (set_of[static_cast<std::size_t>(v)] != -1 &&
                set_of[static_cast<std::size_t>(v)] != static_cast<int>(i)) {
                report.sets_disjoint = false;
            }
            set_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }

    report.cross_biconnected_clean = true;
    if (report.sets_disjoint) {
        for (const auto& block : biconnected_components(g)) {
            if (block.size() < 3) continue;
            int seen_set = -1;
            for (int v : block) {
                int s = set_of[static_cast<std::size_t>(v)];
                if (s == -1) continue;
                if (seen_set == -1) {
                    seen_set = s;
                } else if (seen_set != s) {
                    report.cross_biconnected_clean = false;
                    break;
                }
            }
            if (!report.cross_biconnected_clean) break;
        }
    } else {
        // A shared vertex trivially shares every block with itself.
        report.cross_biconnected_clean = false;
    }

    report.decomposable =
        report.sets_disjoint && report.cross_biconnected_clean &&
        std::all_of(report.sets_connected.begin(), report.sets_connected.end(),
                    [](bool b) { return b; });

    bool any_fair = std::any_of(inst.fair.begin(), inst.fair.end(),
                                [](const auto& f) { return !f.empty(); });
    if (any_fair) {
        // Largest component, ties to the one containing the smallest vertex.
        std::vector<int> size(static_cast<std::size_t>(components.count), 0);
        for (int label : components.label) ++size[static_cast<std::size_t>(label)];
        int largest = 0;
        for (int c = 1; c < components.count; ++c) {
            if (size[static_cast<std::size_t>(c)] > size[static_cast<std::size_t>(largest)]) {
                largest = c;
            }
        }
        report.fair_in_largest_component.reserve(inst.fair.size());
        for (const auto& f : inst.fair) {
            bool ok = true;
            for (int v : f) {
                if (components.label[static_cast<std::size_t>(v)] != largest) ok = false;
            }
            report.fair_in_largest_component.push_back(ok);
        }
    }
    return report;
}

/// Turns every G[X_i] into a clique by adding unit-weight edges; edges
/// outside the sets are untouched. Idempotent.
inline MindrInstance connect_maximal(const MindrInstance& inst) {
    std::vector<Edge> edges = inst.graph.edges();
    std::set<std::pair<int, int>> present;
    for (const Edge& e : edges) present.emplace(e.u, e.v);
    for (const auto& set : inst.sets) {
        for (std::size_t a = 0; a < set.size(); ++a) {
            for (std::size_t b = a + 1; b < set.size(); ++b) {
                std::pair<int, int> key = std::minmax(set[a], set[b]);
                if (present.insert(key).second) {
                    edges.push_back({key.first, key.second, 1.0});
                }
            }
        }
    }
    MindrInstance out = inst;
    out.graph = Graph(inst.graph.vertex_count(), std::move(edges));
    return out;
}

/// Joins the components of every G[X_i] with the minimum number of edges:
/// the highest-degree vertex of the largest component (degree in the full
/// graph; ties to the lowest id; largest-component ties to the component
/// containing the lowest id) gets one unit-weight edge to the lowest-id
/// vertex of each remaining component. Idempotent.
inline MindrInstance connect_minimal(const MindrInstance& inst) {
    std::vector<Edge> edges = inst.graph.edges();
    const Graph& g = inst.graph;
    for (const auto& set : inst.sets) {
        // Component split of the induced subgraph G[X_i].
        std::map<int, int> comp; // member -> component id
        int comp_count = 0;
        std::set<int> members(set.begin(), set.end());
        for (int start : set) {
            if (comp.count(start)) continue;
            int id = comp_count++;
            std::vector<int> queue{start};
            comp[start] = id;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                for (int to : g.neighbors(queue[head])) {
                    if (members.count(to) && !comp.count(to)) {
                        comp[to] = id;
                        queue.push_back(to);
                    }
                }
            }
        }
        if (comp_count <= 1) continue;
        std::vector<std::vector<int>> groups(static_cast<std::size_t>(comp_count));
        for (int v : set) groups[static_cast<std::size_t>(comp[v])].push_back(v);
        // Components were discovered from ascending start vertices, so the
        // first group of maximum size is the one containing the lowest id.
        std::size_t largest = 0;
        for (std::size_t c = 1; c < groups.size(); ++c) {
            if (groups[c].size() > groups[largest].size()) largest = c;
        }
        int hub = groups[largest].front();
        for (int v : groups[largest]) {
            if (g.degree(v) > g.degree(hub)) hub = v; // ties keep the lowest id
        }
        for (std::size_t c = 0; c < groups.size(); ++c) {
            if (c == largest) continue;
            int target = *std::min_element(groups[c].begin(), groups[c].end());
            edges.push_back({std::min(hub, target), std::max(hub, target), 1.0});
        }
    }
    MindrInstance out = inst;
    out.graph = Graph(inst.graph.vertex_count(), std::move(edges));
    return out;
}

struct PreprocessResult {
    Graph graph;
    std::vector<std::int64_t> original_id; // new vertex id -> original id
};

/// Symmetrizes an arc list, keeps only the largest connected component
/// (ties go to the component containing the smallest original id), and
/// renumbers the surviving vertices densely in ascending original-id order.
inline PreprocessResult preprocess_graph(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& arcs) {
    if (arcs.empty()) {
        throw InputError("preprocess_graph: empty arc list");
    }
    std::vector<std::int64_t> ids;
    ids.reserve(arcs.size() * 2);
    for (const auto& [u, v] : arcs) {
        ids.push_back(u);
        ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    auto dense = [&](std::int64_t x) {
        return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
    };
    std::vector<Edge> all_edges;
    all_edges.reserve(arcs.size());
    for (const auto& [u, v] : arcs) {
        all_edges.push_back({dense(u), dense(v), 1.0});
    }
    Graph full(static_cast<int>(ids.size()), std::move(all_edges));
    auto components = connected_components(full);
    std::vector<int> size(static_cast<std::size_t>(components.count), 0);
    for (int label : components.label) ++size[static_cast<std::size_t>(label)];
    int keep = 0; // component labels ascend with their smallest member id
    for (int c = 1; c < components.count; ++c) {
        if (size[static_cast<std::size_t>(c)] > size[static_cast<std::size_t>(keep)]) keep = c;
    }
    PreprocessResult out;
    std::vector<int> remap(ids.size(), -1);
    for (std::size_t v = 0; v < ids.size(); ++v) {
        if (components.label[v] == keep) {
            remap[v] = static_cast<int>(out.original_id.size());
            out.original_id.push_back(ids[v]);
        }
    }
    std::vector<Edge> kept_edges;
    for (const Edge& e : full.edges()) {
        if (remap[static_cast<std::size_t>(e.u)] != -1 && remap[static_cast<std::size_t>(e.v)] != -1) {
            kept_edges.push_back(
                {remap[static_cast<std::size_t>(e.u)], remap[static_cast<std::size_t>(e.v)], 1.0});
        }
    }
    out.graph = Graph(static_cast<int>(out.original_id.size()), std::move(kept_edges));
    return out;
}

} // namespace mindr
