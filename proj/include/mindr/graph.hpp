#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "mindr/errors.hpp"

namespace mindr {

/// Distance value for unreachable vertices.
constexpr double kUnreachable = std::numeric_limits<double>::infinity();

struct Edge {
    int u;
    int v;
    double w = 1.0;
};

inline bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.w == b.w;
}

/// Undirected graph, immutable after construction.
///
/// Construction normalizes the edge list: endpoints are ordered u < v,
/// self-loops are dropped, and parallel edges collapse to the minimum
/// weight (heavier duplicates can never lie on a shortest path).
/// Neighbor lists are stored in ascending vertex order; all tie-breaking
/// downstream relies on that.
class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<Edge> edge_list) : n_(vertex_count) {
        if (vertex_count < 0) {
            throw InputError("vertex count must be nonnegative");
        }
        std::map<std::pair<int, int>, double> collapsed;
        for (const Edge& e : edge_list) {
            if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
                throw InputError("edge endpoint out of range");
            }
            if (!(e.w >= 0.0) || !std::isfinite(e.w)) {
                throw InputError("edge weight must be a finite nonnegative number");
            }
            if (e.u == e.v) {
                continue; // self-loops are metric-irrelevant
            }
            std::pair<int, int> key = std::minmax(e.u, e.v);
            auto [it, inserted] = collapsed.emplace(key, e.w);
            if (!inserted && e.w < it->second) {
                it->second = e.w;
            }
        }
        edges_.reserve(collapsed.size());
        unit_weights_ = true;
        for (const auto& [key, w] : collapsed) {
            edges_.push_back({key.first, key.second, w});
            if (w != 1.0) {
                unit_weights_ = false;
            }
        }
        build_adjacency();
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Normalized edges, sorted by (u, v) with u < v.
    const std::vector<Edge>& edges() const { return edges_; }

    /// True when every edge has weight exactly 1; selects BFS over Dijkstra.
    bool unit_weights() const { return unit_weights_; }

    std::span<const int> neighbors(int v) const {
        return {adj_vertex_.data() + adj_offset_[v], adj_vertex_.data() + adj_offset_[v + 1]};
    }

    std::span<const double> neighbor_weights(int v) const {
        return {adj_weight_.data() + adj_offset_[v], adj_weight_.data() + adj_offset_[v + 1]};
    }

    int degree(int v) const { return adj_offset_[v + 1] - adj_offset_[v]; }

    bool has_edge(int u, int v) const {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    double edge_weight(int u, int v) const {
        auto nb = neighbors(u);
        auto it = std::lower_bound(nb.begin(), nb.end(), v);
        if (it == nb.end() || *it != v) {
            throw InputError("no such edge");
        }
        return neighbor_weights(u)[static_cast<std::size_t>(it - nb.begin())];
    }

private:
    void build_adjacency() {
        adj_offset_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (const Edge& e : edges_) {
            ++adj_offset_[static_cast<std::size_t>(e.u) + 1];
            ++adj_offset_[static_cast<std::size_t>(e.v) + 1];
        }
        for (int v = 0; v < n_; ++v) {
            adj_offset_[static_cast<std::size_t>(v) + 1] += adj_offset_[v];
        }
        adj_vertex_.resize(edges_.size() * 2);
        adj_weight_.resize(edges_.size() * 2);
        std::vector<int> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
        // Edges are sorted by (u, v), so filling u-side slots in order keeps
        // them ascending; v-side slots need a per-vertex sort afterwards.
        for (const Edge& e : edges_) {
            adj_vertex_[cursor[e.u]] = e.v;
            adj_weight_[cursor[e.u]++] = e.w;
            adj_vertex_[cursor[e.v]] = e.u;
            adj_weight_[cursor[e.v]++] = e.w;
        }
        std::vector<std::pair<int, double>> tmp;
        for (int v = 0; v < n_; ++v) {
            int lo = adj_offset_[v], hi = adj_offset_[static_cast<std::size_t>(v) + 1];
            tmp.clear();
            for (int i = lo; i < hi; ++i) {
                tmp.emplace_back(adj_vertex_[i], adj_weight_[i]);
            }
            std::sort(tmp.begin(), tmp.end());
            for (int i = lo; i < hi; ++i) {
                adj_vertex_[i] = tmp[static_cast<std::size_t>(i - lo)].first;
                adj_weight_[i] = tmp[static_cast<std::size_t>(i - lo)].second;
            }
        }
    }

    int n_ = 0;
    bool unit_weights_ = true;
    std::vector<Edge> edges_;
    std::vector<int> adj_offset_{0};
    std::vector<int> adj_vertex_;
    std::vector<double> adj_weight_;
};

/// Single-source distances; dist[v] == kUnreachable for unreached vertices.
struct DistanceRow {
    int source = 0;
    std::vector<double> dist;
};

namespace detail {

/// BFS distances restricted to vertices where mask[v] != 0 (empty mask = whole graph).
inline std::vector<double> bfs_distances(const Graph& g, int source,
                                         std::span<const std::uint8_t> mask) {
    std::vector<double> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(g.vertex_count()));
    dist[static_cast<std::size_t>(source)] = 0.0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int to : g.neighbors(v)) {
            if (!mask.empty() && !mask[static_cast<std::size_t>(to)]) continue;
            if (dist[static_cast<std::size_t>(to)] == kUnreachable) {
                dist[static_cast<std::size_t>(to)] = dist[static_cast<std::size_t>(v)] + 1.0;
                queue.push_back(to);
            }
        }
    }
    return dist;
}

inline std::vector<double> dijkstra_distances(const Graph& g, int source,
                                              std::span<const std::uint8_t> mask) {
    std::vector<double> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[static_cast<std::size_t>(source)] = 0.0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[static_cast<std::size_t>(v)]) continue;
        auto nbs = g.neighbors(v);
        auto ws = g.neighbor_weights(v);
        for (std::size_t i = 0; i < nbs.size(); ++i) {
            int to = nbs[i];
            if (!mask.empty() && !mask[static_cast<std::size_t>(to)]) continue;
            double nd = d + ws[i];
            if (nd < dist[static_cast<std::size_t>(to)]) {
                dist[static_cast<std::size_t>(to)] = nd;
                heap.emplace(nd, to);
            }
        }
    }
    return dist;
}

inline std::vector<double> distances_in_mask(const Graph& g, int source,
                                             std::span<const std::uint8_t> mask) {
    if (!mask.empty() && !mask[static_cast<std::size_t>(source)]) {
        throw InputError("source vertex outside subgraph mask");
    }
    return g.unit_weights() ? bfs_distances(g, source, mask) : dijkstra_distances(g, source, mask);
}

} // namespace detail

/// Exact single-source shortest-path distances (BFS on unit-weight graphs,
/// binary-heap Dijkstra otherwise).
inline DistanceRow shortest_paths(const Graph& g, int source) {
    if (source < 0 || source >= g.vertex_count()) {
        throw InputError("shortest_paths: source out of range");
    }
    return {source, detail::distances_in_mask(g, source, {})};
}

struct ComponentLabeling {
    int count = 0;
    std::vector<int> label; // label[u] == label[v] iff u and v are connected
};

/// Connected components; labels are assigned in ascending order of each
/// component's smallest vertex id.
inline ComponentLabeling connected_components(const Graph& g) {
    ComponentLabeling out;
    out.label.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> queue;
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (out.label[static_cast<std::size_t>(root)] != -1) continue;
        int id = out.count++;
        out.label[static_cast<std::size_t>(root)] = id;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (int to : g.neighbors(queue[head])) {
                if (out.label[static_cast<std::size_t>(to)] == -1) {
                    out.label[static_cast<std::size_t>(to)] = id;
                    queue.push_back(to);
                }
            }
        }
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).count == 1;
}

/// Edges whose removal increases the number of connected components,
/// as normalized (u < v) pairs in ascending order.
inline std::vector<std::pair<int, int>> bridges(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> out;
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nbs = g.neighbors(f.v);
            if (f.next < nbs.size()) {
                int to = nbs[f.next++];
                if (to == f.parent) continue;
                if (disc[static_cast<std::size_t>(to)] == -1) {
                    disc[static_cast<std::size_t>(to)] = low[static_cast<std::size_t>(to)] = timer++;
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
                    if (low[static_cast<std::size_t>(v)] > disc[static_cast<std::size_t>(p)]) {
                        out.emplace_back(std::min(p, v), std::max(p, v));
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Maximal biconnected blocks as sorted vertex sets (a bridge forms its own
/// two-vertex block; cut vertices appear in every block they join).
/// Blocks are returned in ascending lexicographic order.
inline std::vector<std::vector<int>> biconnected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    auto pop_block = [&](int u, int v) {
        std::vector<int> verts;
        while (!edge_stack.empty()) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == std::make_pair(u, v) || e == std::make_pair(v, u)) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        blocks.push_back(std::move(verts));
    };

    struct Frame {
        int v;
        int parent;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nbs = g.neighbors(f.v);
            if (f.next < nbs.size()) {
                int to = nbs[f.next++];
                if (to == f.parent) continue;
                if (disc[static_cast<std::size_t>(to)] == -1) {
                    edge_stack.emplace_back(f.v, to);
                    disc[static_cast<std::size_t>(to)] = low[static_cast<std::size_t>(to)] = timer++;
                    int parent = f.v;
                    stack.push_back({to, parent, 0});
                } else if (disc[static_cast<std::size_t>(to)] < disc[static_cast<std::size_t>(f.v)]) {
                    edge_stack.emplace_back(f.v, to);
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
                    if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)]) {
                        pop_block(p, v);
                    }
                }
            }
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

/// Quotient of g by a per-vertex class assignment.
struct QuotientGraph {
    Graph graph;               // unit-weight graph over dense class ids
    std::vector<int> class_of; // original vertex -> dense class id
    /// Class edges in ascending (a, b) order, a < b; parallel to edge_preimage.
    std::vector<std::pair<int, int>> class_edges;
    /// For each class edge, every g-edge (u < v) crossing the two classes, ascending.
    std::vector<std::vector<std::pair<int, int>>> edge_preimage;
};

/// Builds the quotient graph. Class-edge (A, B) exists iff some g-edge joins
/// a vertex of class A to one of class B; intra-class edges are excluded.
/// Dense class ids follow the ascending order of the raw class values, so a
/// "class id = smallest member vertex" convention survives densification.
inline QuotientGraph quotient_graph(const Graph& g, const std::vector<int>& classes) {
    if (static_cast<int>(classes.size()) != g.vertex_count()) {
        throw InputError("quotient_graph: classes must cover every vertex");
    }
    std::vector<int> ids(classes);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    QuotientGraph out;
    out.class_of.resize(classes.size());
    for (std::size_t v = 0; v < classes.size(); ++v) {
        out.class_of[v] = static_cast<int>(
            std::lower_bound(ids.begin(), ids.end(), classes[v]) - ids.begin());
    }
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> cross;
    for (const Edge& e : g.edges()) {
        int a = out.class_of[static_cast<std::size_t>(e.u)];
        int b = out.class_of[static_cast<std::size_t>(e.v)];
        if (a == b) continue;
        cross[std::pair<int, int>(std::minmax(a, b))].emplace_back(e.u, e.v);
    }
    std::vector<Edge> class_edge_list;
    for (auto& [key, pre] : cross) {
        out.class_edges.push_back(key);
        std::sort(pre.begin(), pre.end());
        out.edge_preimage.push_back(std::move(pre));
        class_edge_list.push_back({key.first, key.second, 1.0});
    }
    out.graph = Graph(static_cast<int>(ids.size()), std::move(class_edge_list));
    return out;
}

} // namespace mindr
