#ifndef MFC_MST_HPP
#define MFC_MST_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mfc/errors.hpp"
#include "mfc/metric.hpp"

namespace mfc {

// Undirected weighted edge over global point indices, canonical u < v.
struct Edge {
    Index u = 0;
    Index v = 0;
    double w = 0.0;

    Edge() = default;
    Edge(Index a, Index b, double weight) : u(std::min(a, b)), v(std::max(a, b)), w(weight) {
        if (a == b) throw InputError("self-loop edge");
    }
    bool operator==(const Edge&) const = default;
};

// Total order used everywhere ties must resolve deterministically.
inline bool edge_less(const Edge& a, const Edge& b) {
    if (a.w != b.w) return a.w < b.w;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
}

struct SpanningTree {
    std::vector<Edge> edges;
    double total_weight = 0.0;
};

// Union-find with path halving and union by rank.
class DisjointSetForest {
public:
    explicit DisjointSetForest(std::size_t n) : parent_(n), rank_(n, 0), components_(n) {
        std::iota(parent_.begin(), parent_.end(), Index{0});
    }

    Index find(Index x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns true iff the roots differed (component count drops by one).
    bool unite(Index a, Index b) {
        Index ra = find(a), rb = find(b);
        if (ra == rb) return false;
        if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        if (rank_[ra] == rank_[rb]) ++rank_[ra];
        --components_;
        return true;
    }

    std::size_t components() const { return components_; }

private:
    std::vector<Index> parent_;
    std::vector<std::uint8_t> rank_;
    std::size_t components_;
};

inline bool is_spanning_tree(Index n, const std::vector<Edge>& edges) {
    if (n == 0) return false;
    if (edges.size() != std::size_t(n) - 1) return false;
    DisjointSetForest dsf(n);
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) return false;
        if (!dsf.unite(e.u, e.v)) return false; // cycle
    }
    return dsf.components() == 1;
}

// Kruskal over an explicit edge list. Deterministic via the (w, u, v)
// lexicographic order; disconnected input is an error naming two nodes
// that end up in different components.
inline SpanningTree kruskal(Index n, std::vector<Edge> edges) {
    if (n == 0) throw InputError("kruskal requires at least one node");
    std::sort(edges.begin(), edges.end(), edge_less);
    DisjointSetForest dsf(n);
    SpanningTree tree;
    tree.edges.reserve(n > 0 ? n - 1 : 0);
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) throw InputError("edge endpoint out of range");
        if (dsf.unite(e.u, e.v)) {
            tree.edges.push_back(e);
            tree.total_weight += e.w;
            if (tree.edges.size() == std::size_t(n) - 1) break;
        }
    }
    if (dsf.components() != 1) {
        const Index a = dsf.find(0);
        Index b = a;
        for (Index i = 1; i < n; ++i)
            if (dsf.find(i) != a) { b = i; break; }
        throw InputError("edge list does not connect all nodes: components of node 0 and node " +
                         std::to_string(b) + " cannot be joined");
    }
    return tree;
}

// Exact MST over the implicit complete graph restricted to `nodes`
// (ascending global indices), materializing all inner pairs and charging
// them to `stage`. Local index order matches global order, so the (w, u, v)
// tie-break is the same one the full baseline uses.
inline SpanningTree metric_mst_over(const MetricSpace& space, const std::vector<Index>& nodes,
                                    Stage stage) {
    const std::size_t m = nodes.size();
    if (m == 0) throw InputError("empty node set");
    if (!std::is_sorted(nodes.begin(), nodes.end()))
        throw InputError("node set must be sorted ascending");
    if (m == 1) return SpanningTree{};
    std::vector<Edge> edges;
    edges.reserve(m * (m - 1) / 2);
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            edges.emplace_back(static_cast<Index>(i), static_cast<Index>(j),
                               space.distance(nodes[i], nodes[j], stage));
    std::sort(edges.begin(), edges.end(), edge_less);
    DisjointSetForest dsf(m);
    SpanningTree tree;
    tree.edges.reserve(m - 1);
    for (const Edge& e : edges) {
        if (dsf.unite(e.u, e.v)) {
            tree.edges.emplace_back(nodes[e.u], nodes[e.v], e.w);
            tree.total_weight += e.w;
            if (tree.edges.size() == m - 1) break;
        }
    }
    return tree;
}

inline constexpr Index kDefaultExactCap = 50000;

// Quadratic baseline: all n(n-1)/2 distances charged to exact-baseline,
// then Kruskal. Refuses instances above the cap instead of running for
// hours; raise the cap explicitly to override.
inline SpanningTree exact_metric_mst(const MetricSpace& space, Index cap = kDefaultExactCap) {
    const Index n = space.size();
    if (n < 2) throw InputError("exact_metric_mst requires n >= 2");
    if (n > cap)
        throw CapError("exact baseline refused: n = " + std::to_string(n) +
                       " exceeds cap " + std::to_string(cap));
    std::vector<Index> nodes(n);
    std::iota(nodes.begin(), nodes.end(), Index{0});
    return metric_mst_over(space, nodes, Stage::exact_baseline);
}

} // namespace mfc

#endif
