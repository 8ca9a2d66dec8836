#ifndef MFC_FOREST_HPP
#define MFC_FOREST_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "mfc/datagen.hpp"
#include "mfc/errors.hpp"
#include "mfc/metric.hpp"
#include "mfc/mst.hpp"
#include "mfc/partition.hpp"

namespace mfc {

// The MFC input: a partition plus one spanning tree per component.
struct Forest {
    Partition partition;
    std::vector<SpanningTree> trees; // trees[c] spans component c, global indices
    double total_weight = 0.0;

    std::vector<Edge> all_edges() const {
        std::vector<Edge> edges;
        for (const auto& tree : trees)
            edges.insert(edges.end(), tree.edges.begin(), tree.edges.end());
        return edges;
    }
};

// Gonzalez-style greedy k-center. The first center is a uniform seed draw;
// center i+1 is the point farthest from its nearest chosen center. Uses
// exactly n*t distance queries (one assignment pass per center), charged to
// init-partition. Centers are recorded as representatives.
//
// All ties resolve to the lowest index: both the farthest-point choice and
// the nearest-center assignment (centers are scanned in creation order and
// only strictly closer ones win).
inline Partition greedy_k_center(const MetricSpace& space, Index t, std::uint64_t seed) {
    const Index n = space.size();
    if (t < 1) throw InputError("greedy_k_center requires t >= 1");
    if (t > n) throw InputError("greedy_k_center: t = " + std::to_string(t) +
                                " exceeds n = " + std::to_string(n));
    std::mt19937_64 gen(seed);
    Partition part;
    part.t = t;
    part.assignment.assign(n, 0);
    part.representatives.reserve(t);

    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    Index center = static_cast<Index>(rng::uniform_index(gen, n));
    for (Index round = 0; round < t; ++round) {
        part.representatives.push_back(center);
        for (Index i = 0; i < n; ++i) {
            const double d = space.distance(i, center, Stage::init_partition);
            if (d < nearest[i]) {
                nearest[i] = d;
                part.assignment[i] = round;
            }
        }
        if (round + 1 == t) break;
        // Farthest uncovered point becomes the next center.
        Index far = 0;
        for (Index i = 1; i < n; ++i)
            if (nearest[i] > nearest[far]) far = i;
        center = far;
    }
    return part;
}

// Exact symmetric k-NN graph by brute force (every unordered pair queried
// once, n(n-1)/2 queries to init-partition); connected components of the
// symmetrized graph form the partition. Neighbor ties resolve to the lowest
// index. Representatives are left unset.
inline Partition knn_components(const MetricSpace& space, Index k) {
    const Index n = space.size();
    if (k < 1 || k >= n) throw InputError("knn_components requires 1 <= k < n");

    std::vector<double> dist(std::size_t(n) * n, 0.0);
    for (Index i = 0; i + 1 < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            const double d = space.distance(i, j, Stage::init_partition);
            dist[std::size_t(i) * n + j] = d;
            dist[std::size_t(j) * n + i] = d;
        }

    DisjointSetForest dsf(n);
    std::vector<Index> order(n - 1);
    for (Index i = 0; i < n; ++i) {
        Index pos = 0;
        for (Index j = 0; j < n; ++j)
            if (j != i) order[pos++] = j;
        // k nearest by (distance, index); stable under equal distances.
        std::partial_sort(order.begin(), order.begin() + k, order.end(), [&](Index a, Index b) {
            const double da = dist[std::size_t(i) * n + a];
            const double db = dist[std::size_t(i) * n + b];
            if (da != db) return da < db;
            return a < b;
        });
        for (Index r = 0; r < k; ++r) dsf.unite(i, order[r]);
    }

    Partition part;
    part.assignment.assign(n, 0);
    std::vector<Index> root_to_id(n, std::numeric_limits<Index>::max());
    Index next_id = 0;
    for (Index i = 0; i < n; ++i) {
        const Index r = dsf.find(i);
        if (root_to_id[r] == std::numeric_limits<Index>::max()) root_to_id[r] = next_id++;
        part.assignment[i] = root_to_id[r];
    }
    part.t = next_id;
    return part;
}

// Exact Kruskal inside each component (queries charged to sub-mst,
// sum_i C(|P_i|, 2) in total). Singleton components get empty trees.
inline Forest component_msts(const MetricSpace& space, const Partition& partition) {
    partition.validate(space.size());
    Forest forest;
    forest.partition = partition;
    forest.trees.resize(partition.t);
    for (const auto& group : partition.members()) {
        const Index c = partition.assignment[group.front()];
        forest.trees[c] = metric_mst_over(space, group, Stage::sub_mst);
        forest.total_weight += forest.trees[c].total_weight;
    }
    return forest;
}

} // namespace mfc

#endif
