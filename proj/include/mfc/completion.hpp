#ifndef MFC_COMPLETION_HPP
#define MFC_COMPLETION_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "mfc/datagen.hpp"
#include "mfc/errors.hpp"
#include "mfc/forest.hpp"
#include "mfc/metric.hpp"
#include "mfc/mst.hpp"
#include "mfc/partition.hpp"

namespace mfc {

enum class RepPolicy { keep_existing, lowest_index, seeded_random };

inline std::string to_string(RepPolicy p) {
    switch (p) {
    case RepPolicy::keep_existing: return "keep-existing";
    case RepPolicy::lowest_index: return "lowest-index";
    case RepPolicy::seeded_random: return "seeded-random";
    }
    return "?";
}

inline RepPolicy rep_policy_from_string(const std::string& s) {
    if (s == "keep-existing") return RepPolicy::keep_existing;
    if (s == "lowest-index") return RepPolicy::lowest_index;
    if (s == "seeded-random") return RepPolicy::seeded_random;
    throw ConfigError("unknown representative policy: " + s);
}

inline Partition choose_representatives(const Partition& partition, RepPolicy policy,
                                        std::uint64_t seed = 0) {
    Partition out = partition;
    switch (policy) {
    case RepPolicy::keep_existing:
        if (!partition.has_representatives())
            throw InputError("keep-existing policy requires a partition with representatives");
        return out;
    case RepPolicy::lowest_index: {
        out.representatives.assign(partition.t, std::numeric_limits<Index>::max());
        for (Index i = 0; i < partition.n(); ++i) {
            Index& rep = out.representatives[partition.assignment[i]];
            rep = std::min(rep, i);
        }
        return out;
    }
    case RepPolicy::seeded_random: {
        std::mt19937_64 gen(seed);
        const auto groups = partition.members();
        out.representatives.resize(partition.t);
        for (Index c = 0; c < partition.t; ++c)
            out.representatives[c] = groups[c][rng::uniform_index(gen, groups[c].size())];
        return out;
    }
    }
    throw InvariantError("unreachable representative policy");
}

// Witness pair in X realizing a coarsened edge weight, canonical x < y.
struct Witness {
    Index x = 0;
    Index y = 0;
};

inline bool witness_less(const Witness& a, const Witness& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

// Complete graph on the t component nodes; weight and witness per pair.
struct CoarsenedGraph {
    Index t = 0;
    std::vector<double> weights;    // t*t, symmetric, diagonal unused
    std::vector<Witness> witnesses; // t*t

    explicit CoarsenedGraph(Index t_ = 0)
        : t(t_), weights(std::size_t(t_) * t_, 0.0), witnesses(std::size_t(t_) * t_) {}

    double weight(Index i, Index j) const { return weights[std::size_t(i) * t + j]; }
    const Witness& witness(Index i, Index j) const { return witnesses[std::size_t(i) * t + j]; }

    void set(Index i, Index j, double w, Witness wit) {
        if (wit.x > wit.y) std::swap(wit.x, wit.y);
        weights[std::size_t(i) * t + j] = weights[std::size_t(j) * t + i] = w;
        witnesses[std::size_t(i) * t + j] = witnesses[std::size_t(j) * t + i] = wit;
    }
};

// Representative-based coarsened weights: one pass over all points, each
// point queried against every foreign representative exactly once (n*(t-1)
// queries, charged to coarsen). Per ordered pair this yields the directed
// minimum w_{i->j} = min_{x in P_i} d(x, s_j); the undirected weight is the
// smaller of the two directions. With `three_way`, one extra query per pair
// compares the two directed argmin points against each other and the
// three-way minimum is used instead (never worse).
//
// Ties resolve toward the lexicographically smallest canonical witness
// pair, so the output is byte-reproducible.
inline CoarsenedGraph approx_coarsened_weights(const MetricSpace& space,
                                               const Partition& partition, bool three_way) {
    const Index n = space.size();
    partition.validate(n);
    if (!partition.has_representatives())
        throw InputError("approx_coarsened_weights requires representatives");
    const Index t = partition.t;
    if (t < 2) throw InputError("approx_coarsened_weights requires t >= 2");

    // Running directed minima, O(t^2) memory: dir_w[c][j] is the closest any
    // point of component c has come to representative s_j so far.
    std::vector<double> dir_w(std::size_t(t) * t, std::numeric_limits<double>::infinity());
    std::vector<Index> dir_arg(std::size_t(t) * t, 0);
    for (Index x = 0; x < n; ++x) {
        const Index c = partition.assignment[x];
        for (Index j = 0; j < t; ++j) {
            if (j == c) continue;
            const double d = space.distance(x, partition.representatives[j], Stage::coarsen);
            if (d < dir_w[std::size_t(c) * t + j]) { // strict: lowest index wins ties
                dir_w[std::size_t(c) * t + j] = d;
                dir_arg[std::size_t(c) * t + j] = x;
            }
        }
    }

    CoarsenedGraph graph(t);
    for (Index i = 0; i + 1 < t; ++i) {
        for (Index j = i + 1; j < t; ++j) {
            struct Candidate {
                double w;
                Witness wit;
            };
            std::vector<Candidate> cands;
            const Index xi = dir_arg[std::size_t(i) * t + j]; // argmin_{x in P_i} d(x, s_j)
            const Index xj = dir_arg[std::size_t(j) * t + i]; // argmin_{y in P_j} d(y, s_i)
            cands.push_back({dir_w[std::size_t(i) * t + j], {xi, partition.representatives[j]}});
            cands.push_back({dir_w[std::size_t(j) * t + i], {xj, partition.representatives[i]}});
            if (three_way)
                cands.push_back({space.distance(xi, xj, Stage::coarsen), {xi, xj}});
            for (auto& c : cands)
                if (c.wit.x > c.wit.y) std::swap(c.wit.x, c.wit.y);
            const auto best =
                std::min_element(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
                    if (a.w != b.w) return a.w < b.w;
                    return witness_less(a.wit, b.wit);
                });
            graph.set(i, j, best->w, best->wit);
        }
    }
    return graph;
}

// Exact inter-component distances w* via full bichromatic scans, charged to
// the oracle stage. Witnesses are true closest pairs, ties resolving to the
// lexicographically smallest pair. Verification-only: guarded by the same
// cap as the exact baseline.
inline CoarsenedGraph optimal_coarsened_weights(const MetricSpace& space,
                                                const Partition& partition,
                                                Index cap = kDefaultExactCap) {
    const Index n = space.size();
    partition.validate(n);
    const Index t = partition.t;
    if (t < 2) throw InputError("optimal_coarsened_weights requires t >= 2");
    if (n > cap)
        throw CapError("BCP oracle refused: n = " + std::to_string(n) + " exceeds cap " +
                       std::to_string(cap));

    CoarsenedGraph graph(t);
    std::vector<double> best(std::size_t(t) * t, std::numeric_limits<double>::infinity());
    for (Index x = 0; x + 1 < n; ++x) {
        for (Index y = x + 1; y < n; ++y) {
            const Index ci = partition.assignment[x];
            const Index cj = partition.assignment[y];
            if (ci == cj) continue;
            const double d = space.distance(x, y, Stage::oracle);
            // Strict improvement only: the (x, y) scan order is already
            // lexicographic over canonical pairs.
            if (d < best[std::size_t(ci) * t + cj]) {
                best[std::size_t(ci) * t + cj] = best[std::size_t(cj) * t + ci] = d;
                graph.set(ci, cj, d, {x, y});
            }
        }
    }
    return graph;
}

// Final MFC output: completion edges in X, the coarsened-graph tree they
// came from, and the assembled spanning tree of X.
struct CompletionResult {
    std::vector<Edge> completion_edges; // t-1 cross-component edges
    SpanningTree coarsened_tree;        // over component nodes
    SpanningTree full_tree;             // over X
    double w_completion = 0.0;
    double w_forest = 0.0;
    double w_total = 0.0;
};

// Kruskal on the t-node complete graph, each chosen coarsened edge mapped
// back to its witness pair in X and unioned with the forest. With the
// optimal weights this realizes T*, with the approximate weights T-hat.
inline CompletionResult complete_forest(const Forest& forest, const CoarsenedGraph& coarsened) {
    const Index t = forest.partition.t;
    const Index n = forest.partition.n();
    CompletionResult result;
    result.w_forest = forest.total_weight;
    if (t == 1) {
        result.full_tree.edges = forest.all_edges();
        result.full_tree.total_weight = forest.total_weight;
        result.w_total = forest.total_weight;
        return result;
    }
    if (coarsened.t != t)
        throw InputError("coarsened graph node count does not match forest components");

    std::vector<Edge> coarse_edges;
    coarse_edges.reserve(std::size_t(t) * (t - 1) / 2);
    for (Index i = 0; i + 1 < t; ++i)
        for (Index j = i + 1; j < t; ++j)
            coarse_edges.emplace_back(i, j, coarsened.weight(i, j));
    result.coarsened_tree = kruskal(t, std::move(coarse_edges));

    for (const Edge& ce : result.coarsened_tree.edges) {
        const Witness& wit = coarsened.witness(static_cast<Index>(ce.u), static_cast<Index>(ce.v));
        if (forest.partition.assignment[wit.x] == forest.partition.assignment[wit.y])
            throw InvariantError("completion witness does not cross components");
        result.completion_edges.emplace_back(wit.x, wit.y, ce.w);
        result.w_completion += ce.w;
    }

    result.full_tree.edges = forest.all_edges();
    result.full_tree.edges.insert(result.full_tree.edges.end(), result.completion_edges.begin(),
                                  result.completion_edges.end());
    result.full_tree.total_weight = forest.total_weight + result.w_completion;
    result.w_total = result.full_tree.total_weight;
    if (!is_spanning_tree(n, result.full_tree.edges))
        throw InvariantError("completed forest is not a spanning tree");
    return result;
}

} // namespace mfc

#endif
