#include <catch2/catch_amalgamated.hpp>

#include "mfc/mst.hpp"
#include "oracles.hpp"

using namespace mfc;

TEST_CASE("kruskal picks the cheap triangle edges") {
    // All three spanning trees: {1,2}=3, {1,3}=4, {2,3}=5
    const SpanningTree tree = kruskal(3, {{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 3.0}});
    CHECK(tree.total_weight == 3.0);
    REQUIRE(tree.edges.size() == 2);
    CHECK(tree.edges[0] == Edge(0, 1, 1.0));
    CHECK(tree.edges[1] == Edge(1, 2, 2.0));
}

TEST_CASE("kruskal on a forced two-node instance") {
    const SpanningTree tree = kruskal(2, {{0, 1, 5.0}});
    CHECK(tree.total_weight == 5.0);
    REQUIRE(tree.edges.size() == 1);
}

TEST_CASE("all-ties instance: any tie resolution gives the same weight") {
    // 4-node path of unit edges plus a unit chord; every MST weighs 3.
    const SpanningTree tree =
        kruskal(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 2, 1.0}});
    CHECK(tree.total_weight == 3.0);
    REQUIRE(tree.edges.size() == 3);
}

TEST_CASE("disconnected input names two unconnectable components") {
    try {
        kruskal(4, {{0, 1, 1.0}, {2, 3, 1.0}});
        FAIL("expected InputError");
    } catch (const InputError& ex) {
        const std::string msg = ex.what();
        CHECK(msg.find("node 0") != std::string::npos);
        CHECK(msg.find("node 2") != std::string::npos);
    }
}

TEST_CASE("union-find invariants") {
    DisjointSetForest dsf(5);
    CHECK(dsf.components() == 5);
    CHECK(dsf.unite(0, 1));
    CHECK(dsf.components() == 4);
    CHECK_FALSE(dsf.unite(1, 0));
    CHECK(dsf.components() == 4);
    const Index root = dsf.find(0);
    CHECK(dsf.find(0) == root); // idempotent
    CHECK(dsf.find(1) == root);
}

TEST_CASE("exact metric MST on 1-D instances") {
    {
        const Dataset ds = oracles::line_points({0.0, 1.0, 3.0});
        MetricSpace space(ds, MetricKind::euclidean);
        const SpanningTree tree = exact_metric_mst(space);
        CHECK(tree.total_weight == Catch::Approx(3.0));
    }
    {
        // Chain with one length-8 bridge.
        const Dataset ds = oracles::line_points({0.0, 1.0, 2.0, 10.0, 11.0, 12.0});
        MetricSpace space(ds, MetricKind::euclidean);
        const SpanningTree tree = exact_metric_mst(space);
        CHECK(tree.total_weight == Catch::Approx(12.0));
        CHECK(space.ledger_snapshot().stage(Stage::exact_baseline) == 15);
    }
    {
        const Dataset ds = oracles::line_points({4.0, -2.0});
        MetricSpace space(ds, MetricKind::euclidean);
        const SpanningTree tree = exact_metric_mst(space);
        REQUIRE(tree.edges.size() == 1);
        CHECK(tree.total_weight == Catch::Approx(6.0));
        CHECK(space.ledger_snapshot().total() == 1);
    }
}

TEST_CASE("exact metric MST query count is exactly n(n-1)/2") {
    std::mt19937_64 gen(5);
    for (int n : {2, 5, 9, 17}) {
        const Dataset ds = oracles::random_vectors(gen, n, 3);
        MetricSpace space(ds, MetricKind::euclidean);
        exact_metric_mst(space);
        CHECK(space.ledger_snapshot().stage(Stage::exact_baseline) ==
              std::uint64_t(n) * (n - 1) / 2);
    }
}

TEST_CASE("exact metric MST matches exhaustive tree enumeration") {
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng::uniform_index(gen, 7)); // n in [2, 8]
        const MetricKind metric =
            std::array{MetricKind::euclidean, MetricKind::jaccard, MetricKind::hamming,
                       MetricKind::levenshtein}[trial % 4];
        const Dataset ds = oracles::random_dataset(gen, metric, n);
        MetricSpace space(ds, metric);
        const SpanningTree tree = exact_metric_mst(space);
        const double best = oracles::min_spanning_tree_weight(n, [&](int u, int v) {
            return space.distance(static_cast<Index>(u), static_cast<Index>(v), Stage::oracle);
        });
        if (metric == MetricKind::hamming || metric == MetricKind::levenshtein)
            CHECK(tree.total_weight == best); // integer weights sum exactly
        else
            CHECK(tree.total_weight == Catch::Approx(best).epsilon(1e-9));
    }
}

TEST_CASE("cut property: no lighter reconnecting edge exists") {
    std::mt19937_64 gen(21);
    const Dataset ds = oracles::random_vectors(gen, 24, 3);
    MetricSpace space(ds, MetricKind::euclidean);
    const SpanningTree tree = exact_metric_mst(space);
    const Index n = space.size();
    for (const Edge& removed : tree.edges) {
        DisjointSetForest dsf(n);
        for (const Edge& e : tree.edges)
            if (!(e == removed)) dsf.unite(e.u, e.v);
        const Index side = dsf.find(removed.u);
        for (Index a = 0; a < n; ++a)
            for (Index b = a + 1; b < n; ++b) {
                if ((dsf.find(a) == side) == (dsf.find(b) == side)) continue;
                CHECK(space.distance(a, b, Stage::oracle) >= removed.w - 1e-9);
            }
    }
}

TEST_CASE("exact baseline refuses instances above the cap") {
    const Dataset ds = uniform_cloud(20, 2, 1);
    MetricSpace space(ds, MetricKind::euclidean);
    CHECK_THROWS_AS(exact_metric_mst(space, 10), CapError);
    CHECK_NOTHROW(exact_metric_mst(space, 20));
}

TEST_CASE("spanning tree checker rejects cycles and wrong edge counts") {
    CHECK(is_spanning_tree(3, {{0, 1, 1.0}, {1, 2, 1.0}}));
    CHECK_FALSE(is_spanning_tree(3, {{0, 1, 1.0}}));
    CHECK_FALSE(is_spanning_tree(4, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}));
}
