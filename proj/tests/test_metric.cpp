#include <catch2/catch_amalgamated.hpp>

#include "mfc/datagen.hpp"
#include "mfc/metric.hpp"
#include "oracles.hpp"

using namespace mfc;

TEST_CASE("euclidean distance, 3-4-5 triangle") {
    Dataset ds = oracles::line_points({});
    ds.vectors = {{0.0, 0.0}, {3.0, 4.0}};
    MetricSpace space(ds, MetricKind::euclidean);
    CHECK(space.distance(0, 1, Stage::oracle) == Catch::Approx(5.0));
}

TEST_CASE("jaccard distance, verified by direct enumeration") {
    Dataset ds;
    ds.kind = DataKind::sets;
    ds.sets = {{1, 2, 3}, {2, 3, 4}};
    MetricSpace space(ds, MetricKind::jaccard);
    // |intersection| = 2, |union| = 4
    CHECK(space.distance(0, 1, Stage::oracle) == Catch::Approx(0.5));
}

TEST_CASE("jaccard of two empty sets is zero") {
    Dataset ds;
    ds.kind = DataKind::sets;
    ds.sets = {{}, {}, {7}};
    MetricSpace space(ds, MetricKind::jaccard);
    CHECK(space.distance(0, 1, Stage::oracle) == 0.0);
    CHECK(space.distance(0, 2, Stage::oracle) == 1.0);
}

TEST_CASE("levenshtein matches the full DP-table oracle") {
    Dataset ds;
    ds.kind = DataKind::strings;
    ds.strings = {U"kitten", U"sitting"};
    MetricSpace space(ds, MetricKind::levenshtein);
    CHECK(space.distance(0, 1, Stage::oracle) == 3.0);
    CHECK(oracles::levenshtein_matrix(U"kitten", U"sitting") == 3);

    std::mt19937_64 gen(11);
    Dataset rnd = oracles::random_strings(gen, 20, 0, 9, false);
    MetricSpace rs(rnd, MetricKind::levenshtein);
    for (int trial = 0; trial < 100; ++trial) {
        const auto i = static_cast<Index>(rng::uniform_index(gen, rnd.size()));
        const auto j = static_cast<Index>(rng::uniform_index(gen, rnd.size()));
        CHECK(rs.distance(i, j, Stage::oracle) ==
              static_cast<double>(oracles::levenshtein_matrix(rnd.strings[i], rnd.strings[j])));
    }
}

TEST_CASE("hamming identity and counting") {
    Dataset ds;
    ds.kind = DataKind::strings;
    ds.strings = {U"abc", U"abc", U"axc"};
    MetricSpace space(ds, MetricKind::hamming);
    CHECK(space.distance(0, 1, Stage::oracle) == 0.0);
    CHECK(space.distance(0, 2, Stage::oracle) == 1.0);
}

TEST_CASE("metric / dataset kind mismatch is a configuration error") {
    Dataset ds = oracles::line_points({0.0, 1.0});
    CHECK_THROWS_AS(MetricSpace(ds, MetricKind::jaccard), KindMismatchError);
    CHECK_THROWS_AS(MetricSpace(ds, MetricKind::levenshtein), KindMismatchError);
}

TEST_CASE("hamming on unequal-length strings is an input error") {
    Dataset ds;
    ds.kind = DataKind::strings;
    ds.strings = {U"abc", U"abcd"};
    CHECK_THROWS_AS(MetricSpace(ds, MetricKind::hamming), InputError);
    MetricSpace lev(ds, MetricKind::levenshtein); // fine for edit distance
    CHECK(lev.distance(0, 1, Stage::oracle) == 1.0);
}

TEST_CASE("ledger counts exactly, per stage, also on the diagonal") {
    Dataset ds = oracles::line_points({0.0, 1.0, 2.0});
    MetricSpace space(ds, MetricKind::euclidean);
    CHECK(space.ledger_snapshot().total() == 0);

    space.distance(0, 1, Stage::sub_mst);
    space.distance(1, 2, Stage::sub_mst);
    space.distance(2, 2, Stage::sub_mst);
    QueryLedger ledger = space.ledger_snapshot();
    CHECK(ledger.stage(Stage::sub_mst) == 3);
    CHECK(ledger.total() == 3);

    space.distance(0, 1, Stage::coarsen);
    space.distance(0, 2, Stage::coarsen);
    space.distance(0, 1, Stage::init_partition);
    space.distance(0, 1, Stage::init_partition);
    space.distance(0, 1, Stage::init_partition);
    space.distance(0, 1, Stage::init_partition);
    space.distance(0, 1, Stage::init_partition);
    ledger = space.ledger_snapshot();
    CHECK(ledger.stage(Stage::coarsen) == 2);
    CHECK(ledger.stage(Stage::init_partition) == 5);
    CHECK(ledger.total() == 10);

    // Snapshot does not mutate.
    CHECK(space.ledger_snapshot() == ledger);
}

TEST_CASE("metric axioms hold on sampled pairs and triples, all four metrics") {
    std::mt19937_64 gen(3);
    for (MetricKind metric : {MetricKind::euclidean, MetricKind::jaccard, MetricKind::hamming,
                              MetricKind::levenshtein}) {
        Dataset ds = oracles::random_dataset(gen, metric, 40);
        if (metric == MetricKind::euclidean) {
            ds = oracles::random_vectors(gen, 40, 6); // higher d stresses floating point
        }
        MetricSpace space(ds, metric);
        const Index n = space.size();
        for (int trial = 0; trial < 1000; ++trial) {
            const auto i = static_cast<Index>(rng::uniform_index(gen, n));
            const auto j = static_cast<Index>(rng::uniform_index(gen, n));
            const auto k = static_cast<Index>(rng::uniform_index(gen, n));
            const double dij = space.distance(i, j, Stage::oracle);
            REQUIRE(dij == space.distance(j, i, Stage::oracle)); // exact symmetry
            REQUIRE(space.distance(i, i, Stage::oracle) == 0.0);
            REQUIRE(dij <= space.distance(i, k, Stage::oracle) +
                               space.distance(k, j, Stage::oracle) + 1e-12);
            REQUIRE(std::isfinite(dij));
            REQUIRE(dij >= 0.0);
        }
    }
}

TEST_CASE("planted metric satisfies the axioms exactly") {
    const PlantedInstance inst = planted_pair(8, 3.0, 42);
    MetricSpace space(inst.data, MetricKind::planted);
    for (Index i = 0; i < 8; ++i)
        for (Index j = 0; j < 8; ++j)
            for (Index k = 0; k < 8; ++k)
                REQUIRE(space.distance(i, j, Stage::oracle) <=
                        space.distance(i, k, Stage::oracle) +
                            space.distance(k, j, Stage::oracle));
}
