#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "mfc/completion.hpp"
#include "mfc/datagen.hpp"
#include "mfc/forest.hpp"
#include "oracles.hpp"

using namespace mfc;

TEST_CASE("uniform cloud stays in the unit box and is deterministic") {
    const Dataset ds = uniform_cloud(1000, 4, 7);
    REQUIRE(ds.size() == 1000);
    REQUIRE(ds.dim() == 4);
    for (const auto& v : ds.vectors)
        for (double x : v) {
            REQUIRE(x >= -1.0);
            REQUIRE(x <= 1.0);
        }

    const Dataset a = uniform_cloud(5, 2, 1);
    const Dataset b = uniform_cloud(5, 2, 1);
    REQUIRE(a.vectors == b.vectors);
    const Dataset c = uniform_cloud(5, 2, 2);
    REQUIRE(a.vectors != c.vectors);

    CHECK_THROWS_AS(uniform_cloud(1, 2, 0), InputError);
}

TEST_CASE("uniform cloud per-coordinate mean is near zero") {
    const Dataset ds = uniform_cloud(10000, 2, 3);
    for (std::size_t k = 0; k < 2; ++k) {
        double mean = 0.0;
        for (const auto& v : ds.vectors) mean += v[k];
        mean /= 10000.0;
        CHECK(std::abs(mean) < 0.05);
    }
}

TEST_CASE("gaussian mixture sizes, labels, and cluster means") {
    const GaussianMixture mix = gaussian_mixture(8, 8, 2500, 2);
    REQUIRE(mix.data.size() == 20000);

    const GaussianMixture single = gaussian_mixture(1, 2, 100, 5);
    for (Index label : single.labels) REQUIRE(label == 0);

    const GaussianMixture m = gaussian_mixture(4, 2, 500, 9);
    for (Index c = 0; c < 4; ++c) {
        std::vector<double> mean(2, 0.0);
        Index count = 0;
        for (Index i = 0; i < m.data.size(); ++i) {
            if (m.labels[i] != c) continue;
            ++count;
            for (std::size_t k = 0; k < 2; ++k) mean[k] += m.data.vectors[i][k];
        }
        REQUIRE(count == 500);
        for (std::size_t k = 0; k < 2; ++k) {
            mean[k] /= 500.0;
            // sample mean within 3 sigma / sqrt(ppc) of the generated mean
            CHECK(std::abs(mean[k] - m.means[c][k]) <= 3.0 * m.stddevs[c][k] / std::sqrt(500.0));
        }
    }

    const GaussianMixture r1 = gaussian_mixture(3, 2, 10, 17);
    const GaussianMixture r2 = gaussian_mixture(3, 2, 10, 17);
    REQUIRE(r1.data.vectors == r2.data.vectors);
}

TEST_CASE("planted pair: one pair at distance 1, the rest at 2p") {
    const PlantedInstance inst = planted_pair(4, 2.0, 0);
    MetricSpace space(inst.data, MetricKind::planted);
    int ones = 0, fours = 0;
    for (Index i = 0; i < 4; ++i)
        for (Index j = i + 1; j < 4; ++j) {
            const double d = space.distance(i, j, Stage::oracle);
            if (d == 1.0) ++ones;
            else if (d == 4.0) ++fours;
        }
    CHECK(ones == 1);
    CHECK(fours == 5);
    // The planted pair crosses the natural split.
    CHECK(inst.a < 2);
    CHECK(inst.b >= 2);

    CHECK_THROWS_AS(planted_pair(5, 2.0, 0), InputError);
    CHECK_THROWS_AS(planted_pair(2, 2.0, 0), InputError);
}

TEST_CASE("planted partition's optimal completion weight is exactly 1") {
    const PlantedInstance inst = planted_pair(20, 5.0, 123);
    MetricSpace space(inst.data, MetricKind::planted);
    Forest forest = component_msts(space, inst.partition);
    const CoarsenedGraph optimal = optimal_coarsened_weights(space, inst.partition);
    const CompletionResult completion = complete_forest(forest, optimal);
    CHECK(completion.w_completion == 1.0);
    REQUIRE(completion.completion_edges.size() == 1);
    CHECK(completion.completion_edges[0].u == std::min(inst.a, inst.b));
    CHECK(completion.completion_edges[0].v == std::max(inst.a, inst.b));
}
