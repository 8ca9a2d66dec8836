#ifndef MFC_DATAGEN_HPP
#define MFC_DATAGEN_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "mfc/dataset.hpp"
#include "mfc/errors.hpp"
#include "mfc/partition.hpp"

namespace mfc {

// All generators draw from mt19937_64 (algorithm fixed by the C++ standard)
// and convert raw 64-bit words to reals by hand, so a given seed produces
// byte-identical datasets on every platform. Standard-library distributions
// are avoided because their output is implementation-defined.
namespace rng {

inline double uniform01(std::mt19937_64& gen) {
    // 53 mantissa bits -> uniform on [0, 1)
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * uniform01(gen);
}

// Box-Muller; one draw per call, the sibling value is discarded to keep the
// consumption pattern independent of call order.
inline double normal(std::mt19937_64& gen) {
    double u1 = uniform01(gen);
    const double u2 = uniform01(gen);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

// Uniform index in [0, n) by rejection, unbiased.
inline std::uint64_t uniform_index(std::mt19937_64& gen, std::uint64_t n) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t x;
    do { x = gen(); } while (x >= limit);
    return x % n;
}

} // namespace rng

// n points with i.i.d. coordinates uniform on [-1, 1].
inline Dataset uniform_cloud(Index n, std::size_t d, std::uint64_t seed) {
    if (n < 2) throw InputError("uniform_cloud requires n >= 2");
    if (d < 1) throw InputError("uniform_cloud requires d >= 1");
    std::mt19937_64 gen(seed);
    Dataset ds;
    ds.kind = DataKind::vectors;
    ds.vectors.resize(n);
    for (Index i = 0; i < n; ++i) {
        ds.vectors[i].resize(d);
        for (std::size_t k = 0; k < d; ++k) ds.vectors[i][k] = rng::uniform(gen, -1.0, 1.0);
    }
    return ds;
}

struct GaussianMixture {
    Dataset data;
    std::vector<Index> labels;                 // ground-truth cluster per point
    std::vector<std::vector<double>> means;    // g x d
    std::vector<std::vector<double>> stddevs;  // g x d, one sigma per (cluster, dimension)
};

// g cluster means uniform on [-5, 5]^d, per-(cluster,dimension) sigma
// uniform on [0.5, 0.8], points_per_cluster points per Gaussian.
inline GaussianMixture gaussian_mixture(Index g, std::size_t d, Index points_per_cluster,
                                        std::uint64_t seed) {
    if (g < 1) throw InputError("gaussian_mixture requires g >= 1");
    if (d < 1) throw InputError("gaussian_mixture requires d >= 1");
    if (points_per_cluster < 1) throw InputError("gaussian_mixture requires points_per_cluster >= 1");
    std::mt19937_64 gen(seed);
    GaussianMixture mix;
    mix.data.kind = DataKind::vectors;
    mix.means.resize(g);
    mix.stddevs.resize(g);
    for (Index c = 0; c < g; ++c) {
        mix.means[c].resize(d);
        mix.stddevs[c].resize(d);
        for (std::size_t k = 0; k < d; ++k) {
            mix.means[c][k] = rng::uniform(gen, -5.0, 5.0);
            mix.stddevs[c][k] = rng::uniform(gen, 0.5, 0.8);
        }
    }
    mix.data.vectors.reserve(std::size_t(g) * points_per_cluster);
    mix.labels.reserve(std::size_t(g) * points_per_cluster);
    for (Index c = 0; c < g; ++c) {
        for (Index p = 0; p < points_per_cluster; ++p) {
            std::vector<double> x(d);
            for (std::size_t k = 0; k < d; ++k)
                x[k] = mix.means[c][k] + mix.stddevs[c][k] * rng::normal(gen);
            mix.data.vectors.push_back(std::move(x));
            mix.labels.push_back(c);
        }
    }
    return mix;
}

struct PlantedInstance {
    Dataset data;       // kind = planted
    Index a = 0;        // planted cross pair, a in P1 and b in P2
    Index b = 0;
    Partition partition; // P1 = indices [0, n/2), P2 = [n/2, n)
    double p = 1.0;
};

// Adversarial instance: points split into halves P1, P2; one uniformly
// chosen cross pair (a, b) at distance 1, every other distinct pair at 2p.
// MFC on this partition is exactly a bichromatic closest pair search.
inline PlantedInstance planted_pair(Index n, double p, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw InputError("planted_pair requires even n >= 4");
    if (p < 1.0) throw InputError("planted_pair requires p >= 1");
    std::mt19937_64 gen(seed);
    const Index half = n / 2;
    PlantedInstance inst;
    inst.p = p;
    inst.a = static_cast<Index>(rng::uniform_index(gen, half));
    inst.b = half + static_cast<Index>(rng::uniform_index(gen, half));
    inst.data.kind = DataKind::planted;
    inst.data.planted = PlantedTable{n, inst.a, inst.b, 2.0 * p};
    inst.partition.t = 2;
    inst.partition.assignment.resize(n);
    for (Index i = 0; i < n; ++i) inst.partition.assignment[i] = i < half ? 0 : 1;
    return inst;
}

} // namespace mfc

#endif
