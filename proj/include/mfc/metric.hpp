#ifndef MFC_METRIC_HPP
#define MFC_METRIC_HPP

#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "mfc/dataset.hpp"
#include "mfc/errors.hpp"

namespace mfc {

enum class MetricKind { euclidean, jaccard, hamming, levenshtein, planted };

inline std::string to_string(MetricKind m) {
    switch (m) {
    case MetricKind::euclidean: return "euclidean";
    case MetricKind::jaccard: return "jaccard";
    case MetricKind::hamming: return "hamming";
    case MetricKind::levenshtein: return "levenshtein";
    case MetricKind::planted: return "planted";
    }
    return "?";
}

inline MetricKind metric_from_string(const std::string& s) {
    if (s == "euclidean") return MetricKind::euclidean;
    if (s == "jaccard") return MetricKind::jaccard;
    if (s == "hamming") return MetricKind::hamming;
    if (s == "levenshtein") return MetricKind::levenshtein;
    if (s == "planted") return MetricKind::planted;
    throw ConfigError("unknown metric: " + s);
}

// Every distance evaluation is charged to exactly one pipeline stage.
enum class Stage : int {
    init_partition = 0,
    sub_mst = 1,
    coarsen = 2,
    exact_baseline = 3,
    oracle = 4,
};

inline constexpr int kNumStages = 5;

inline const char* stage_label(Stage s) {
    static constexpr const char* labels[kNumStages] = {
        "init-partition", "sub-mst", "coarsen", "exact-baseline", "oracle"};
    return labels[static_cast<int>(s)];
}

// Immutable snapshot of the per-stage query counts.
struct QueryLedger {
    std::array<std::uint64_t, kNumStages> per_stage{};

    std::uint64_t total() const {
        std::uint64_t sum = 0;
        for (auto c : per_stage) sum += c;
        return sum;
    }
    std::uint64_t stage(Stage s) const { return per_stage[static_cast<int>(s)]; }
    bool operator==(const QueryLedger&) const = default;
};

namespace detail {

inline double euclidean_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = a[k] - b[k];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

inline double jaccard_dist(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b) {
    // Two empty sets are identical points: distance 0.
    if (a.empty() && b.empty()) return 0.0;
    std::size_t inter = 0, ia = 0, ib = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia] < b[ib]) ++ia;
        else if (b[ib] < a[ia]) ++ib;
        else { ++inter; ++ia; ++ib; }
    }
    const std::size_t uni = a.size() + b.size() - inter;
    return 1.0 - static_cast<double>(inter) / static_cast<double>(uni);
}

inline double hamming_dist(const std::u32string& a, const std::u32string& b) {
    if (a.size() != b.size())
        throw InputError("hamming distance requires equal-length strings (" +
                         std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    std::size_t diff = 0;
    for (std::size_t k = 0; k < a.size(); ++k) diff += (a[k] != b[k]);
    return static_cast<double>(diff);
}

// Unit-cost insert/delete/substitute over code points, two-row DP.
inline double levenshtein_dist(const std::u32string& a, const std::u32string& b) {
    const std::u32string& s = a.size() <= b.size() ? a : b;
    const std::u32string& t = a.size() <= b.size() ? b : a;
    std::vector<std::uint32_t> row(s.size() + 1);
    for (std::size_t j = 0; j <= s.size(); ++j) row[j] = static_cast<std::uint32_t>(j);
    for (std::size_t i = 1; i <= t.size(); ++i) {
        std::uint32_t prev_diag = row[0];
        row[0] = static_cast<std::uint32_t>(i);
        for (std::size_t j = 1; j <= s.size(); ++j) {
            const std::uint32_t del = row[j] + 1;
            const std::uint32_t ins = row[j - 1] + 1;
            const std::uint32_t sub = prev_diag + (t[i - 1] != s[j - 1] ? 1 : 0);
            prev_diag = row[j];
            row[j] = std::min({del, ins, sub});
        }
    }
    return static_cast<double>(row[s.size()]);
}

} // namespace detail

// A dataset paired with a metric, behind a counted query interface. Every
// module obtains distances through this class so the ledger reflects true
// query complexity; there is deliberately no caching here.
class MetricSpace {
public:
    MetricSpace(const Dataset& data, MetricKind metric) : data_(&data), metric_(metric) {
        data.validate();
        check_compatible();
    }

    Index size() const { return data_->size(); }
    MetricKind metric() const { return metric_; }
    const Dataset& dataset() const { return *data_; }

    // Symmetric, zero on the diagonal. Charges exactly one query to `stage`,
    // also when i == j.
    double distance(Index i, Index j, Stage stage) const {
        const Index n = size();
        if (i >= n || j >= n) throw InputError("point index out of range");
        counts_[static_cast<int>(stage)].fetch_add(1, std::memory_order_relaxed);
        if (i == j) return 0.0;
        switch (metric_) {
        case MetricKind::euclidean:
            return detail::euclidean_dist(data_->vectors[i], data_->vectors[j]);
        case MetricKind::jaccard:
            return detail::jaccard_dist(data_->sets[i], data_->sets[j]);
        case MetricKind::hamming:
            return detail::hamming_dist(data_->strings[i], data_->strings[j]);
        case MetricKind::levenshtein:
            return detail::levenshtein_dist(data_->strings[i], data_->strings[j]);
        case MetricKind::planted: {
            const auto& p = data_->planted;
            const Index lo = std::min(i, j), hi = std::max(i, j);
            return (lo == std::min(p.a, p.b) && hi == std::max(p.a, p.b)) ? 1.0 : p.off;
        }
        }
        throw InvariantError("unreachable metric kind");
    }

    QueryLedger ledger_snapshot() const {
        QueryLedger ledger;
        for (int s = 0; s < kNumStages; ++s)
            ledger.per_stage[s] = counts_[s].load(std::memory_order_relaxed);
        return ledger;
    }

    void reset_ledger() {
        for (auto& c : counts_) c.store(0, std::memory_order_relaxed);
    }

private:
    void check_compatible() const {
        const DataKind k = data_->kind;
        auto mismatch = [&](const char* need) {
            throw KindMismatchError(std::string("metric '") + to_string(metric_) +
                                    "' requires " + need + " data");
        };
        switch (metric_) {
        case MetricKind::euclidean:
            if (k != DataKind::vectors) mismatch("vector");
            break;
        case MetricKind::jaccard:
            if (k != DataKind::sets) mismatch("set");
            break;
        case MetricKind::hamming: {
            if (k != DataKind::strings) mismatch("string");
            for (const auto& s : data_->strings)
                if (s.size() != data_->strings.front().size())
                    throw InputError("hamming metric requires equal-length strings");
            break;
        }
        case MetricKind::levenshtein:
            if (k != DataKind::strings) mismatch("string");
            break;
        case MetricKind::planted:
            if (k != DataKind::planted) mismatch("planted index-table");
            break;
        }
    }

    const Dataset* data_;
    MetricKind metric_;
    mutable std::array<std::atomic<std::uint64_t>, kNumStages> counts_{};
};

} // namespace mfc

#endif
