#ifndef MFC_PIPELINE_HPP
#define MFC_PIPELINE_HPP

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfc/completion.hpp"
#include "mfc/datagen.hpp"
#include "mfc/dataset.hpp"
#include "mfc/evaluate.hpp"
#include "mfc/forest.hpp"
#include "mfc/io.hpp"
#include "mfc/metric.hpp"
#include "mfc/mst.hpp"

namespace mfc {

struct GenSpec {
    std::string generator; // uniform | gaussian-mixture | planted-pair
    Index n = 0;
    std::size_t d = 1;
    Index g = 1;
    Index points_per_cluster = 0;
    double p = 1.0;
    std::uint64_t seed = 0;
};

struct GeneratedInstance {
    Dataset data;
    json sidecar;
    std::optional<Partition> planted_partition; // the natural {P1, P2} split
};

inline GeneratedInstance generate(const GenSpec& spec) {
    GeneratedInstance inst;
    inst.sidecar["generator"] = spec.generator;
    inst.sidecar["seed"] = spec.seed;
    if (spec.generator == "uniform") {
        inst.data = uniform_cloud(spec.n, spec.d, spec.seed);
        inst.sidecar["n"] = spec.n;
        inst.sidecar["d"] = spec.d;
    } else if (spec.generator == "gaussian-mixture") {
        auto mix = gaussian_mixture(spec.g, spec.d, spec.points_per_cluster, spec.seed);
        inst.sidecar["g"] = spec.g;
        inst.sidecar["d"] = spec.d;
        inst.sidecar["points_per_cluster"] = spec.points_per_cluster;
        inst.sidecar["n"] = mix.data.size();
        inst.sidecar["labels"] = mix.labels;
        inst.data = std::move(mix.data);
    } else if (spec.generator == "planted-pair") {
        auto planted = planted_pair(spec.n, spec.p, spec.seed);
        inst.sidecar["n"] = spec.n;
        inst.sidecar["p"] = spec.p;
        inst.sidecar["planted_pair"] = {planted.a, planted.b};
        inst.planted_partition = std::move(planted.partition);
        inst.data = std::move(planted.data);
    } else {
        throw ConfigError("unknown generator: " + spec.generator);
    }
    return inst;
}

struct RunConfig {
    // exactly one of input_path / gen
    std::string input_path;
    std::optional<GenSpec> gen;

    MetricKind metric = MetricKind::euclidean;
    std::string strategy = "kcenter"; // kcenter | knn
    Index t = 16;                     // kcenter component count
    Index k = 2;                      // knn neighbor count
    std::optional<RepPolicy> rep_policy; // default: keep-existing for kcenter, lowest-index for knn
    bool three_way = false;
    std::uint64_t seed = 0;
    bool oracle = false; // also run exact_metric_mst and the BCP oracle
    Index cap = kDefaultExactCap;

    void validate() const {
        if (input_path.empty() == !gen.has_value())
            throw ConfigError("exactly one of input path / generator spec must be given");
        if (strategy != "kcenter" && strategy != "knn")
            throw ConfigError("unknown strategy: " + strategy);
    }
};

struct RunResult {
    std::shared_ptr<Dataset> data; // keeps the space alive alongside the result
    Forest forest;
    CompletionResult mfc;
    std::optional<SpanningTree> exact_tree;
    std::optional<CompletionResult> tstar;
    EvalReport report;
};

inline Dataset load_dataset(const std::string& path, MetricKind metric) {
    switch (metric) {
    case MetricKind::euclidean: return load_vectors_csv(path);
    case MetricKind::jaccard: return load_sets(path);
    case MetricKind::hamming:
    case MetricKind::levenshtein: return load_strings(path);
    case MetricKind::planted:
        throw ConfigError("planted instances cannot be loaded from point files; use --gen");
    }
    throw InvariantError("unreachable metric kind");
}

// Executes the three-stage pipeline (partition, per-component MSTs,
// MFC-Approx) and, when the oracle flag is set, the exact baseline and the
// BCP oracle for cost-ratio / gamma-bar / bound checks.
inline RunResult run_pipeline(const RunConfig& config) {
    config.validate();
    RunResult result;
    if (config.gen) {
        result.data = std::make_shared<Dataset>(generate(*config.gen).data);
    } else {
        result.data = std::make_shared<Dataset>(load_dataset(config.input_path, config.metric));
    }
    MetricSpace space(*result.data, config.metric);
    const Index n = space.size();

    using clock = std::chrono::steady_clock;
    StageTimings timings;
    auto timed = [&](const char* label, auto&& fn) {
        const auto start = clock::now();
        fn();
        timings.seconds[label] = std::chrono::duration<double>(clock::now() - start).count();
    };

    Partition partition;
    timed("init-partition", [&] {
        if (config.strategy == "kcenter")
            partition = greedy_k_center(space, config.t, config.seed);
        else
            partition = knn_components(space, config.k);
    });

    timed("sub-mst", [&] { result.forest = component_msts(space, partition); });

    const RepPolicy policy = config.rep_policy.value_or(
        config.strategy == "kcenter" ? RepPolicy::keep_existing : RepPolicy::lowest_index);
    timed("mfc-approx", [&] {
        Partition with_reps = choose_representatives(partition, policy, config.seed);
        if (with_reps.t >= 2) {
            const CoarsenedGraph coarsened =
                approx_coarsened_weights(space, with_reps, config.three_way);
            result.mfc = complete_forest(result.forest, coarsened);
        } else {
            result.mfc = complete_forest(result.forest, CoarsenedGraph(1));
        }
        result.forest.partition = std::move(with_reps);
    });

    if (config.oracle) {
        timed("exact-baseline", [&] { result.exact_tree = exact_metric_mst(space, config.cap); });
        if (partition.t >= 2) {
            timed("oracle", [&] {
                const CoarsenedGraph optimal =
                    optimal_coarsened_weights(space, partition, config.cap);
                result.tstar = complete_forest(result.forest, optimal);
            });
        } else {
            result.tstar = result.mfc;
        }
    }

    result.report = evaluate(space, result.forest, result.mfc,
                             result.exact_tree ? &*result.exact_tree : nullptr,
                             result.tstar ? &*result.tstar : nullptr, timings);
    result.report.strategy = config.strategy;
    result.report.seed = config.seed;
    result.report.rep_policy = to_string(policy);
    result.report.three_way = config.three_way;
    return result;
}

inline unsigned default_thread_count() {
    if (const char* env = std::getenv("MFC_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

struct SweepRow {
    std::size_t run_index = 0;
    Index t = 0;
    std::uint64_t seed = 0;
    bool ok = false;
    std::string error;
    EvalReport report;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::string csv; // per-run rows followed by one aggregate row per t
};

// Runs |t_list| x repeats pipelines with derived seeds base_seed + run_index
// (applied to both the generator and the pipeline, so each repeat is a fresh
// sample and any row is re-runnable in isolation). Row errors are recorded
// and the sweep continues. Rows may execute concurrently (MFC_THREADS or the
// `threads` argument); CSV order is fixed by run index regardless.
inline SweepResult sweep(const RunConfig& base, const std::vector<Index>& t_list, Index repeats,
                         unsigned threads = 0) {
    base.validate();
    if (t_list.empty() || repeats < 1) throw ConfigError("sweep requires t values and repeats >= 1");
    if (threads == 0) threads = default_thread_count();

    std::vector<RunConfig> configs;
    SweepResult result;
    std::size_t run_index = 0;
    for (Index t : t_list) {
        for (Index r = 0; r < repeats; ++r) {
            RunConfig config = base;
            config.t = t;
            config.seed = base.seed + run_index;
            if (config.gen) config.gen->seed = config.seed;
            configs.push_back(std::move(config));
            SweepRow row;
            row.run_index = run_index;
            row.t = t;
            row.seed = base.seed + run_index;
            result.rows.push_back(std::move(row));
            ++run_index;
        }
    }

    auto execute = [&](std::size_t idx) {
        SweepRow& row = result.rows[idx];
        try {
            row.report = run_pipeline(configs[idx]).report;
            row.ok = true;
        } catch (const std::exception& ex) {
            row.ok = false;
            row.error = ex.what();
        }
    };
    if (threads <= 1) {
        for (std::size_t i = 0; i < configs.size(); ++i) execute(i);
    } else {
        std::size_t next = 0;
        while (next < configs.size()) {
            std::vector<std::future<void>> batch;
            for (unsigned w = 0; w < threads && next < configs.size(); ++w, ++next)
                batch.push_back(std::async(std::launch::async, execute, next));
            for (auto& f : batch) f.get();
        }
    }

    result.csv = report_csv_header() + "\n";
    for (const SweepRow& row : result.rows) {
        if (row.ok) {
            result.csv += report_to_csv_row(row.report, std::to_string(row.run_index), "run") + "\n";
        } else {
            std::string reason = row.error;
            for (char& c : reason)
                if (c == ',' || c == '\n') c = ';';
            EvalReport stub;
            stub.t = row.t;
            stub.seed = row.seed;
            result.csv += report_to_csv_row(stub, std::to_string(row.run_index), "run",
                                            "failed:" + reason) + "\n";
        }
    }
    // Aggregate mean/std per t over successful rows.
    for (Index t : t_list) {
        std::vector<const SweepRow*> group;
        for (const SweepRow& row : result.rows)
            if (row.t == t && row.ok) group.push_back(&row);
        auto stats = [&](auto getter) -> std::pair<std::optional<double>, std::optional<double>> {
            std::vector<double> vals;
            for (const SweepRow* row : group) {
                if (auto v = getter(row->report)) vals.push_back(*v);
            }
            if (vals.empty()) return {std::nullopt, std::nullopt};
            double mean = 0.0;
            for (double v : vals) mean += v;
            mean /= static_cast<double>(vals.size());
            double var = 0.0;
            for (double v : vals) var += (v - mean) * (v - mean);
            var /= static_cast<double>(vals.size());
            return {mean, std::sqrt(var)};
        };
        const auto [cr_mean, cr_std] =
            stats([](const EvalReport& r) { return r.cost_ratio; });
        const auto [gb_mean, gb_std] = stats([](const EvalReport& r) { return r.gamma_bar; });
        auto fmt = [](const std::optional<double>& v) {
            return v ? detail::format_weight(*v) : std::string();
        };
        // Mirror report_csv_header(): only the aggregate-relevant columns are filled.
        std::vector<std::string> cols(25);
        cols[0] = "agg-t" + std::to_string(t);
        cols[1] = "aggregate";
        cols[2] = std::to_string(t);
        cols[4] = group.empty() ? "no-data" : "ok";
        cols[11] = fmt(cr_mean);
        cols[12] = fmt(cr_std);
        cols[13] = fmt(gb_mean);
        cols[14] = fmt(gb_std);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (c) result.csv += ',';
            result.csv += cols[c];
        }
        result.csv += '\n';
    }
    return result;
}

} // namespace mfc

#endif
