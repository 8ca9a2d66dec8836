// Command-line front end for the metric forest completion pipeline.
//
// Subcommands:
//   gen    generate a synthetic dataset (+ JSON sidecar)
//   run    partition -> per-component MSTs -> MFC-Approx -> report
//   sweep  repeat `run` over a list of t values with derived seeds
//   exact  quadratic exact-MST baseline only
//   gamma  gamma-bar of a given forest vs a given tree
//
// stdout carries only the requested report; diagnostics go to stderr.
// Exit codes: 0 ok, 2 configuration error, 3 unreadable input, 4 dataset /
// metric kind mismatch, 5 invalid argument values, 6 size cap exceeded,
// 7 internal invariant violation.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mfc/io.hpp"
#include "mfc/pipeline.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitKindMismatch = 4;
constexpr int kExitInput = 5;
constexpr int kExitCap = 6;
constexpr int kExitInvariant = 7;

struct CommonOpts {
    std::string input_path;
    std::string generator;
    mfc::GenSpec gen;
    std::string metric = "euclidean";

    void add_input_flags(CLI::App* cmd) {
        cmd->add_option("--input", input_path, "dataset file (format chosen by --metric)");
        cmd->add_option("--gen", generator, "generator: uniform | gaussian-mixture | planted-pair");
        cmd->add_option("--n", gen.n, "point count (uniform, planted-pair)");
        cmd->add_option("--d", gen.d, "dimension (vector generators)");
        cmd->add_option("--g", gen.g, "number of Gaussians");
        cmd->add_option("--ppc", gen.points_per_cluster, "points per Gaussian cluster");
        cmd->add_option("--p", gen.p, "planted-pair adversarial factor (>= 1)");
        cmd->add_option("--metric", metric,
                        "euclidean | jaccard | hamming | levenshtein | planted");
    }

    void fill(mfc::RunConfig& config, std::uint64_t seed) {
        if (!generator.empty()) {
            gen.generator = generator;
            gen.seed = seed;
            config.gen = gen;
            // The planted generator implies its index-table metric.
            if (generator == "planted-pair" && metric == "euclidean") metric = "planted";
        }
        config.input_path = input_path;
        config.metric = mfc::metric_from_string(metric);
        config.seed = seed;
    }
};

void write_if(const std::string& path, const std::string& content) {
    if (!path.empty()) mfc::detail::write_or_throw(path, content);
}

int dispatch(int argc, char** argv) {
    CLI::App app{"approximate minimum spanning trees over metric spaces via forest completion"};
    app.require_subcommand(1);

    // --- gen ---
    auto* gen_cmd = app.add_subcommand("gen", "generate a synthetic dataset");
    CommonOpts gen_opts;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen_opts.add_input_flags(gen_cmd);
    gen_cmd->add_option("--seed", gen_seed, "generator seed");
    gen_cmd->add_option("--out", gen_out, "output path prefix (.txt data, .json sidecar)")
        ->required();

    // --- run ---
    auto* run_cmd = app.add_subcommand("run", "run the full MFC pipeline");
    CommonOpts run_opts;
    mfc::RunConfig run_config;
    std::uint64_t run_seed = 0;
    std::string rep_policy_str;
    std::string out_report, out_tree;
    bool table_mode = false;
    run_opts.add_input_flags(run_cmd);
    run_cmd->add_option("--strategy", run_config.strategy, "kcenter | knn");
    run_cmd->add_option("--t", run_config.t, "component count (kcenter)");
    run_cmd->add_option("--k", run_config.k, "neighbor count (knn)");
    run_cmd->add_option("--rep-policy", rep_policy_str,
                        "keep-existing | lowest-index | seeded-random");
    run_cmd->add_flag("--three-way", run_config.three_way,
                      "also compare the two directed argmin points per component pair");
    run_cmd->add_option("--seed", run_seed, "pipeline seed");
    run_cmd->add_flag("--oracle", run_config.oracle,
                      "also run the exact baseline and BCP oracle for quality checks");
    run_cmd->add_option("--cap", run_config.cap, "max n for the quadratic oracles");
    run_cmd->add_option("--out-report", out_report, "write the JSON report here");
    run_cmd->add_option("--out-tree", out_tree, "write the spanning tree CSV here");
    run_cmd->add_flag("--table", table_mode, "print a text table instead of JSON");

    // --- sweep ---
    auto* sweep_cmd = app.add_subcommand("sweep", "sweep over component counts");
    CommonOpts sweep_opts;
    mfc::RunConfig sweep_base;
    std::uint64_t sweep_seed = 0;
    std::string sweep_rep_policy;
    std::vector<mfc::Index> t_list;
    mfc::Index repeats = 1;
    std::string out_csv;
    sweep_opts.add_input_flags(sweep_cmd);
    sweep_cmd->add_option("--strategy", sweep_base.strategy, "kcenter | knn");
    sweep_cmd->add_option("--t-list", t_list, "component counts to sweep, comma-separated")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--repeats", repeats, "pipelines per t value");
    sweep_cmd->add_option("--rep-policy", sweep_rep_policy,
                          "keep-existing | lowest-index | seeded-random");
    sweep_cmd->add_flag("--three-way", sweep_base.three_way, "enable the three-way refinement");
    sweep_cmd->add_option("--seed", sweep_seed, "base seed; row seeds are base + run index");
    sweep_cmd->add_flag("--oracle", sweep_base.oracle, "run the quality oracles per row");
    sweep_cmd->add_option("--cap", sweep_base.cap, "max n for the quadratic oracles");
    sweep_cmd->add_option("--out-csv", out_csv, "write the sweep CSV here");

    // --- exact ---
    auto* exact_cmd = app.add_subcommand("exact", "exact quadratic MST baseline");
    CommonOpts exact_opts;
    std::uint64_t exact_seed = 0;
    mfc::Index exact_cap = mfc::kDefaultExactCap;
    std::string exact_out_tree;
    exact_opts.add_input_flags(exact_cmd);
    exact_cmd->add_option("--seed", exact_seed, "generator seed");
    exact_cmd->add_option("--cap", exact_cap, "max n");
    exact_cmd->add_option("--out-tree", exact_out_tree, "write the tree CSV here");

    // --- gamma ---
    auto* gamma_cmd = app.add_subcommand("gamma", "gamma-bar of a forest vs a spanning tree");
    std::string gamma_partition, gamma_forest, gamma_tree;
    gamma_cmd->add_option("--partition", gamma_partition, "partition CSV")->required();
    gamma_cmd->add_option("--forest", gamma_forest, "forest edge-list CSV")->required();
    gamma_cmd->add_option("--tree", gamma_tree, "exact spanning tree CSV")->required();

    CLI11_PARSE(app, argc, argv);

    if (gen_cmd->parsed()) {
        gen_opts.gen.generator = gen_opts.generator;
        gen_opts.gen.seed = gen_seed;
        if (gen_opts.generator.empty()) throw mfc::ConfigError("gen requires --gen");
        mfc::GeneratedInstance inst = mfc::generate(gen_opts.gen);
        if (inst.data.kind != mfc::DataKind::planted)
            mfc::detail::write_or_throw(gen_out + ".txt", mfc::dataset_to_text(inst.data));
        mfc::detail::write_or_throw(gen_out + ".json", inst.sidecar.dump(2) + "\n");
        std::cout << inst.sidecar.dump(2) << "\n";
        return 0;
    }

    if (run_cmd->parsed()) {
        run_opts.fill(run_config, run_seed);
        if (!rep_policy_str.empty())
            run_config.rep_policy = mfc::rep_policy_from_string(rep_policy_str);
        mfc::RunResult result = mfc::run_pipeline(run_config);
        write_if(out_tree, mfc::tree_to_csv(result.mfc.full_tree));
        const mfc::json report = mfc::report_to_json(result.report);
        write_if(out_report, report.dump(2) + "\n");
        if (table_mode)
            std::cout << mfc::report_to_table(result.report);
        else
            std::cout << report.dump(2) << "\n";
        return 0;
    }

    if (sweep_cmd->parsed()) {
        sweep_opts.fill(sweep_base, sweep_seed);
        if (!sweep_rep_policy.empty())
            sweep_base.rep_policy = mfc::rep_policy_from_string(sweep_rep_policy);
        mfc::SweepResult result = mfc::sweep(sweep_base, t_list, repeats);
        write_if(out_csv, result.csv);
        std::cout << result.csv;
        for (const mfc::SweepRow& row : result.rows)
            if (!row.ok)
                std::cerr << "row " << row.run_index << " failed: " << row.error << "\n";
        return 0;
    }

    if (exact_cmd->parsed()) {
        mfc::RunConfig config;
        exact_opts.fill(config, exact_seed);
        std::shared_ptr<mfc::Dataset> data;
        if (config.gen)
            data = std::make_shared<mfc::Dataset>(mfc::generate(*config.gen).data);
        else
            data = std::make_shared<mfc::Dataset>(mfc::load_dataset(config.input_path, config.metric));
        mfc::MetricSpace space(*data, config.metric);
        const mfc::SpanningTree tree = mfc::exact_metric_mst(space, exact_cap);
        write_if(exact_out_tree, mfc::tree_to_csv(tree));
        const mfc::QueryLedger ledger = space.ledger_snapshot();
        std::cout << mfc::tree_to_json(tree, &ledger).dump(2) << "\n";
        return 0;
    }

    if (gamma_cmd->parsed()) {
        mfc::Partition partition = mfc::partition_from_csv(gamma_partition);
        const mfc::SpanningTree forest_edges = mfc::tree_from_csv(gamma_forest);
        const mfc::SpanningTree tree = mfc::tree_from_csv(gamma_tree);
        partition.validate(partition.n());
        mfc::Forest forest;
        forest.partition = std::move(partition);
        forest.trees.push_back(forest_edges);
        forest.total_weight = forest_edges.total_weight;
        mfc::json j;
        if (auto g = mfc::gamma_bound(forest, tree)) {
            j["gamma_bar"] = *g;
            j["theorem3_beta"] = mfc::theorem3_beta(*g);
        } else {
            j["gamma_bar"] = nullptr;
            j["theorem3_beta"] = nullptr;
        }
        j["w_forest"] = forest.total_weight;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    return kExitConfig; // unreachable: a subcommand is required
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const mfc::IoError& ex) {
        std::cerr << "io error: " << ex.what() << "\n";
        return kExitIo;
    } catch (const mfc::KindMismatchError& ex) {
        std::cerr << "kind mismatch: " << ex.what() << "\n";
        return kExitKindMismatch;
    } catch (const mfc::ConfigError& ex) {
        std::cerr << "configuration error: " << ex.what() << "\n";
        return kExitConfig;
    } catch (const mfc::CapError& ex) {
        std::cerr << "cap exceeded: " << ex.what() << "\n";
        return kExitCap;
    } catch (const mfc::InputError& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const mfc::InvariantError& ex) {
        std::cerr << "invariant violation: " << ex.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
