#ifndef MFC_IO_HPP
#define MFC_IO_HPP

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mfc/completion.hpp"
#include "mfc/evaluate.hpp"
#include "mfc/forest.hpp"
#include "mfc/metric.hpp"
#include "mfc/mst.hpp"
#include "mfc/partition.hpp"

namespace mfc {

using json = nlohmann::json;

namespace detail {

inline std::string format_weight(double w) {
    std::ostringstream ss;
    ss << std::setprecision(17) << w;
    return ss.str();
}

inline void write_or_throw(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

} // namespace detail

// --- spanning trees ---------------------------------------------------

// CSV, one `u,v,w` line per edge.
inline std::string tree_to_csv(const SpanningTree& tree) {
    std::string out = "u,v,w\n";
    for (const Edge& e : tree.edges)
        out += std::to_string(e.u) + "," + std::to_string(e.v) + "," +
               detail::format_weight(e.w) + "\n";
    return out;
}

inline SpanningTree tree_from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open tree file: " + path);
    SpanningTree tree;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == "u,v,w") continue;
        std::stringstream ss(line);
        std::string fu, fv, fw;
        if (!std::getline(ss, fu, ',') || !std::getline(ss, fv, ',') || !std::getline(ss, fw, ','))
            throw InputError(path + ":" + std::to_string(lineno) + ": expected u,v,w");
        try {
            tree.edges.emplace_back(static_cast<Index>(std::stoul(fu)),
                                    static_cast<Index>(std::stoul(fv)), std::stod(fw));
        } catch (const std::exception&) {
            throw InputError(path + ":" + std::to_string(lineno) + ": malformed edge row");
        }
        tree.total_weight += tree.edges.back().w;
    }
    return tree;
}

inline json edges_to_json(const std::vector<Edge>& edges) {
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back({e.u, e.v, e.w});
    return arr;
}

inline json tree_to_json(const SpanningTree& tree, const QueryLedger* queries = nullptr) {
    json j;
    j["total_weight"] = tree.total_weight;
    j["edge_count"] = tree.edges.size();
    j["edges"] = edges_to_json(tree.edges);
    if (queries) {
        json q;
        for (int s = 0; s < kNumStages; ++s)
            q[stage_label(static_cast<Stage>(s))] = queries->per_stage[s];
        q["total"] = queries->total();
        j["queries"] = q;
    }
    return j;
}

// --- datasets ---------------------------------------------------------

// Serializes a dataset in the loader formats: vectors as CSV, sets as
// whitespace-separated id lines, strings as UTF-8 lines. Planted instances
// have no point payloads; they round-trip through their JSON sidecar.
inline std::string dataset_to_text(const Dataset& ds) {
    std::string out;
    switch (ds.kind) {
    case DataKind::vectors:
        for (const auto& v : ds.vectors) {
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (k) out += ',';
                out += detail::format_weight(v[k]);
            }
            out += '\n';
        }
        return out;
    case DataKind::sets:
        for (const auto& s : ds.sets) {
            for (std::size_t k = 0; k < s.size(); ++k) {
                if (k) out += ' ';
                out += std::to_string(s[k]);
            }
            out += '\n';
        }
        return out;
    case DataKind::strings:
        for (const auto& s : ds.strings) out += encode_utf8(s) + '\n';
        return out;
    case DataKind::planted:
        throw InputError("planted datasets serialize only to their JSON sidecar");
    }
    throw InvariantError("unreachable dataset kind");
}

// --- partitions -------------------------------------------------------

inline std::string partition_to_csv(const Partition& partition) {
    std::string out = "point_index,component_id\n";
    for (Index i = 0; i < partition.n(); ++i)
        out += std::to_string(i) + "," + std::to_string(partition.assignment[i]) + "\n";
    return out;
}

inline json partition_header_json(const Partition& partition) {
    json j;
    j["t"] = partition.t;
    j["n"] = partition.n();
    if (partition.has_representatives())
        j["representatives"] = partition.representatives;
    else
        j["representatives"] = nullptr;
    return j;
}

inline Partition partition_from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open partition file: " + path);
    Partition part;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == "point_index,component_id") continue;
        std::stringstream ss(line);
        std::string fi, fc;
        if (!std::getline(ss, fi, ',') || !std::getline(ss, fc, ','))
            throw InputError(path + ":" + std::to_string(lineno) + ": expected point,component");
        try {
            const auto idx = static_cast<Index>(std::stoul(fi));
            const auto comp = static_cast<Index>(std::stoul(fc));
            if (idx != part.assignment.size())
                throw InputError(path + ": point indices must be consecutive from 0");
            part.assignment.push_back(comp);
            part.t = std::max(part.t, static_cast<Index>(comp + 1));
        } catch (const InputError&) {
            throw;
        } catch (const std::exception&) {
            throw InputError(path + ":" + std::to_string(lineno) + ": malformed partition row");
        }
    }
    if (part.assignment.empty()) throw InputError(path + ": empty partition");
    return part;
}

// --- ledgers and reports ----------------------------------------------

inline json ledger_to_json(const QueryLedger& ledger) {
    json j;
    for (int s = 0; s < kNumStages; ++s)
        j[stage_label(static_cast<Stage>(s))] = ledger.per_stage[s];
    j["total"] = ledger.total();
    return j;
}

inline json completion_to_json(const CompletionResult& result, const QueryLedger* queries,
                               bool three_way) {
    json j = tree_to_json(result.full_tree, queries);
    j["completion_edges"] = edges_to_json(result.completion_edges);
    j["coarsened_tree"] = tree_to_json(result.coarsened_tree);
    j["w_completion"] = result.w_completion;
    j["w_forest"] = result.w_forest;
    j["w_total"] = result.w_total;
    j["three_way"] = three_way;
    return j;
}

inline json report_to_json(const EvalReport& report) {
    json j;
    j["n"] = report.n;
    j["t"] = report.t;
    j["metric"] = report.metric;
    j["strategy"] = report.strategy;
    j["seed"] = report.seed;
    j["rep_policy"] = report.rep_policy;
    j["three_way"] = report.three_way;
    j["w_forest"] = report.w_forest;
    j["w_mfc"] = report.w_mfc;
    auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
    j["w_opt"] = opt(report.w_opt);
    j["w_tstar"] = opt(report.w_tstar);
    j["cost_ratio"] = opt(report.cost_ratio);
    j["gamma_bar"] = opt(report.gamma_bar);
    j["theorem3_beta"] = opt(report.theorem3_bound);
    j["bound_status"] = to_string(report.bound_status);
    j["queries"] = ledger_to_json(report.queries);
    json timings;
    for (const auto& [label, secs] : report.timings.seconds) timings[label] = secs;
    j["timings_seconds"] = timings;
    json hist = json::object();
    for (const auto& [size, count] : report.component_size_histogram)
        hist[std::to_string(size)] = count;
    j["component_size_histogram"] = hist;
    return j;
}

// Fixed column order shared by single runs and sweep rows.
inline std::string report_csv_header() {
    return "run_index,kind,t,seed,status,n,metric,strategy,w_forest,w_mfc,w_opt,cost_ratio,"
           "cost_ratio_std,gamma_bar,gamma_bar_std,theorem3_beta,bound_status,"
           "queries_init_partition,queries_sub_mst,queries_coarsen,queries_exact_baseline,"
           "queries_oracle,sec_init_partition,sec_sub_mst,sec_mfc_approx";
}

inline std::string report_to_csv_row(const EvalReport& report, const std::string& run_index = "0",
                                     const std::string& kind = "run",
                                     const std::string& status = "ok") {
    auto opt = [](const std::optional<double>& v) {
        return v ? detail::format_weight(*v) : std::string();
    };
    auto sec = [&](const char* label) {
        auto it = report.timings.seconds.find(label);
        return it == report.timings.seconds.end() ? std::string()
                                                  : detail::format_weight(it->second);
    };
    std::string row;
    row += run_index + "," + kind + ",";
    row += std::to_string(report.t) + "," + std::to_string(report.seed) + "," + status + ",";
    row += std::to_string(report.n) + "," + report.metric + "," + report.strategy + ",";
    row += detail::format_weight(report.w_forest) + "," + detail::format_weight(report.w_mfc) + ",";
    row += opt(report.w_opt) + "," + opt(report.cost_ratio) + ",,";
    row += opt(report.gamma_bar) + ",,";
    row += opt(report.theorem3_bound) + "," + to_string(report.bound_status) + ",";
    row += std::to_string(report.queries.stage(Stage::init_partition)) + ",";
    row += std::to_string(report.queries.stage(Stage::sub_mst)) + ",";
    row += std::to_string(report.queries.stage(Stage::coarsen)) + ",";
    row += std::to_string(report.queries.stage(Stage::exact_baseline)) + ",";
    row += std::to_string(report.queries.stage(Stage::oracle)) + ",";
    row += sec("init-partition") + "," + sec("sub-mst") + "," + sec("mfc-approx");
    return row;
}

// Table-2-style text block: stage fractions over the three pipeline steps
// plus the headline quality numbers.
inline std::string report_to_table(const EvalReport& report) {
    auto frac_block = [&]() {
        const double a = report.timings.seconds.count("init-partition")
                             ? report.timings.seconds.at("init-partition")
                             : 0.0;
        const double b =
            report.timings.seconds.count("sub-mst") ? report.timings.seconds.at("sub-mst") : 0.0;
        const double c = report.timings.seconds.count("mfc-approx")
                             ? report.timings.seconds.at("mfc-approx")
                             : 0.0;
        const double total = a + b + c;
        std::ostringstream ss;
        ss << std::fixed << std::setprecision(3);
        if (total > 0) {
            ss << "  k-centering %   " << a / total << "\n";
            ss << "  Sub-MST %       " << b / total << "\n";
            ss << "  MFC-approx %    " << c / total << "\n";
        }
        return ss.str();
    };
    std::ostringstream ss;
    ss << "n=" << report.n << "  t=" << report.t << "  metric=" << report.metric
       << "  strategy=" << report.strategy << "  seed=" << report.seed << "\n";
    ss << std::fixed << std::setprecision(6);
    ss << "  w_forest        " << report.w_forest << "\n";
    ss << "  w_mfc           " << report.w_mfc << "\n";
    if (report.w_opt) ss << "  w_opt           " << *report.w_opt << "\n";
    if (report.cost_ratio) ss << "  cost ratio      " << *report.cost_ratio << "\n";
    if (report.gamma_bar) ss << "  gamma_bar       " << *report.gamma_bar << "\n";
    if (report.theorem3_bound) ss << "  thm3 bound      " << *report.theorem3_bound << "\n";
    ss << "  bound status    " << to_string(report.bound_status) << "\n";
    ss << "  queries total   " << report.queries.total() << "\n";
    ss << frac_block();
    return ss.str();
}

} // namespace mfc

#endif
