#include "corrnet/pipeline.hpp"

#include "corrnet/corr.hpp"
#include "corrnet/error.hpp"
#include "corrnet/filtgraph.hpp"
#include "corrnet/io.hpp"
#include "corrnet/mapeq.hpp"
#include "corrnet/netinfo.hpp"
#include "corrnet/spectral.hpp"
#include "corrnet/stats.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace corrnet {

namespace {

constexpr double kPrimaryDt = 0.25; // monthly artifacts use the 3-month window

std::string trimmed(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
}

std::vector<double> parse_dt_list(const std::string& text) {
    std::vector<double> dts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trimmed(item);
        if (item.empty()) continue;
        try {
            size_t used = 0;
            double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            dts.push_back(v);
        } catch (const std::exception&) {
            throw DataError("bad delta_t value: '" + item + "'");
        }
    }
    if (dts.empty()) throw DataError("empty delta_t list");
    return dts;
}

class FileSink {
public:
    FileSink(std::filesystem::path root, PipelineReport& report)
        : root_(std::move(root)), report_(&report) {}

    template <typename WriteFn>
    void emit(const std::string& rel, WriteFn&& write) {
        const auto path = root_ / rel;
        std::filesystem::create_directories(path.parent_path());
        std::ofstream out(path, std::ios::binary);
        if (!out) throw DataError("cannot write output file: " + path.string());
        write(out);
        report_->files.push_back(rel);
    }

private:
    std::filesystem::path root_;
    PipelineReport* report_;
};

} // namespace

void PipelineConfig::validate() const {
    if (input_path.empty()) throw DataError("pipeline config: input path is required");
    if (output_dir.empty()) throw DataError("pipeline config: output_dir is required");
    if (community_runs < 1) throw DataError("pipeline config: runs must be >= 1");
    if (delta_ts.empty()) throw DataError("pipeline config: dts must be nonempty");
    for (double dt : delta_ts) delta_t_months(dt);
}

PipelineConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config file: " + path);

    PipelineConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string s = trimmed(line);
        if (s.empty() || s[0] == '#') continue;
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw DataError("config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trimmed(s.substr(0, eq));
        const std::string value = trimmed(s.substr(eq + 1));
        if (key == "input") {
            cfg.input_path = value;
        } else if (key == "fill") {
            if (value == "forward") cfg.fill = FillPolicy::forward_fill;
            else if (value == "strict") cfg.fill = FillPolicy::strict;
            else throw DataError("config: fill must be 'forward' or 'strict'");
        } else if (key == "dts") {
            cfg.delta_ts = parse_dt_list(value);
        } else if (key == "ref") {
            cfg.reference_label = value;
        } else if (key == "runs") {
            cfg.community_runs = std::stoi(value);
        } else if (key == "seed") {
            cfg.seed = std::stoull(value);
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else if (key == "events") {
            cfg.events_path = value;
        } else {
            throw DataError("config: unknown key '" + key + "'");
        }
    }
    return cfg;
}

PipelineReport run_pipeline(const PipelineConfig& config) {
    config.validate();

    // Everything that can fail as "configuration" happens before any output
    // is created: an empty or unreadable input must not leave partial files.
    const ReturnPanel panel = log_returns(load_prices_file(config.input_path, config.fill));
    const std::string ref =
        config.reference_label.empty() ? panel.labels.front() : config.reference_label;
    if (std::find(panel.labels.begin(), panel.labels.end(), ref) == panel.labels.end())
        throw DataError("reference label '" + ref + "' not present in input");
    EventMap events;
    if (!config.events_path.empty()) events = load_events_file(config.events_path);

    PipelineReport report;
    FileSink sink(config.output_dir, report);

    // Monthly correlation matrices and filtered graphs at the primary dt.
    std::vector<CorrelationMatrix> matrices;
    std::vector<FilteredGraph> msts, pmfgs;
    for (const YearMonth& m : months_spanned(panel)) {
        ReturnWindow w;
        try {
            w = window(panel, m, kPrimaryDt);
        } catch (const DataError&) {
            continue; // insufficient history at the panel edge, not a failure
        }
        try {
            if (w.record_count() <= panel.n_series())
                report.warnings.push_back(m.to_string() + ": T_w=" + std::to_string(w.record_count()) +
                                          " <= N=" + std::to_string(panel.n_series()) +
                                          ", correlation matrix is singular");
            CorrelationMatrix c = pearson_matrix(w);
            FilteredGraph t = mst(c);
            FilteredGraph p = pmfg(c);
            report.months.push_back(m);
            matrices.push_back(std::move(c));
            msts.push_back(std::move(t));
            pmfgs.push_back(std::move(p));
        } catch (const DataError& e) {
            report.failures.push_back(m.to_string() + ": " + e.what());
        }
    }
    if (matrices.empty()) throw DataError("no analyzable month at dt=0.25; see failures");

    for (size_t i = 0; i < matrices.size(); ++i) {
        const std::string m = report.months[i].to_string();
        sink.emit("corr/corr_" + m + ".csv", [&](std::ostream& o) { write_corr_csv(o, matrices[i]); });
        sink.emit("graphs/mst_" + m + ".csv", [&](std::ostream& o) { write_edgelist(o, msts[i]); });
        sink.emit("graphs/pmfg_" + m + ".csv", [&](std::ostream& o) { write_edgelist(o, pmfgs[i]); });
    }

    // Mean off-diagonal correlation, monthly at the primary dt.
    {
        std::vector<double> means;
        means.reserve(matrices.size());
        for (const auto& c : matrices) means.push_back(mean_offdiag(c));
        sink.emit("mean_corr_3m.csv",
                  [&](std::ostream& o) { write_mean_series_csv(o, report.months, means, events); });
    }

    // Average-correlation surface over the configured dt axis.
    sink.emit("surface.csv", [&](std::ostream& o) {
        write_surface_csv(o, correlation_surface(panel, config.delta_ts));
    });

    // Unconditional PMFG and its communities; the partition also fixes the
    // column order of the profile tables.
    std::vector<int> ordering(static_cast<size_t>(panel.n_series()));
    for (size_t i = 0; i < ordering.size(); ++i) ordering[i] = static_cast<int>(i);
    try {
        CorrelationMatrix full = pearson_matrix(full_window(panel));
        FilteredGraph upmfg = pmfg(full);
        Partition part = detect_communities(upmfg, config.community_runs, config.seed);
        ordering = cluster_ordering(part);
        sink.emit("unconditional_pmfg.csv", [&](std::ostream& o) { write_edgelist(o, upmfg); });
        sink.emit("unconditional_pmfg.graphml", [&](std::ostream& o) { write_graphml(o, upmfg); });
        sink.emit("communities.csv", [&](std::ostream& o) { write_communities_csv(o, upmfg, part); });
    } catch (const DataError& e) {
        report.failures.push_back(std::string("unconditional: ") + e.what() +
                                  " (profile tables fall back to input label order)");
    }
    std::vector<std::string> ordered_labels;
    ordered_labels.reserve(ordering.size());
    for (int idx : ordering) ordered_labels.push_back(panel.labels[static_cast<size_t>(idx)]);

    // Degree profile of the monthly PMFGs in community order.
    sink.emit("degree_profile.csv", [&](std::ostream& o) {
        write_degree_profile_csv(o, report.months, ordered_labels, degree_profile(pmfgs, ordering));
    });

    // Rolling mutual information between successive months' PMFGs.
    {
        std::vector<YearMonth> mi_months;
        std::vector<LinkMIResult> mi;
        for (size_t i = 0; i + 1 < pmfgs.size(); ++i) {
            if (report.months[i + 1].months_since(report.months[i]) != 1) continue; // gap from a failed month
            mi.push_back(link_mutual_information(pmfgs[i], pmfgs[i + 1]));
            mi_months.push_back(report.months[i + 1]);
        }
        sink.emit("mi.csv", [&](std::ostream& o) { write_mi_csv(o, mi_months, mi, events); });
    }

    // Welch t-test of MST-link vs PMFG-link correlations.
    {
        std::vector<WelchResult> welch;
        welch.reserve(matrices.size());
        for (size_t i = 0; i < matrices.size(); ++i)
            welch.push_back(welch_mst_vs_pmfg(msts[i], pmfgs[i]));
        sink.emit("ttest.csv",
                  [&](std::ostream& o) { write_ttest_csv(o, report.months, welch, events); });
    }

    // Spectral tables (top three eigenvalues, the paper's focus).
    {
        EigenSeries es = eigen_series(matrices, ref, std::min(3, panel.n_series()), ordering);
        sink.emit("spectral_eigenvalues.csv", [&](std::ostream& o) { write_eigenvalues_csv(o, es); });
        sink.emit("spectral_vectors.csv", [&](std::ostream& o) { write_eigenvector_csv(o, es); });
        sink.emit("spectral_threshold.csv", [&](std::ostream& o) { write_threshold_csv(o, es, events); });
    }

    sink.emit("manifest.txt", [&](std::ostream& o) {
        o << "corrnet pipeline manifest\n";
        o << "input=" << config.input_path << '\n';
        o << "fill=" << (config.fill == FillPolicy::forward_fill ? "forward" : "strict") << '\n';
        o << "dts=";
        for (size_t i = 0; i < config.delta_ts.size(); ++i)
            o << (i ? "," : "") << fmt_num(config.delta_ts[i]);
        o << '\n';
        o << "ref=" << ref << '\n';
        o << "runs=" << config.community_runs << '\n';
        o << "seed=" << config.seed << '\n';
        o << "series=" << panel.n_series() << '\n';
        o << "months_analyzed=" << report.months.size() << '\n';
        o << "warnings=" << report.warnings.size() << '\n';
        for (const auto& w : report.warnings) o << "warning: " << w << '\n';
        o << "failures=" << report.failures.size() << '\n';
        for (const auto& f : report.failures) o << "failure: " << f << '\n';
        o << "files=" << report.files.size() + 1 << '\n';
        for (const auto& f : report.files) o << "file: " << f << '\n';
        o << "file: manifest.txt\n";
    });
    return report;
}

} // namespace corrnet
