// corrnet: correlation-structure analysis of multivariate return panels.
// Subcommands cover the single-step operations plus an end-to-end monthly
// pipeline; see README.md for formats.

#include "corrnet/corr.hpp"
#include "corrnet/error.hpp"
#include "corrnet/filtgraph.hpp"
#include "corrnet/io.hpp"
#include "corrnet/mapeq.hpp"
#include "corrnet/netinfo.hpp"
#include "corrnet/panel.hpp"
#include "corrnet/pipeline.hpp"
#include "corrnet/spectral.hpp"
#include "corrnet/stats.hpp"
#include "corrnet/synth.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace {

using namespace corrnet;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FillPolicy parse_fill(const std::string& s) {
    if (s == "forward") return FillPolicy::forward_fill;
    if (s == "strict") return FillPolicy::strict;
    throw UsageError("--fill must be 'forward' or 'strict'");
}

YearMonth parse_month_flag(const std::string& s) {
    try {
        return YearMonth::parse(s);
    } catch (const DataError& e) {
        throw UsageError(e.what());
    }
}

std::vector<double> parse_dts_flag(const std::string& s) {
    std::vector<double> dts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            dts.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw UsageError("bad --dts value: '" + item + "'");
        }
    }
    if (dts.empty()) throw UsageError("--dts is empty");
    return dts;
}

// "-" means stdout.
void write_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path == "-") {
        fn(std::cout);
        return;
    }
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw DataError("cannot write output file: " + path);
    fn(out);
}

ReturnPanel load_panel(const std::string& input, const std::string& fill) {
    return log_returns(load_prices_file(input, parse_fill(fill)));
}

// Monthly correlation matrices at one dt, skipping edge months without
// enough history and months whose estimation fails (same policy as the
// pipeline, so series outputs reproduce pipeline files byte-for-byte).
std::pair<std::vector<YearMonth>, std::vector<CorrelationMatrix>>
monthly_matrices(const ReturnPanel& panel, double dt) {
    std::pair<std::vector<YearMonth>, std::vector<CorrelationMatrix>> out;
    for (const YearMonth& m : months_spanned(panel)) {
        try {
            out.second.push_back(pearson_matrix(window(panel, m, dt)));
            out.first.push_back(m);
        } catch (const DataError&) {
            continue;
        }
    }
    if (out.first.empty()) throw DataError("no month has enough history at dt=" + fmt_num(dt));
    return out;
}

std::map<std::string, std::string> read_kv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open params file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t a = line.find_first_not_of(" \t");
        if (a == std::string::npos || line[a] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError("params: expected key = value in '" + line + "'");
        auto trim = [](std::string s) {
            size_t x = s.find_first_not_of(" \t");
            size_t y = s.find_last_not_of(" \t");
            return x == std::string::npos ? std::string{} : s.substr(x, y - x + 1);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

std::vector<int> parse_sizes(const std::string& s) {
    std::vector<int> sizes;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            sizes.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("bad block size: '" + item + "'");
        }
    }
    if (sizes.empty()) throw UsageError("empty block size list");
    return sizes;
}

// ---------------------------------------------------------------- commands

int cmd_returns(const std::string& input, const std::string& fill, const std::string& output) {
    ReturnPanel panel = load_panel(input, fill);
    write_output(output, [&](std::ostream& o) { write_returns_csv(o, panel); });
    return 0;
}

int cmd_corr(const std::string& input, const std::string& fill, const std::string& month,
             double dt, const std::string& output) {
    YearMonth m = parse_month_flag(month);
    ReturnPanel panel = load_panel(input, fill);
    ReturnWindow w = window(panel, m, dt);
    if (w.record_count() <= panel.n_series())
        std::cerr << "warning: T_w=" << w.record_count() << " <= N=" << panel.n_series()
                  << ", correlation matrix is singular\n";
    CorrelationMatrix c = pearson_matrix(w);
    write_output(output, [&](std::ostream& o) { write_corr_csv(o, c); });
    return 0;
}

int cmd_surface(const std::string& input, const std::string& fill, const std::string& dts,
                const std::string& output) {
    auto dt_list = parse_dts_flag(dts);
    ReturnPanel panel = load_panel(input, fill);
    CorrelationSurface s = correlation_surface(panel, dt_list);
    write_output(output, [&](std::ostream& o) { write_surface_csv(o, s); });
    return 0;
}

int cmd_graph(bool want_pmfg, const std::string& input, const std::string& fill,
              const std::string& month, double dt, bool full, const std::string& format,
              const std::string& output) {
    if (format != "edgelist" && format != "graphml")
        throw UsageError("--format must be 'edgelist' or 'graphml'");
    ReturnPanel panel = load_panel(input, fill);
    ReturnWindow w = full ? full_window(panel) : window(panel, parse_month_flag(month), dt);
    CorrelationMatrix c = pearson_matrix(w);
    FilteredGraph g = want_pmfg ? pmfg(c) : mst(c);
    write_output(output, [&](std::ostream& o) {
        format == "edgelist" ? write_edgelist(o, g) : write_graphml(o, g);
    });
    return 0;
}

int cmd_mi(const std::string& dir, const std::string& match, const std::string& output) {
    std::vector<std::string> files;
    if (!std::filesystem::is_directory(dir)) throw DataError("not a directory: " + dir);
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".csv") continue;
        const std::string stem = entry.path().stem().string();
        if (!match.empty() && stem.find(match) == std::string::npos) continue;
        files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    if (files.size() < 2) throw DataError("need at least 2 edge-list files, found " +
                                          std::to_string(files.size()));

    std::vector<YearMonth> months;
    std::vector<FilteredGraph> graphs;
    for (const auto& f : files) {
        const std::string stem = std::filesystem::path(f).stem().string();
        if (stem.size() < 7) throw DataError("cannot read month from file name: " + f);
        months.push_back(YearMonth::parse(stem.substr(stem.size() - 7)));
        graphs.push_back(read_edgelist_file(f));
    }

    std::vector<YearMonth> out_months;
    std::vector<LinkMIResult> results;
    for (size_t i = 0; i + 1 < graphs.size(); ++i) {
        if (months[i + 1].months_since(months[i]) != 1) continue;
        results.push_back(link_mutual_information(graphs[i], graphs[i + 1]));
        out_months.push_back(months[i + 1]);
    }
    if (results.empty()) throw DataError("no consecutive-month pair among the inputs");
    write_output(output, [&](std::ostream& o) { write_mi_csv(o, out_months, results, {}); });
    return 0;
}

int cmd_communities(const std::string& graph_path, int runs, std::uint64_t seed, bool unweighted,
                    const std::string& output) {
    FilteredGraph g = read_edgelist_file(graph_path);
    Partition part = detect_communities(
        g, runs, seed, unweighted ? EdgeWeighting::unweighted : EdgeWeighting::clamped_correlation);
    write_output(output, [&](std::ostream& o) { write_communities_csv(o, g, part); });
    return 0;
}

int cmd_spectral(const std::string& input, const std::string& fill, double dt,
                 const std::string& ref, int top, const std::string& ordering_file,
                 const std::string& prefix) {
    ReturnPanel panel = load_panel(input, fill);
    const std::string ref_label = ref.empty() ? panel.labels.front() : ref;

    std::vector<int> ordering;
    if (!ordering_file.empty()) {
        // Row order of a communities.csv fixes the column order.
        std::ifstream in(ordering_file);
        if (!in) throw DataError("cannot open ordering file: " + ordering_file);
        std::map<std::string, int> index;
        for (size_t i = 0; i < panel.labels.size(); ++i) index[panel.labels[i]] = static_cast<int>(i);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#' || line.rfind("label,", 0) == 0) continue;
            const std::string label = line.substr(0, line.find(','));
            auto it = index.find(label);
            if (it == index.end()) throw DataError("ordering label '" + label + "' not in panel");
            ordering.push_back(it->second);
        }
    }

    auto [months, matrices] = monthly_matrices(panel, dt);
    EigenSeries es = eigen_series(matrices, ref_label, std::min(top, panel.n_series()), ordering);
    write_output(prefix + "eigenvalues.csv", [&](std::ostream& o) { write_eigenvalues_csv(o, es); });
    write_output(prefix + "vectors.csv", [&](std::ostream& o) { write_eigenvector_csv(o, es); });
    write_output(prefix + "threshold.csv", [&](std::ostream& o) { write_threshold_csv(o, es, {}); });
    return 0;
}

int cmd_ttest(const std::string& input, const std::string& fill, double dt, bool exclude_shared,
              const std::string& output) {
    ReturnPanel panel = load_panel(input, fill);
    auto [months, matrices] = monthly_matrices(panel, dt);
    std::vector<WelchResult> results = mst_vs_pmfg_pvalues(matrices, exclude_shared);
    write_output(output, [&](std::ostream& o) { write_ttest_csv(o, months, results, {}); });
    return 0;
}

struct SynthCommon {
    std::string params;
    std::uint64_t seed = 1;
    bool seed_set = false;
    double vol = 0.01; // daily volatility scale applied when emitting prices
    std::string start = "2000-01-03";
    std::string output = "-";
};

std::string kv_or(const std::map<std::string, std::string>& kv, const std::string& key,
                  const std::string& fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
}

int cmd_synth_equicorr(const SynthCommon& c, int n, int records, double rho) {
    auto kv = c.params.empty() ? std::map<std::string, std::string>{} : read_kv_file(c.params);
    n = std::stoi(kv_or(kv, "n", std::to_string(n)));
    records = std::stoi(kv_or(kv, "records", std::to_string(records)));
    rho = std::stod(kv_or(kv, "rho", fmt_full(rho)));
    const Date start = Date::parse(kv_or(kv, "start", c.start));
    const std::uint64_t seed = c.seed_set ? c.seed : std::stoull(kv_or(kv, "seed", std::to_string(c.seed)));

    ReturnPanel panel = gen_equicorrelated(n, records, rho, seed, start);
    PricePanel prices = to_prices(panel, c.vol);
    write_output(c.output, [&](std::ostream& o) { write_price_csv(o, prices); });
    return 0;
}

int cmd_synth_blocks(const SynthCommon& c, std::string sizes, int records, double rho_in,
                     double rho_out) {
    auto kv = c.params.empty() ? std::map<std::string, std::string>{} : read_kv_file(c.params);
    sizes = kv_or(kv, "block_sizes", sizes);
    records = std::stoi(kv_or(kv, "records", std::to_string(records)));
    rho_in = std::stod(kv_or(kv, "rho_in", fmt_full(rho_in)));
    rho_out = std::stod(kv_or(kv, "rho_out", fmt_full(rho_out)));
    const Date start = Date::parse(kv_or(kv, "start", c.start));

    FactorSpec spec;
    spec.block_assignment = block_assignment_from_sizes(parse_sizes(sizes));
    spec.n_series = static_cast<int>(spec.block_assignment.size());
    spec.n_records = records;
    spec.rho_in = rho_in;
    spec.rho_out = rho_out;
    spec.seed = c.seed_set ? c.seed : std::stoull(kv_or(kv, "seed", std::to_string(c.seed)));

    PricePanel prices = to_prices(gen_blocks(spec, start), c.vol);
    write_output(c.output, [&](std::ostream& o) { write_price_csv(o, prices); });
    return 0;
}

int cmd_synth_shift(const SynthCommon& c, std::string sizes, int rec_before, int rec_after,
                    double rho_in_before, double rho_out_before, double rho_in_after,
                    double rho_out_after, const std::string& shift_month, bool relabel) {
    auto kv = c.params.empty() ? std::map<std::string, std::string>{} : read_kv_file(c.params);
    sizes = kv_or(kv, "block_sizes", sizes);
    rec_before = std::stoi(kv_or(kv, "records_before", std::to_string(rec_before)));
    rec_after = std::stoi(kv_or(kv, "records_after", std::to_string(rec_after)));
    rho_in_before = std::stod(kv_or(kv, "rho_in_before", fmt_full(rho_in_before)));
    rho_out_before = std::stod(kv_or(kv, "rho_out_before", fmt_full(rho_out_before)));
    rho_in_after = std::stod(kv_or(kv, "rho_in_after", fmt_full(rho_in_after)));
    rho_out_after = std::stod(kv_or(kv, "rho_out_after", fmt_full(rho_out_after)));
    const std::string shift = kv_or(kv, "shift_month", shift_month);
    if (kv.count("relabel_blocks")) relabel = kv.at("relabel_blocks") == "1";
    const std::uint64_t seed = c.seed_set ? c.seed : std::stoull(kv_or(kv, "seed", std::to_string(c.seed)));

    FactorSpec before;
    before.block_assignment = block_assignment_from_sizes(parse_sizes(sizes));
    before.n_series = static_cast<int>(before.block_assignment.size());
    before.n_records = rec_before;
    before.rho_in = rho_in_before;
    before.rho_out = rho_out_before;
    before.seed = seed;

    FactorSpec after = before;
    after.n_records = rec_after;
    after.rho_in = rho_in_after;
    after.rho_out = rho_out_after;
    after.seed = seed + 1;
    if (relabel) {
        const int n_blocks =
            1 + *std::max_element(before.block_assignment.begin(), before.block_assignment.end());
        for (auto& b : after.block_assignment) b = (b + 1) % n_blocks;
    }

    ReturnPanel panel = gen_regime_shift(before, after, parse_month_flag(shift));
    PricePanel prices = to_prices(panel, c.vol);
    write_output(c.output, [&](std::ostream& o) { write_price_csv(o, prices); });
    return 0;
}

int cmd_pipeline(const std::string& config_path, const PipelineConfig& overrides,
                 const std::vector<bool>& override_set) {
    PipelineConfig cfg;
    if (!config_path.empty()) {
        try {
            cfg = load_config_file(config_path);
        } catch (const DataError& e) {
            throw UsageError(e.what());
        }
    }
    // Flag overrides: input, fill, dts, ref, runs, seed, output_dir, events.
    if (override_set[0]) cfg.input_path = overrides.input_path;
    if (override_set[1]) cfg.fill = overrides.fill;
    if (override_set[2]) cfg.delta_ts = overrides.delta_ts;
    if (override_set[3]) cfg.reference_label = overrides.reference_label;
    if (override_set[4]) cfg.community_runs = overrides.community_runs;
    if (override_set[5]) cfg.seed = overrides.seed;
    if (override_set[6]) cfg.output_dir = overrides.output_dir;
    if (override_set[7]) cfg.events_path = overrides.events_path;

    try {
        cfg.validate();
    } catch (const DataError& e) {
        throw UsageError(e.what());
    }

    PipelineReport report = run_pipeline(cfg);
    std::cerr << "pipeline: " << report.months.size() << " months analyzed, "
              << report.failures.size() << " failures, " << report.files.size() + 1
              << " files in " << cfg.output_dir << "\n";
    for (const auto& f : report.failures) std::cerr << "  failure: " << f << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"correlation structure, filtered graphs and spectra of return panels"};
    app.require_subcommand(1);

    std::string input, fill = "forward", output = "-", month, dts = "0.25,0.5,1,2,5";
    std::string format = "edgelist", graphs_dir, match, graph_path, ref, ordering_file, prefix;
    std::string config_path, shift_month = "2001-01", sizes = "14,14,14,14";
    double dt = 0.25;
    int runs = 100, top = 3;
    std::uint64_t seed = 42;
    bool exclude_shared = false, unweighted = false, full = false, relabel = false;

    auto add_panel_opts = [&](CLI::App* cmd, bool need_input = true) {
        auto* opt = cmd->add_option("--input", input, "price CSV (date,<labels...>)");
        if (need_input) opt->required();
        cmd->add_option("--fill", fill, "missing-cell policy: forward|strict");
    };

    auto* c_returns = app.add_subcommand("returns", "log returns of a price panel");
    add_panel_opts(c_returns);
    c_returns->add_option("--output,-o", output, "output file ('-' = stdout)");

    auto* c_corr = app.add_subcommand("corr", "correlation matrix of one window");
    add_panel_opts(c_corr);
    c_corr->add_option("--window", month, "end month YYYY-MM")->required();
    c_corr->add_option("--dt", dt, "window length in years");
    c_corr->add_option("--output,-o", output, "output file");

    auto* c_surface = app.add_subcommand("surface", "mean off-diagonal correlation surface");
    add_panel_opts(c_surface);
    c_surface->add_option("--dts", dts, "comma list of window lengths in years");
    c_surface->add_option("--output,-o", output, "output file");

    auto* c_mst = app.add_subcommand("mst", "maximum-correlation spanning tree");
    add_panel_opts(c_mst);
    c_mst->add_option("--window", month, "end month YYYY-MM");
    c_mst->add_option("--dt", dt, "window length in years");
    c_mst->add_flag("--full", full, "use the whole panel instead of a window");
    c_mst->add_option("--format", format, "edgelist|graphml");
    c_mst->add_option("--output,-o", output, "output file");

    auto* c_pmfg = app.add_subcommand("pmfg", "planar maximally filtered graph");
    add_panel_opts(c_pmfg);
    c_pmfg->add_option("--window", month, "end month YYYY-MM");
    c_pmfg->add_option("--dt", dt, "window length in years");
    c_pmfg->add_flag("--full", full, "use the whole panel instead of a window");
    c_pmfg->add_option("--format", format, "edgelist|graphml");
    c_pmfg->add_option("--output,-o", output, "output file");

    auto* c_mi = app.add_subcommand("mi", "link mutual information of successive graphs");
    c_mi->add_option("--graphs", graphs_dir, "directory of edge-list CSVs named ..._YYYY-MM.csv")
        ->required();
    c_mi->add_option("--match", match, "only file names containing this substring");
    c_mi->add_option("--output,-o", output, "output file");

    auto* c_comm = app.add_subcommand("communities", "map-equation community detection");
    c_comm->add_option("--graph", graph_path, "edge-list CSV")->required();
    c_comm->add_option("--runs", runs, "independent optimization runs");
    c_comm->add_option("--seed", seed, "rng seed");
    c_comm->add_flag("--unweighted", unweighted, "ignore edge weights");
    c_comm->add_option("--output,-o", output, "output file");

    auto* c_spec = app.add_subcommand("spectral", "monthly eigenvalue/eigenvector tables");
    add_panel_opts(c_spec);
    c_spec->add_option("--dt", dt, "window length in years");
    c_spec->add_option("--ref", ref, "reference label for eigenvector orientation");
    c_spec->add_option("--top", top, "eigenvalues per month");
    c_spec->add_option("--ordering", ordering_file, "communities.csv fixing the column order");
    c_spec->add_option("--out-prefix", prefix, "output path prefix")->required();

    auto* c_ttest = app.add_subcommand("ttest", "Welch test, MST links vs PMFG links per month");
    add_panel_opts(c_ttest);
    c_ttest->add_option("--dt", dt, "window length in years");
    c_ttest->add_flag("--exclude-shared", exclude_shared, "drop MST links from the PMFG sample");
    c_ttest->add_option("--output,-o", output, "output file");

    auto* c_synth = app.add_subcommand("synth", "synthetic price panels with known ground truth");
    c_synth->require_subcommand(1);
    SynthCommon sc;
    int sn = 57, srecords = 750;
    double srho = 0.3, srho_in = 0.6, srho_out = 0.1;
    double srho_in_b = 0.1, srho_out_b = 0.1, srho_in_a = 0.6, srho_out_a = 0.6;
    int rec_before = 500, rec_after = 500;
    auto add_synth_common = [&](CLI::App* cmd) {
        cmd->add_option("--params", sc.params, "key = value parameter file");
        cmd->add_option("--seed", sc.seed, "rng seed")->each([&](const std::string&) { sc.seed_set = true; });
        cmd->add_option("--vol", sc.vol, "daily volatility scale for emitted prices");
        cmd->add_option("--start", sc.start, "first calendar date YYYY-MM-DD");
        cmd->add_option("--output,-o", sc.output, "output file");
    };
    auto* c_eq = c_synth->add_subcommand("equicorr", "constant pairwise correlation");
    c_eq->add_option("--n", sn, "series count");
    c_eq->add_option("--records", srecords, "business-day record count");
    c_eq->add_option("--rho", srho, "population correlation");
    add_synth_common(c_eq);
    auto* c_bl = c_synth->add_subcommand("blocks", "planted block factor model");
    c_bl->add_option("--block-sizes", sizes, "comma list, e.g. 14,14,14,14");
    c_bl->add_option("--records", srecords, "business-day record count");
    c_bl->add_option("--rho-in", srho_in, "within-block correlation");
    c_bl->add_option("--rho-out", srho_out, "cross-block correlation");
    add_synth_common(c_bl);
    auto* c_sh = c_synth->add_subcommand("shift", "regime switch at a known month");
    c_sh->add_option("--block-sizes", sizes, "comma list; one block = equicorrelated");
    c_sh->add_option("--records-before", rec_before, "records before the shift");
    c_sh->add_option("--records-after", rec_after, "records after the shift");
    c_sh->add_option("--rho-in-before", srho_in_b, "");
    c_sh->add_option("--rho-out-before", srho_out_b, "");
    c_sh->add_option("--rho-in-after", srho_in_a, "");
    c_sh->add_option("--rho-out-after", srho_out_a, "");
    c_sh->add_option("--shift-month", shift_month, "first post-shift month YYYY-MM");
    c_sh->add_flag("--relabel-blocks", relabel, "rotate block memberships at the shift");
    add_synth_common(c_sh);

    auto* c_pipe = app.add_subcommand("pipeline", "full monthly analysis bundle");
    PipelineConfig overrides;
    std::vector<bool> override_set(8, false);
    std::string pipe_fill, pipe_dts;
    c_pipe->add_option("--config", config_path, "key = value config file");
    c_pipe->add_option("--input", overrides.input_path, "price CSV")
        ->each([&](const std::string&) { override_set[0] = true; });
    c_pipe->add_option("--fill", pipe_fill, "forward|strict")
        ->each([&](const std::string& v) { overrides.fill = parse_fill(v); override_set[1] = true; });
    c_pipe->add_option("--dts", pipe_dts, "surface window lengths, comma list")
        ->each([&](const std::string& v) { overrides.delta_ts = parse_dts_flag(v); override_set[2] = true; });
    c_pipe->add_option("--ref", overrides.reference_label, "eigenvector reference label")
        ->each([&](const std::string&) { override_set[3] = true; });
    c_pipe->add_option("--runs", overrides.community_runs, "community detection runs")
        ->each([&](const std::string&) { override_set[4] = true; });
    c_pipe->add_option("--seed", overrides.seed, "community detection seed")
        ->each([&](const std::string&) { override_set[5] = true; });
    c_pipe->add_option("--output-dir", overrides.output_dir, "output directory")
        ->each([&](const std::string&) { override_set[6] = true; });
    c_pipe->add_option("--events", overrides.events_path, "month,label annotation file")
        ->each([&](const std::string&) { override_set[7] = true; });

    try {
        app.parse(argc, argv);

        if (*c_returns) return cmd_returns(input, fill, output);
        if (*c_corr) return cmd_corr(input, fill, month, dt, output);
        if (*c_surface) return cmd_surface(input, fill, dts, output);
        if (*c_mst) {
            if (!full && month.empty()) throw UsageError("mst needs --window or --full");
            return cmd_graph(false, input, fill, month, dt, full, format, output);
        }
        if (*c_pmfg) {
            if (!full && month.empty()) throw UsageError("pmfg needs --window or --full");
            return cmd_graph(true, input, fill, month, dt, full, format, output);
        }
        if (*c_mi) return cmd_mi(graphs_dir, match, output);
        if (*c_comm) return cmd_communities(graph_path, runs, seed, unweighted, output);
        if (*c_spec) return cmd_spectral(input, fill, dt, ref, top, ordering_file, prefix);
        if (*c_ttest) return cmd_ttest(input, fill, dt, exclude_shared, output);
        if (*c_synth) {
            if (*c_eq) return cmd_synth_equicorr(sc, sn, srecords, srho);
            if (*c_bl) return cmd_synth_blocks(sc, sizes, srecords, srho_in, srho_out);
            if (*c_sh)
                return cmd_synth_shift(sc, sizes, rec_before, rec_after, srho_in_b, srho_out_b,
                                       srho_in_a, srho_out_a, shift_month, relabel);
        }
        if (*c_pipe) return cmd_pipeline(config_path, overrides, override_set);
        throw UsageError("no subcommand");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
